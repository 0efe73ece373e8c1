// Regenerates the solution files and golden profiles under the data directory.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "braidset/catalog.hpp"
#include "braidset/graph.hpp"
#include "braidset/serialize.hpp"

namespace fs = std::filesystem;
using namespace braidset;

namespace {

void write(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream(p, std::ios::binary) << text;
  std::cout << "wrote " << p.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  fs::path dir = argc > 1 ? fs::path(argv[1]) : fs::path(BRAIDSET_DATA_DIR);
  for (const auto& e : catalog()) {
    write(dir / (e.key + ".json"), solution_to_json(e.solution));
    write(dir / "catalog" / (e.key + ".json"), catalog_profile(e));
  }
  for (int k = 1; k <= 3; ++k) {
    ExtensionSet ext = sec5_extension(k);
    write(dir / ("sec5_ground_r" + std::to_string(k) + ".json"),
          ground_to_json(ext, "sec5_X.json", "sec5_Y.json"));
    write(dir / "golden" / ("sec5_Z" + std::to_string(k) + ".dot"),
          export_dot(gamma_graph(ext.assembled)));
  }
  write(dir / "sec5_family.json", family_to_json(sec5_family(), sec5_x(), sec5_y()));
  return 0;
}
