#include "braidset/perm.hpp"

#include <numeric>

#include "braidset/error.hpp"

namespace braidset {

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), Elem{0});
  return p;
}

bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (Elem x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Perm inverse(const Perm& p) {
  if (!is_permutation(p)) throw Error(ErrorKind::not_a_permutation, "cannot invert");
  Perm q(p.size());
  for (Elem i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm power(const Perm& p, int k) {
  Perm base = k < 0 ? inverse(p) : p;
  Perm result = identity_perm(p.size());
  for (int i = 0; i < (k < 0 ? -k : k); ++i) result = compose(base, result);
  return result;
}

Perm parse_cycles(std::string_view text, std::size_t n,
                  const std::function<std::optional<Elem>(std::string_view)>& lookup) {
  Perm p = identity_perm(n);
  std::vector<bool> moved(n, false);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
  };
  auto bad = [&](const std::string& why) {
    return Error(ErrorKind::malformed_document,
                 "cycle notation '" + std::string(text) + "': " + why);
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw bad("expected '('");
    ++i;
    std::vector<Elem> cycle;
    for (;;) {
      skip_space();
      if (i >= text.size()) throw bad("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != ',' &&
             text[i] != ')' && text[i] != '(')
        ++i;
      std::string_view tok = text.substr(start, i - start);
      if (tok.empty()) throw bad("empty label");
      auto e = lookup(tok);
      if (!e) throw Error(ErrorKind::unknown_label, std::string(tok));
      if (moved[*e]) throw Error(ErrorKind::not_a_permutation, "label repeated: " + std::string(tok));
      moved[*e] = true;
      cycle.push_back(*e);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_space();
  }
  return p;
}

std::string format_cycles(const Perm& p, const std::vector<std::string>& labels) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (Elem s = 0; s < p.size(); ++s) {
    if (done[s] || p[s] == s) continue;
    out += '(';
    Elem x = s;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out += ' ';
      out += labels[x];
      first = false;
      x = p[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace braidset
