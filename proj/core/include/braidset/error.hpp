#pragma once

#include <stdexcept>
#include <string>

namespace braidset {

enum class ErrorKind {
  malformed_document,
  unknown_label,
  incomplete_table,
  duplicate_entry,
  not_a_permutation,
  prerequisite_failed,
  degree_exceeded,
  budget_exceeded,
  not_regular,
  carrier_overlap,
  axiom_violation,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace braidset
