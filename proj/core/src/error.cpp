#include "braidset/error.hpp"

namespace braidset {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::malformed_document: return "MalformedDocument";
    case ErrorKind::unknown_label: return "UnknownLabel";
    case ErrorKind::incomplete_table: return "IncompleteTable";
    case ErrorKind::duplicate_entry: return "DuplicateEntry";
    case ErrorKind::not_a_permutation: return "NotAPermutation";
    case ErrorKind::prerequisite_failed: return "PrerequisiteFailed";
    case ErrorKind::degree_exceeded: return "DegreeExceeded";
    case ErrorKind::budget_exceeded: return "BudgetExceeded";
    case ErrorKind::not_regular: return "NotRegular";
    case ErrorKind::carrier_overlap: return "CarrierOverlap";
    case ErrorKind::axiom_violation: return "AxiomViolation";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace braidset
