#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vsl {

enum class ErrorKind {
  NotDivisible,
  NegativeExponentShift,
  BoundExceeded,
  SizeMismatch,
  InvalidStep,
  BelowDiagonal,
  DiagonalOnMainDiagonal,
  NotClosed,
  PointNotOnPath,
  HasDiagonal,
  InvalidColoring,
  NonTermination,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Desk-scale size guards. The defaults keep exhaustive enumerations
/// interactive; the CLI can raise them with --unsafe-max-n.
struct Limits {
  int partition_n = 12;   // partitions_of, transition matrices
  int path_enum_n = 8;    // enumerate
  int coloring_n = 7;     // llt, chromatic, elw_schur, kostka_schur, recursion
  int max_area = 20;      // orientation enumeration
  int verify_n = 6;       // relation suites
  int chromatic_verify_n = 5;
  int nabla_e_n = 5;
  int nabla_p_n = 4;
  int hall_littlewood_n = 6;
  int survey_n = 6;
  int path_graph_k = 7;
};

Limits& limits();

inline void check_bound(int value, int bound, const char* what) {
  if (value > bound) {
    throw Error(ErrorKind::BoundExceeded,
                std::string(what) + " = " + std::to_string(value) + " exceeds the limit " +
                    std::to_string(bound));
  }
}

}  // namespace vsl
