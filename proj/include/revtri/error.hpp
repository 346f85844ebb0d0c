#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace revtri {

enum class ErrorKind {
  input,           // malformed or inconsistent data (dimension mismatch, NaN, empty family)
  parameter,       // method parameters outside their admissible range
  non_orthonormal, // orthonormality violated; indices name the offending pair
  non_unit,        // reference vector not of unit norm
  generation,      // sampler could not produce a feasible family
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::input: return "input";
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::non_orthonormal: return "non_orthonormal";
    case ErrorKind::non_unit: return "non_unit";
    case ErrorKind::generation: return "generation";
  }
  return "unknown";
}

/// Structured error thrown for invalid input. Infeasible hypotheses are not
/// errors; they are reported through HypothesisReport.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Error(ErrorKind kind, const std::string& what, std::size_t i, std::size_t j)
      : std::runtime_error(what), kind_(kind), pair_(std::make_pair(i, j)) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Offending (i, j) index pair for non_orthonormal errors.
  const std::optional<std::pair<std::size_t, std::size_t>>& pair() const noexcept {
    return pair_;
  }

 private:
  ErrorKind kind_;
  std::optional<std::pair<std::size_t, std::size_t>> pair_;
};

}  // namespace revtri
