// Extended nonnegative reals and shared numeric conventions.
//
// Slope and modulus computations work on [0, +inf] with +inf as a
// first-class value (empty infima, vacuous admissible sets). Ratios near
// the reference point are guarded: a denominator below kDenomGuard yields
// +inf when the numerator is positive and is skipped otherwise.

#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace subreg {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Denominators below this are not trusted to carry slope information.
inline constexpr double kDenomGuard = 1e-14;

// Membership tolerance for smooth / convex-inequality graphs.
inline constexpr double kGraphTol = 1e-10;

inline double plus_part(double a) { return a > 0.0 ? a : 0.0; }

inline bool is_finite(double a) { return std::isfinite(a); }

// [num/den] with the guard convention. nullopt means "skip this pair".
inline std::optional<double> guarded_ratio(double num, double den) {
  if (den < kDenomGuard) {
    if (num > 0.0) return kInf;
    return std::nullopt;
  }
  return num / den;
}

// Error taxonomy used across the library.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};
struct UnsupportedStructure : std::runtime_error {
  explicit UnsupportedStructure(const std::string& what)
      : std::runtime_error(what) {}
};
struct InvariantViolation : std::runtime_error {
  explicit InvariantViolation(const std::string& what)
      : std::runtime_error(what) {}
};

// Deterministic text form; used for CSV reports ("inf" for +infinity).
std::string format_extended(double v);

}  // namespace subreg
