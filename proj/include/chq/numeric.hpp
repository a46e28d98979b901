#pragma once

#include <cmath>
#include <limits>

#include "chq/errors.hpp"

namespace chq {

// Numeric policy, shared across the library.
//
// Threshold comparisons of capacity values against a level (w(A) vs 1-alpha)
// use the symmetric tie tolerance kTieEps: values within kTieEps of the
// threshold count as equal to it. Fixtures are expected to keep distinct
// capacity values separated by more than 1e-6, so the tie rule never
// misclassifies an honest strict inequality.
inline constexpr double kTieEps = 1e-9;

/// Validation tolerance for structural identities (weights summing to one,
/// boundary values of capacities).
inline constexpr double kBoundaryTol = 1e-12;

/// Feasibility tolerance of the LP solver and of LP-backed covers.
inline constexpr double kLpFeasTol = 1e-8;

/// Simplex pivot magnitude threshold.
inline constexpr double kPivotTol = 1e-10;

/// a <= b under the tie rule.
inline bool leq_tol(double a, double b, double eps = kTieEps) { return a <= b + eps; }

/// a < b strictly under the tie rule (a within eps of b counts as equal).
inline bool lt_tol(double a, double b, double eps = kTieEps) { return a < b - eps; }

/// Extended real used for inf-convolution values. Negative infinity is an
/// explicit variant, never a float sentinel.
class ExtendedReal {
 public:
  static ExtendedReal finite(double v) { return ExtendedReal(false, v); }
  static ExtendedReal negative_infinity() {
    return ExtendedReal(true, -std::numeric_limits<double>::infinity());
  }

  bool is_finite() const { return !neg_inf_; }
  bool is_negative_infinity() const { return neg_inf_; }

  /// Finite value; throws if negative infinity.
  double value() const {
    if (neg_inf_) throw Error("ExtendedReal: value() on negative infinity");
    return value_;
  }

  /// Value as a double, -inf when the negative-infinity variant.
  double as_double() const { return neg_inf_ ? -std::numeric_limits<double>::infinity() : value_; }

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.neg_inf_ != b.neg_inf_) return false;
    return a.neg_inf_ || a.value_ == b.value_;
  }

 private:
  ExtendedReal(bool neg_inf, double v) : neg_inf_(neg_inf), value_(v) {}
  bool neg_inf_;
  double value_;
};

}  // namespace chq
