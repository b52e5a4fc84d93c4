#pragma once

#include "uniqmod/bounds.hpp"
#include "uniqmod/function_spec.hpp"
#include "uniqmod/polynomial.hpp"

#include <optional>
#include <vector>

namespace uniqmod {

/// Box a <= c_k <= b on one coefficient; a missing bound is infinite.
struct CoefficientBound {
  int k = 1;
  std::optional<double> lower;
  std::optional<double> upper;
};

/// The feasible class K: polynomials of degree <= n with boxed coefficients
/// c_{k_1}, ..., c_{k_m}, 0 < k_1 < ... < k_m <= n. The constant term is never boxed.
class ConstraintSet {
 public:
  ConstraintSet(int n, std::vector<CoefficientBound> entries);

  int n() const { return n_; }
  const std::vector<CoefficientBound>& entries() const { return entries_; }

  /// Every box holds up to an absolute slack `tol`.
  bool contains(const Polynomial<double>& p, double tol = 0.0) const;

  /// Clamps each boxed coefficient into its box and pads/truncates to degree n.
  Polynomial<double> clamp(Polynomial<double> p) const;

 private:
  int n_;
  std::vector<CoefficientBound> entries_;
};

/// f, its modulus omega, the class K and a designated feasible p0.
struct ApproximationInstance {
  FunctionSpec f;
  ModulusOfContinuity omega;
  ConstraintSet K;
  Polynomial<double> p0;

  ApproximationInstance(FunctionSpec f, ModulusOfContinuity omega, ConstraintSet K, Polynomial<double> p0);
  /// omega from the family, p0 = the zero polynomial clamped into K.
  ApproximationInstance(FunctionSpec f, ConstraintSet K);

  int n() const { return K.n(); }
};

}  // namespace uniqmod
