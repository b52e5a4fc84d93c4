#include "uniqmod/instance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace uniqmod {

ConstraintSet::ConstraintSet(int n, std::vector<CoefficientBound> entries) : n_(n), entries_(std::move(entries)) {
  if (n_ < 0) throw std::invalid_argument("degree bound n must be nonnegative");
  if (entries_.size() > static_cast<std::size_t>(n_)) throw std::invalid_argument("at most n coefficients can be boxed");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    const std::string where = "constraint " + std::to_string(i) + ": ";
    if (e.k <= 0 || e.k > n_) throw std::invalid_argument(where + "index must satisfy 0 < k <= n");
    if (i > 0 && e.k <= entries_[i - 1].k) throw std::invalid_argument(where + "indices must be strictly increasing");
    if (e.lower && !std::isfinite(*e.lower)) throw std::invalid_argument(where + "lower bound must be finite or absent");
    if (e.upper && !std::isfinite(*e.upper)) throw std::invalid_argument(where + "upper bound must be finite or absent");
    if (e.lower && e.upper && *e.lower > *e.upper) throw std::invalid_argument(where + "lower bound exceeds upper bound");
  }
}

bool ConstraintSet::contains(const Polynomial<double>& p, double tol) const {
  if (p.degree() > n_) return false;
  for (const auto& e : entries_) {
    const double c = p.coefficient(e.k);
    if (e.lower && c < *e.lower - tol) return false;
    if (e.upper && c > *e.upper + tol) return false;
  }
  return true;
}

Polynomial<double> ConstraintSet::clamp(Polynomial<double> p) const {
  p.coeffs().resize(static_cast<std::size_t>(n_) + 1, 0.0);
  for (const auto& e : entries_) {
    double& c = p.coeffs()[static_cast<std::size_t>(e.k)];
    if (e.lower) c = std::max(c, *e.lower);
    if (e.upper) c = std::min(c, *e.upper);
  }
  return p;
}

ApproximationInstance::ApproximationInstance(FunctionSpec f_, ModulusOfContinuity omega_, ConstraintSet K_,
                                             Polynomial<double> p0_)
    : f(std::move(f_)), omega(std::move(omega_)), K(std::move(K_)), p0(std::move(p0_)) {
  if (p0.degree() > K.n()) throw std::invalid_argument("p0 has degree above n");
  p0.resize(K.n());
  if (!K.contains(p0)) throw std::invalid_argument("p0 is not in the feasible class K");
}

ApproximationInstance::ApproximationInstance(FunctionSpec f_, ConstraintSet K_)
    : ApproximationInstance(f_, f_.modulus(), K_, K_.clamp(Polynomial<double>::zero(K_.n()))) {}

}  // namespace uniqmod
