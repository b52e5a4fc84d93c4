#pragma once

#include "uniqmod/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace uniqmod {

/// Dense univariate polynomial; coeffs()[i] multiplies X^i.
template <Scalar T>
class Polynomial {
 public:
  Polynomial() : coeffs_(1, T(0)) {}
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.assign(1, T(0));
  }
  Polynomial(std::initializer_list<T> coeffs) : Polynomial(std::vector<T>(coeffs)) {}

  static Polynomial zero(int degree_bound) {
    return Polynomial(std::vector<T>(static_cast<std::size_t>(degree_bound) + 1, T(0)));
  }
  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }
  /// X - root
  static Polynomial linear_factor(const T& root) { return Polynomial(std::vector<T>{T(-root), T(1)}); }

  const std::vector<T>& coeffs() const { return coeffs_; }
  std::vector<T>& coeffs() { return coeffs_; }

  /// Length of the coefficient vector minus one (not trimmed).
  int degree_bound() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Actual degree; -1 for the zero polynomial.
  int degree() const {
    for (int i = degree_bound(); i >= 0; --i)
      if (coeffs_[static_cast<std::size_t>(i)] != T(0)) return i;
    return -1;
  }

  T coefficient(int k) const {
    return k >= 0 && k <= degree_bound() ? coeffs_[static_cast<std::size_t>(k)] : T(0);
  }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Pads (never truncates nonzero terms) to exactly degree_bound + 1 coefficients.
  Polynomial& resize(int degree_bound) {
    const auto size = static_cast<std::size_t>(degree_bound) + 1;
    if (size < coeffs_.size()) {
      for (std::size_t i = size; i < coeffs_.size(); ++i)
        if (coeffs_[i] != T(0)) throw std::length_error("Polynomial::resize would drop a nonzero coefficient");
    }
    coeffs_.resize(size, T(0));
    return *this;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<T> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * T(static_cast<int>(i));
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == T(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    const std::size_t size = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t i = 0; i < size; ++i)
      if (a.coefficient(static_cast<int>(i)) != b.coefficient(static_cast<int>(i))) return false;
    return true;
  }

 private:
  std::vector<T> coeffs_;
};

/// Max |coefficient|.
template <Scalar T>
T max_abs_coefficient(const Polynomial<T>& p) {
  T best(0);
  for (const auto& c : p.coeffs()) best = std::max(best, abs_value(c));
  return best;
}

/// Largest |p(x)| over `count` equally spaced points of [0,1] (endpoints included).
double grid_sup(const Polynomial<double>& p, std::size_t count);

/// Rigorous upper bound on max_{[0,1]} |p|: a grid maximum corrected with the Markov
/// derivative bound, sup <= grid_sup / (1 - h n^2) for grid spacing h with h n^2 < 1.
double sup_norm_bound(const Polynomial<double>& p);

Polynomial<double> to_double(const Polynomial<Rational>& p);

}  // namespace uniqmod
