#pragma once

// Interpolation in P_n with some coefficients forced to zero.
//
// With allowed degrees d_1 > ... > d_{r+1} = 0 (the complement of the forbidden set in
// {0, ..., n}) and nodes x_1 < ... < x_{r+1}, the unique interpolant is
//
//   p = sum_j l_j(X; x) * alpha_j * s_{lambda^d}(X, x without x_j) / s_{lambda^d}(x),
//
// i.e. the Lagrange formula with one Schur correction factor per node.

#include "uniqmod/polynomial.hpp"
#include "uniqmod/rational.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace uniqmod {

/// Thrown by the binary64 path when the Schur denominator is too small to trust.
class IllConditioned : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kSchurDenominatorFloor = 1e-30;

/// Cardinal Lagrange polynomial l_j evaluated at x; j is 0-based.
template <Scalar T>
T lagrange_basis(std::size_t j, const T& x, std::span<const T> nodes);

/// l_j as a polynomial in X.
template <Scalar T>
Polynomial<T> lagrange_basis_polynomial(std::size_t j, std::span<const T> nodes);

/// Degrees {0..n} minus `forbidden`, in decreasing order. Rejects forbidden sets that
/// are unsorted, contain 0, or exceed n.
std::vector<int> allowed_degrees(int n, std::span<const int> forbidden);

template <Scalar T>
struct InterpolationProblem {
  int n = 0;
  std::vector<int> forbidden;  ///< 0 < g_1 < ... < g_l <= n
  std::vector<T> nodes;        ///< strictly increasing in [0,1], n + 1 - l of them
  std::vector<T> values;

  void validate() const;
};

/// The Schur-factor interpolation formula.
template <Scalar T>
Polynomial<T> constrained_interpolate(const InterpolationProblem<T>& problem);

/// Independent route: Gaussian elimination on sum_i eta_i x_j^{d_i} = alpha_j.
template <Scalar T>
Polynomial<T> solve_linear_system_oracle(const InterpolationProblem<T>& problem);

/// prod_j (z_j - X) * s_{lambda^d}(X, z_1, ..., z_r); r = n - |forbidden|.
/// Vanishes exactly at the z_j, skips the forbidden degrees and has sign (-1)^j on
/// (z_j, z_{j+1}) with z_0 = 0, z_{r+1} = 1.
template <Scalar T>
Polynomial<T> oscillator(int n, std::span<const int> forbidden, std::span<const T> z);

extern template double lagrange_basis<double>(std::size_t, const double&, std::span<const double>);
extern template Rational lagrange_basis<Rational>(std::size_t, const Rational&, std::span<const Rational>);
extern template Polynomial<double> lagrange_basis_polynomial<double>(std::size_t, std::span<const double>);
extern template Polynomial<Rational> lagrange_basis_polynomial<Rational>(std::size_t, std::span<const Rational>);
extern template struct InterpolationProblem<double>;
extern template struct InterpolationProblem<Rational>;
extern template Polynomial<double> constrained_interpolate<double>(const InterpolationProblem<double>&);
extern template Polynomial<Rational> constrained_interpolate<Rational>(const InterpolationProblem<Rational>&);
extern template Polynomial<double> solve_linear_system_oracle<double>(const InterpolationProblem<double>&);
extern template Polynomial<Rational> solve_linear_system_oracle<Rational>(const InterpolationProblem<Rational>&);
extern template Polynomial<double> oscillator<double>(int, std::span<const int>, std::span<const double>);
extern template Polynomial<Rational> oscillator<Rational>(int, std::span<const int>, std::span<const Rational>);

}  // namespace uniqmod
