#pragma once

// Quantitative inequalities used by the uniqueness certificates: Markov-type derivative
// and coefficient caps on [0,1], the modulus chi for p - f, the constant F_n, the
// interpolation threshold that forces ||p|| <= gamma, and the oscillator floor.
// All functions are plain binary64 arithmetic with 0^0 = 1.

#include "uniqmod/rational.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace uniqmod {

/// omega with |x - y| < omega(eps) => |f(x) - f(y)| < eps.
class ModulusOfContinuity {
 public:
  struct Lipschitz {
    double constant;
  };
  struct Hoelder {
    double constant;
    double exponent;
  };
  /// Samples (eps_i, omega_i), completed to the step envelope
  /// omega(eps) = max{ omega_i : eps_i <= eps }.
  struct Table {
    std::vector<std::pair<double, double>> samples;
  };

  static ModulusOfContinuity lipschitz(double constant);
  static ModulusOfContinuity hoelder(double constant, double exponent);
  static ModulusOfContinuity table(std::vector<std::pair<double, double>> samples);

  /// Lipschitz(0) yields +infinity.
  double operator()(double eps) const;

  const std::variant<Lipschitz, Hoelder, Table>& family() const { return family_; }
  std::string describe() const;

 private:
  explicit ModulusOfContinuity(std::variant<Lipschitz, Hoelder, Table> family) : family_(std::move(family)) {}
  std::variant<Lipschitz, Hoelder, Table> family_;
};

/// (2n^2)^k * sup_norm, bounding ||p^{(k)}|| on [0,1].
double markov_derivative_cap(int n, int k, double sup_norm);

/// (2n^2)^k / k! * sup_norm, bounding |a_k|.
double coefficient_cap(int n, int k, double sup_norm);

/// min(1, eps / (4 n^2 M + 1), omega(eps / 2)).
double chi(const ModulusOfContinuity& omega, int n, double M, double eps);

/// 3/2 * max_{0<=i<=n} (2n^2)^i / i!.
double f_constant(int n);

/// beta^{n + n^2/4} / (N_n (n+1)) * gamma.
double beta_bound_threshold(int n, double beta, double gamma, const BigInt& schur_cap_n);
double beta_bound_threshold(int n, double beta, double gamma, double schur_cap_n);

/// alpha^{n^2/4 + n}.
double oscillator_floor(int n, double alpha);

}  // namespace uniqmod
