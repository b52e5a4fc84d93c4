#pragma once

// Effective uniqueness data for best approximation from K.
//
//   Psi(delta, L) = (chi(L/2)/2)^{n^2/2 + 2n} / (10 N_n^2 (n+1)(n F_n + 1)) * delta
//
// with chi = chi_{omega,n,M} and M = 5/2 ||f|| + 3/2 ||p0||. Any p1, p2 in K whose
// errors are within Psi of E = min_K ||f - q|| satisfy ||p1 - p2|| <= delta, provided
// 0 < L <= E. The slope gamma = Psi(1, L) is a strong-unicity constant, and
// Psi*(delta) = min(delta/4, Psi(delta, delta/4)) needs no lower bound on E.
//
// Every returned modulus value is rounded toward zero at the last step: a smaller
// value keeps the guarantee, a larger one might not.

#include "uniqmod/instance.hpp"
#include "uniqmod/rational.hpp"

#include <map>
#include <string>

namespace uniqmod {

/// 5/2 ||f|| + 3/2 ||p0||, from upper bounds on both norms.
double norm_cap_M(const ApproximationInstance& instance);
double norm_cap_M(double f_norm, double p0_norm);

/// n^2/2 + 2n.
double psi_exponent(int n);

/// 10 N_n^2 (n+1)(n F_n + 1).
double psi_denominator(int n, double schur_cap_n, double f_const);

/// (chi_half_L / 2)^{n^2/2+2n} / psi_denominator, rounded down. Throws
/// std::underflow_error if the value is not representable as a positive double.
double psi_coefficient(double chi_half_L, int n, double schur_cap_n, double f_const);

/// Same, computing chi(L/2), N_n and F_n from (omega, n, M).
double psi_coefficient(const ModulusOfContinuity& omega, int n, double M, double L);

double psi(const ApproximationInstance& instance, double L, double delta);
double strong_unicity_gamma(const ApproximationInstance& instance, double L);
double psi_star(const ApproximationInstance& instance, double delta);

/// floor(2 / omega(1)) + 1, a bound on ||f - f(0)||.
double f_norm_bound_from_omega(const ModulusOfContinuity& omega);

/// One certificate factor and the operation that produced it.
struct Factor {
  double value = 0.0;
  std::string source;
};

class UniquenessCertificate {
 public:
  int n = 0;
  Factor M;
  BigInt schur_cap;  ///< N_n
  Factor f_const;    ///< F_n
  Factor L;
  Factor chi_half_L;
  Factor exponent;
  Factor denominator;
  Factor gamma;  ///< Psi(delta, L) = gamma * delta
  ModulusOfContinuity omega;

  /// gamma * delta, rounded down.
  double psi(double delta) const;
  /// min(delta/4, Psi(delta, delta/4)); 0 at delta = 0.
  double psi_star(double delta) const;
};

/// Builds every factor for the given instance and lower bound L on E.
UniquenessCertificate make_certificate(const ApproximationInstance& instance, double L, const std::string& L_source);

}  // namespace uniqmod
