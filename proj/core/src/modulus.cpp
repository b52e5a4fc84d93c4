#include "uniqmod/modulus.hpp"

#include "uniqmod/schur.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace uniqmod {

namespace {

double round_down(double v) { return v > 0.0 ? std::nextafter(v, 0.0) : v; }

double schur_cap_double(int n) { return to_double(schur_cap(n)); }

}  // namespace

double norm_cap_M(double f_norm, double p0_norm) {
  if (!(f_norm >= 0.0) || !(p0_norm >= 0.0)) throw std::invalid_argument("norms must be nonnegative");
  return 2.5 * f_norm + 1.5 * p0_norm;
}

double norm_cap_M(const ApproximationInstance& instance) {
  return norm_cap_M(instance.f.sup_norm(), sup_norm_bound(instance.p0));
}

double psi_exponent(int n) {
  const double nn = static_cast<double>(n);
  return nn * nn / 2.0 + 2.0 * nn;
}

double psi_denominator(int n, double schur_cap_n, double f_const) {
  const double nn = static_cast<double>(n);
  return 10.0 * schur_cap_n * schur_cap_n * (nn + 1.0) * (nn * f_const + 1.0);
}

double psi_coefficient(double chi_half_L, int n, double schur_cap_n, double f_const) {
  if (!(chi_half_L > 0.0 && chi_half_L <= 1.0)) throw std::invalid_argument("chi(L/2) must lie in (0,1]");
  const double value = std::pow(chi_half_L / 2.0, psi_exponent(n)) / psi_denominator(n, schur_cap_n, f_const);
  if (!(value > 0.0)) {
    const double log10_value =
        psi_exponent(n) * std::log10(chi_half_L / 2.0) - std::log10(psi_denominator(n, schur_cap_n, f_const));
    std::ostringstream os;
    os << "uniqueness modulus coefficient underflows binary64 (log10 = " << log10_value << ")";
    throw std::underflow_error(os.str());
  }
  return round_down(value);
}

double psi_coefficient(const ModulusOfContinuity& omega, int n, double M, double L) {
  if (!(L > 0.0)) throw std::invalid_argument("L must be positive");
  return psi_coefficient(chi(omega, n, M, L / 2.0), n, schur_cap_double(n), f_constant(n));
}

double psi(const ApproximationInstance& instance, double L, double delta) {
  if (!(L > 0.0)) throw std::invalid_argument("L must be positive");
  if (!(delta >= 0.0)) throw std::invalid_argument("delta must be nonnegative");
  const double coefficient = psi_coefficient(instance.omega, instance.n(), norm_cap_M(instance), L);
  return delta == 0.0 ? 0.0 : round_down(coefficient * delta);
}

double strong_unicity_gamma(const ApproximationInstance& instance, double L) { return psi(instance, L, 1.0); }

double psi_star(const ApproximationInstance& instance, double delta) {
  if (!(delta >= 0.0)) throw std::invalid_argument("delta must be nonnegative");
  if (delta == 0.0) return 0.0;
  return std::min(delta / 4.0, psi(instance, delta / 4.0, delta));
}

double f_norm_bound_from_omega(const ModulusOfContinuity& omega) {
  return std::floor(2.0 / omega(1.0)) + 1.0;
}

double UniquenessCertificate::psi(double delta) const {
  if (!(delta >= 0.0)) throw std::invalid_argument("delta must be nonnegative");
  return delta == 0.0 ? 0.0 : round_down(gamma.value * delta);
}

double UniquenessCertificate::psi_star(double delta) const {
  if (!(delta >= 0.0)) throw std::invalid_argument("delta must be nonnegative");
  if (delta == 0.0) return 0.0;
  const double coefficient =
      psi_coefficient(chi(omega, n, M.value, delta / 8.0), n, to_double(schur_cap), f_const.value);
  return std::min(delta / 4.0, round_down(coefficient * delta));
}

UniquenessCertificate make_certificate(const ApproximationInstance& instance, double L, const std::string& L_source) {
  if (!(L > 0.0)) throw std::invalid_argument("L must be positive");
  const int n = instance.n();
  UniquenessCertificate cert{.n = n,
                             .M = {norm_cap_M(instance), "norm_cap_M: 5/2 sup|f| + 3/2 sup|p0|"},
                             .schur_cap = schur_cap(n),
                             .f_const = {f_constant(n), "f_constant: 3/2 max_i (2n^2)^i / i!"},
                             .L = {L, L_source},
                             .chi_half_L = {},
                             .exponent = {psi_exponent(n), "psi_exponent: n^2/2 + 2n"},
                             .denominator = {},
                             .gamma = {},
                             .omega = instance.omega};
  cert.chi_half_L = {chi(instance.omega, n, cert.M.value, L / 2.0), "chi(omega, n, M, L/2)"};
  const double N = to_double(cert.schur_cap);
  cert.denominator = {psi_denominator(n, N, cert.f_const.value), "psi_denominator: 10 N_n^2 (n+1)(n F_n + 1)"};
  cert.gamma = {psi_coefficient(cert.chi_half_L.value, n, N, cert.f_const.value),
                "psi_coefficient: (chi(L/2)/2)^exponent / denominator, rounded down"};
  return cert;
}

}  // namespace uniqmod
