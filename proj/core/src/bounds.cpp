#include "uniqmod/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace uniqmod {

ModulusOfContinuity ModulusOfContinuity::lipschitz(double constant) {
  if (!(constant >= 0.0) || !std::isfinite(constant)) throw std::invalid_argument("Lipschitz constant must be finite and >= 0");
  return ModulusOfContinuity(Lipschitz{constant});
}

ModulusOfContinuity ModulusOfContinuity::hoelder(double constant, double exponent) {
  if (!(constant > 0.0) || !std::isfinite(constant)) throw std::invalid_argument("Hoelder constant must be finite and > 0");
  if (!(exponent > 0.0 && exponent <= 1.0)) throw std::invalid_argument("Hoelder exponent must lie in (0,1]");
  return ModulusOfContinuity(Hoelder{constant, exponent});
}

ModulusOfContinuity ModulusOfContinuity::table(std::vector<std::pair<double, double>> samples) {
  if (samples.empty()) throw std::invalid_argument("modulus table needs at least one sample");
  for (const auto& [eps, w] : samples)
    if (!(eps > 0.0) || !(w > 0.0)) throw std::invalid_argument("modulus table entries must be positive");
  std::sort(samples.begin(), samples.end());
  // running maximum makes the envelope monotone
  for (std::size_t i = 1; i < samples.size(); ++i) samples[i].second = std::max(samples[i].second, samples[i - 1].second);
  return ModulusOfContinuity(Table{std::move(samples)});
}

double ModulusOfContinuity::operator()(double eps) const {
  if (!(eps > 0.0)) throw std::domain_error("modulus of continuity is defined for eps > 0");
  struct Eval {
    double eps;
    double operator()(const Lipschitz& l) const {
      return l.constant == 0.0 ? std::numeric_limits<double>::infinity() : eps / l.constant;
    }
    double operator()(const Hoelder& h) const { return std::pow(eps / h.constant, 1.0 / h.exponent); }
    double operator()(const Table& t) const {
      auto it = std::upper_bound(t.samples.begin(), t.samples.end(), std::pair{eps, std::numeric_limits<double>::infinity()});
      if (it == t.samples.begin())
        throw std::domain_error("eps below the smallest tabulated value of the modulus");
      return std::prev(it)->second;
    }
  };
  return std::visit(Eval{eps}, family_);
}

std::string ModulusOfContinuity::describe() const {
  std::ostringstream os;
  os.precision(17);
  struct Describe {
    std::ostringstream& os;
    void operator()(const Lipschitz& l) const { os << "lipschitz(" << l.constant << ")"; }
    void operator()(const Hoelder& h) const { os << "hoelder(" << h.constant << ", " << h.exponent << ")"; }
    void operator()(const Table& t) const { os << "table(" << t.samples.size() << " samples)"; }
  };
  std::visit(Describe{os}, family_);
  return os.str();
}

double markov_derivative_cap(int n, int k, double sup_norm) {
  if (n < 0 || k < 0) throw std::invalid_argument("n and k must be nonnegative");
  if (!(sup_norm >= 0.0)) throw std::invalid_argument("sup norm must be nonnegative");
  return std::pow(2.0 * n * n, k) * sup_norm;
}

double coefficient_cap(int n, int k, double sup_norm) {
  if (k > n) throw std::invalid_argument("coefficient index exceeds the degree bound");
  return markov_derivative_cap(n, k, sup_norm) / std::tgamma(k + 1.0);
}

double chi(const ModulusOfContinuity& omega, int n, double M, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("chi needs eps > 0");
  if (!(M >= 0.0)) throw std::invalid_argument("chi needs M >= 0");
  const double nn = static_cast<double>(n) * n;
  return std::min({1.0, eps / (4.0 * nn * M + 1.0), omega(eps / 2.0)});
}

double f_constant(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  double best = 0.0;
  for (int i = 0; i <= n; ++i) best = std::max(best, coefficient_cap(n, i, 1.0));
  return 1.5 * best;
}

double beta_bound_threshold(int n, double beta, double gamma, double schur_cap_n) {
  if (!(beta > 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in (0,1]");
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  const double nn = static_cast<double>(n);
  return std::pow(beta, nn + nn * nn / 4.0) / (schur_cap_n * (nn + 1.0)) * gamma;
}

double beta_bound_threshold(int n, double beta, double gamma, const BigInt& schur_cap_n) {
  return beta_bound_threshold(n, beta, gamma, to_double(schur_cap_n));
}

double oscillator_floor(int n, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in (0,1]");
  const double nn = static_cast<double>(n);
  return std::pow(alpha, nn * nn / 4.0 + nn);
}

}  // namespace uniqmod
