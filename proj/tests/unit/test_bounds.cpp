#include "uniqmod/bounds.hpp"
#include "uniqmod/function_spec.hpp"
#include "uniqmod/interp.hpp"
#include "uniqmod/polynomial.hpp"
#include "uniqmod/schur.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace uniqmod;

namespace {

double grid_max(const Polynomial<double>& p, int count = 10'001) {
  double best = 0.0;
  for (int i = 0; i < count; ++i) best = std::max(best, std::abs(p(static_cast<double>(i) / (count - 1))));
  return best;
}

// T_2(2x - 1) = 8x^2 - 8x + 1
const Polynomial<double> kShiftedT2{1.0, -8.0, 8.0};

}  // namespace

TEST_CASE("markov_derivative_cap examples") {
  CHECK(markov_derivative_cap(1, 1, 1.0) == 2.0);
  CHECK(markov_derivative_cap(2, 1, 1.0) == 8.0);
  CHECK(markov_derivative_cap(2, 0, 5.0) == 5.0);
  CHECK(grid_max(kShiftedT2.derivative()) == doctest::Approx(8.0));
  CHECK(markov_derivative_cap(0, 0, 2.0) == 2.0);
}

TEST_CASE("coefficient_cap examples") {
  CHECK(coefficient_cap(2, 2, 1.0) == 32.0);
  CHECK(std::abs(kShiftedT2.coefficient(2)) <= coefficient_cap(2, 2, grid_max(kShiftedT2)));
  CHECK(coefficient_cap(3, 0, 0.7) == 0.7);
  CHECK(coefficient_cap(1, 1, 1.0) == 2.0);
  CHECK_THROWS(coefficient_cap(1, 2, 1.0));
}

TEST_CASE("chi examples") {
  CHECK(chi(ModulusOfContinuity::lipschitz(1), 1, 1.0, 1.0) == doctest::Approx(0.2));
  CHECK(chi(ModulusOfContinuity::lipschitz(1), 0, 0.0, 3.0) == 1.0);
  CHECK(chi(ModulusOfContinuity::hoelder(1, 0.5), 2, 2.0, 0.5) == doctest::Approx(1.0 / 66.0));
  CHECK_THROWS(chi(ModulusOfContinuity::lipschitz(1), 1, 1.0, 0.0));
  CHECK_THROWS(chi(ModulusOfContinuity::lipschitz(1), 1, -1.0, 1.0));
}

TEST_CASE("f_constant examples") {
  CHECK(f_constant(0) == 1.5);
  CHECK(f_constant(1) == 3.0);
  CHECK(f_constant(2) == 48.0);
  for (int n = 0; n <= 12; ++n) CHECK(f_constant(n) >= 1.0);
}

TEST_CASE("beta_bound_threshold examples") {
  CHECK(beta_bound_threshold(1, 1.0, 1.0, BigInt(1)) == 0.5);
  CHECK(beta_bound_threshold(2, 0.5, 1.0, BigInt(2)) == doctest::Approx(1.0 / 48.0));
  CHECK(beta_bound_threshold(2, 1.0, 6.0, schur_cap(2)) == doctest::Approx(1.0));
  CHECK_THROWS(beta_bound_threshold(2, 0.0, 1.0, BigInt(2)));
  CHECK_THROWS(beta_bound_threshold(2, 1.5, 1.0, BigInt(2)));
  CHECK_THROWS(beta_bound_threshold(2, 0.5, 0.0, BigInt(2)));
}

TEST_CASE("oscillator_floor examples") {
  for (int n = 0; n <= 8; ++n) CHECK(oscillator_floor(n, 1.0) == 1.0);
  CHECK(oscillator_floor(2, 0.5) == doctest::Approx(0.125));
  const std::vector<int> forbidden{1};
  const std::vector<double> z{0.5};
  const auto p = oscillator<double>(2, forbidden, z);
  CHECK(std::abs(p(1.0)) == doctest::Approx(0.75));
  CHECK(std::abs(p(1.0)) >= oscillator_floor(2, 0.25));
  CHECK_THROWS(oscillator_floor(2, 0.0));
  CHECK_THROWS(oscillator_floor(2, 1.1));
}

TEST_CASE("modulus families") {
  const auto lip = ModulusOfContinuity::lipschitz(4);
  CHECK(lip(1.0) == 0.25);
  CHECK(std::isinf(ModulusOfContinuity::lipschitz(0)(1.0)));
  const auto hoe = ModulusOfContinuity::hoelder(1, 0.5);
  CHECK(hoe(0.25) == doctest::Approx(1.0 / 16.0));
  CHECK_THROWS(ModulusOfContinuity::hoelder(1, 1.5));
  CHECK_THROWS(ModulusOfContinuity::lipschitz(-1));
  CHECK_THROWS(lip(0.0));
}

TEST_CASE("table modulus is the monotone step envelope") {
  const auto t = ModulusOfContinuity::table({{0.1, 0.01}, {0.5, 0.004}, {0.2, 0.05}});
  CHECK_THROWS_AS(t(0.05), std::domain_error);
  CHECK(t(0.1) == 0.01);
  CHECK(t(0.15) == 0.01);
  CHECK(t(0.2) == 0.05);
  CHECK(t(0.6) == 0.05);
  double previous = 0.0;
  for (double e = 0.1; e < 2.0; e += 0.01) {
    CHECK(t(e) >= previous);
    previous = t(e);
  }
  CHECK_THROWS(ModulusOfContinuity::table({}));
  CHECK_THROWS(ModulusOfContinuity::table({{0.1, 0.0}}));
}

TEST_CASE("Markov corollaries on random polynomials") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    for (auto& v : c) v = coeff(rng);
    const Polynomial<double> p(c);
    const double sup = grid_max(p);
    auto d = p;
    for (int k = 1; k <= n; ++k) {
      d = d.derivative();
      CHECK(grid_max(d) <= markov_derivative_cap(n, k, sup) * (1 + 1e-9));
    }
    for (int k = 0; k <= n; ++k) CHECK(std::abs(p.coefficient(k)) <= coefficient_cap(n, k, sup) * (1 + 1e-9));
  }
}

TEST_CASE("chi is a modulus of continuity for p - f") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::vector<FunctionSpec> family{FunctionSpec::poly({0, 0, 1}), FunctionSpec::exp_scale(2, -1),
                                         FunctionSpec::abs_shift(0.3), FunctionSpec::sine(5, 1),
                                         FunctionSpec::piecewise_linear({{0, 0}, {0.5, 2}, {1, 1}})};
  for (int trial = 0; trial < 200; ++trial) {
    const auto& f = family[static_cast<std::size_t>(trial) % family.size()];
    const int n = static_cast<int>(rng() % 6);
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    for (auto& v : c) v = 2 * unit(rng) - 1;
    const Polynomial<double> p(c);
    const double M = sup_norm_bound(p);
    const double eps = std::pow(10.0, -4 * unit(rng));
    const double step = chi(f.modulus(), n, M, eps);
    CHECK(step > 0.0);
    CHECK(step <= 1.0);
    for (int s = 0; s < 20; ++s) {
      const double x = unit(rng);
      const double y = std::clamp(x + (2 * unit(rng) - 1) * step * 0.999999, 0.0, 1.0);
      CHECK(std::abs((p(x) - f(x)) - (p(y) - f(y))) < eps);
    }
  }
}

TEST_CASE("small values at spaced nodes bound the whole polynomial") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    std::vector<int> forbidden;
    for (int d = 1; d <= n; ++d)
      if (rng() % 3 == 0) forbidden.push_back(d);
    const std::size_t count = static_cast<std::size_t>(n + 1) - forbidden.size();
    const double beta = count > 1 ? (0.3 + 0.7 * unit(rng)) / static_cast<double>(count - 1) : 1.0;
    std::vector<double> nodes(count);
    const double room = 1.0 - beta * static_cast<double>(count - 1);
    const double start = room * unit(rng);
    for (std::size_t j = 0; j < count; ++j) nodes[j] = start + beta * static_cast<double>(j);
    nodes.back() = std::min(nodes.back(), 1.0);
    const double gamma = 0.1 + 10 * unit(rng);
    const double tau = beta_bound_threshold(n, beta, gamma, schur_cap(n));
    InterpolationProblem<double> prob{n, forbidden, nodes, {}};
    for (std::size_t j = 0; j < count; ++j) prob.values.push_back(tau * (2 * unit(rng) - 1));
    const auto p = constrained_interpolate(prob);
    CHECK(grid_max(p) <= gamma * (1 + 1e-9));
  }
}
