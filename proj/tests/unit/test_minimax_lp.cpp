#include "uniqmod/linalg.hpp"
#include "uniqmod/minimax_lp.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

using namespace uniqmod;

namespace {

std::vector<double> uniform_nodes(int count) {
  std::vector<double> x(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) x[static_cast<std::size_t>(i)] = static_cast<double>(i) / (count - 1);
  return x;
}

// Discrete minimax value as the largest levelled error over all (n+2)-point references.
double reference_oracle(const std::vector<double>& x, const std::vector<double>& y, int n) {
  const std::size_t m = static_cast<std::size_t>(n) + 2;
  std::vector<std::size_t> idx(m);
  double best = 0.0;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == m) {
      Matrix<double> A(m, m);
      std::vector<double> b(m);
      for (std::size_t i = 0; i < m; ++i) {
        double power = 1.0;
        for (int k = 0; k <= n; ++k) {
          A(i, static_cast<std::size_t>(k)) = power;
          power *= x[idx[i]];
        }
        A(i, m - 1) = i % 2 ? -1.0 : 1.0;
        b[i] = y[idx[i]];
      }
      if (const auto sol = solve(A, b)) best = std::max(best, std::abs(sol->back()));
      return;
    }
    for (std::size_t s = start; s + (m - pos) <= x.size(); ++s) {
      idx[pos] = s;
      rec(pos + 1, s + 1);
    }
  };
  rec(0, 0);
  return best;
}

// n = 1 with c_1 boxed: for fixed c_1 the best c_0 centres the residual range, and the
// resulting error is convex in c_1.
double boxed_line_oracle(const std::vector<double>& x, const std::vector<double>& y, double lo, double hi) {
  auto err = [&](double c1) {
    double mx = -1e300, mn = 1e300;
    for (std::size_t i = 0; i < x.size(); ++i) {
      mx = std::max(mx, y[i] - c1 * x[i]);
      mn = std::min(mn, y[i] - c1 * x[i]);
    }
    return (mx - mn) / 2;
  };
  for (int it = 0; it < 200; ++it) {
    const double a = lo + (hi - lo) / 3, b = hi - (hi - lo) / 3;
    if (err(a) < err(b)) hi = b;
    else lo = a;
  }
  return err((lo + hi) / 2);
}

}  // namespace

TEST_CASE("unconstrained LP matches the reference oracle") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 1 + trial % 3;
    const auto x = uniform_nodes(15);
    std::vector<double> y;
    for (double t : x) y.push_back(std::sin(5 * t + unit(rng)) + 0.3 * unit(rng));
    const auto r = solve_minimax_lp(x, y, ConstraintSet(n, {}));
    CHECK(r.value == doctest::Approx(reference_oracle(x, y, n)).epsilon(1e-9));
    double achieved = 0.0;
    const Polynomial<double> p(r.coeffs);
    for (std::size_t i = 0; i < x.size(); ++i) achieved = std::max(achieved, std::abs(y[i] - p(x[i])));
    CHECK(achieved == doctest::Approx(r.value).epsilon(1e-9));
  }
}

TEST_CASE("boxed slope matches the one-variable oracle") {
  const auto x = uniform_nodes(201);
  std::vector<double> y;
  for (double t : x) y.push_back(std::exp(2 * t));
  for (auto [lo, hi] : std::vector<std::pair<double, double>>{{0, 1}, {2, 3}, {-1, 10}, {7, 8}}) {
    const auto r = solve_minimax_lp(x, y, ConstraintSet(1, {{1, lo, hi}}));
    CHECK(r.value == doctest::Approx(boxed_line_oracle(x, y, lo, hi)).epsilon(1e-8));
    CHECK(r.coeffs[1] >= lo - 1e-9);
    CHECK(r.coeffs[1] <= hi + 1e-9);
  }
}

TEST_CASE("one-sided boxes") {
  const auto x = uniform_nodes(101);
  std::vector<double> y;
  for (double t : x) y.push_back(t * t);
  const auto upper = solve_minimax_lp(x, y, ConstraintSet(1, {{1, std::nullopt, 0.5}}));
  CHECK(upper.value == doctest::Approx(9.0 / 32).epsilon(1e-9));
  CHECK(upper.coeffs[1] == doctest::Approx(0.5));
  const auto lower = solve_minimax_lp(x, y, ConstraintSet(1, {{1, 1.5, std::nullopt}}));
  CHECK(lower.value == doctest::Approx(boxed_line_oracle(x, y, 1.5, 100)).epsilon(1e-8));
}

TEST_CASE("exact fit gives zero") {
  const auto x = uniform_nodes(50);
  std::vector<double> y;
  for (double t : x) y.push_back(1 - 2 * t + 3 * t * t);
  const auto r = solve_minimax_lp(x, y, ConstraintSet(2, {}));
  CHECK(r.value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r.coeffs[2] == doctest::Approx(3.0));
}

TEST_CASE("nonconvergence reports the trace") {
  const auto x = uniform_nodes(300);
  std::vector<double> y;
  for (double t : x) y.push_back(std::abs(t - 0.37));
  try {
    solve_minimax_lp(x, y, ConstraintSet(4, {}), {.max_iterations = 2, .refactor_every = 32});
    FAIL("expected LpNonconvergence");
  } catch (const LpNonconvergence& e) {
    CHECK_FALSE(e.trace().empty());
  }
}

TEST_CASE("input checks") {
  const std::vector<double> x{0.0, 1.0}, y{1.0};
  CHECK_THROWS(solve_minimax_lp(x, y, ConstraintSet(1, {})));
}
