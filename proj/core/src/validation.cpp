#include "uniqmod/validation.hpp"

#include "uniqmod/bounds.hpp"
#include "uniqmod/interp.hpp"
#include "uniqmod/modulus.hpp"
#include "uniqmod/schur.hpp"
#include "uniqmod/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace uniqmod {

bool SuiteResult::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.failures == 0; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"schur", "interp", "bounds", "certify"};
  return names;
}

namespace {

using Rng = std::mt19937_64;

class Property {
 public:
  explicit Property(std::string name) { r_.name = std::move(name); r_.worst_margin = std::numeric_limits<double>::infinity(); }

  void check(bool ok, double margin, const std::function<std::string()>& describe) {
    ++r_.trials;
    r_.worst_margin = std::min(r_.worst_margin, margin);
    if (!ok) {
      if (r_.failures == 0) r_.first_failure = describe();
      ++r_.failures;
    }
  }
  void equal(bool ok, const std::function<std::string()>& describe) { check(ok, 0.0, describe); }

  PropertyResult done() {
    if (r_.trials == 0) r_.worst_margin = 0.0;
    return r_;
  }

 private:
  PropertyResult r_;
};

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

// Random subset of {0..n} containing 0, as a decreasing list.
std::vector<int> random_degrees_with_zero(Rng& rng, int n) {
  std::vector<int> h;
  for (int d = n; d >= 1; --d)
    if (rng() & 1) h.push_back(d);
  h.push_back(0);
  return h;
}

// Forbidden set as the complement of random allowed degrees.
std::vector<int> random_forbidden(Rng& rng, int n) {
  const auto allowed = random_degrees_with_zero(rng, n);
  std::vector<int> forbidden;
  for (int d = 1; d <= n; ++d)
    if (std::find(allowed.begin(), allowed.end(), d) == allowed.end()) forbidden.push_back(d);
  return forbidden;
}

// count distinct multiples of 1/den in [0,1], sorted.
std::vector<Rational> random_rational_nodes(Rng& rng, std::size_t count, int den) {
  std::set<int> picks;
  while (picks.size() < count) picks.insert(uniform_int(rng, 0, den));
  std::vector<Rational> out;
  for (int k : picks) out.emplace_back(k, den);
  return out;
}

// count points in [0,1] with consecutive gaps >= gap, sorted.
std::vector<double> spaced_points(Rng& rng, std::size_t count, double gap) {
  if (count == 0) return {};
  const double room = 1.0 - gap * static_cast<double>(count - 1);
  std::vector<double> u(count);
  for (auto& v : u) v = uniform(rng, 0.0, room);
  std::sort(u.begin(), u.end());
  for (std::size_t i = 0; i < count; ++i) u[i] += gap * static_cast<double>(i);
  return u;
}

std::string join(std::span<const int> v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// --- schur ---------------------------------------------------------------

SuiteResult schur_suite(std::uint64_t seed) {
  SuiteResult out{"schur", seed, {}};
  Rng rng(seed);

  Property bialternant("bialternant identity (exact)");
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<int> h;
    for (int d = 6; d >= 0; --d)
      if (rng() & 1) h.push_back(d);
    if (h.empty()) h.push_back(uniform_int(rng, 0, 6));
    const DegreeSequence seq(h, 6);
    const auto y = random_rational_nodes(rng, h.size(), 97);
    const Rational lhs = schur_eval<Rational>(partition_from_degrees(seq), y);
    const Rational rhs = schur_eval_bialternant<Rational>(seq, y);
    bialternant.equal(lhs == rhs, [&] { return "h = " + join(h); });
  }
  out.properties.push_back(bialternant.done());

  Property count("tableau count = product formula");
  for (int trial = 0; trial < 150; ++trial) {
    const int length = uniform_int(rng, 1, 5);
    std::vector<int> parts(static_cast<std::size_t>(length));
    int budget = 12;
    int cap = uniform_int(rng, 0, 6);
    for (auto& p : parts) {
      p = uniform_int(rng, 0, std::min(cap, budget));
      cap = p;
      budget -= p;
    }
    const Partition shape(parts);
    std::uint64_t enumerated = 0;
    bool semistandard = true;
    for_each_ssyt(shape, [&](const Tableau& t) {
      ++enumerated;
      semistandard = semistandard && t.is_semistandard();
    });
    count.equal(semistandard && BigInt(enumerated) == tableau_count(shape), [&] { return "lambda = " + join(parts); });
  }
  out.properties.push_back(count.done());

  Property degrees("partition <-> degrees round trip");
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = random_degrees_with_zero(rng, uniform_int(rng, 0, 12));
    const DegreeSequence seq(h);
    degrees.equal(degrees_from_partition(partition_from_degrees(seq)).values().size() == h.size() &&
                      std::equal(h.begin(), h.end(), degrees_from_partition(partition_from_degrees(seq)).values().begin()),
                  [&] { return "h = " + join(h); });
  }
  out.properties.push_back(degrees.done());

  Property cap("N_n nondecreasing and >= every sampled N_lambda");
  BigInt previous = 0;
  for (int n = 0; n <= 10; ++n) {
    const BigInt value = schur_cap(n);
    const auto h = random_degrees_with_zero(rng, n);
    const BigInt sample = tableau_count(partition_from_degrees(DegreeSequence(h, n)));
    cap.equal(value >= previous && value >= sample, [&] { return "n = " + std::to_string(n); });
    previous = value;
  }
  out.properties.push_back(cap.done());
  return out;
}

// --- interp --------------------------------------------------------------

SuiteResult interp_suite(std::uint64_t seed) {
  SuiteResult out{"interp", seed, {}};
  Rng rng(seed ^ 0x1111);

  Property oracle("Schur formula = linear-system oracle (exact)");
  Property zeros("forbidden coefficients exactly zero");
  Property fits("p(x_j) = alpha_j (exact)");
  for (int trial = 0; trial < 60; ++trial) {
    InterpolationProblem<Rational> prob;
    prob.n = uniform_int(rng, 0, 6);
    prob.forbidden = random_forbidden(rng, prob.n);
    const auto count = static_cast<std::size_t>(prob.n + 1) - prob.forbidden.size();
    prob.nodes = random_rational_nodes(rng, count, 64);
    for (std::size_t j = 0; j < count; ++j) prob.values.emplace_back(uniform_int(rng, -20, 20), uniform_int(rng, 1, 9));
    const auto p = constrained_interpolate(prob);
    const auto q = solve_linear_system_oracle(prob);
    const auto where = [&] { return "n = " + std::to_string(prob.n) + ", forbidden = " + join(prob.forbidden); };
    oracle.equal(p == q, where);
    zeros.equal(std::all_of(prob.forbidden.begin(), prob.forbidden.end(), [&](int g) { return p.coefficient(g) == 0; }),
                where);
    bool ok = true;
    for (std::size_t j = 0; j < count; ++j) ok = ok && p(prob.nodes[j]) == prob.values[j];
    fits.equal(ok, where);
  }
  out.properties.push_back(oracle.done());
  out.properties.push_back(zeros.done());
  out.properties.push_back(fits.done());

  Property float_zeros("forbidden coefficients < 1e-12 max|c| (binary64)");
  for (int trial = 0; trial < 100; ++trial) {
    InterpolationProblem<double> prob;
    prob.n = uniform_int(rng, 1, 6);
    prob.forbidden = random_forbidden(rng, prob.n);
    const auto count = static_cast<std::size_t>(prob.n + 1) - prob.forbidden.size();
    prob.nodes = spaced_points(rng, count, 0.05);
    for (std::size_t j = 0; j < count; ++j) prob.values.push_back(uniform(rng, -1.0, 1.0));
    const auto p = constrained_interpolate(prob);
    const double scale = std::max(max_abs_coefficient(p), std::numeric_limits<double>::min());
    double worst = 0.0;
    for (int g : prob.forbidden) worst = std::max(worst, std::abs(p.coefficient(g)) / scale);
    float_zeros.check(worst < 1e-12, 1e-12 - worst, [&] { return "n = " + std::to_string(prob.n); });
  }
  out.properties.push_back(float_zeros.done());

  Property lagrange("empty forbidden set reproduces Lagrange (exact)");
  for (int trial = 0; trial < 40; ++trial) {
    InterpolationProblem<Rational> prob;
    prob.n = uniform_int(rng, 0, 6);
    prob.nodes = random_rational_nodes(rng, static_cast<std::size_t>(prob.n + 1), 50);
    for (int j = 0; j <= prob.n; ++j) prob.values.emplace_back(uniform_int(rng, -9, 9), uniform_int(rng, 1, 5));
    auto expected = Polynomial<Rational>::zero(prob.n);
    for (std::size_t j = 0; j < prob.nodes.size(); ++j)
      expected += lagrange_basis_polynomial<Rational>(j, prob.nodes) * prob.values[j];
    lagrange.equal(constrained_interpolate(prob) == expected, [&] { return "n = " + std::to_string(prob.n); });
  }
  out.properties.push_back(lagrange.done());

  Property signs("oscillator sign (-1)^j on each subinterval");
  for (int trial = 0; trial < 60; ++trial) {
    const int n = uniform_int(rng, 1, 7);
    const auto forbidden = random_forbidden(rng, n);
    const auto r = static_cast<std::size_t>(n) - forbidden.size();
    std::vector<Rational> z;
    if (r > 0) {
      std::set<int> picks;
      while (picks.size() < r) picks.insert(uniform_int(rng, 1, 63));
      for (int k : picks) z.emplace_back(k, 64);
    }
    const auto p = oscillator<Rational>(n, forbidden, z);
    bool ok = true;
    for (std::size_t j = 0; j <= r && ok; ++j) {
      const Rational lo = j == 0 ? Rational(0) : z[j - 1];
      const Rational hi = j == r ? Rational(1) : z[j];
      for (int s = 1; s <= 20 && ok; ++s) {
        const Rational x = lo + (hi - lo) * Rational(s, 21);
        const Rational v = p(x);
        ok = (j % 2 == 0) ? v > 0 : v < 0;
      }
    }
    signs.equal(ok, [&] { return "n = " + std::to_string(n) + ", forbidden = " + join(forbidden); });
  }
  out.properties.push_back(signs.done());
  return out;
}

// --- bounds --------------------------------------------------------------

double grid_sup_of(const std::function<double(double)>& g, std::size_t count) {
  double best = 0.0;
  for (std::size_t i = 0; i < count; ++i) best = std::max(best, std::abs(g(static_cast<double>(i) / static_cast<double>(count - 1))));
  return best;
}

Polynomial<double> random_poly(Rng& rng, int n) {
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  for (auto& v : c) v = uniform(rng, -1.0, 1.0);
  return Polynomial<double>(c);
}

SuiteResult bounds_suite(std::uint64_t seed) {
  SuiteResult out{"bounds", seed, {}};
  Rng rng(seed ^ 0x2222);
  constexpr double kSlack = 1e-9;

  Property markov("grid sup |p^(k)| <= (2n^2)^k grid sup |p|");
  Property coeffs("|a_k| <= (2n^2)^k / k! * grid sup |p|");
  for (int trial = 0; trial < 300; ++trial) {
    const int n = uniform_int(rng, 1, 8);
    const auto p = random_poly(rng, n);
    const double sup = grid_sup_of([&](double x) { return p(x); }, 2001);
    auto d = p;
    for (int k = 1; k <= n; ++k) {
      d = d.derivative();
      const double lhs = grid_sup_of([&](double x) { return d(x); }, 2001);
      const double rhs = markov_derivative_cap(n, k, sup);
      markov.check(lhs <= rhs * (1 + kSlack), (rhs - lhs) / rhs, [&] { return "n = " + std::to_string(n); });
    }
    for (int k = 0; k <= n; ++k) {
      const double rhs = coefficient_cap(n, k, sup);
      const double lhs = std::abs(p.coefficient(k));
      coeffs.check(lhs <= rhs * (1 + kSlack), (rhs - lhs) / rhs, [&] { return "n = " + std::to_string(n); });
    }
  }
  out.properties.push_back(markov.done());
  out.properties.push_back(coeffs.done());

  Property chi_contract("|x-y| < chi => |(p-f)(x) - (p-f)(y)| < eps");
  const std::vector<FunctionSpec> family{FunctionSpec::poly({0, 0, 1}), FunctionSpec::exp_scale(1, 1),
                                         FunctionSpec::abs_shift(0.5), FunctionSpec::sine(7, 0.3)};
  for (int trial = 0; trial < 100; ++trial) {
    const auto& f = family[static_cast<std::size_t>(trial) % family.size()];
    const int n = uniform_int(rng, 1, 6);
    auto p = random_poly(rng, n);
    const double M = sup_norm_bound(p) * 1.01;
    const double eps = std::pow(10.0, uniform(rng, -4.0, 0.0));
    const double step = chi(f.modulus(), n, M, eps);
    double worst = std::numeric_limits<double>::infinity();
    for (int s = 0; s < 50; ++s) {
      const double x = uniform(rng, 0.0, 1.0);
      const double y = std::clamp(x + uniform(rng, -1.0, 1.0) * step * 0.999, 0.0, 1.0);
      const double gap = std::abs((p(x) - f(x)) - (p(y) - f(y)));
      worst = std::min(worst, (eps - gap) / eps);
    }
    chi_contract.check(worst > 0.0, worst, [&] { return f.name() + ", n = " + std::to_string(n); });
  }
  out.properties.push_back(chi_contract.done());

  Property s_lb1("s_lambda(y) >= delta^{n^2/4}, at most one y_i < delta");
  Property s_lb2("s_lambda(y, y_1..y_r) >= alpha^{n^2/4} on the admissible set");
  Property p_lb("|oscillator(x)| >= alpha^{n^2/4+n} on the admissible set");
  for (int trial = 0; trial < 200; ++trial) {
    const int n = uniform_int(rng, 1, 6);
    const auto h = random_degrees_with_zero(rng, n);
    const std::size_t r = h.size() - 1;
    const Partition shape = partition_from_degrees(DegreeSequence(h, n));
    const double nn4 = static_cast<double>(n) * n / 4.0;

    const double delta = uniform(rng, 0.05, 1.0);
    std::vector<double> y(r + 1);
    for (auto& v : y) v = uniform(rng, delta, 1.0);
    y[0] = uniform(rng, 0.0, 1.0);
    const double v1 = schur_eval<double>(shape, y);
    const double floor1 = std::pow(delta, nn4);
    s_lb1.check(v1 >= floor1 * (1 - kSlack), (v1 - floor1) / floor1, [&] { return "h = " + join(h); });

    const double alpha = uniform(rng, 0.01, 1.0 / static_cast<double>(2 * r + 1));
    const auto z = spaced_points(rng, r, alpha);
    double x = 0.0;
    bool admissible = false;
    for (int attempt = 0; attempt < 200 && !admissible; ++attempt) {
      x = uniform(rng, 0.0, 1.0);
      admissible = std::all_of(z.begin(), z.end(), [&](double zj) { return std::abs(zj - x) >= alpha; });
    }
    if (!admissible) continue;
    std::vector<double> args{x};
    args.insert(args.end(), z.begin(), z.end());
    const double v2 = schur_eval<double>(shape, args);
    const double floor2 = std::pow(alpha, nn4);
    s_lb2.check(v2 >= floor2 * (1 - kSlack), (v2 - floor2) / floor2, [&] { return "h = " + join(h); });

    std::vector<int> forbidden;
    for (int d = 1; d <= n; ++d)
      if (std::find(h.begin(), h.end(), d) == h.end()) forbidden.push_back(d);
    if (r == 0 || z.front() <= 0.0 || z.back() >= 1.0) continue;
    const auto p = oscillator<double>(n, forbidden, z);
    const double v3 = std::abs(p(x));
    const double floor3 = oscillator_floor(n, alpha);
    p_lb.check(v3 >= floor3 * (1 - kSlack), (v3 - floor3) / floor3, [&] { return "h = " + join(h); });
  }
  out.properties.push_back(s_lb1.done());
  out.properties.push_back(s_lb2.done());
  out.properties.push_back(p_lb.done());

  Property beta("small values at beta-spaced nodes force ||p|| <= gamma");
  for (int trial = 0; trial < 150; ++trial) {
    const int n = uniform_int(rng, 1, 6);
    const auto forbidden = random_forbidden(rng, n);
    const std::size_t count = static_cast<std::size_t>(n + 1) - forbidden.size();
    const double beta_max = count > 1 ? 1.0 / static_cast<double>(count - 1) : 1.0;
    const double b = uniform(rng, 0.2, 1.0) * beta_max;
    const double gamma = std::pow(10.0, uniform(rng, -2.0, 2.0));
    const double tau = beta_bound_threshold(n, b, gamma, schur_cap(n));
    InterpolationProblem<double> prob{n, forbidden, spaced_points(rng, count, b), {}};
    for (std::size_t j = 0; j < count; ++j) prob.values.push_back(tau * uniform(rng, -1.0, 1.0));
    double norm;
    try {
      norm = sup_norm_bound(constrained_interpolate(prob));
    } catch (const IllConditioned&) {
      continue;
    }
    beta.check(norm <= gamma * (1 + kSlack), (gamma - norm) / gamma, [&] { return "n = " + std::to_string(n); });
  }
  out.properties.push_back(beta.done());
  return out;
}

// --- certify -------------------------------------------------------------

SuiteResult certify_suite(std::uint64_t seed) {
  SuiteResult out{"certify", seed, {}};
  struct Case {
    FunctionSpec f;
    ConstraintSet K;
  };
  const std::vector<Case> cases{
      {FunctionSpec::poly({0, 0, 1}), ConstraintSet(1, {{1, std::nullopt, std::nullopt}})},
      {FunctionSpec::poly({0, 0, 1}), ConstraintSet(1, {{1, std::nullopt, 0.5}})},
      {FunctionSpec::exp_scale(1, 1), ConstraintSet(2, {{2, 0.0, 0.5}})},
      {FunctionSpec::abs_shift(0.5), ConstraintSet(2, {{1, -0.5, 0.5}})},
  };
  Property pipeline("with_L certificate stress tests pass");
  Property alternation("alternation found with count n+1-l at eps = 2 grid_eps");
  Property quarter("psi_star(delta) <= delta/4");
  Property linear("psi linear in delta");
  Property monotone("gamma nondecreasing in L");
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const ApproximationInstance instance(cases[i].f, cases[i].K);
    const CertifyOptions options{.grid_eps = 2e-3,
                                 .seed = seed + i,
                                 .strong_unicity_samples = 100,
                                 .pair_candidates = 40,
                                 .declared_L = std::nullopt};
    const auto where = [&] { return instance.f.name() + ", n = " + std::to_string(instance.n()); };
    const auto report = certify_uniqueness(instance, 0.1, CertifyMode::with_L, options);
    pipeline.check(report.passed(), report.strong_unicity.min_margin, [&] {
      return where() + ": " + (report.failures.empty() ? std::string() : report.failures.front());
    });
    alternation.equal(report.solve.alternation.has_value(), where);
    const auto& cert = *report.certificate;
    for (double d : {1.0, 0.5, 0.1, 0.01}) {
      const double v = cert.psi_star(d);
      quarter.check(v <= d / 4.0, (d / 4.0 - v) / d, where);
    }
    const double L = cert.L.value;
    const double a = psi(instance, L, 0.5), b = psi(instance, L, 1.0);
    linear.check(std::abs(2 * a - b) <= 1e-12 * b, 0.0, where);
    monotone.check(strong_unicity_gamma(instance, L / 2) <= strong_unicity_gamma(instance, L), 0.0, where);
  }
  out.properties.push_back(pipeline.done());
  out.properties.push_back(alternation.done());
  out.properties.push_back(quarter.done());
  out.properties.push_back(linear.done());
  out.properties.push_back(monotone.done());
  return out;
}

}  // namespace

std::vector<SuiteResult> run_suite(const std::string& name, std::uint64_t seed) {
  const std::map<std::string, SuiteResult (*)(std::uint64_t)> table{
      {"schur", schur_suite}, {"interp", interp_suite}, {"bounds", bounds_suite}, {"certify", certify_suite}};
  if (name == "all") {
    std::vector<SuiteResult> all;
    for (const auto& suite : suite_names()) all.push_back(table.at(suite)(seed));
    return all;
  }
  const auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown suite \"" + name + "\"");
  return {it->second(seed)};
}

}  // namespace uniqmod
