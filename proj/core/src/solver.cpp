#include "uniqmod/solver.hpp"

#include "uniqmod/bounds.hpp"
#include "uniqmod/minimax_lp.hpp"
#include "uniqmod/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace uniqmod {

Grid Grid::with_max_step(double max_step) {
  if (!(max_step > 0.0)) throw std::invalid_argument("grid step must be positive");
  const double intervals = std::ceil(1.0 / std::min(max_step, 1.0));
  if (intervals > 5e8) throw std::runtime_error("grid too fine: " + std::to_string(intervals) + " intervals");
  return Grid(static_cast<std::size_t>(intervals) + 1);
}

std::vector<double> Grid::points() const {
  std::vector<double> out(count_);
  for (std::size_t i = 0; i < count_; ++i) out[i] = (*this)[i];
  return out;
}

Grid certificate_grid(const ApproximationInstance& instance, double grid_eps) {
  if (!(grid_eps > 0.0)) throw std::invalid_argument("grid_eps must be positive");
  const double step = std::min(chi(instance.omega, instance.n(), norm_cap_M(instance), grid_eps), 1e-3);
  return Grid::with_max_step(step);
}

SampledTarget::SampledTarget(const FunctionSpec& f, Grid grid)
    : grid_(grid), nodes_(grid.points()), values_(nodes_.size()) {
  parallel_for(nodes_.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) values_[i] = f(nodes_[i]);
  });
}

namespace {

template <class Term>
double parallel_max(std::size_t count, const Term& term) {
  std::mutex lock;
  double best = 0.0;
  parallel_for(count, [&](std::size_t begin, std::size_t end) {
    double local = 0.0;
    for (std::size_t i = begin; i < end; ++i) local = std::max(local, term(i));
    const std::lock_guard guard(lock);
    best = std::max(best, local);
  });
  return best;
}

}  // namespace

double SampledTarget::error(const Polynomial<double>& p) const {
  return parallel_max(nodes_.size(), [&](std::size_t i) { return std::abs(values_[i] - p(nodes_[i])); });
}

double SampledTarget::distance(const Polynomial<double>& p, const Polynomial<double>& q) const {
  const Polynomial<double> d = p - q;
  return parallel_max(nodes_.size(), [&](std::size_t i) { return std::abs(d(nodes_[i])); });
}

std::vector<int> active_constraints(const Polynomial<double>& p, const ConstraintSet& K, double mu) {
  if (!(mu >= 0.0)) throw std::invalid_argument("mu must be nonnegative");
  if (p.degree() > K.n()) throw std::invalid_argument("polynomial degree exceeds n");
  if (!K.contains(p)) throw std::invalid_argument("polynomial is not in K");
  std::vector<int> out;
  const auto& entries = K.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const double c = p.coefficient(entries[i].k);
    const bool low = entries[i].lower && c <= *entries[i].lower + mu;
    const bool high = entries[i].upper && c >= *entries[i].upper - mu;
    if (low || high) out.push_back(static_cast<int>(i));
  }
  return out;
}

namespace {

std::optional<std::vector<AlternationPoint>> scan(const SampledTarget& target, const Polynomial<double>& p, double E,
                                                  double eps, std::size_t count, int nu) {
  std::vector<AlternationPoint> points;
  points.reserve(count);
  const auto& x = target.nodes();
  const auto& y = target.values();
  std::size_t j = 0;
  for (std::size_t slot = 1; slot <= count; ++slot) {
    const int sign = (slot % 2 == 0) ? nu : -nu;
    bool found = false;
    for (; j < x.size(); ++j) {
      const double err = y[j] - p(x[j]);
      if (std::abs(sign * err - E) <= eps) {
        points.push_back({x[j], sign, err});
        ++j;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return points;
}

}  // namespace

std::optional<Alternation> find_alternation(const SampledTarget& target, const Polynomial<double>& p, double E,
                                            double eps, std::size_t count) {
  if (count > target.grid().size()) throw std::invalid_argument("alternation count exceeds grid size");
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be nonnegative");
  auto plus = scan(target, p, E, eps, count, 1);
  auto minus = scan(target, p, E, eps, count, -1);
  if (plus) return Alternation{1, std::move(*plus), minus.has_value()};
  if (minus) return Alternation{-1, std::move(*minus), false};
  return std::nullopt;
}

std::optional<Alternation> find_alternation(const ApproximationInstance& instance, const Polynomial<double>& p,
                                            double E, double eps, std::size_t count, const Grid& grid) {
  if (count > grid.size()) throw std::invalid_argument("alternation count exceeds grid size");
  return find_alternation(SampledTarget(instance.f, grid), p, E, eps, count);
}

namespace {

BestApproxResult solve_on(const ApproximationInstance& instance, const SampledTarget& target, double grid_eps) {
  const int n = instance.n();
  const MinimaxLpResult lp = solve_minimax_lp(target.nodes(), target.values(), instance.K);

  BestApproxResult r;
  r.grid = target.grid();
  r.grid_eps = grid_eps;
  r.p_star = instance.K.clamp(Polynomial<double>(lp.coeffs));
  r.grid_error = target.error(r.p_star);
  r.E_low = std::min(lp.value, r.grid_error);
  r.E_high = r.E_low + grid_eps;
  r.M = norm_cap_M(instance);
  r.p_star_within_M = sup_norm_bound(r.p_star) <= r.M;
  r.lp_iterations = lp.phase1_iterations + lp.phase2_iterations;

  const double eps = 2.0 * grid_eps;
  r.active_set = active_constraints(r.p_star, instance.K, f_constant(n) * eps);
  const std::size_t count = static_cast<std::size_t>(n + 1) - r.active_set.size();
  r.alternation = find_alternation(target, r.p_star, r.E_low, eps, count);
  return r;
}

}  // namespace

BestApproxResult solve_best_approx(const ApproximationInstance& instance, double grid_eps) {
  const SampledTarget target(instance.f, certificate_grid(instance, grid_eps));
  return solve_on(instance, target, grid_eps);
}

namespace {

// p_star + coordinatewise perturbation of relative size `scale` against the
// coefficient caps, clamped into K.
Polynomial<double> perturb(const Polynomial<double>& p_star, const ConstraintSet& K, double M, double scale,
                           std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Polynomial<double> q = p_star;
  q.resize(K.n());
  for (int k = 0; k <= K.n(); ++k) q.coeffs()[static_cast<std::size_t>(k)] += scale * coefficient_cap(K.n(), k, M) * unit(rng);
  return K.clamp(std::move(q));
}

double log_uniform_scale(std::mt19937_64& rng, double lo_exp, double hi_exp) {
  std::uniform_real_distribution<double> e(lo_exp, hi_exp);
  return std::pow(10.0, e(rng));
}

std::string seed_tag(std::uint64_t seed, const std::string& stream, int index) {
  std::ostringstream os;
  os << "seed=" << seed << " stream=" << stream << " sample=" << index;
  return os.str();
}

struct PairStats {
  int pairs = 0;
  double max_distance = 0.0;
  int violations = 0;
};

PairStats pair_stats(const SampledTarget& target, const std::vector<std::pair<int, Polynomial<double>>>& accepted,
                     double delta, const std::function<void(int, int, double)>& on_violation) {
  constexpr std::size_t kMaxPairMembers = 40;
  PairStats stats;
  const std::size_t members = std::min(accepted.size(), kMaxPairMembers);
  for (std::size_t a = 0; a < members; ++a) {
    for (std::size_t b = a + 1; b < members; ++b) {
      const double d = target.distance(accepted[a].second, accepted[b].second);
      ++stats.pairs;
      stats.max_distance = std::max(stats.max_distance, d);
      if (d > delta) {
        ++stats.violations;
        on_violation(accepted[a].first, accepted[b].first, d);
      }
    }
  }
  return stats;
}

CollapseCheck collapse_check(const std::string& name, double threshold, double delta,
                             const ApproximationInstance& instance, const SampledTarget& target,
                             const BestApproxResult& best, const CertifyOptions& options, std::uint64_t stream,
                             std::vector<std::string>& failures) {
  CollapseCheck check;
  check.modulus = name;
  check.threshold = threshold;
  std::mt19937_64 rng(options.seed ^ (0x9e3779b97f4a7c15ULL * stream));
  const double accept_level = best.E_low + threshold - best.grid_eps;
  const double relaxed_level = best.grid_error + threshold;
  const double tiny_scale = threshold / std::max(best.M, 1.0);

  std::vector<std::pair<int, Polynomial<double>>> accepted, relaxed;
  for (int i = 0; i < options.pair_candidates; ++i) {
    Polynomial<double> q = best.p_star;
    if (i > 0) {
      const double scale = i % 2 == 1 ? log_uniform_scale(rng, -12.0, 0.0) : tiny_scale * log_uniform_scale(rng, -2.0, 1.0);
      q = perturb(best.p_star, instance.K, best.M, scale, rng);
    }
    ++check.candidates;
    const double err = target.error(q);
    if (err <= accept_level) accepted.emplace_back(i, q);
    if (err <= relaxed_level) relaxed.emplace_back(i, std::move(q));
  }

  check.accepted = static_cast<int>(accepted.size());
  const auto strict = pair_stats(target, accepted, delta, [&](int a, int b, double d) {
    std::ostringstream os;
    os << name << " collapse violated: distance " << d << " > delta " << delta << " ("
       << seed_tag(options.seed, name, a) << ", partner " << b << ")";
    failures.push_back(os.str());
  });
  check.pairs = strict.pairs;
  check.max_pair_distance = strict.max_distance;
  check.violations = strict.violations;

  check.relaxed_accepted = static_cast<int>(relaxed.size());
  const auto loose = pair_stats(target, relaxed, delta, [](int, int, double) {});
  check.relaxed_pairs = loose.pairs;
  check.relaxed_max_pair_distance = loose.max_distance;
  check.relaxed_violations = loose.violations;
  return check;
}

}  // namespace

CertificationReport certify_uniqueness(const ApproximationInstance& instance, double delta, CertifyMode mode,
                                       const CertifyOptions& options) {
  if (!(delta >= 0.0) || !std::isfinite(delta)) throw std::invalid_argument("delta must be finite and nonnegative");
  if (options.strong_unicity_samples < 0 || options.pair_candidates < 0)
    throw std::invalid_argument("sample counts must be nonnegative");

  CertificationReport report;
  report.mode = mode;
  report.delta = delta;
  report.options = options;

  const SampledTarget target(instance.f, certificate_grid(instance, options.grid_eps));
  report.solve = solve_on(instance, target, options.grid_eps);
  const BestApproxResult& best = report.solve;
  const int n = instance.n();

  std::optional<double> L;
  std::string L_source;
  if (options.declared_L) {
    if (!(*options.declared_L > 0.0)) throw CertificationRejected("declared L must be positive");
    L = *options.declared_L;
    L_source = "declared";
  } else if (best.E_low - options.grid_eps > 0.0) {
    L = best.E_low - options.grid_eps;
    L_source = "solver: E_low - grid_eps";
  }
  if (mode == CertifyMode::with_L && !L) {
    std::ostringstream os;
    os << "no positive lower bound on E: E_low = " << best.E_low << ", grid_eps = " << options.grid_eps;
    throw CertificationRejected(os.str());
  }

  if (L) {
    report.certificate = make_certificate(instance, *L, L_source);
  } else if (delta > 0.0) {
    report.certificate = make_certificate(instance, delta / 4.0, "psi_star: L = delta/4");
  }

  if (report.certificate) {
    const auto& cert = *report.certificate;
    for (double d = delta; d > 0.0 && report.psi_star_table.size() < 8; d /= 4.0) {
      const double v = cert.psi_star(d);
      report.psi_star_table.emplace_back(d, v);
      if (v > d / 4.0) {
        report.psi_star_within_quarter = false;
        std::ostringstream os;
        os << "psi_star(" << d << ") = " << v << " exceeds delta/4";
        report.failures.push_back(os.str());
      }
    }

    if (L) {
      const double eps = 2.0 * options.grid_eps;
      const double chi_half = cert.chi_half_L.value;
      const double slack = std::pow(chi_half / 2.0, static_cast<double>(n) * n / 4.0 + n) /
                           to_double(cert.schur_cap) * eps;
      report.alternation_hypothesis_verified =
          eps < *L / 4.0 && best.p_star_within_M && best.grid_error + options.grid_eps <= best.E_low + slack;
    }
  }

  const double psi_star_delta = report.certificate ? report.certificate->psi_star(delta) : 0.0;
  if (mode == CertifyMode::with_L) {
    report.collapse.push_back(collapse_check("psi", report.certificate->psi(delta), delta, instance, target, best,
                                             options, 1, report.failures));
  }
  report.collapse.push_back(
      collapse_check("psi_star", psi_star_delta, delta, instance, target, best, options, 2, report.failures));

  StrongUnicityCheck& su = report.strong_unicity;
  if (mode != CertifyMode::with_L) {
    su.skipped_reason = "L_free mode has no strong-unicity constant";
  } else {
    su.ran = true;
    const double gamma = report.certificate->gamma.value;
    std::mt19937_64 rng(options.seed ^ (0x9e3779b97f4a7c15ULL * 3));
    su.min_margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < options.strong_unicity_samples; ++i) {
      const Polynomial<double> q = perturb(best.p_star, instance.K, best.M, log_uniform_scale(rng, -8.0, 0.0), rng);
      const double margin =
          target.error(q) + 2.0 * options.grid_eps - best.E_low - gamma * target.distance(q, best.p_star);
      ++su.samples;
      su.min_margin = std::min(su.min_margin, margin);
      if (margin < 0.0) {
        ++su.violations;
        std::ostringstream os;
        os << "strong unicity violated: margin " << margin << " (" << seed_tag(options.seed, "strong_unicity", i)
           << ")";
        report.failures.push_back(os.str());
      }
    }
    if (su.samples == 0) su.min_margin = 0.0;
  }
  return report;
}

}  // namespace uniqmod
