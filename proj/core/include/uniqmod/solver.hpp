#pragma once

// Desk-scale oracle for E = min_{q in K} ||f - q|| on [0,1] and the stress tests that
// exercise a uniqueness certificate against it.
//
// The continuum is replaced by a uniform grid with spacing below
// chi(omega, n, M, grid_eps); for every p with ||p|| <= M the grid maximum of |f - p|
// then underestimates the true maximum by less than grid_eps.

#include "uniqmod/instance.hpp"
#include "uniqmod/modulus.hpp"
#include "uniqmod/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace uniqmod {

/// Uniform grid on [0,1] including both endpoints.
class Grid {
 public:
  /// Smallest uniform grid whose spacing does not exceed max_step.
  static Grid with_max_step(double max_step);

  std::size_t size() const { return count_; }
  double step() const { return step_; }
  double operator[](std::size_t i) const {
    return i + 1 == count_ ? 1.0 : static_cast<double>(i) / static_cast<double>(count_ - 1);
  }
  std::vector<double> points() const;

 private:
  Grid(std::size_t count) : count_(count), step_(1.0 / static_cast<double>(count - 1)) {}
  std::size_t count_;
  double step_;
};

/// Spacing min(chi(omega, n, M, grid_eps), 1e-3).
Grid certificate_grid(const ApproximationInstance& instance, double grid_eps);

/// f sampled on a grid together with the grid itself.
class SampledTarget {
 public:
  SampledTarget(const FunctionSpec& f, Grid grid);

  const Grid& grid() const { return grid_; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& values() const { return values_; }

  /// max_j |f(x_j) - p(x_j)|
  double error(const Polynomial<double>& p) const;
  /// max_j |p(x_j) - q(x_j)|
  double distance(const Polynomial<double>& p, const Polynomial<double>& q) const;

 private:
  Grid grid_;
  std::vector<double> nodes_;
  std::vector<double> values_;
};

struct AlternationPoint {
  double x;
  int sign;      ///< nu (-1)^i
  double error;  ///< f(x) - p(x)
};

struct Alternation {
  int nu = 1;
  std::vector<AlternationPoint> points;
  /// Whether the scan also completes with the opposite nu.
  bool other_sign_completes = false;
};

struct BestApproxResult {
  Polynomial<double> p_star;
  double E_low = 0.0;  ///< discrete optimum, a lower bound on E
  double E_high = 0.0; ///< E_low + grid_eps
  double grid_eps = 0.0;
  double grid_error = 0.0;  ///< max grid |f - p_star|, >= E_low up to LP rounding
  double M = 0.0;
  bool p_star_within_M = false;
  Grid grid = Grid::with_max_step(1e-3);
  /// Entries of K within mu = F_n * (2 grid_eps) of a finite bound at p_star (0-based).
  std::vector<int> active_set;
  /// Alternation at eps = 2 grid_eps with count n + 1 - |active_set|, if found.
  std::optional<Alternation> alternation;
  int lp_iterations = 0;
};

/// Solves the discrete minimax LP on certificate_grid(instance, grid_eps), clamps the
/// solution into K and extracts the active set and an alternation sequence.
BestApproxResult solve_best_approx(const ApproximationInstance& instance, double grid_eps);

/// 0-based entries i of K with c_{k_i} <= a_i + mu or c_{k_i} >= b_i - mu.
/// Throws std::invalid_argument if p is not in K.
std::vector<int> active_constraints(const Polynomial<double>& p, const ConstraintSet& K, double mu);

/// Greedy left-to-right scan for x_1 < ... < x_count on the grid with
/// |nu (-1)^i (f(x_i) - p(x_i)) - E| <= eps, taking the leftmost qualifying point for
/// each slot. Tries nu = +1 first. Returns nullopt if neither sign completes.
std::optional<Alternation> find_alternation(const ApproximationInstance& instance, const Polynomial<double>& p,
                                            double E, double eps, std::size_t count, const Grid& grid);
std::optional<Alternation> find_alternation(const SampledTarget& target, const Polynomial<double>& p, double E,
                                            double eps, std::size_t count);

enum class CertifyMode { with_L, L_free };

struct CertifyOptions {
  double grid_eps = 1e-3;
  std::uint64_t seed = 0;
  int strong_unicity_samples = 500;
  int pair_candidates = 200;
  std::optional<double> declared_L;
};

/// Thrown when with_L mode cannot obtain a positive lower bound on E.
class CertificationRejected : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct CollapseCheck {
  std::string modulus;  ///< "psi" or "psi_star"
  double threshold = 0.0;  ///< the modulus value at delta
  int candidates = 0;
  int accepted = 0;  ///< grid error <= E_low + threshold - grid_eps
  int pairs = 0;
  double max_pair_distance = 0.0;
  int violations = 0;
  /// Diagnostic only: the same pair test against grid_error(p*) + threshold. Not a
  /// certified bound, so its violations are not failures.
  int relaxed_accepted = 0;
  int relaxed_pairs = 0;
  double relaxed_max_pair_distance = 0.0;
  int relaxed_violations = 0;
};

struct StrongUnicityCheck {
  bool ran = false;
  std::string skipped_reason;
  int samples = 0;
  double min_margin = 0.0;  ///< min of ||f-q|| + 2 grid_eps - E_low - gamma ||q - p*||
  int violations = 0;
};

struct CertificationReport {
  CertifyMode mode = CertifyMode::with_L;
  double delta = 0.0;
  CertifyOptions options;
  BestApproxResult solve;
  std::optional<UniquenessCertificate> certificate;
  std::vector<std::pair<double, double>> psi_star_table;  ///< (delta, Psi*(delta))
  bool psi_star_within_quarter = true;
  /// Grid error + grid_eps <= E_low + (chi(L/2)/2)^{n^2/4+n} / N_n * eps, with eps = 2 grid_eps,
  /// eps < L/4 and ||p*|| <= M.
  bool alternation_hypothesis_verified = false;
  std::vector<CollapseCheck> collapse;
  StrongUnicityCheck strong_unicity;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

CertificationReport certify_uniqueness(const ApproximationInstance& instance, double delta, CertifyMode mode,
                                       const CertifyOptions& options = {});

}  // namespace uniqmod
