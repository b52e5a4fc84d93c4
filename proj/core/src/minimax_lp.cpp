#include "uniqmod/minimax_lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace uniqmod {

namespace {

struct BoxColumn {
  int row;      // coefficient index k
  double sign;  // +1: c_k <= bound, -1: -c_k <= -bound
  double cost;  // bound or -bound
};

class DualSimplex {
 public:
  DualSimplex(std::span<const double> nodes, std::span<const double> values, const ConstraintSet& K,
              const MinimaxLpOptions& options)
      : nodes_(nodes), values_(values), n_(K.n()), m_(static_cast<std::size_t>(K.n()) + 2), options_(options) {
    for (const auto& e : K.entries()) {
      if (e.upper) boxes_.push_back({e.k, 1.0, *e.upper});
      if (e.lower) boxes_.push_back({e.k, -1.0, -*e.lower});
    }
    grid_columns_ = 2 * nodes_.size();
    real_columns_ = grid_columns_ + boxes_.size();

    double scale = 1.0;
    for (double v : values_) scale = std::max(scale, std::abs(v));
    for (const auto& b : boxes_) scale = std::max(scale, std::abs(b.cost));
    cost_tol_ = 1e-12 * scale;

    rhs_.assign(m_, 0.0);
    rhs_[m_ - 1] = -1.0;
  }

  MinimaxLpResult run() {
    if (nodes_.size() < static_cast<std::size_t>(n_) + 1)
      throw std::invalid_argument("minimax LP needs at least n + 1 grid points");

    // Artificial basis: column real_columns_ + i is sign_i * e_i.
    basis_.resize(m_);
    binv_.assign(m_ * m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      basis_[i] = real_columns_ + i;
      binv_[i * m_ + i] = artificial_sign(i);
    }
    recompute_primal();

    MinimaxLpResult result;
    phase_ = 1;
    result.phase1_iterations = iterate();
    if (objective() > 1e-9) throw LpNonconvergence("phase 1 left a positive infeasibility", trace_);
    drive_out_artificials();

    phase_ = 2;
    result.phase2_iterations = iterate();

    const auto pi = multipliers();
    result.coeffs.assign(pi.begin(), pi.begin() + n_ + 1);
    result.value = pi[m_ - 1];
    return result;
  }

 private:
  double artificial_sign(std::size_t row) const { return rhs_[row] < 0.0 ? -1.0 : 1.0; }
  bool is_artificial(std::size_t col) const { return col >= real_columns_; }

  double cost(std::size_t col) const {
    if (is_artificial(col)) return phase_ == 1 ? 1.0 : 0.0;
    if (phase_ == 1) return 0.0;
    if (col < grid_columns_) {
      const double f = values_[col / 2];
      return col % 2 == 0 ? -f : f;
    }
    return boxes_[col - grid_columns_].cost;
  }

  void column(std::size_t col, std::vector<double>& out) const {
    std::fill(out.begin(), out.end(), 0.0);
    if (is_artificial(col)) {
      const std::size_t row = col - real_columns_;
      out[row] = artificial_sign(row);
      return;
    }
    if (col < grid_columns_) {
      const double x = nodes_[col / 2];
      const double s = col % 2 == 0 ? -1.0 : 1.0;
      double power = 1.0;
      for (int i = 0; i <= n_; ++i) {
        out[static_cast<std::size_t>(i)] = s * power;
        power *= x;
      }
      out[m_ - 1] = -1.0;
      return;
    }
    const auto& b = boxes_[col - grid_columns_];
    out[static_cast<std::size_t>(b.row)] = b.sign;
  }

  std::vector<double> multipliers() const {
    std::vector<double> pi(m_, 0.0);
    for (std::size_t r = 0; r < m_; ++r) {
      const double c = cost(basis_[r]);
      if (c == 0.0) continue;
      for (std::size_t i = 0; i < m_; ++i) pi[i] += c * binv_[r * m_ + i];
    }
    return pi;
  }

  double objective() const {
    double total = 0.0;
    for (std::size_t r = 0; r < m_; ++r) total += cost(basis_[r]) * x_basic_[r];
    return total;
  }

  void recompute_primal() {
    x_basic_.assign(m_, 0.0);
    for (std::size_t r = 0; r < m_; ++r)
      for (std::size_t i = 0; i < m_; ++i) x_basic_[r] += binv_[r * m_ + i] * rhs_[i];
    for (auto& v : x_basic_)
      if (v < 0.0 && v > -1e-12) v = 0.0;
  }

  void refactor() {
    std::vector<double> b(m_ * m_);
    std::vector<double> col(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      column(basis_[r], col);
      for (std::size_t i = 0; i < m_; ++i) b[i * m_ + r] = col[i];
    }
    // Gauss-Jordan with partial pivoting on [B | I]
    std::vector<double> inv(m_ * m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) inv[i * m_ + i] = 1.0;
    for (std::size_t k = 0; k < m_; ++k) {
      std::size_t p = k;
      for (std::size_t i = k + 1; i < m_; ++i)
        if (std::abs(b[i * m_ + k]) > std::abs(b[p * m_ + k])) p = i;
      if (b[p * m_ + k] == 0.0) throw LpNonconvergence("basis matrix became singular", trace_);
      for (std::size_t j = 0; j < m_; ++j) {
        std::swap(b[k * m_ + j], b[p * m_ + j]);
        std::swap(inv[k * m_ + j], inv[p * m_ + j]);
      }
      const double d = b[k * m_ + k];
      for (std::size_t j = 0; j < m_; ++j) {
        b[k * m_ + j] /= d;
        inv[k * m_ + j] /= d;
      }
      for (std::size_t i = 0; i < m_; ++i) {
        if (i == k) continue;
        const double f = b[i * m_ + k];
        if (f == 0.0) continue;
        for (std::size_t j = 0; j < m_; ++j) {
          b[i * m_ + j] -= f * b[k * m_ + j];
          inv[i * m_ + j] -= f * inv[k * m_ + j];
        }
      }
    }
    binv_ = std::move(inv);
    recompute_primal();
  }

  // Most negative reduced cost (or the first negative one under Bland's rule).
  std::pair<std::size_t, double> price(const std::vector<double>& pi, bool bland) const {
    std::size_t best = real_columns_;
    double best_d = -cost_tol_;
    const double pi_t = pi[m_ - 1];
    const bool phase1 = phase_ == 1;
    for (std::size_t g = 0; g < nodes_.size(); ++g) {
      const double x = nodes_[g];
      double q = 0.0;
      for (int i = n_; i >= 0; --i) q = q * x + pi[static_cast<std::size_t>(i)];
      const double f = phase1 ? 0.0 : values_[g];
      const double d_plus = q + pi_t - f;
      const double d_minus = f - q + pi_t;
      if (d_plus < best_d) {
        best_d = d_plus;
        best = 2 * g;
        if (bland) return {best, best_d};
      }
      if (d_minus < best_d) {
        best_d = d_minus;
        best = 2 * g + 1;
        if (bland) return {best, best_d};
      }
    }
    for (std::size_t b = 0; b < boxes_.size(); ++b) {
      const auto& box = boxes_[b];
      const double c = phase1 ? 0.0 : box.cost;
      const double d = c - box.sign * pi[static_cast<std::size_t>(box.row)];
      if (d < best_d) {
        best_d = d;
        best = grid_columns_ + b;
        if (bland) return {best, best_d};
      }
    }
    return {best, best_d};
  }

  void pivot(std::size_t row, std::size_t entering, const std::vector<double>& alpha) {
    const double a = alpha[row];
    for (std::size_t j = 0; j < m_; ++j) binv_[row * m_ + j] /= a;
    const double theta = x_basic_[row] / a;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || alpha[i] == 0.0) continue;
      for (std::size_t j = 0; j < m_; ++j) binv_[i * m_ + j] -= alpha[i] * binv_[row * m_ + j];
      x_basic_[i] -= alpha[i] * theta;
      if (x_basic_[i] < 0.0 && x_basic_[i] > -1e-12) x_basic_[i] = 0.0;
    }
    x_basic_[row] = theta;
    basis_[row] = entering;
  }

  std::vector<double> ftran(std::size_t col) const {
    std::vector<double> a(m_);
    column(col, a);
    std::vector<double> alpha(m_, 0.0);
    for (std::size_t r = 0; r < m_; ++r)
      for (std::size_t i = 0; i < m_; ++i) alpha[r] += binv_[r * m_ + i] * a[i];
    return alpha;
  }

  int iterate() {
    int iterations = 0;
    int stalled = 0;
    double last = objective();
    while (true) {
      if (total_iterations_ >= options_.max_iterations) {
        std::ostringstream os;
        os << "simplex did not converge within " << options_.max_iterations << " iterations (phase " << phase_ << ")";
        throw LpNonconvergence(os.str(), trace_);
      }
      const bool bland = stalled > 50;
      const auto pi = multipliers();
      const auto [entering, reduced] = price(pi, bland);
      if (entering == real_columns_) break;

      const auto alpha = ftran(entering);
      std::size_t leaving = m_;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < m_; ++r) {
        if (alpha[r] <= 1e-11) continue;
        const double ratio = std::max(x_basic_[r], 0.0) / alpha[r];
        if (leaving == m_ || ratio < best_ratio - 1e-14) {
          best_ratio = ratio;
          leaving = r;
        } else if (ratio <= best_ratio + 1e-14) {
          const bool prefer = bland ? basis_[r] < basis_[leaving] : alpha[r] > alpha[leaving];
          if (prefer) leaving = r;
        }
      }
      if (leaving == m_) throw LpNonconvergence("dual program unbounded: inconsistent constraints", trace_);

      pivot(leaving, entering, alpha);
      ++iterations;
      ++total_iterations_;
      if (total_iterations_ % options_.refactor_every == 0) refactor();

      const double now = objective();
      trace_.push_back(now);
      stalled = now < last - 1e-15 * (1.0 + std::abs(last)) ? 0 : stalled + 1;
      last = std::min(last, now);
    }
    refactor();
    return iterations;
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (!is_artificial(basis_[r])) continue;
      std::size_t best = real_columns_;
      double best_mag = 1e-9;
      std::vector<double> a(m_);
      for (std::size_t col = 0; col < real_columns_; ++col) {
        if (std::find(basis_.begin(), basis_.end(), col) != basis_.end()) continue;
        column(col, a);
        double v = 0.0;
        for (std::size_t i = 0; i < m_; ++i) v += binv_[r * m_ + i] * a[i];
        if (std::abs(v) > best_mag) {
          best_mag = std::abs(v);
          best = col;
        }
      }
      if (best == real_columns_) throw LpNonconvergence("constraint rows are linearly dependent", trace_);
      pivot(r, best, ftran(best));
    }
    refactor();
  }

  std::span<const double> nodes_;
  std::span<const double> values_;
  int n_;
  std::size_t m_;
  MinimaxLpOptions options_;
  std::vector<BoxColumn> boxes_;
  std::size_t grid_columns_ = 0;
  std::size_t real_columns_ = 0;
  double cost_tol_ = 0.0;
  std::vector<double> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<double> binv_;
  std::vector<double> x_basic_;
  int phase_ = 1;
  int total_iterations_ = 0;
  std::vector<double> trace_;
};

}  // namespace

MinimaxLpResult solve_minimax_lp(std::span<const double> nodes, std::span<const double> values,
                                 const ConstraintSet& K, const MinimaxLpOptions& options) {
  if (nodes.size() != values.size()) throw std::invalid_argument("minimax LP: one value per node");
  return DualSimplex(nodes, values, K, options).run();
}

}  // namespace uniqmod
