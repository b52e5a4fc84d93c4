#include "uniqmod/function_spec.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace uniqmod {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

// libm results may sit one ulp below the true value
double round_up(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()); }

}  // namespace

FunctionSpec::FunctionSpec(Family family) : family_(std::move(family)) {
  std::visit(overloaded{
                 [](const ExpScale& e) {
                   if (!std::isfinite(e.a) || !std::isfinite(e.b)) throw std::invalid_argument("exp_scale parameters must be finite");
                 },
                 [](const AbsShift& s) {
                   if (!std::isfinite(s.c)) throw std::invalid_argument("abs_shift parameter must be finite");
                 },
                 [](const Poly& p) {
                   if (p.coeffs.empty()) throw std::invalid_argument("poly needs at least one coefficient");
                   for (double c : p.coeffs)
                     if (!std::isfinite(c)) throw std::invalid_argument("poly coefficients must be finite");
                 },
                 [](const Sine& s) {
                   if (!std::isfinite(s.a) || !std::isfinite(s.phase)) throw std::invalid_argument("sine parameters must be finite");
                 },
                 [](const PiecewiseLinear& pl) {
                   const auto& b = pl.breakpoints;
                   if (b.size() < 2) throw std::invalid_argument("piecewise_linear needs at least two breakpoints");
                   for (std::size_t i = 1; i < b.size(); ++i)
                     if (!(b[i].first > b[i - 1].first)) throw std::invalid_argument("breakpoints must be strictly increasing in x");
                   if (b.front().first > 0.0 || b.back().first < 1.0)
                     throw std::invalid_argument("breakpoints must cover [0,1]");
                 },
             },
             family_);
}

double FunctionSpec::operator()(double x) const {
  return std::visit(overloaded{
                        [x](const ExpScale& e) { return e.a * std::exp(e.b * x); },
                        [x](const AbsShift& s) { return std::abs(x - s.c); },
                        [x](const Poly& p) {
                          double acc = 0.0;
                          for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * x + *it;
                          return acc;
                        },
                        [x](const Sine& s) { return std::sin(s.a * x + s.phase); },
                        [x](const PiecewiseLinear& pl) {
                          const auto& b = pl.breakpoints;
                          auto it = std::upper_bound(b.begin(), b.end(), x,
                                                     [](double v, const auto& bp) { return v < bp.first; });
                          if (it == b.begin()) return b.front().second;
                          if (it == b.end()) return b.back().second;
                          const auto& [x1, y1] = *std::prev(it);
                          const auto& [x2, y2] = *it;
                          return y1 + (y2 - y1) * (x - x1) / (x2 - x1);
                        },
                    },
                    family_);
}

double FunctionSpec::lipschitz_constant() const {
  return std::visit(overloaded{
                        [](const ExpScale& e) { return std::abs(e.a * e.b) * std::exp(std::max(e.b, 0.0)); },
                        [](const AbsShift&) { return 1.0; },
                        [](const Poly& p) {
                          double total = 0.0;
                          for (std::size_t i = 1; i < p.coeffs.size(); ++i) total += static_cast<double>(i) * std::abs(p.coeffs[i]);
                          return total;
                        },
                        [](const Sine& s) { return std::abs(s.a); },
                        [](const PiecewiseLinear& pl) {
                          double slope = 0.0;
                          const auto& b = pl.breakpoints;
                          for (std::size_t i = 1; i < b.size(); ++i)
                            slope = std::max(slope, std::abs((b[i].second - b[i - 1].second) / (b[i].first - b[i - 1].first)));
                          return slope;
                        },
                    },
                    family_);
}

ModulusOfContinuity FunctionSpec::modulus() const { return ModulusOfContinuity::lipschitz(lipschitz_constant()); }

double FunctionSpec::sup_norm() const {
  return std::visit(
      overloaded{
          [](const ExpScale& e) { return round_up(std::max(std::abs(e.a), std::abs(e.a) * std::exp(e.b))); },
          [](const AbsShift& s) { return std::max(std::abs(s.c), std::abs(1.0 - s.c)); },
          [this](const Poly& p) {
            double scale = 0.0;
            for (double c : p.coeffs) scale += std::abs(c);
            return sup_norm_from_modulus(*this, modulus(), 1e-4 * std::max(1.0, scale));
          },
          [](const Sine& s) {
            // |sin| reaches 1 iff the phase range [lo, hi] contains pi/2 + k pi
            const double lo = std::min(s.phase, s.a + s.phase);
            const double hi = std::max(s.phase, s.a + s.phase);
            const double k = std::ceil((lo - std::numbers::pi / 2) / std::numbers::pi);
            if (std::numbers::pi / 2 + k * std::numbers::pi <= hi) return 1.0;
            return round_up(std::max(std::abs(std::sin(lo)), std::abs(std::sin(hi))));
          },
          [this](const PiecewiseLinear& pl) {
            double best = std::max(std::abs((*this)(0.0)), std::abs((*this)(1.0)));
            for (const auto& [x, y] : pl.breakpoints)
              if (x >= 0.0 && x <= 1.0) best = std::max(best, std::abs(y));
            return best;
          },
      },
      family_);
}

std::string FunctionSpec::name() const {
  return std::visit(overloaded{
                        [](const ExpScale&) { return std::string("exp_scale"); },
                        [](const AbsShift&) { return std::string("abs_shift"); },
                        [](const Poly&) { return std::string("poly"); },
                        [](const Sine&) { return std::string("sine"); },
                        [](const PiecewiseLinear&) { return std::string("piecewise_linear"); },
                    },
                    family_);
}

}  // namespace uniqmod
