#include "uniqmod/polynomial.hpp"

#include <cmath>

namespace uniqmod {

double grid_sup(const Polynomial<double>& p, std::size_t count) {
  if (count < 2) throw std::invalid_argument("grid_sup needs at least two points");
  double best = 0.0;
  const double step = 1.0 / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double x = i + 1 == count ? 1.0 : static_cast<double>(i) * step;
    best = std::max(best, std::abs(p(x)));
  }
  return best;
}

double sup_norm_bound(const Polynomial<double>& p) {
  const int n = p.degree();
  if (n <= 0) return std::abs(p.coefficient(0));
  const double n2 = static_cast<double>(n) * n;
  // h n^2 = 1e-3
  const auto count = static_cast<std::size_t>(std::ceil(n2 * 1000.0)) + 1;
  const double h = 1.0 / static_cast<double>(count - 1);
  const double bound = grid_sup(p, count) / (1.0 - h * n2);
  return bound * (1.0 + 1e-12);
}

Polynomial<double> to_double(const Polynomial<Rational>& p) {
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(to_double(v));
  return Polynomial<double>(std::move(c));
}

}  // namespace uniqmod
