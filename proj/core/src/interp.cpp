#include "uniqmod/interp.hpp"

#include "uniqmod/linalg.hpp"
#include "uniqmod/schur.hpp"

#include <string>

namespace uniqmod {

namespace {

template <Scalar T>
void require_distinct(std::span<const T> nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t k = i + 1; k < nodes.size(); ++k)
      if (nodes[i] == nodes[k]) throw std::invalid_argument("interpolation nodes must be pairwise distinct");
}

template <Scalar T>
std::vector<T> without(std::span<const T> v, std::size_t skip) {
  std::vector<T> out;
  out.reserve(v.size() - 1);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != skip) out.push_back(v[i]);
  return out;
}

}  // namespace

template <Scalar T>
T lagrange_basis(std::size_t j, const T& x, std::span<const T> nodes) {
  if (j >= nodes.size()) throw std::out_of_range("lagrange_basis: index out of range");
  require_distinct(nodes);
  T value(1);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (i != j) value *= (x - nodes[i]) / (nodes[j] - nodes[i]);
  return value;
}

template <Scalar T>
Polynomial<T> lagrange_basis_polynomial(std::size_t j, std::span<const T> nodes) {
  if (j >= nodes.size()) throw std::out_of_range("lagrange_basis_polynomial: index out of range");
  require_distinct(nodes);
  auto p = Polynomial<T>::constant(T(1));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i == j) continue;
    p = p * Polynomial<T>::linear_factor(nodes[i]);
    p *= T(1) / (nodes[j] - nodes[i]);
  }
  return p;
}

std::vector<int> allowed_degrees(int n, std::span<const int> forbidden) {
  if (n < 0) throw std::invalid_argument("degree bound must be nonnegative");
  for (std::size_t i = 0; i < forbidden.size(); ++i) {
    if (forbidden[i] <= 0) throw std::invalid_argument("forbidden degrees must be positive (the constant term is always free)");
    if (forbidden[i] > n) throw std::invalid_argument("forbidden degree exceeds n");
    if (i > 0 && forbidden[i] <= forbidden[i - 1]) throw std::invalid_argument("forbidden degrees must be strictly increasing");
  }
  std::vector<int> d;
  std::size_t f = forbidden.size();
  for (int k = n; k >= 0; --k) {
    if (f > 0 && forbidden[f - 1] == k) {
      --f;
      continue;
    }
    d.push_back(k);
  }
  return d;
}

template <Scalar T>
void InterpolationProblem<T>::validate() const {
  const auto d = allowed_degrees(n, forbidden);
  if (nodes.size() != d.size())
    throw std::invalid_argument("need n + 1 - l = " + std::to_string(d.size()) + " nodes, got " + std::to_string(nodes.size()));
  if (values.size() != nodes.size()) throw std::invalid_argument("need one value per node");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] < T(0) || nodes[i] > T(1)) throw std::invalid_argument("nodes must lie in [0,1]");
    if (i > 0 && !(nodes[i - 1] < nodes[i])) throw std::invalid_argument("nodes must be strictly increasing");
  }
}

template <Scalar T>
Polynomial<T> constrained_interpolate(const InterpolationProblem<T>& problem) {
  problem.validate();
  const DegreeSequence d(allowed_degrees(problem.n, problem.forbidden), problem.n);
  const SchurExpansion schur(partition_from_degrees(d));
  const std::span<const T> nodes(problem.nodes);

  const T denominator = schur.evaluate(nodes);
  if constexpr (is_exact_v<T>) {
    if (denominator == T(0)) throw std::domain_error("Schur denominator vanishes at the given nodes");
  } else {
    if (!(denominator >= kSchurDenominatorFloor))
      throw IllConditioned("Schur denominator " + std::to_string(denominator) +
                           " below 1e-30; retry with exact arithmetic");
  }

  auto p = Polynomial<T>::zero(problem.n);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (problem.values[j] == T(0)) continue;
    const auto others = without(nodes, j);
    auto term = lagrange_basis_polynomial(j, nodes) * schur.in_first_variable(std::span<const T>(others));
    term *= problem.values[j] / denominator;
    p += term;
  }
  return p.resize(problem.n);
}

template <Scalar T>
Polynomial<T> solve_linear_system_oracle(const InterpolationProblem<T>& problem) {
  problem.validate();
  const auto d = allowed_degrees(problem.n, problem.forbidden);
  const std::size_t size = d.size();
  Matrix<T> a(size, size);
  for (std::size_t j = 0; j < size; ++j)
    for (std::size_t i = 0; i < size; ++i) a(j, i) = int_power(problem.nodes[j], d[i]);
  auto eta = solve(std::move(a), problem.values);
  if (!eta) throw std::logic_error("interpolation system is singular despite distinct nodes");
  auto p = Polynomial<T>::zero(problem.n);
  for (std::size_t i = 0; i < size; ++i) p.coeffs()[static_cast<std::size_t>(d[i])] = (*eta)[i];
  return p;
}

template <Scalar T>
Polynomial<T> oscillator(int n, std::span<const int> forbidden, std::span<const T> z) {
  const auto d = allowed_degrees(n, forbidden);
  if (z.size() + 1 != d.size())
    throw std::invalid_argument("oscillator needs n - l = " + std::to_string(d.size() - 1) + " interior nodes");
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (!(z[i] > T(0) && z[i] < T(1))) throw std::invalid_argument("oscillator nodes must lie in (0,1)");
    if (i > 0 && !(z[i - 1] < z[i])) throw std::invalid_argument("oscillator nodes must be strictly increasing");
  }
  const SchurExpansion schur(partition_from_degrees(DegreeSequence(d, n)));
  auto p = schur.in_first_variable(z);
  for (const auto& node : z) p = p * Polynomial<T>({node, T(-1)});
  return p.resize(n);
}

template double lagrange_basis<double>(std::size_t, const double&, std::span<const double>);
template Rational lagrange_basis<Rational>(std::size_t, const Rational&, std::span<const Rational>);
template Polynomial<double> lagrange_basis_polynomial<double>(std::size_t, std::span<const double>);
template Polynomial<Rational> lagrange_basis_polynomial<Rational>(std::size_t, std::span<const Rational>);
template struct InterpolationProblem<double>;
template struct InterpolationProblem<Rational>;
template Polynomial<double> constrained_interpolate<double>(const InterpolationProblem<double>&);
template Polynomial<Rational> constrained_interpolate<Rational>(const InterpolationProblem<Rational>&);
template Polynomial<double> solve_linear_system_oracle<double>(const InterpolationProblem<double>&);
template Polynomial<Rational> solve_linear_system_oracle<Rational>(const InterpolationProblem<Rational>&);
template Polynomial<double> oscillator<double>(int, std::span<const int>, std::span<const double>);
template Polynomial<Rational> oscillator<Rational>(int, std::span<const int>, std::span<const Rational>);

}  // namespace uniqmod
