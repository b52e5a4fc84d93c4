#include "uniqmod/schur.hpp"

#include "uniqmod/linalg.hpp"

#include <array>
#include <cmath>
#include <map>

namespace uniqmod {

DegreeSequence::DegreeSequence(std::vector<int> h, int n_cap) : h_(std::move(h)), n_cap_(n_cap) {
  if (h_.empty()) throw std::invalid_argument("degree sequence must be nonempty");
  if (n_cap_ < 0) throw std::invalid_argument("degree cap must be nonnegative");
  for (std::size_t i = 0; i < h_.size(); ++i) {
    if (h_[i] < 0) throw std::invalid_argument("degree sequence entries must be nonnegative");
    if (i > 0 && h_[i] >= h_[i - 1]) throw std::invalid_argument("degree sequence must be strictly decreasing");
  }
  if (h_.front() > n_cap_) throw std::invalid_argument("leading degree exceeds the degree cap");
  if (h_.size() > static_cast<std::size_t>(n_cap_) + 1) throw std::invalid_argument("degree sequence too long for its cap");
}

DegreeSequence::DegreeSequence(std::vector<int> h)
    : DegreeSequence(h, h.empty() ? 0 : h.front()) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition must be weakly decreasing");
  }
}

int Partition::cells() const {
  int total = 0;
  for (int p : parts_) total += p;
  return total;
}

std::vector<int> Tableau::weight() const {
  std::vector<int> t(static_cast<std::size_t>(shape.length()), 0);
  for (const auto& row : rows)
    for (int v : row) ++t[static_cast<std::size_t>(v - 1)];
  return t;
}

bool Tableau::is_semistandard() const {
  const int letters = shape.length();
  if (static_cast<int>(rows.size()) != letters) return false;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != shape[r]) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const int v = rows[r][c];
      if (v < 1 || v > letters) return false;
      if (c > 0 && rows[r][c - 1] > v) return false;
      if (r > 0 && rows[r - 1][c] >= v) return false;
    }
  }
  return true;
}

Partition partition_from_degrees(const DegreeSequence& h) {
  const int len = static_cast<int>(h.size());
  std::vector<int> parts(h.size());
  for (int i = 0; i < len; ++i) parts[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(i)] + (i + 1) - len;
  return Partition(std::move(parts));
}

DegreeSequence degrees_from_partition(const Partition& lambda) {
  const int len = lambda.length();
  if (len == 0) throw std::invalid_argument("partition must have positive length");
  std::vector<int> h(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) h[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] - (i + 1) + len;
  return DegreeSequence(std::move(h));
}

namespace detail {
void check_budget(const Partition& shape, int cell_budget) {
  if (shape.length() < 1) throw std::invalid_argument("shape must have at least one row");
  if (shape.cells() > cell_budget)
    throw EnumerationBudgetExceeded("shape has " + std::to_string(shape.cells()) +
                                    " cells, above the enumeration budget of " + std::to_string(cell_budget) +
                                    "; use the bialternant formula instead");
}
}  // namespace detail

std::vector<Tableau> enumerate_ssyt(const Partition& shape) {
  std::vector<Tableau> out;
  for_each_ssyt(shape, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

namespace {

template <Scalar T>
std::vector<std::vector<T>> power_table(std::span<const T> y, int max_exponent) {
  std::vector<std::vector<T>> pw(y.size(), std::vector<T>(static_cast<std::size_t>(max_exponent) + 1, T(1)));
  for (std::size_t i = 0; i < y.size(); ++i)
    for (int e = 1; e <= max_exponent; ++e) pw[i][static_cast<std::size_t>(e)] = pw[i][static_cast<std::size_t>(e - 1)] * y[i];
  return pw;
}

}  // namespace

template <Scalar T>
T schur_eval(const Partition& shape, std::span<const T> y) {
  if (y.size() != static_cast<std::size_t>(shape.length()))
    throw std::invalid_argument("schur_eval: need one point per row of the shape");
  const auto pw = power_table(y, shape.cells());
  T sum(0);
  std::vector<int> t(y.size());
  for_each_ssyt(shape, [&](const Tableau& tab) {
    std::fill(t.begin(), t.end(), 0);
    for (const auto& row : tab.rows)
      for (int v : row) ++t[static_cast<std::size_t>(v - 1)];
    T mono(1);
    for (std::size_t i = 0; i < t.size(); ++i) mono *= pw[i][static_cast<std::size_t>(t[i])];
    sum += mono;
  });
  return sum;
}

template <Scalar T>
T vandermonde(std::span<const T> y) {
  T prod(1);
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = i + 1; j < y.size(); ++j) prod *= y[i] - y[j];
  return prod;
}

template <Scalar T>
T generalized_vandermonde(const DegreeSequence& h, std::span<const T> y) {
  if (y.size() != h.size()) throw std::invalid_argument("generalized_vandermonde: length mismatch");
  Matrix<T> m(y.size(), y.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = int_power(y[i], h[j]);
  return determinant(std::move(m));
}

template <Scalar T>
T schur_eval_bialternant(const DegreeSequence& h, std::span<const T> y) {
  const T denom = vandermonde(y);
  if (denom == T(0)) throw SingularVandermonde("bialternant needs pairwise distinct points");
  return generalized_vandermonde(h, y) / denom;
}

BigInt tableau_count(const Partition& shape) {
  BigInt num = 1;
  BigInt den = 1;
  const auto len = static_cast<std::size_t>(shape.length());
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j) {
      num *= shape[i] - shape[j] + static_cast<int>(j - i);
      den *= static_cast<int>(j - i);
    }
  return num / den;
}

BigInt schur_cap(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("schur_cap supports 0 <= n <= 20");
  // N_{lambda^h} = prod_{i<j} (h_i - h_j)/(j - i); rank subsets in log space, then
  // settle the leaders exactly.
  std::array<double, 22> log_int{};
  for (int k = 1; k < 22; ++k) log_int[static_cast<std::size_t>(k)] = std::log(static_cast<double>(k));

  const std::uint32_t subsets = 1u << (n + 1);
  std::vector<double> score(subsets, 0.0);
  double best = 0.0;
  std::vector<int> h;
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    h.clear();
    for (int e = n; e >= 0; --e)
      if (mask & (1u << e)) h.push_back(e);
    double s = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = i + 1; j < h.size(); ++j)
        s += log_int[static_cast<std::size_t>(h[i] - h[j])] - log_int[j - i];
    score[mask] = s;
    best = std::max(best, s);
  }

  BigInt cap = 1;
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    if (score[mask] < best - 1e-6) continue;
    h.clear();
    for (int e = n; e >= 0; --e)
      if (mask & (1u << e)) h.push_back(e);
    const BigInt count = tableau_count(partition_from_degrees(DegreeSequence(h, n)));
    if (count > cap) cap = count;
  }
  return cap;
}

SchurExpansion::SchurExpansion(Partition shape) : shape_(std::move(shape)) {
  std::map<std::vector<int>, std::uint64_t> gathered;
  for_each_ssyt(shape_, [&](const Tableau& t) { ++gathered[t.weight()]; });
  terms_.reserve(gathered.size());
  for (auto& [w, k] : gathered) terms_.push_back(Term{w, k});
}

template <Scalar T>
T SchurExpansion::evaluate(std::span<const T> y) const {
  if (y.size() != static_cast<std::size_t>(shape_.length()))
    throw std::invalid_argument("SchurExpansion::evaluate: need one point per row");
  const auto pw = power_table(y, shape_.cells());
  T sum(0);
  for (const auto& term : terms_) {
    T mono(static_cast<long long>(term.multiplicity));
    for (std::size_t i = 0; i < y.size(); ++i) mono *= pw[i][static_cast<std::size_t>(term.exponents[i])];
    sum += mono;
  }
  return sum;
}

template <Scalar T>
Polynomial<T> SchurExpansion::in_first_variable(std::span<const T> rest) const {
  if (rest.size() + 1 != static_cast<std::size_t>(shape_.length()))
    throw std::invalid_argument("SchurExpansion::in_first_variable: need length-1 fixed points");
  const auto pw = power_table(rest, shape_.cells());
  auto p = Polynomial<T>::zero(shape_[0]);
  for (const auto& term : terms_) {
    T mono(static_cast<long long>(term.multiplicity));
    for (std::size_t i = 0; i < rest.size(); ++i) mono *= pw[i][static_cast<std::size_t>(term.exponents[i + 1])];
    p.coeffs()[static_cast<std::size_t>(term.exponents[0])] += mono;
  }
  return p;
}

template double schur_eval<double>(const Partition&, std::span<const double>);
template Rational schur_eval<Rational>(const Partition&, std::span<const Rational>);
template double vandermonde<double>(std::span<const double>);
template Rational vandermonde<Rational>(std::span<const Rational>);
template double generalized_vandermonde<double>(const DegreeSequence&, std::span<const double>);
template Rational generalized_vandermonde<Rational>(const DegreeSequence&, std::span<const Rational>);
template double schur_eval_bialternant<double>(const DegreeSequence&, std::span<const double>);
template Rational schur_eval_bialternant<Rational>(const DegreeSequence&, std::span<const Rational>);
template double SchurExpansion::evaluate<double>(std::span<const double>) const;
template Rational SchurExpansion::evaluate<Rational>(std::span<const Rational>) const;
template Polynomial<double> SchurExpansion::in_first_variable<double>(std::span<const double>) const;
template Polynomial<Rational> SchurExpansion::in_first_variable<Rational>(std::span<const Rational>) const;

}  // namespace uniqmod
