#pragma once

// Partitions, semistandard Young tableaux and Schur polynomials.
//
// A strictly decreasing exponent list h = (h_1 > ... > h_{r+1}) corresponds to the
// partition lambda_i = h_i + i - r - 1 (1-based i). The generalized Vandermonde
// determinant det[y_i^{h_j}] factors as V(y) * s_lambda(y); both sides are computable
// here, combinatorially (schur_eval) and as a determinant ratio
// (schur_eval_bialternant).

#include "uniqmod/polynomial.hpp"
#include "uniqmod/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace uniqmod {

/// Largest shape (in cells) that enumerate_ssyt / schur_eval will enumerate.
inline constexpr int kSsytCellBudget = 24;

class EnumerationBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularVandermonde : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Strictly decreasing list of exponents bounded by an ambient degree n_cap.
class DegreeSequence {
 public:
  DegreeSequence(std::vector<int> h, int n_cap);
  /// n_cap defaults to the leading exponent.
  explicit DegreeSequence(std::vector<int> h);

  std::span<const int> values() const { return h_; }
  int operator[](std::size_t i) const { return h_[i]; }
  std::size_t size() const { return h_.size(); }
  int n_cap() const { return n_cap_; }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> h_;
  int n_cap_;
};

/// Weakly decreasing list of naturals; trailing zeros are kept (the length matters).
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int length() const { return static_cast<int>(parts_.size()); }
  int cells() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Filling of a shape with entries in {1, ..., length}; rows weakly increase, columns
/// strictly increase.
struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  /// t_i = number of occurrences of letter i+1.
  std::vector<int> weight() const;
  bool is_semistandard() const;
};

Partition partition_from_degrees(const DegreeSequence& h);
DegreeSequence degrees_from_partition(const Partition& lambda);

namespace detail {
void check_budget(const Partition& shape, int cell_budget);
}

/// Calls visit(const Tableau&) for every semistandard tableau of `shape`, in
/// lexicographic row-major order. Throws EnumerationBudgetExceeded above the budget.
template <class Visitor>
void for_each_ssyt(const Partition& shape, Visitor&& visit, int cell_budget = kSsytCellBudget) {
  detail::check_budget(shape, cell_budget);
  const int letters = shape.length();
  const int width = letters == 0 ? 0 : shape[0];

  std::vector<int> column_height(static_cast<std::size_t>(width), 0);
  std::vector<std::pair<int, int>> cells;
  Tableau t{shape, {}};
  t.rows.resize(static_cast<std::size_t>(letters));
  for (int r = 0; r < letters; ++r) {
    t.rows[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(shape[static_cast<std::size_t>(r)]), 0);
    for (int c = 0; c < shape[static_cast<std::size_t>(r)]; ++c) {
      ++column_height[static_cast<std::size_t>(c)];
      cells.emplace_back(r, c);
    }
  }

  auto fill = [&](auto& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      visit(static_cast<const Tableau&>(t));
      return;
    }
    const auto [r, c] = cells[idx];
    auto& row = t.rows[static_cast<std::size_t>(r)];
    int lo = 1;
    if (c > 0) lo = std::max(lo, row[static_cast<std::size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, t.rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    // leave room for the cells below in this column
    const int hi = letters - (column_height[static_cast<std::size_t>(c)] - 1 - r);
    for (int v = lo; v <= hi; ++v) {
      row[static_cast<std::size_t>(c)] = v;
      self(self, idx + 1);
    }
  };
  fill(fill, 0);
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape);

/// s_lambda(y) as the sum of y^T over all semistandard tableaux T.
template <Scalar T>
T schur_eval(const Partition& shape, std::span<const T> y);

/// V(y) = prod_{i<j} (y_i - y_j).
template <Scalar T>
T vandermonde(std::span<const T> y);

/// det[y_i^{h_j}].
template <Scalar T>
T generalized_vandermonde(const DegreeSequence& h, std::span<const T> y);

/// V(h; y) / V(y). Throws SingularVandermonde on repeated points.
template <Scalar T>
T schur_eval_bialternant(const DegreeSequence& h, std::span<const T> y);

/// N_lambda = prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i).
BigInt tableau_count(const Partition& shape);

/// N_n: maximum of N_{lambda^h} over every nonempty subset of {0, ..., n} read as a
/// decreasing exponent list. Enumerates 2^{n+1} - 1 subsets; n <= 20.
BigInt schur_cap(int n);

/// Monomial expansion sum_w K_w y^w of a Schur polynomial, gathered from the tableau
/// enumeration once so that repeated evaluations are cheap.
class SchurExpansion {
 public:
  struct Term {
    std::vector<int> exponents;
    std::uint64_t multiplicity;
  };

  explicit SchurExpansion(Partition shape);

  const Partition& shape() const { return shape_; }
  const std::vector<Term>& terms() const { return terms_; }

  template <Scalar T>
  T evaluate(std::span<const T> y) const;

  /// s_lambda(X, rest...) as a polynomial in the indeterminate X.
  template <Scalar T>
  Polynomial<T> in_first_variable(std::span<const T> rest) const;

 private:
  Partition shape_;
  std::vector<Term> terms_;
};

extern template double schur_eval<double>(const Partition&, std::span<const double>);
extern template Rational schur_eval<Rational>(const Partition&, std::span<const Rational>);
extern template double vandermonde<double>(std::span<const double>);
extern template Rational vandermonde<Rational>(std::span<const Rational>);
extern template double generalized_vandermonde<double>(const DegreeSequence&, std::span<const double>);
extern template Rational generalized_vandermonde<Rational>(const DegreeSequence&, std::span<const Rational>);
extern template double schur_eval_bialternant<double>(const DegreeSequence&, std::span<const double>);
extern template Rational schur_eval_bialternant<Rational>(const DegreeSequence&, std::span<const Rational>);
extern template double SchurExpansion::evaluate<double>(std::span<const double>) const;
extern template Rational SchurExpansion::evaluate<Rational>(std::span<const Rational>) const;
extern template Polynomial<double> SchurExpansion::in_first_variable<double>(std::span<const double>) const;
extern template Polynomial<Rational> SchurExpansion::in_first_variable<Rational>(std::span<const Rational>) const;

}  // namespace uniqmod
