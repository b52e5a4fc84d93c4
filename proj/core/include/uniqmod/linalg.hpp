#pragma once

#include "uniqmod/rational.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace uniqmod {

/// Row-major dense matrix.
template <Scalar T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Determinant of a square matrix. Exact scalars use fraction-free (Bareiss)
/// elimination; binary64 uses partially pivoted elimination.
template <Scalar T>
T determinant(Matrix<T> a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  T sign(1);

  if constexpr (is_exact_v<T>) {
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a(k, k) == T(0)) {
        std::size_t p = k + 1;
        while (p < n && a(p, k) == T(0)) ++p;
        if (p == n) return T(0);
        a.swap_rows(k, p);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        a(i, k) = T(0);
      }
      prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
  } else {
    T det(1);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      for (std::size_t i = k + 1; i < n; ++i)
        if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
      if (a(p, k) == 0.0) return 0.0;
      if (p != k) {
        a.swap_rows(k, p);
        sign = -sign;
      }
      det *= a(k, k);
      for (std::size_t i = k + 1; i < n; ++i) {
        const double factor = a(i, k) / a(k, k);
        for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
      }
    }
    return sign * det;
  }
}

/// Solves A x = b by Gaussian elimination (first nonzero pivot for exact scalars,
/// partial pivoting for binary64). Returns nullopt if A is singular.
template <Scalar T>
std::optional<std::vector<T>> solve(Matrix<T> a, std::vector<T> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: dimension mismatch");
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    if constexpr (is_exact_v<T>) {
      while (p < n && a(p, k) == T(0)) ++p;
      if (p == n) return std::nullopt;
    } else {
      for (std::size_t i = k + 1; i < n; ++i)
        if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
      if (a(p, k) == 0.0) return std::nullopt;
    }
    a.swap_rows(k, p);
    std::swap(b[k], b[p]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == T(0)) continue;
      const T factor = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
      b[i] -= factor * b[k];
    }
  }
  std::vector<T> x(n, T(0));
  for (std::size_t i = n; i-- > 0;) {
    T acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
    x[i] = acc / a(i, i);
  }
  return x;
}

}  // namespace uniqmod
