#include "uniqmod/schur.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace uniqmod;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

// Every filling of the shape with letters 1..length, filtered by the semistandard rule.
// Exponential in the cell count; used only as an oracle on small shapes.
template <class Visit>
void brute_force_fillings(const Partition& shape, Visit visit) {
  const int letters = shape.length();
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < letters; ++r)
    for (int c = 0; c < shape[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);
  std::vector<int> fill(cells.size(), 1);
  while (true) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(letters));
    for (std::size_t i = 0; i < cells.size(); ++i) rows[static_cast<std::size_t>(cells[i].first)].push_back(fill[i]);
    bool ok = true;
    for (std::size_t r = 0; r < rows.size() && ok; ++r)
      for (std::size_t c = 0; c < rows[r].size() && ok; ++c) {
        if (c > 0 && rows[r][c - 1] > rows[r][c]) ok = false;
        if (r > 0 && rows[r - 1][c] >= rows[r][c]) ok = false;
      }
    if (ok) visit(rows);
    std::size_t i = 0;
    while (i < fill.size() && fill[i] == letters) fill[i++] = 1;
    if (i == fill.size()) return;
    ++fill[i];
  }
}

Rational brute_force_schur(const Partition& shape, const std::vector<Rational>& y) {
  Rational total = 0;
  brute_force_fillings(shape, [&](const std::vector<std::vector<int>>& rows) {
    Rational m = 1;
    for (const auto& row : rows)
      for (int v : row) m *= y[static_cast<std::size_t>(v - 1)];
    total += m;
  });
  return total;
}

// Leibniz expansion of det[y_i^{h_j}].
Rational leibniz_gen_vandermonde(const std::vector<int>& h, const std::vector<Rational>& y) {
  std::vector<int> perm(h.size());
  std::iota(perm.begin(), perm.end(), 0);
  Rational det = 0;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b];
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < perm.size(); ++i) term *= int_power(y[i], h[static_cast<std::size_t>(perm[i])]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

TEST_CASE("partition_from_degrees examples") {
  CHECK(partition_from_degrees(DegreeSequence({1, 0})) == Partition({0, 0}));
  CHECK(partition_from_degrees(DegreeSequence({2, 0})) == Partition({1, 0}));
  CHECK(partition_from_degrees(DegreeSequence({2, 1, 0})) == Partition({0, 0, 0}));
  CHECK(partition_from_degrees(DegreeSequence({5, 3, 0})) == Partition({3, 2, 0}));
}

TEST_CASE("degree sequences and partitions reject bad input") {
  CHECK_THROWS_AS(DegreeSequence({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(DegreeSequence({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(DegreeSequence({3, 0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({1, -1}), std::invalid_argument);
}

TEST_CASE("partition <-> degrees round trip") {
  for (int mask = 1; mask < (1 << 8); ++mask) {
    std::vector<int> h;
    for (int d = 7; d >= 0; --d)
      if (mask & (1 << d)) h.push_back(d);
    const DegreeSequence seq(h);
    CHECK(degrees_from_partition(partition_from_degrees(seq)) == seq);
  }
}

TEST_CASE("enumerate_ssyt examples") {
  CHECK(enumerate_ssyt(Partition({0, 0})).size() == 1);
  const auto one = enumerate_ssyt(Partition({1, 0}));
  REQUIRE(one.size() == 2);
  CHECK(one[0].rows[0] == std::vector<int>{1});
  CHECK(one[1].rows[0] == std::vector<int>{2});
  const auto two = enumerate_ssyt(Partition({2, 1}));
  REQUIRE(two.size() == 2);
  CHECK(two[0].rows == std::vector<std::vector<int>>{{1, 1}, {2}});
  CHECK(two[1].rows == std::vector<std::vector<int>>{{1, 2}, {2}});
}

TEST_CASE("enumeration matches brute-force fillings") {
  for (const auto& parts : std::vector<std::vector<int>>{
           {2, 1, 0}, {3, 1, 1}, {2, 2}, {3, 2, 1, 0}, {4, 0, 0}, {2, 2, 2}, {3, 3, 1, 0}}) {
    const Partition shape(parts);
    std::vector<std::vector<std::vector<int>>> oracle;
    brute_force_fillings(shape, [&](const auto& rows) { oracle.push_back(rows); });
    std::vector<std::vector<std::vector<int>>> got;
    for (const auto& t : enumerate_ssyt(shape)) {
      CHECK(t.is_semistandard());
      got.push_back(t.rows);
    }
    CHECK(std::is_sorted(got.begin(), got.end()));
    std::sort(oracle.begin(), oracle.end());
    CHECK(got == oracle);
    CHECK(tableau_count(shape) == BigInt(oracle.size()));
  }
}

TEST_CASE("enumeration budget") {
  CHECK_THROWS_AS(enumerate_ssyt(Partition({13, 12})), EnumerationBudgetExceeded);
  CHECK_NOTHROW(for_each_ssyt(Partition({12, 12}), [](const Tableau&) {}));
}

TEST_CASE("schur_eval examples") {
  const std::vector<double> a{0.3, 0.9};
  CHECK(schur_eval<double>(Partition({0, 0}), a) == 1.0);
  const std::vector<Rational> b{q(1, 2), q(1, 4)};
  CHECK(schur_eval<Rational>(Partition({1, 0}), b) == q(3, 4));
  const std::vector<Rational> c{q(1, 2), q(1, 2)};
  CHECK(schur_eval<Rational>(Partition({2, 1}), c) == q(1, 4));
}

TEST_CASE("schur_eval_bialternant examples") {
  const std::vector<Rational> y{q(1), q(1, 2)};
  CHECK(schur_eval_bialternant<Rational>(DegreeSequence({1, 0}), y) == 1);
  CHECK(schur_eval_bialternant<Rational>(DegreeSequence({2, 0}), y) == q(3, 2));
  const std::vector<Rational> z{q(1, 3), q(2, 7), q(9, 10)};
  CHECK(schur_eval_bialternant<Rational>(DegreeSequence({2, 1, 0}), z) == 1);
  const std::vector<Rational> repeated{q(1, 3), q(1, 3)};
  CHECK_THROWS_AS(schur_eval_bialternant<Rational>(DegreeSequence({2, 0}), repeated), SingularVandermonde);
}

TEST_CASE("generalized Vandermonde matches Leibniz expansion") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> h;
    for (int d = 6; d >= 0; --d)
      if (rng() & 1) h.push_back(d);
    if (h.empty() || h.size() > 5) continue;
    std::vector<Rational> y;
    for (std::size_t i = 0; i < h.size(); ++i) y.emplace_back(static_cast<long>(rng() % 41) - 20, 1 + rng() % 9);
    CHECK(generalized_vandermonde<Rational>(DegreeSequence(h), y) == leibniz_gen_vandermonde(h, y));
  }
}

TEST_CASE("combinatorial Schur matches brute force, and the bialternant") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> h;
    for (int d = 5; d >= 0; --d)
      if (rng() & 1) h.push_back(d);
    if (h.empty()) continue;
    const DegreeSequence seq(h);
    const Partition shape = partition_from_degrees(seq);
    if (shape.cells() > 8) continue;
    std::vector<Rational> y;
    for (std::size_t i = 0; i < h.size(); ++i) y.emplace_back(static_cast<long>(i * 7 + rng() % 7) + 1, 50);
    const Rational value = schur_eval<Rational>(shape, y);
    CHECK(value == brute_force_schur(shape, y));
    CHECK(value == schur_eval_bialternant<Rational>(seq, y));
  }
}

TEST_CASE("symmetry under every permutation of the points") {
  for (const auto& parts : std::vector<std::vector<int>>{{2, 1, 0}, {3, 1, 1, 0}, {2, 2, 0, 0}, {4, 1}}) {
    const Partition shape(parts);
    std::vector<Rational> y{q(1, 3), q(2, 5), q(3, 4), q(1, 9)};
    y.resize(static_cast<std::size_t>(shape.length()));
    const Rational base = schur_eval<Rational>(shape, y);
    std::sort(y.begin(), y.end());
    do {
      CHECK(schur_eval<Rational>(shape, y) == base);
    } while (std::next_permutation(y.begin(), y.end()));
  }
}

TEST_CASE("range 0 <= s_lambda(y) <= N_n on [0,1]") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int n = 0; n <= 6; ++n) {
    const double cap = to_double(schur_cap(n));
    for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
      std::vector<int> h;
      for (int d = n; d >= 0; --d)
        if (mask & (1 << d)) h.push_back(d);
      const Partition shape = partition_from_degrees(DegreeSequence(h, n));
      std::vector<double> y(h.size());
      for (auto& v : y) v = unit(rng);
      const double s = schur_eval<double>(shape, y);
      CHECK(s >= 0.0);
      CHECK(s <= cap * (1 + 1e-12));
    }
  }
}

TEST_CASE("homogeneity s(t y) = t^|lambda| s(y)") {
  const Partition shape({3, 2, 0});
  const std::vector<Rational> y{q(1, 2), q(1, 3), q(3, 5)};
  std::vector<Rational> ty;
  for (const auto& v : y) ty.push_back(v * q(2, 3));
  CHECK(schur_eval<Rational>(shape, ty) == int_power(q(2, 3), 5) * schur_eval<Rational>(shape, y));
}

TEST_CASE("tableau_count examples") {
  CHECK(tableau_count(Partition({0, 0, 0})) == 1);
  CHECK(tableau_count(Partition({1, 0})) == 2);
  CHECK(tableau_count(Partition({2, 1})) == 2);
  CHECK(tableau_count(Partition({2, 1, 0})) == 8);
}

TEST_CASE("schur_cap examples and brute force") {
  CHECK(schur_cap(0) == 1);
  CHECK(schur_cap(1) == 1);
  CHECK(schur_cap(2) == 2);
  for (int n = 0; n <= 9; ++n) {
    BigInt best = 0;
    for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
      std::vector<int> h;
      for (int d = n; d >= 0; --d)
        if (mask & (1 << d)) h.push_back(d);
      best = std::max(best, tableau_count(partition_from_degrees(DegreeSequence(h, n))));
    }
    CHECK(schur_cap(n) == best);
  }
  CHECK_THROWS(schur_cap(21));
}

TEST_CASE("SchurExpansion agrees with direct evaluation") {
  const SchurExpansion s(Partition({2, 1, 0}));
  const std::vector<Rational> y{q(1, 4), q(2, 3), q(5, 7)};
  CHECK(s.evaluate<Rational>(y) == schur_eval<Rational>(s.shape(), y));
  const std::vector<Rational> rest{q(2, 3), q(5, 7)};
  const auto p = s.in_first_variable<Rational>(rest);
  CHECK(p(q(1, 4)) == schur_eval<Rational>(s.shape(), y));
}

TEST_CASE("binary64 and exact paths agree") {
  const Partition shape({3, 1, 0});
  const std::vector<Rational> y{q(1, 5), q(1, 2), q(4, 5)};
  const std::vector<double> yd{0.2, 0.5, 0.8};
  CHECK(schur_eval<double>(shape, yd) == doctest::Approx(to_double(schur_eval<Rational>(shape, y))).epsilon(1e-14));
  CHECK(schur_eval_bialternant<double>(DegreeSequence({5, 2, 0}), yd) ==
        doctest::Approx(to_double(schur_eval<Rational>(shape, y))).epsilon(1e-10));
}
