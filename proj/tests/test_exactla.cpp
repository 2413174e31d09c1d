#include <random>
#include <set>

#include "doctest.h"
#include "kuforge/f2matrix.hpp"
#include "kuforge/graded.hpp"
#include "kuforge/intmatrix.hpp"

using namespace kuforge::exactla;

namespace {

F2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.4) {
  std::bernoulli_distribution bit(density);
  F2Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, bit(rng));
  return m;
}

// Rank by counting the column span; only for a handful of columns and at most 64 rows.
std::size_t span_rank(const F2Matrix& m) {
  std::vector<std::uint64_t> col(m.cols(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m.get(i, j)) col[j] |= std::uint64_t{1} << i;
  std::set<std::uint64_t> span;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m.cols()); ++s) {
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if ((s >> j) & 1U) v ^= col[j];
    span.insert(v);
  }
  std::size_t r = 0;
  while ((std::size_t{1} << r) < span.size()) ++r;
  return r;
}

}  // namespace

TEST_CASE("f2 rank agrees with span enumeration") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 120; ++t) {
    const std::size_t rows = 1 + rng() % 64;
    const std::size_t cols = 1 + rng() % 10;
    const auto m = random_matrix(rng, rows, cols);
    CHECK(f2_rank(m) == span_rank(m));
  }
}

TEST_CASE("kernel and image have complementary dimensions") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const auto m = random_matrix(rng, 1 + rng() % 90, 1 + rng() % 130);
    const auto d = f2_decompose(m);
    CHECK(d.rank + d.kernel_basis.cols() == m.cols());
    CHECK((m * d.kernel_basis).is_zero());
    CHECK(f2_rank(d.kernel_basis) == d.kernel_basis.cols());
    CHECK(d.image_basis.cols() == d.rank);
    CHECK(f2_rank(F2Matrix::hconcat(d.image_basis, m)) == d.rank);
  }
}

TEST_CASE("inverse and solve") {
  std::mt19937_64 rng(3);
  int inverted = 0;
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 70;
    const auto m = random_matrix(rng, n, n, 0.5);
    if (f2_rank(m) != n) {
      CHECK_THROWS_AS(f2_inverse(m), std::domain_error);
      continue;
    }
    ++inverted;
    CHECK(m * f2_inverse(m) == F2Matrix::identity(n));
    const auto x = random_matrix(rng, n, 3);
    const auto sol = f2_solve(m, m * x);
    REQUIRE(sol.has_value());
    CHECK(*sol == x);
  }
  CHECK(inverted > 0);

  F2Matrix a(2, 1);
  a.set(0, 0, true);
  F2Matrix b(2, 1);
  b.set(1, 0, true);
  CHECK_FALSE(f2_solve(a, b).has_value());
}

TEST_CASE("packed rows straddle word boundaries") {
  F2Matrix m(3, 130);
  m.set(0, 63, true);
  m.set(0, 64, true);
  m.set(2, 129, true);
  CHECK(m.popcount() == 3);
  CHECK(m.transpose().transpose() == m);
  CHECK(f2_rank(m) == 2);
  m.xor_row_from(1, m, 0);
  CHECK(m.get(1, 64));
  CHECK(f2_rank(m) == 2);
}

TEST_CASE("smith normal form of a textbook matrix") {
  const IntMatrix m(3, 3, {2, 4, 4, -6, 6, 12, 10, -4, -16});
  const auto s = smith_normal_form(m);
  CHECK(s.d == IntMatrix::diagonal({2, 6, 12}));
  CHECK(s.u * m * s.v == s.d);
  CHECK(abs(determinant(s.u)) == 1);
  CHECK(abs(determinant(s.v)) == 1);
  CHECK(abs(determinant(m)) == 144);
  CHECK(cokernel_structure(m).to_string() == "Z/2 + Z/6 + Z/12");
}

TEST_CASE("smith form on random integer matrices") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> entry(-9, 9);
  for (int t = 0; t < 50; ++t) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 6;
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
    const auto s = smith_normal_form(m);
    CHECK(s.d.is_diagonal());
    CHECK(s.u * m * s.v == s.d);
    const auto diag = smith_diagonal(m);
    for (std::size_t k = 0; k + 1 < diag.size(); ++k)
      if (diag[k + 1] != 0) CHECK(diag[k + 1] % diag[k] == 0);
    if (rows == cols) {
      mpz_class prod = 1;
      for (std::size_t k = 0; k < rows; ++k) prod *= s.d.at(k, k);
      CHECK(abs(determinant(m)) == prod);
    }
  }
}

TEST_CASE("finite abelian groups") {
  const auto g = FinAbGroup::from_cyclic({2, 4, 2, 1, 0, 2});
  CHECK(g.to_string() == "(Z/2)^3 + Z/4 + Z");
  CHECK(g.free_rank() == 1);
  CHECK(g.two_rank() == 4);
  CHECK(g.log2_order() == 5);
  CHECK(FinAbGroup::from_cyclic({2, 3}).to_string() == "Z/6");
  CHECK(FinAbGroup().to_string() == "0");
  CHECK(FinAbGroup::integers(2).to_string() == "Z^2");
  CHECK(FinAbGroup::elementary(3) == FinAbGroup::from_cyclic({2, 2, 2}));
  CHECK(FinAbGroup::from_cyclic({4}).direct_sum(FinAbGroup::from_cyclic({2})).exponent() == 4);
  CHECK_THROWS(FinAbGroup::from_cyclic({3}).log2_order());
}

TEST_CASE("integer kernel") {
  const IntMatrix m(2, 3, {1, 2, 3, 4, 5, 6});
  const auto k = integer_kernel(m);
  REQUIRE(k.cols() == 1);
  CHECK((m * k).is_zero());
}

TEST_CASE("graded dimensions") {
  GradedDim a{{0, 1}, {2, 3}};
  GradedDim b{{2, 1}, {5, 2}};
  CHECK((a + b).total() == 7);
  CHECK((a + b - b) == a);
  CHECK_THROWS((a - b));
  CHECK(a.shifted(-2).at(0) == 3);
  CHECK(a.restricted(1, 4) == GradedDim{{2, 3}});
  a.set(2, 0);
  CHECK(a.entries().size() == 1);
}

TEST_CASE("homology of a graded pair rejects a non-complex") {
  GradedMap d_in;
  GradedMap d_out;
  F2Matrix one(1, 1);
  one.set(0, 0, true);
  d_in.blocks[0] = one;
  d_out.blocks[0] = one;
  CHECK_THROWS_AS(homology_dims(d_in, d_out), ComplexError);

  d_out.blocks[0] = F2Matrix(1, 1);
  const auto h = homology_dims(d_in, d_out);
  CHECK(h.at(0) == 0);
  CHECK(homology_dim(F2Matrix(2, 1), F2Matrix(1, 2)) == 2);
}
