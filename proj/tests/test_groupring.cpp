#include <functional>

#include "doctest.h"
#include "kuforge/groupring.hpp"
#include "kuforge/intmatrix.hpp"
#include "oracle.hpp"

using namespace kuforge;
using exactla::FinAbGroup;
using exactla::IntMatrix;

namespace {

// Group ring element of Z[F_2^r] as coefficients on all 2^r group elements.
using Element = std::vector<long>;

Element generator(int r, unsigned g) {
  Element e(std::size_t{1} << r, 0);
  e[g] += 1;
  e[0] -= 1;
  return e;
}

Element convolve(const Element& a, const Element& b) {
  Element c(a.size(), 0);
  for (unsigned g = 0; g < a.size(); ++g)
    for (unsigned h = 0; h < b.size(); ++h) c[g ^ h] += a[g] * b[h];
  return c;
}

// Coordinates in the basis [g] - [0], g >= 1; valid for augmentation-ideal elements.
std::vector<long> coords(const Element& e) { return {e.begin() + 1, e.end()}; }

// P^k / P^{n+1}-free description: the lattice P^k spanned by all k-fold products of generators.
IntMatrix power_span(int r, int k) {
  const unsigned top = (1U << r) - 1;
  std::vector<std::vector<long>> cols;
  std::vector<unsigned> pick(static_cast<std::size_t>(k), 1);
  std::function<void(int, unsigned)> rec = [&](int depth, unsigned from) {
    if (depth == k) {
      Element e = generator(r, pick[0]);
      for (int j = 1; j < k; ++j) e = convolve(e, generator(r, pick[static_cast<std::size_t>(j)]));
      cols.push_back(coords(e));
      return;
    }
    for (unsigned g = from; g <= top; ++g) {
      pick[static_cast<std::size_t>(depth)] = g;
      rec(depth + 1, g);
    }
  };
  rec(0, 1);
  IntMatrix m(top, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t i = 0; i < top; ++i) m.at(i, c) = cols[c][i];
  return m;
}

}  // namespace

TEST_CASE("products of generators") {
  for (int r = 1; r <= 3; ++r)
    for (unsigned g = 1; g < (1U << r); ++g)
      for (unsigned h = 1; h < (1U << r); ++h)
        CHECK(groupring::basis_product(r, g, h) == coords(convolve(generator(r, g), generator(r, h))));
}

TEST_CASE("R^n of the group of order two is cyclic of order 2^n") {
  for (int n = 1; n <= 10; ++n) CHECK(groupring::rn_group(1, n) == FinAbGroup::from_cyclic({mpz_class(1) << n}));
}

TEST_CASE("R^n against products enumerated as multisets") {
  for (int r = 2; r <= 3; ++r)
    for (int n = 1; n <= (r == 2 ? 5 : 3); ++n) {
      CAPTURE(r);
      CAPTURE(n);
      const auto expected = exactla::cokernel_structure(power_span(r, n + 1));
      CHECK(groupring::rn_group(r, n) == expected);
    }
}

TEST_CASE("order, socle and head of R^n") {
  for (int r = 2; r <= 3; ++r)
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(r);
      CAPTURE(n);
      std::int64_t log_order = 0;
      for (int m = 1; m <= n; ++m) log_order += oracle::pbar(r, m);
      const auto rep = groupring::filtration_report(r, n);
      CHECK(static_cast<std::int64_t>(rep.quotient.log2_order()) == log_order);
      CHECK(static_cast<std::int64_t>(rep.two_torsion_dim) == oracle::pbar(r, n));
      CHECK(rep.head_dim == rep.two_torsion_dim);
      CHECK(rep.subquotient == FinAbGroup::elementary(static_cast<std::size_t>(oracle::pbar(r, n))));
    }
}

TEST_CASE("filtration is a chain") {
  for (int n = 1; n <= 4; ++n) {
    const auto big = groupring::aug_power_lattice(3, n);
    const auto small = groupring::aug_power_lattice(3, n + 1);
    for (std::size_t c = 0; c < small.basis.cols(); ++c) CHECK(big.contains(small.basis.select_columns({c})));
  }
}

TEST_CASE("mod 2 image of P^n is the power of the F2 augmentation ideal") {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 5; ++n) CHECK(groupring::mod2_image_rank(r, n) == groupring::f2_augmentation_power_dim(r, n));
}

TEST_CASE("completion inclusions") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k) CHECK(groupring::completion_inclusion_check(n, k));
}

TEST_CASE("first stage of the completion tower is the F2 augmentation power") {
  for (int d = 1; d <= 3; ++d) {
    const auto tower = groupring::completion_tower(2, d, 3);
    REQUIRE(tower.size() == 3);
    CHECK(tower[0] == FinAbGroup::elementary(groupring::f2_augmentation_power_dim(2, d)));
  }
}
