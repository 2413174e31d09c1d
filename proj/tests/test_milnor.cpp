#include "doctest.h"
#include "kuforge/milnor.hpp"
#include "kuforge/polyalg.hpp"
#include "oracle.hpp"

using namespace kuforge;
using exactla::F2Matrix;

namespace {

std::int64_t homology_at(const F2Matrix& in, const F2Matrix& out, std::size_t middle) {
  return static_cast<std::int64_t>(middle - oracle::rank(out) - oracle::rank(in));
}

// Stacks Q_0 and Q_1 on S^n; its kernel is Ltilde_n.
F2Matrix q0_q1(int r, int n) { return F2Matrix::vconcat(oracle::milnor_q(0, r, n), oracle::milnor_q(1, r, n)); }

}  // namespace

TEST_CASE("Q_i matrices match the naive derivation") {
  for (int r = 1; r <= 3; ++r)
    for (int i = 0; i <= 2; ++i)
      for (int n = 0; n <= 8; ++n) CHECK(milnor::q_matrix(i, r, n) == oracle::milnor_q(i, r, n));
}

TEST_CASE("Q_i homology: zero in odd degrees, truncated algebra in even degrees") {
  for (int r = 1; r <= 3; ++r)
    for (int i = 0; i <= 2; ++i) {
      const int step = (1 << (i + 1)) - 1;
      for (int n = 0; n <= 14; ++n) {
        const auto in = oracle::milnor_q(i, r, n - step);
        const auto out = oracle::milnor_q(i, r, n);
        const auto h = homology_at(in, out, oracle::monomials(r, n).size());
        CAPTURE(r);
        CAPTURE(i);
        CAPTURE(n);
        CHECK(static_cast<std::int64_t>(milnor::qi_homology_dim(i, r, n)) == h);
        CHECK(h == (n % 2 ? 0 : static_cast<std::int64_t>(polyalg::trunc_sym_dim(r, i, n / 2))));
      }
    }
}

TEST_CASE("K, L and Ltilde against stacked kernels") {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 14; ++n) {
      CAPTURE(r);
      CAPTURE(n);
      const auto q0 = oracle::milnor_q(0, r, n);
      const std::int64_t s = static_cast<std::int64_t>(oracle::monomials(r, n).size());
      const std::int64_t k = s - static_cast<std::int64_t>(oracle::rank(q0));
      CHECK(static_cast<std::int64_t>(milnor::k_dim(r, n)) == k);
      const std::int64_t lt = s - static_cast<std::int64_t>(oracle::rank(q0_q1(r, n)));
      CHECK(static_cast<std::int64_t>(milnor::ltilde_dim(r, n)) == lt);
      std::int64_t l = 0;
      if (n >= 3) {
        const auto kernel = exactla::f2_kernel(oracle::milnor_q(0, r, n - 3));
        l = static_cast<std::int64_t>(oracle::rank(oracle::milnor_q(1, r, n - 3) * kernel));
      }
      CHECK(static_cast<std::int64_t>(milnor::l_dim(r, n)) == l);
      CHECK(milnor::q1_homology_on_K(r, n).at(n) == lt - l);
    }
}

TEST_CASE("Q1 homology on K is p_d in degree 2d") {
  for (int r = 1; r <= 4; ++r)
    for (int n = 1; n <= 16; ++n) {
      const std::int64_t expected = n % 2 ? 0 : oracle::pbar(r, n / 2);
      CHECK(milnor::q1_homology_on_K(r, n).at(n) == expected);
      CHECK(static_cast<std::int64_t>(milnor::pbar_dim(r, n)) == oracle::pbar(r, n));
    }
}

TEST_CASE("low-degree values of Ltilde") {
  const std::vector<std::size_t> r2{1, 0, 2, 0, 3, 0};
  for (int n = 0; n <= 5; ++n) CHECK(milnor::ltilde_dim(2, n) == r2[static_cast<std::size_t>(n)]);
  for (int r = 1; r <= 4; ++r) {
    CHECK(milnor::ltilde_dim(r, 2) == static_cast<std::size_t>(r));
    CHECK(milnor::ltilde_dim(r, 4) == polyalg::sym_dim(r, 2));
    for (int n : {1, 3, 5}) CHECK(milnor::ltilde_dim(r, n) == 0);
  }
}

TEST_CASE("tau matrices and Kfrak, Lfrak dimensions") {
  for (int r = 1; r <= 3; ++r)
    for (int a = 1; a <= r; ++a)
      for (int b = 0; b <= 9; ++b) {
        CAPTURE(r);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(milnor::tau_matrix(0, r, a, b) == oracle::koszul(0, r, a, b));
        CHECK(milnor::tau_matrix(1, r, a, b) == oracle::koszul(1, r, a, b));
        CHECK(static_cast<std::int64_t>(milnor::kfrak_dim(r, a, b)) == oracle::kfrak(r, a, b));
        CHECK(static_cast<std::int64_t>(milnor::lfrak_dim(r, a, b)) == oracle::lfrak(r, a, b));
      }
}

TEST_CASE("tau_0 and tau_1 anticommute to zero") {
  for (int r = 2; r <= 4; ++r)
    for (int a = 2; a <= r; ++a)
      for (int b = 0; b <= 6; ++b) {
        const auto t00 = milnor::tau_matrix(0, r, a - 1, b + 1) * milnor::tau_matrix(0, r, a, b);
        const auto t11 = milnor::tau_matrix(1, r, a - 1, b + 2) * milnor::tau_matrix(1, r, a, b);
        const auto t01 = milnor::tau_matrix(0, r, a - 1, b + 2) * milnor::tau_matrix(1, r, a, b) +
                         milnor::tau_matrix(1, r, a - 1, b + 1) * milnor::tau_matrix(0, r, a, b);
        CHECK(t00.is_zero());
        CHECK(t11.is_zero());
        CHECK(t01.is_zero());
      }
}

TEST_CASE("subquotient spaces") {
  const auto k = milnor::kernel_functor_K(3, 4);
  CHECK(k.dim() == milnor::k_dim(3, 4));
  CHECK(k.ambient_dim() == polyalg::sym_dim(3, 4));
  CHECK((k.projection * k.inclusion) == F2Matrix::identity(k.dim()));
  const auto l = milnor::l_functors(3, 6);
  CHECK(l.L.dim() == milnor::l_dim(3, 6));
  CHECK(l.Ltilde.dim() == milnor::ltilde_dim(3, 6));
}

TEST_CASE("J complexes have homology p_{b+1} in degree 0") {
  for (int r = 1; r <= 3; ++r)
    for (int b = 0; b <= 8; ++b)
      CHECK(milnor::j_complex_homology(r, b) == exactla::GradedDim{{0, oracle::pbar(r, b + 1)}});
}

TEST_CASE("Tot B(i) is Lfrak_i in degree i") {
  for (int r = 1; r <= 3; ++r)
    for (int i = 1; i <= r; ++i) {
      const auto th = milnor::total_homology(milnor::bicomplex(milnor::BicomplexKind::B, i, r, 12), r);
      for (const auto& [m, g] : th.by_degree)
        if (m != i) CHECK(g.empty());
      for (int w = std::max(th.slice_min, 0); w <= th.slice_max; ++w)
        CHECK(th.in_degree(i).at(w) == oracle::lfrak(r, i, w));
    }
}

TEST_CASE("Tot D(0) is S in degree 0") {
  const auto th = milnor::total_homology(milnor::bicomplex(milnor::BicomplexKind::D, 0, 2, 12), 2);
  for (int w = std::max(th.slice_min, 0); w <= th.slice_max; ++w)
    CHECK(th.in_degree(0).at(w) == static_cast<std::int64_t>(polyalg::sym_dim(2, w)));
}
