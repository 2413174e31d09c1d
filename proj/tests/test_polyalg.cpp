#include <functional>
#include <set>

#include "doctest.h"
#include "kuforge/polyalg.hpp"

using namespace kuforge::polyalg;

namespace {

// All exponent vectors of length r and total degree n, each exponent below `cap`.
std::vector<std::vector<int>> enumerate(int r, int n, int cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<std::size_t>(r), 0);
  std::function<void(int, int)> rec = [&](int j, int left) {
    if (j == r - 1) {
      if (left < cap) {
        e[static_cast<std::size_t>(j)] = left;
        out.push_back(e);
      }
      return;
    }
    for (int k = 0; k <= left && k < cap; ++k) {
      e[static_cast<std::size_t>(j)] = k;
      rec(j + 1, left - k);
    }
  };
  if (r == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  rec(0, n);
  return out;
}

}  // namespace

TEST_CASE("symmetric and exterior dimensions") {
  for (int r = 0; r <= 5; ++r)
    for (int n = 0; n <= 12; ++n) CHECK(sym_dim(r, n) == enumerate(r, n, 1 << 20).size());
  CHECK(ext_dim(4, 2) == 6);
  CHECK(ext_dim(3, 4) == 0);
  CHECK(binomial(10, 3) == 120);
}

TEST_CASE("monomial bases are sorted and indexable") {
  for (int r = 1; r <= 4; ++r)
    for (int n = 0; n <= 8; ++n) {
      const auto basis = monomials(r, n);
      REQUIRE(basis->size() == sym_dim(r, n));
      for (std::size_t i = 0; i < basis->size(); ++i) {
        CHECK(basis->index_of(basis->key(i)) == i);
        CHECK(pack(basis->monomial(i)) == basis->key(i));
        CHECK(basis->monomial(i).degree() == n);
        if (i > 0) CHECK(basis->key(i - 1) < basis->key(i));
      }
    }
  CHECK(monomials(2, 3)->index_of(var_key(3, 0)) == MonomialBasis::npos);
}

TEST_CASE("truncated and bounded counts") {
  for (int r = 1; r <= 4; ++r)
    for (int i = 0; i <= 3; ++i)
      for (int n = 0; n <= 16; ++n) CHECK(trunc_sym_dim(r, i, n) == enumerate(r, n, 1 << i).size());
  CHECK(bounded_monomial_count(2, 2, 2) == 1);
  CHECK(trunc_sym_dim(3, 1, -1) == 0);
  CHECK_THROWS_AS(trunc_sym_dim(3, -1, 2), std::invalid_argument);
}

TEST_CASE("odd-count filtration") {
  for (int r = 1; r <= 4; ++r)
    for (int t = 0; t <= r; ++t)
      for (int n = 0; n <= 10; ++n) {
        std::size_t count = 0;
        for (const auto& e : enumerate(r, n, 1 << 20)) {
          int odd = 0;
          for (int x : e) odd += x % 2;
          if (odd <= t) ++count;
        }
        CHECK(filtration_dim(r, t, n) == count);
        CHECK(filtration_basis(r, t, n).size() == count);
      }
}

TEST_CASE("splitting a monomial into odd mask and half") {
  const ExpVec m{{3, 0, 4, 1}};
  const auto s = split_monomial(m);
  CHECK(s.mask == 0b1001);
  CHECK(s.half.e == std::vector<int>{1, 0, 2, 0});
  CHECK(join_monomial(s, 4) == m);
  CHECK(m.odd_count() == 2);
}

TEST_CASE("exterior-symmetric basis is mask major") {
  const auto basis = ext_sym_basis(3, 2, 2);
  REQUIRE(basis.size() == 3 * 6);
  const auto masks = ext_basis(3, 2);
  for (std::size_t k = 0; k < basis.size(); ++k) CHECK(basis[k].mask == masks[k / 6]);
  for (const auto mask : masks) CHECK(masks[ext_index(3, mask)] == mask);
}

TEST_CASE("frobenius doubles exponents") {
  const auto f = frobenius(3, 2);
  const auto* block = f.block(2);
  REQUIRE(block != nullptr);
  CHECK(block->cols() == sym_dim(3, 2));
  CHECK(block->rows() == sym_dim(3, 4));
  CHECK(block->popcount() == block->cols());
}

TEST_CASE("packing rejects out-of-range ranks") {
  CHECK_THROWS_AS(MonomialBasis(kMaxRank + 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(MonomialBasis(2, kMaxExponent + 1), std::invalid_argument);
}
