#include "doctest.h"
#include "kuforge/groupring.hpp"
#include "kuforge/kumod.hpp"
#include "kuforge/milnor.hpp"
#include "oracle.hpp"

using namespace kuforge;
using exactla::FinAbGroup;

TEST_CASE("integral (co)homology tables are the Bockstein kernels") {
  for (int r = 1; r <= 3; ++r) {
    const auto co = kumod::hz_cohom_table(r, 12);
    const auto ho = kumod::hz_hom_table(r, 12);
    CHECK(co.at(0) == 1);
    CHECK(ho.at(0) == 1);
    for (int n = 1; n <= 12; ++n) {
      CHECK(co.at(n) == static_cast<std::int64_t>(milnor::k_dim(r, n)));
      CHECK(ho.at(n) == static_cast<std::int64_t>(milnor::k_dim(r, n + 1)));
    }
  }
}

TEST_CASE("rank one: ku_{2d-1} is cyclic of order 2^d, no v-torsion") {
  const auto h = kumod::ku_hom_table(1, 17);
  for (const auto& row : h.rows) {
    CHECK(row.torsion_dim == 0);
    if (row.degree % 2 == 1)
      CHECK(row.cotorsion == FinAbGroup::from_cyclic({mpz_class(1) << ((row.degree + 1) / 2)}));
    else
      CHECK(row.cotorsion == FinAbGroup::integers());
  }
  for (const auto& row : kumod::ku_cohom_table(1, 17).rows) CHECK(row.torsion_dim == 0);
}

TEST_CASE("cohomology: torsion is L_n, odd degrees are all torsion") {
  for (int r = 2; r <= 3; ++r) {
    const auto t = kumod::ku_cohom_table(r, 16);
    const auto q = kumod::qfrak_tables(r, 16);
    for (int n = 1; n <= 16; ++n) {
      const auto& row = t.rows[static_cast<std::size_t>(n)];
      const auto& qr = q.rows[static_cast<std::size_t>(n)];
      CHECK(qr.cohom_image == static_cast<std::int64_t>(milnor::l_dim(r, n)));
      CHECK(qr.cohom_kernel == static_cast<std::int64_t>(milnor::ltilde_dim(r, n)));
      CHECK(row.torsion_dim == qr.cohom_image);
      if (n % 2 == 1) CHECK(row.torsion_dim == row.modv_dim);
      if (n % 2 == 0) CHECK(row.cotorsion_modv_dim == oracle::pbar(r, n / 2));
    }
  }
}

TEST_CASE("homology: cotorsion in degree 2d-1 is R^d, torsion is a shifted cohomology torsion") {
  for (int r = 2; r <= 3; ++r) {
    const auto h = kumod::ku_hom_table(r, 12);
    const auto c = kumod::ku_cohom_table(r, 16);
    for (const auto& row : h.rows) {
      CHECK(row.torsion_dim == c.rows[static_cast<std::size_t>(row.degree + 4)].torsion_dim);
      if (row.degree % 2 == 1) CHECK(row.cotorsion == groupring::rn_group(r, (row.degree + 1) / 2));
      if (row.degree >= 1) CHECK(row.modv_dim == row.torsion_dim + row.cotorsion_modv_dim);
    }
  }
}

TEST_CASE("polynomial multiplication") {
  // (x + y)(x + y) = x^2 + y^2 over F2; monomials of degree 2 in rank 2 are y^2, xy, x^2
  const std::vector<bool> lin{true, true};
  const auto sq = kumod::poly_multiply(2, 1, lin, 1, lin);
  CHECK(sq == std::vector<bool>{true, false, true});
}

TEST_CASE("Q1-kernel is closed under products") {
  for (int n = 2; n <= 6; n += 2)
    for (int m = n; m <= 6; m += 2) CHECK(kumod::kernel_closed_under_products(3, n, m));
}

TEST_CASE("cotorsion tower rank matches the cohomology table") {
  const auto table = kumod::ku_cohom_table(2, 6);
  for (int d = 1; d <= 3; ++d) {
    const auto t = kumod::cotorsion_tower(2, d, 4);
    CHECK(t.mod_2k.size() == 4);
    CHECK(t.free_rank == table.rows[static_cast<std::size_t>(2 * d)].z2_free_rank);
  }
}
