#include "doctest.h"
#include "kuforge/localcoh.hpp"
#include "kuforge/milnor.hpp"
#include "kuforge/module.hpp"
#include "oracle.hpp"

using namespace kuforge;
using localcoh::ModuleKind;
using localcoh::ModuleSpec;

TEST_CASE("module specs") {
  auto s = ModuleSpec::parse("Lfrak(3,2)", 2);
  CHECK(s.kind == ModuleKind::Lfrak);
  CHECK(s.rank == 3);
  CHECK(s.index == 2);
  s = ModuleSpec::parse("Lfrak(1)", 3);
  CHECK(s.rank == 3);
  CHECK(s.index == 1);
  s = ModuleSpec::parse("Kmodule", 4);
  CHECK(s.kind == ModuleKind::Kmodule);
  CHECK(s.rank == 4);
  CHECK(ModuleSpec::parse("TorsKu(2)", 3).rank == 2);
  CHECK_THROWS_AS(ModuleSpec::parse("Lfrak(1,2,3)", 2), std::invalid_argument);
  CHECK_THROWS_AS(ModuleSpec::parse("Lfrak(1", 2), std::invalid_argument);
  CHECK_THROWS_AS(ModuleSpec::parse("Lfrak(x)", 2), std::invalid_argument);
  CHECK_THROWS_AS(ModuleSpec::parse("Mystery", 2), std::invalid_argument);
}

TEST_CASE("polynomial ring: only the top local cohomology, dual of S shifted by -r") {
  for (int r = 1; r <= 3; ++r) {
    const auto pres = localcoh::free_module(r);
    for (const auto& t : {localcoh::cech_local_cohomology(pres, -10, 10),
                          localcoh::resolution_local_cohomology(pres, -10, 10)}) {
      for (int i = 0; i < r; ++i) CHECK(t.at(i).empty());
      for (int n = -10; n <= 10; ++n)
        CHECK(t.at(r).at(n) == static_cast<std::int64_t>(oracle::monomials(r, -n - r).size()));
    }
  }
}

TEST_CASE("Cech route equals resolution route on Lfrak modules") {
  for (int r = 2; r <= 3; ++r)
    for (int i = 1; i <= r; ++i) {
      CAPTURE(r);
      CAPTURE(i);
      const auto pres = localcoh::lfrak_presentation(r, i);
      const auto a = localcoh::cech_local_cohomology(pres, -10, 10);
      const auto b = localcoh::resolution_local_cohomology(pres, -10, 10);
      for (int j = 0; j <= r; ++j) CHECK(a.at(j) == b.at(j));
    }
}

TEST_CASE("H^1 of Lfrak_1 is r units plus the dual of Lfrak_1") {
  for (int r = 2; r <= 3; ++r) {
    const auto t = localcoh::cech_local_cohomology(localcoh::lfrak_presentation(r, 1), -14, 14);
    auto lf1 = [r](int b) -> std::int64_t { return b < 0 ? 0 : oracle::lfrak(r, 1, b); };
    const auto m = localcoh::match_units_plus_dual(t.at(1), lf1, r, -14, 14);
    CHECK(m.matched);
    CHECK(m.shift == r - 3);
    CHECK(m.unit_degrees.size() == static_cast<std::size_t>(r));
    for (int j = 0; j <= r; ++j)
      if (j != 1) CHECK(t.at(j).empty());
  }
}

TEST_CASE("free resolutions are exact") {
  const auto res = localcoh::free_resolution(localcoh::lfrak_presentation(2, 1));
  CHECK(res.exact);
  CHECK(res.length() <= 2);
  const auto free = localcoh::free_resolution(localcoh::free_module(3));
  CHECK(free.length() == 0);
  for (int e = 0; e <= 4; ++e) CHECK(localcoh::ext_dim(free, 0, e) == static_cast<std::int64_t>(oracle::monomials(3, e).size()));
}

TEST_CASE("a too small level budget reports non-stabilization") {
  localcoh::CechOptions opt;
  opt.max_level = 0;
  CHECK_THROWS_AS(localcoh::cech_local_cohomology(localcoh::lfrak_presentation(2, 1), -12, 12, opt),
                  localcoh::StabilizationError);
}

TEST_CASE("integral local cohomology of HZ") {
  for (int r = 2; r <= 3; ++r) {
    const auto integ = localcoh::integral_cech_local_cohomology(r, 10);
    CHECK(integ.zero_index == 2);
    CHECK(integ.at(0, 0) == exactla::FinAbGroup::integers());
    CHECK(integ.f2_total(1) == 0);
    for (int n = -10; n <= 10; ++n) {
      const auto top = integ.at(r, n);
      CHECK(top.is_finite());
      CHECK(top.two_rank() == static_cast<std::size_t>(top.log2_order()));
    }
  }
}

TEST_CASE("connecting morphism from H^0 of F is nonzero") {
  for (int r = 2; r <= 3; ++r) CHECK(localcoh::connecting_hz_local_cohom(r, 8).nontrivial());
}

TEST_CASE("truncated Koszul complexes are dual to each other") {
  for (int r = 1; r <= 3; ++r)
    for (int a = 0; a <= r; ++a) {
      const auto d = localcoh::dual_truncated_koszul(r, a, -8, 8);
      const auto k = localcoh::truncated_koszul(r, r - a, -8, 8);
      CHECK(d.homology() == k.homology());
      for (int w = -8; w <= 8; ++w)
        for (int deg = -1; deg <= r + 1; ++deg) CHECK(d.dim(w, deg) == k.dim(w, deg));
    }
}

TEST_CASE("shift matching") {
  exactla::GradedDim g{{-2, 1}, {-1, 2}, {0, 3}};
  auto f = [](int n) -> std::int64_t { return n >= 0 && n <= 2 ? n + 1 : 0; };
  const auto m = localcoh::match_shift(g, f, -5, 5);
  CHECK(m.matched);
  CHECK(m.shift == 2);
  exactla::GradedDim bad{{0, 5}};
  CHECK_FALSE(localcoh::match_shift(bad, f, -5, 5).matched);
}
