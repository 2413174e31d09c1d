#include "doctest.h"
#include "kuforge/ss.hpp"

using namespace kuforge;

TEST_CASE("ku spectral sequence abuts to ku_*") {
  for (int r = 2; r <= 3; ++r) {
    const auto rep = ss::einfty_consistency(r, 10);
    CAPTURE(r);
    CHECK_MESSAGE(rep.problems.empty(), (rep.problems.empty() ? std::string() : rep.problems.front()));
    CHECK(rep.rows.size() == 11);
    for (const auto& row : rep.rows) {
      CAPTURE(row.degree);
      CHECK(row.einfty_log2 == row.target_log2);
      CHECK(row.einfty_free == row.target_free);
    }
    CHECK(rep.all_equal());
  }
}

TEST_CASE("E-infinity shape") {
  for (int r = 2; r <= 3; ++r) {
    const auto seq = ss::ku_spectral_sequence(r, 10);
    CHECK(seq.e1.vanishes_outside_band());
    CHECK(seq.einfty.vanishes_outside_band());
    for (int s = -(r - 1); s <= -2; ++s) CHECK(seq.einfty.column(s).empty());
    CHECK(seq.einfty.column(-1) == seq.layers.from(r - 1).restricted(seq.einfty.lo, seq.einfty.hi));
    CHECK(seq.einfty.column(5).empty());
    for (int m = 0; m <= 10; ++m) CHECK(seq.e1.free_at(m) == (m % 2 == 0 ? 1 : 0));
  }
}

TEST_CASE("v-adic layers lose one unit per step") {
  for (int r = 2; r <= 3; ++r) {
    const auto v = ss::v_adic_layers(r, -20, 12);
    REQUIRE(v.layers.size() >= static_cast<std::size_t>(r));
    CHECK(v.connecting_units.size() == static_cast<std::size_t>(r));
    CHECK(v.units[0].size() == static_cast<std::size_t>(r - 1));
    for (int i = 1; i <= r - 2; ++i)
      CHECK(v.units[static_cast<std::size_t>(i)].size() + 1 == v.units[static_cast<std::size_t>(i - 1)].size());
    CHECK(v.units[static_cast<std::size_t>(r - 1)].empty());
    for (std::size_t i = 1; i < v.dual_parts.size(); ++i)
      CHECK(v.dual_parts[i].restricted(-10, 10) == v.dual_parts[0].shifted(2 * static_cast<int>(i)).restricted(-10, 10));
  }
  CHECK_THROWS_AS(ss::v_adic_layers(1, 0, 4), std::invalid_argument);
}

TEST_CASE("HZ spectral sequence: permanent cycles of index 2^{r-1}") {
  for (int r = 2; r <= 3; ++r) {
    const auto hz = ss::hz_spectral_sequence(r, 10);
    CHECK(hz.consistent());
    CHECK(hz.h0_index == 2);
    CHECK(hz.permanent_index == (std::int64_t{1} << (r - 1)));
    CHECK(hz.differentials.size() == static_cast<std::size_t>(r - 1));
    for (const auto& d : hz.differentials) {
      CHECK(d.from_s == 0);
      CHECK(d.to_s == -d.length);
      CHECK(d.to_m == d.from_m - 1);
    }
    CHECK(ss::hz_abutment(r, 10).all_equal());
  }
}

TEST_CASE("rank one has no spectral sequence here") {
  CHECK_THROWS_AS(ss::ku_spectral_sequence(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(ss::hz_spectral_sequence(1, 4), std::invalid_argument);
}
