#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kuforge/graded.hpp"

namespace kuforge::ss {

using exactla::GradedDim;

// Entries of a page, keyed by column s in -r..0 and total (homological) degree.
// A class of H^j_I in internal cohomological degree t sits in column -j and total degree -t - j.
struct SSPage {
  int page = 1;
  int rank = 0;
  int lo = 0;  // total degree window
  int hi = 0;
  std::map<int, std::int64_t> free_rank;  // zero column, total degree -> rank of the free part
  std::map<int, GradedDim> columns;       // s -> F2 dimensions of the finite parts
  std::vector<std::string> notes;

  const GradedDim& column(int s) const;
  std::int64_t free_at(int m) const;
  bool vanishes_outside_band() const;  // entries only for -r <= s <= 0
};

// Associated graded of the v-adic filtration of H^1_I of the v-cotorsion, by total degree.
struct VadicLayers {
  int rank = 0;
  int lo = 0;
  int hi = 0;
  int dual_shift = 0;                  // D L_1 in H^1_I(L_1) has dims L_{1, c - n}
  std::vector<int> connecting_units;   // internal degrees of the units of H^1_I(L_1)
  std::vector<GradedDim> layers;       // layers[i] = v^i H / v^{i+1} H
  std::vector<GradedDim> dual_parts;   // the D L_1 summand of each layer
  std::vector<std::vector<int>> units; // total degrees of the F summands of each layer

  GradedDim from(int i) const;  // sum of layers i, i+1, ...
};

VadicLayers v_adic_layers(int r, int lo, int hi);

struct KuSpectralSequence {
  SSPage e1;
  SSPage einfty;
  VadicLayers layers;
  GradedDim top_sub;      // the F + D L_1 summand of H^r_I(ku^*)
  GradedDim top_image;    // image of H^r_I(ku^*) in H^r_I(HZ^*)
  GradedDim hz_top;       // surviving part of H^r_I(HZ^*)
  std::vector<std::string> problems;
};

// E^1 page for ku_*(BV_+), total degrees lo..hi.
SSPage e1_page_ku(int r, int bound);
KuSpectralSequence ku_spectral_sequence(int r, int bound);

struct Differential {
  int length = 0;  // d^length
  int from_s = 0;
  int from_m = 0;
  int to_s = 0;
  int to_m = 0;
  std::int64_t rank = 0;
};

struct HZSpectralSequence {
  SSPage e2;
  SSPage einfty;
  std::vector<Differential> differentials;
  int h0_index = 1;             // index of H^0_I in the degree-0 integers
  std::int64_t permanent_index = 1;  // index of the permanent cycles inside H^0_I
  std::vector<std::string> problems;
  bool consistent() const { return problems.empty(); }
};

HZSpectralSequence hz_spectral_sequence(int r, int bound);

struct AbutmentRow {
  int degree = 0;
  std::int64_t einfty_log2 = 0;
  std::int64_t einfty_free = 0;
  std::int64_t target_log2 = 0;
  std::int64_t target_free = 0;
  bool equal() const { return einfty_log2 == target_log2 && einfty_free == target_free; }
};

struct AbutmentReport {
  int rank = 0;
  std::string target;
  std::vector<AbutmentRow> rows;
  std::vector<std::string> problems;
  bool all_equal() const;
};

// E^infinity of the ku spectral sequence against ku_n(BV_+) for 0 <= n <= bound.
AbutmentReport einfty_consistency(int r, int bound);
// Same for HZ_n(BV_+).
AbutmentReport hz_abutment(int r, int bound);

}  // namespace kuforge::ss
