#include "kuforge/ss.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "kuforge/kumod.hpp"
#include "kuforge/localcoh.hpp"
#include "kuforge/milnor.hpp"

namespace kuforge::ss {

namespace {

// Internal cohomological degree of L_{a,b}: a + 2b + 4 in the torsion, 2b + 2 for the cotorsion mod v.
int torsion_t(int a, int n) { return a + 2 * n + 4; }
int cotorsion_t(int n) { return 2 * n + 2; }
int total_degree(int t, int j) { return -t - j; }

GradedDim shifted_window(const GradedDim& g, int by, int lo, int hi) { return g.shifted(by).restricted(lo, hi); }

std::string describe(const GradedDim& a, const GradedDim& b) { return a.to_string() + " vs " + b.to_string(); }

}  // namespace

const GradedDim& SSPage::column(int s) const {
  static const GradedDim none;
  auto it = columns.find(s);
  return it == columns.end() ? none : it->second;
}

std::int64_t SSPage::free_at(int m) const {
  auto it = free_rank.find(m);
  return it == free_rank.end() ? 0 : it->second;
}

bool SSPage::vanishes_outside_band() const {
  for (const auto& [s, g] : columns)
    if ((s < -rank || s > 0) && !g.empty()) return false;
  return true;
}

GradedDim VadicLayers::from(int i) const {
  GradedDim out;
  for (std::size_t k = static_cast<std::size_t>(std::max(i, 0)); k < layers.size(); ++k) out = out + layers[k];
  return out;
}

VadicLayers v_adic_layers(int r, int lo, int hi) {
  if (r < 2) throw std::invalid_argument("v_adic_layers: rank must be at least 2");
  VadicLayers v;
  v.rank = r;
  v.lo = lo;
  v.hi = hi;
  const int nlo = -(r + 10);
  const int nhi = r + 4;
  const auto h1 = localcoh::cech_local_cohomology(localcoh::lfrak_presentation(r, 1), nlo, nhi);
  auto lf1 = [r](int b) -> std::int64_t { return b < 0 ? 0 : static_cast<std::int64_t>(milnor::lfrak_dim(r, 1, b)); };
  const auto match = localcoh::match_units_plus_dual(h1.at(1), lf1, r, nlo, nhi);
  if (!match.matched) throw std::runtime_error("v_adic_layers: H^1 of L_1 is not r units plus the dual of L_1");
  v.dual_shift = match.shift;
  v.connecting_units = match.unit_degrees;
  // the unit in internal degree 0 is hit by the connecting map from H^0 of the Z summand
  const int hit = -1;  // cotorsion_t(-1) == 0
  if (std::find(match.unit_degrees.begin(), match.unit_degrees.end(), hit) == match.unit_degrees.end())
    throw std::runtime_error("v_adic_layers: no unit in internal degree 0");
  std::vector<int> units;
  for (int n : match.unit_degrees)
    if (n != hit) units.push_back(total_degree(cotorsion_t(n), 1));
  std::sort(units.begin(), units.end());
  auto d0 = [&](int m) -> std::int64_t {
    if ((m % 2 + 2) % 2 != 1) return 0;
    return lf1(v.dual_shift + (m + 3) / 2);
  };
  const int first = -2 * v.dual_shift - 3;  // lowest total degree of the dual part of layer 0
  const int count = std::max(1, (hi - first) / 2 + 1);
  for (int i = 0; i < count; ++i) {
    GradedDim dual;
    for (int m = lo; m <= hi; ++m) dual.set(m, d0(m - 2 * i));
    GradedDim layer = dual;
    if (i > 0) {
      // v carries the units up by two; one of them dies in each step until none are left
      for (int& u : units) u += 2;
      if (!units.empty()) units.pop_back();
    }
    if (i > r - 2) units.clear();
    for (int u : units)
      if (u >= lo && u <= hi) layer.add(u, 1);
    v.layers.push_back(layer);
    v.dual_parts.push_back(dual);
    v.units.push_back(units);
  }
  return v;
}

HZSpectralSequence hz_spectral_sequence(int r, int bound) {
  if (r < 2) throw std::invalid_argument("hz_spectral_sequence: rank must be at least 2");
  HZSpectralSequence out;
  const int window = bound + r + 2;
  const auto integ = localcoh::integral_cech_local_cohomology(r, window);
  out.e2.page = 2;
  out.e2.rank = r;
  out.e2.lo = -1;
  out.e2.hi = bound;
  for (int j = 0; j <= r; ++j) {
    GradedDim col;
    for (const auto& [n, g] : integ.h[j]) {
      const int m = total_degree(n, j);
      if (m < out.e2.lo || m > out.e2.hi) continue;
      if (g.free_rank() > 0) out.e2.free_rank[m] += static_cast<std::int64_t>(g.free_rank());
      if (g.two_rank() > 0) col.set(m, static_cast<std::int64_t>(g.two_rank()));
    }
    out.e2.columns[-j] = col;
  }
  out.h0_index = integ.zero_index;
  if (out.e2.free_at(0) != 1) out.problems.push_back("zero column does not hold a single Z in degree 0");
  if (!out.e2.column(-1).empty()) out.problems.push_back("column -1 is nonzero: " + out.e2.column(-1).to_string());
  out.einfty = out.e2;
  out.einfty.page = 0;
  for (int j = 2; j <= r; ++j) {
    const GradedDim col = out.e2.column(-j);
    if (j < r && !(col == GradedDim{{-1, 1}}))
      out.problems.push_back("column " + std::to_string(-j) + " is not a single F in degree -1: " + col.to_string());
    if (col.at(-1) < 1) {
      out.problems.push_back("no target for d^" + std::to_string(j) + " from the zero column");
      continue;
    }
    out.differentials.push_back({j, 0, 0, -j, -1, 1});
    GradedDim hit;
    hit.set(-1, 1);
    out.einfty.columns[-j] = out.einfty.columns[-j] - hit;
  }
  out.permanent_index = std::int64_t{1} << out.differentials.size();
  out.einfty.notes.push_back("zero column: permanent cycles of index " + std::to_string(out.permanent_index) +
                             " in H^0");
  return out;
}

KuSpectralSequence ku_spectral_sequence(int r, int bound) {
  if (r < 2) throw std::invalid_argument("ku_spectral_sequence: rank must be at least 2");
  KuSpectralSequence out;
  const int lo = -2 * r - 4;
  const int hi = bound;
  out.layers = v_adic_layers(r, lo - 2, hi + 2);
  SSPage& e1 = out.e1;
  e1.page = 1;
  e1.rank = r;
  e1.lo = lo;
  e1.hi = hi;
  for (int m = 0; m <= hi; m += 2) e1.free_rank[m] = 1;
  e1.columns[-1] = out.layers.from(0).restricted(lo, hi);

  // middle columns from the local cohomology of L_a
  const int nlo = -(hi + 4 * r + 8) / 2 - 1;
  const int nhi = -(lo + 4) / 2 + 1;
  for (int a = 2; a <= r - 1; ++a) {
    const auto t = localcoh::cech_local_cohomology(localcoh::lfrak_presentation(r, a), nlo, nhi);
    const GradedDim h = t.at(a);
    GradedDim col;
    for (const auto& [n, d] : h.entries()) {
      const int m = total_degree(torsion_t(a, n), a);
      if (m >= lo && m <= hi) col.set(m, d);
    }
    e1.columns[-a] = col;
  }

  // top column: 0 -> F + D L_1 -> H^r(ku) -> image in H^r(HZ)
  out.top_sub = shifted_window(out.layers.layers[static_cast<std::size_t>(r - 2)], -1, lo, hi);
  for (int m = std::max(lo, 0); m <= hi; ++m) out.top_image.set(m, static_cast<std::int64_t>(milnor::l_dim(r, m + 4)));
  e1.columns[-r] = out.top_sub + out.top_image;

  const auto hz = hz_spectral_sequence(r, bound);
  out.hz_top = hz.einfty.column(-r);
  for (const auto& [m, d] : out.top_image.entries())
    if (d > out.hz_top.at(m))
      out.problems.push_back("image at total degree " + std::to_string(m) + " exceeds the HZ top column");
  for (const auto& p : hz.problems) out.problems.push_back("HZ: " + p);

  // differentials from column -1: layer i kills column -(i + 2) one total degree lower
  SSPage& ei = out.einfty;
  ei = e1;
  ei.page = 0;
  for (int i = 0; i <= r - 2; ++i) {
    const int s = -(i + 2);
    const GradedDim killed = shifted_window(out.layers.layers[static_cast<std::size_t>(i)], -1, lo, hi);
    const GradedDim col = e1.column(s);
    if (s > -r) {
      if (!(killed == col)) out.problems.push_back("layer " + std::to_string(i) + " vs column " + std::to_string(s) +
                                                   ": " + describe(killed, col));
      ei.columns[s] = GradedDim{};
    } else {
      ei.columns[s] = col - killed;
    }
  }
  ei.columns[-1] = out.layers.from(r - 1).restricted(lo, hi);
  return out;
}

SSPage e1_page_ku(int r, int bound) { return ku_spectral_sequence(r, bound).e1; }

bool AbutmentReport::all_equal() const {
  if (!problems.empty()) return false;
  return std::all_of(rows.begin(), rows.end(), [](const AbutmentRow& row) { return row.equal(); });
}

AbutmentReport einfty_consistency(int r, int bound) {
  AbutmentReport rep;
  rep.rank = r;
  rep.target = "ku";
  const auto seq = ku_spectral_sequence(r, bound);
  rep.problems = seq.problems;
  const auto table = kumod::ku_hom_table(r, bound);
  for (const auto& row : table.rows) {
    AbutmentRow a;
    a.degree = row.degree;
    for (const auto& [s, col] : seq.einfty.columns) a.einfty_log2 += col.at(row.degree);
    a.einfty_free = seq.einfty.free_at(row.degree);
    a.target_log2 = row.torsion_dim + static_cast<std::int64_t>(row.cotorsion.log2_order());
    a.target_free = static_cast<std::int64_t>(row.cotorsion.free_rank());
    rep.rows.push_back(a);
  }
  return rep;
}

AbutmentReport hz_abutment(int r, int bound) {
  AbutmentReport rep;
  rep.rank = r;
  rep.target = "HZ";
  const auto seq = hz_spectral_sequence(r, bound);
  rep.problems = seq.problems;
  const auto table = kumod::hz_hom_table(r, bound);
  for (int m = -1; m <= bound; ++m) {
    AbutmentRow a;
    a.degree = m;
    for (const auto& [s, col] : seq.einfty.columns) a.einfty_log2 += col.at(m);
    a.einfty_free = seq.einfty.free_at(m);
    if (m == 0) {
      a.target_free = table.at(0);
    } else if (m > 0) {
      a.target_log2 = table.at(m);
    }
    rep.rows.push_back(a);
  }
  return rep;
}

}  // namespace kuforge::ss
