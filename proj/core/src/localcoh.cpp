#include "kuforge/localcoh.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "kuforge/milnor.hpp"

namespace kuforge::localcoh {

using exactla::F2Matrix;
using exactla::f2_kernel;
using exactla::f2_rank;
using polyalg::ExtMask;

namespace {

// Koszul cochain complex on x^k in one internal degree, components indexed by subsets.
struct Level {
  std::vector<std::vector<ExtMask>> subsets;         // by size
  std::vector<std::vector<std::size_t>> offsets;     // block offsets within C^p
  std::vector<std::size_t> dims;                     // dim C^p
  std::vector<F2Matrix> d;                           // d[p] : C^p -> C^{p+1}
};

Level build_level(const PresentedModule& m, int n, int k) {
  const int r = m.rank();
  const int w = m.weight();
  Level lv;
  lv.subsets.resize(r + 1);
  lv.offsets.resize(r + 1);
  lv.dims.assign(r + 1, 0);
  for (int p = 0; p <= r; ++p) {
    lv.subsets[p] = polyalg::ext_basis(r, p);
    for (std::size_t s = 0; s < lv.subsets[p].size(); ++s) {
      lv.offsets[p].push_back(lv.dims[p]);
      lv.dims[p] += m.dim(n + k * w * p);
    }
  }
  for (int p = 0; p < r; ++p) {
    F2Matrix dm(lv.dims[p + 1], lv.dims[p]);
    const int deg = n + k * w * p;
    if (m.dim(deg) > 0) {
      for (std::size_t s = 0; s < lv.subsets[p].size(); ++s) {
        const ExtMask mask = lv.subsets[p][s];
        for (int j = 0; j < r; ++j) {
          if ((mask >> j) & 1U) continue;
          const std::size_t t = polyalg::ext_index(r, mask | (ExtMask{1} << j));
          const F2Matrix block = m.multiply(deg, polyalg::var_key(r, j, k), k);
          for (std::size_t a = 0; a < block.rows(); ++a)
            for (std::size_t b = 0; b < block.cols(); ++b)
              if (block.get(a, b)) dm.flip(lv.offsets[p + 1][t] + a, lv.offsets[p][s] + b);
        }
      }
    }
    lv.d.push_back(std::move(dm));
  }
  return lv;
}

// Multiplication by x_S on every component: level k -> level k + 1 in cochain degree p.
F2Matrix transition(const PresentedModule& m, const Level& from, const Level& to, int n, int k, int p) {
  const int r = m.rank();
  const int w = m.weight();
  F2Matrix t(to.dims[p], from.dims[p]);
  const int deg = n + k * w * p;
  if (m.dim(deg) == 0) return t;
  for (std::size_t s = 0; s < from.subsets[p].size(); ++s) {
    const ExtMask mask = from.subsets[p][s];
    polyalg::MonoKey key = 0;
    for (int j = 0; j < r; ++j)
      if ((mask >> j) & 1U) key += polyalg::var_key(r, j);
    const F2Matrix block = m.multiply(deg, key, p);
    for (std::size_t a = 0; a < block.rows(); ++a)
      for (std::size_t b = 0; b < block.cols(); ++b)
        if (block.get(a, b)) t.set(to.offsets[p][s] + a, from.offsets[p][s] + b, true);
  }
  return t;
}

F2Matrix incoming(const Level& lv, int p) {
  if (p == 0) return F2Matrix(lv.dims[0], 0);
  return lv.d[p - 1];
}

F2Matrix outgoing(const Level& lv, int p, int r) {
  if (p == r) return F2Matrix(0, lv.dims[r]);
  return lv.d[p];
}

std::int64_t level_homology(const Level& lv, int p, int r) {
  return static_cast<std::int64_t>(lv.dims[p]) - static_cast<std::int64_t>(f2_rank(outgoing(lv, p, r))) -
         static_cast<std::int64_t>(f2_rank(incoming(lv, p)));
}

// Rank of the map induced on cohomology by t.
std::int64_t induced_rank(const Level& from, const Level& to, const F2Matrix& t, int p, int r) {
  const F2Matrix z = f2_kernel(outgoing(from, p, r));
  const F2Matrix b = incoming(to, p);
  const F2Matrix tz = t * z;
  return static_cast<std::int64_t>(f2_rank(F2Matrix::hconcat(b, tz))) - static_cast<std::int64_t>(f2_rank(b));
}

}  // namespace

LocalCohomologyTable cech_local_cohomology(const ModulePresentation& pres, int lo, int hi, const CechOptions& opt) {
  if (lo > hi) throw std::invalid_argument("cech_local_cohomology: empty window");
  const PresentedModule m(pres);
  const int r = m.rank();
  LocalCohomologyTable out;
  out.module = pres.name;
  out.rank = r;
  out.lo = lo;
  out.hi = hi;
  out.h.assign(r + 1, GradedDim{});
  out.stabilized = pres.stabilized;
  const int needed = opt.consecutive + opt.margin;
  for (int n = lo; n <= hi; ++n) {
    std::vector<int> streak(r + 1, 0);
    std::vector<std::int64_t> value(r + 1, 0);
    // start once every component with p >= 1 lies above the presentation degrees
    const int w = m.weight();
    int k = std::max(1, (pres.max_degree() - n + w - 1) / w + 1);
    const int start = k;
    Level cur = build_level(m, n, k);
    for (;;) {
      if (k >= start + opt.max_level) {
        std::ostringstream os;
        os << "local cohomology of " << pres.name << " did not stabilize in degree " << n << " by level "
           << opt.max_level;
        int bad = 0;
        while (bad <= r && streak[bad] >= needed) ++bad;
        throw StabilizationError(os.str(), n, bad);
      }
      Level next = build_level(m, n, k + 1);
      bool done = true;
      for (int p = 0; p <= r; ++p) {
        const std::int64_t h0 = level_homology(cur, p, r);
        const std::int64_t h1 = level_homology(next, p, r);
        const bool iso = h0 == h1 && induced_rank(cur, next, transition(m, cur, next, n, k, p), p, r) == h0;
        streak[p] = iso ? streak[p] + 1 : 0;
        value[p] = h1;
        if (streak[p] < needed) done = false;
      }
      cur = std::move(next);
      ++k;
      if (done) break;
    }
    out.max_level = std::max(out.max_level, k - start);
    for (int p = 0; p <= r; ++p) out.h[p].set(n, value[p]);
  }
  return out;
}

LocalCohomologyTable cech_local_cohomology(const ModulePresentation& m, int bound) {
  return cech_local_cohomology(m, -bound, bound);
}

FinAbGroup IntegralLocalCohomology::at(int j, int n) const {
  if (j < 0 || j >= static_cast<int>(h.size())) return FinAbGroup{};
  auto it = h[j].find(n);
  return it == h[j].end() ? FinAbGroup{} : it->second;
}

std::int64_t IntegralLocalCohomology::f2_total(int j) const {
  std::int64_t t = 0;
  if (j < 0 || j >= static_cast<int>(h.size())) return 0;
  for (const auto& [n, g] : h[j]) t += static_cast<std::int64_t>(g.two_rank());
  return t;
}

IntegralLocalCohomology integral_cech_local_cohomology(int r, int bound) {
  if (r < 1) throw std::invalid_argument("integral_cech_local_cohomology: rank must be positive");
  IntegralLocalCohomology out;
  out.rank = r;
  out.lo = -bound;
  out.hi = bound;
  out.mod2 = cech_local_cohomology(kunital_presentation(r), -bound, bound);
  out.h.assign(r + 1, {});
  // Localizations kill 2, so away from the degree-0 term of C^0 the complex is that of K_*.
  for (int j = 0; j <= r; ++j)
    for (const auto& [n, dim] : out.mod2.h[j].entries())
      if (!(j == 0 && n == 0)) out.h[j][n] = FinAbGroup::elementary(static_cast<std::size_t>(dim));
  // H^0 in degree 0 is the kernel of Z -> (F2 part of C^1): the unit survives mod 2 exactly when
  // it is I-power torsion.
  const bool unit_torsion = out.mod2.h[0].at(0) > 0;
  out.zero_index = unit_torsion ? 1 : 2;
  out.h[0][0] = FinAbGroup::integers(1);
  for (auto& col : out.h)
    for (auto it = col.begin(); it != col.end();)
      it = it->second.is_trivial() ? col.erase(it) : std::next(it);
  return out;
}

ConnectingReport connecting_hz_local_cohom(int r, int bound) {
  ConnectingReport rep;
  rep.rank = r;
  const auto full = cech_local_cohomology(kunital_presentation(r), -bound, bound);
  const auto reduced = cech_local_cohomology(kmodule_presentation(r), -bound, bound);
  rep.rank_from_h0 = 1 - (full.h[0].at(0) - reduced.h[0].at(0));
  rep.rank_from_h1 = reduced.h[1].at(0) - full.h[1].at(0);
  // d^0 of the unit in the level-1 Koszul complex: the classes x_j^2 in K_2.
  const PresentedModule k(kunital_presentation(r));
  const Level lv = build_level(k, 0, 1);
  F2Matrix unit(lv.dims[0], 1);
  if (lv.dims[0] == 1) unit.set(0, 0, true);
  rep.cocycle_nonzero = lv.dims[0] == 1 && !(lv.d[0] * unit).is_zero();
  return rep;
}

std::size_t SlicedComplex::dim(int slice, int k) const {
  auto it = dims.find(slice);
  if (it == dims.end()) return 0;
  auto jt = it->second.find(k);
  return jt == it->second.end() ? 0 : jt->second;
}

std::map<int, GradedDim> SlicedComplex::homology() const {
  std::map<int, GradedDim> out;
  for (const auto& [slice, byk] : dims) {
    for (int k = bottom; k <= top; ++k) {
      const std::size_t c = dim(slice, k);
      if (c == 0) continue;
      std::int64_t h = static_cast<std::int64_t>(c);
      const auto& ds = diff.at(slice);
      if (auto it = ds.find(k); it != ds.end()) h -= static_cast<std::int64_t>(f2_rank(it->second));
      if (auto it = ds.find(k + 1); it != ds.end()) h -= static_cast<std::int64_t>(f2_rank(it->second));
      if (h != 0) out[k].set(slice, h);
    }
  }
  return out;
}

SlicedComplex truncated_koszul(int r, int c, int lo, int hi) {
  SlicedComplex out;
  out.bottom = 0;
  out.top = std::min(c, r);
  for (int w = lo; w <= hi; ++w) {
    auto& dm = out.dims[w];
    auto& df = out.diff[w];
    for (int k = 0; k <= out.top; ++k) {
      dm[k] = milnor::ext_sym_dim(r, k, w - k);
      if (k >= 1) {
        if (w - k >= 0)
          df[k] = milnor::tau_matrix(0, r, k, w - k);
        else
          df[k] = F2Matrix(milnor::ext_sym_dim(r, k - 1, w - k + 1), 0);
      }
    }
  }
  return out;
}

SlicedComplex dual_truncated_koszul(int r, int a, int lo, int hi) {
  if (a < 0 || a > r) throw std::invalid_argument("dual_truncated_koszul: need 0 <= a <= r");
  // Hom-degree e: a functional on the generator e_M (|M| = j >= a) is a polynomial of degree e + j - r
  // times the top class; it sits in homological degree r - j.
  SlicedComplex out;
  out.bottom = 0;
  out.top = r - a;
  for (int e = lo; e <= hi; ++e) {
    auto& dm = out.dims[e];
    auto& df = out.diff[e];
    for (int j = a; j <= r; ++j) dm[r - j] = milnor::ext_sym_dim(r, j, e + j - r);
    // (phi o d)(e_N) = sum_{l in N} x_l phi(e_{N - l}) : Hom(F_j) -> Hom(F_{j+1}), degree r-j -> r-j-1
    for (int j = a; j < r; ++j) {
      const int b_src = e + j - r;
      const int b_tgt = b_src + 1;
      const std::size_t rows = milnor::ext_sym_dim(r, j + 1, b_tgt);
      const std::size_t cols = milnor::ext_sym_dim(r, j, b_src);
      F2Matrix m(rows, cols);
      if (rows > 0 && cols > 0) {
        const auto src = polyalg::monomials(r, b_src);
        const auto tgt = polyalg::monomials(r, b_tgt);
        const auto big = polyalg::ext_basis(r, j + 1);
        for (std::size_t ni = 0; ni < big.size(); ++ni) {
          const ExtMask n = big[ni];
          for (int l = 0; l < r; ++l) {
            if (((n >> l) & 1U) == 0) continue;
            const std::size_t mi = polyalg::ext_index(r, n & ~(ExtMask{1} << l));
            for (std::size_t g = 0; g < src->size(); ++g)
              m.flip(ni * tgt->size() + tgt->index_of(src->key(g) + polyalg::var_key(r, l)), mi * src->size() + g);
          }
        }
      }
      df[r - j] = std::move(m);
    }
  }
  return out;
}

ShiftMatch match_shift(const GradedDim& actual, const std::function<std::int64_t(int)>& expected, int lo, int hi,
                       int max_shift) {
  ShiftMatch best;
  for (int step = 0; step <= 2 * max_shift; ++step) {
    const int s = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
    bool ok = true;
    for (int n = lo; n <= hi && ok; ++n) ok = actual.at(n) == expected(n + s);
    if (ok) {
      best.matched = true;
      best.shift = s;
      return best;
    }
  }
  return best;
}

ShiftMatch match_units_plus_dual(const GradedDim& actual, const std::function<std::int64_t(int)>& dual_of,
                                 int units, int lo, int hi, int max_shift) {
  ShiftMatch best;
  for (int step = 0; step <= 2 * max_shift; ++step) {
    const int c = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
    std::vector<int> extra;
    bool ok = true;
    for (int n = lo; n <= hi && ok; ++n) {
      const std::int64_t rest = actual.at(n) - dual_of(c - n);
      if (rest < 0 || rest > 1) ok = false;
      if (rest == 1) extra.push_back(n);
    }
    if (ok && static_cast<int>(extra.size()) == units) {
      best.matched = true;
      best.shift = c;
      best.unit_degrees = std::move(extra);
      return best;
    }
  }
  return best;
}

}  // namespace kuforge::localcoh
