#include <algorithm>

#include "kuforge/localcoh.hpp"

namespace kuforge::localcoh {

using exactla::F2Matrix;
using exactla::f2_kernel;
using exactla::f2_rank;
using exactla::rref;

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

using Column = std::vector<PresentationEntry>;

struct FreeModuleBasis {
  std::vector<std::size_t> offsets;
  std::vector<std::shared_ptr<const polyalg::MonomialBasis>> monos;
  std::size_t size = 0;

  std::size_t index(std::size_t g, polyalg::MonoKey key) const {
    if (offsets[g] == npos) return npos;
    const std::size_t i = monos[g]->index_of(key);
    return i == npos ? npos : offsets[g] + i;
  }
};

FreeModuleBasis basis_in(int r, int w, const std::vector<int>& degrees, int d) {
  FreeModuleBasis fb;
  fb.offsets.assign(degrees.size(), npos);
  fb.monos.resize(degrees.size());
  for (std::size_t g = 0; g < degrees.size(); ++g) {
    const int rest = d - degrees[g];
    if (rest < 0 || rest % w != 0) continue;
    fb.monos[g] = polyalg::monomials(r, rest / w);
    fb.offsets[g] = fb.size;
    fb.size += fb.monos[g]->size();
  }
  return fb;
}

// Matrix in degree d of the map sending generator k of the source to columns[k].
F2Matrix map_in_degree(int r, int w, const std::vector<int>& tgt_degrees, const std::vector<int>& src_degrees,
                       const std::vector<Column>& columns, int d) {
  const auto tb = basis_in(r, w, tgt_degrees, d);
  const auto sb = basis_in(r, w, src_degrees, d);
  F2Matrix m(tb.size, sb.size);
  for (std::size_t k = 0; k < src_degrees.size(); ++k) {
    if (sb.offsets[k] == npos) continue;
    for (std::size_t u = 0; u < sb.monos[k]->size(); ++u) {
      const auto ukey = sb.monos[k]->key(u);
      for (const auto& e : columns[k])
        for (auto t : e.coefficient.terms) {
          const std::size_t idx = tb.index(e.generator, t + ukey);
          if (idx == npos) throw std::logic_error("free map leaves the target basis");
          m.flip(idx, sb.offsets[k] + u);
        }
    }
  }
  return m;
}

Column to_column(const FreeModuleBasis& fb, const std::vector<int>& degrees, int w, int d, const F2Matrix& v,
                 std::size_t col) {
  Column out;
  for (std::size_t g = 0; g < degrees.size(); ++g) {
    if (fb.offsets[g] == npos) continue;
    Poly p;
    p.degree = (d - degrees[g]) / w;
    for (std::size_t m = 0; m < fb.monos[g]->size(); ++m)
      if (v.get(fb.offsets[g] + m, col)) p.terms.push_back(fb.monos[g]->key(m));
    if (!p.is_zero()) out.push_back({g, std::move(p)});
  }
  return out;
}

// Minimal generators, through degree `bound`, of the submodule of the free module on `degrees`
// whose degree-d part is spanned by the columns of sub(d).
template <class Sub>
void minimal_generators(int r, int w, const std::vector<int>& degrees, int from, int bound, Sub&& sub,
                        std::vector<int>& out_degrees, std::vector<Column>& out_columns) {
  for (int d = from; d <= bound; ++d) {
    const F2Matrix target = sub(d);
    if (target.cols() == 0) continue;
    const auto fb = basis_in(r, w, degrees, d);
    const F2Matrix have = map_in_degree(r, w, degrees, out_degrees, out_columns, d);
    const auto ech = rref(F2Matrix::hconcat(have, target));
    for (std::size_t p : ech.pivots) {
      if (p < have.cols()) continue;
      out_degrees.push_back(d);
      out_columns.push_back(to_column(fb, degrees, w, d, target, p - have.cols()));
    }
  }
}

int min_of(const std::vector<int>& v) { return v.empty() ? 0 : *std::min_element(v.begin(), v.end()); }

}  // namespace

FreeResolution free_resolution(const ModulePresentation& m, int bound) {
  m.validate();
  const int r = m.rank;
  const int w = m.weight;
  if (bound < 0) bound = m.max_degree() + 2 * w * (r + 1);
  FreeResolution res;
  res.rank = r;
  res.weight = w;
  res.bound = bound;
  res.degrees.push_back(m.generator_degrees);
  const PresentedModule pm(m);
  {
    std::vector<int> deg;
    std::vector<Column> cols;
    minimal_generators(r, w, m.generator_degrees, min_of(m.generator_degrees), bound,
                       [&](int d) { return pm.relation_rows(d).transpose(); }, deg, cols);
    if (!deg.empty()) {
      res.degrees.push_back(deg);
      res.maps.push_back(cols);
    }
  }
  while (res.degrees.size() >= 2 && res.degrees.size() <= static_cast<std::size_t>(r) + 2) {
    const std::size_t j = res.degrees.size() - 1;
    const auto& src = res.degrees[j];
    const auto& tgt = res.degrees[j - 1];
    const auto& cols = res.maps[j - 1];
    std::vector<int> deg;
    std::vector<Column> next;
    minimal_generators(r, w, src, min_of(src), bound,
                       [&](int d) { return f2_kernel(map_in_degree(r, w, tgt, src, cols, d)); }, deg, next);
    if (deg.empty()) break;
    res.degrees.push_back(deg);
    res.maps.push_back(next);
  }
  // Euler characteristic against the module, degree by degree.
  res.exact = true;
  for (int d = min_of(m.generator_degrees); d <= bound && res.exact; ++d) {
    std::int64_t chi = 0;
    for (std::size_t j = 0; j < res.degrees.size(); ++j) {
      const auto fb = basis_in(r, w, res.degrees[j], d);
      chi += (j % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(fb.size);
    }
    res.exact = chi == static_cast<std::int64_t>(pm.dim(d));
  }
  return res;
}

std::int64_t ext_dim(const FreeResolution& res, int j, int e) {
  if (j < 0 || static_cast<std::size_t>(j) >= res.degrees.size()) return 0;
  const int r = res.rank;
  const int w = res.weight;
  // Hom(F_j, S)_e has one block S_{(e + deg g)/w} per generator g.
  auto hom_basis = [&](std::size_t jj) {
    std::vector<int> shifted;
    for (int g : res.degrees[jj]) shifted.push_back(-g);
    return shifted;
  };
  // delta_j : Hom(F_j) -> Hom(F_{j+1}), phi -> phi o d_{j+1}. In terms of the shifted degree lists, the
  // generator h of F_{j+1} with d(h) = sum p_g g pairs block g (degree -g) with block h (degree -h).
  auto delta = [&](std::size_t jj) -> F2Matrix {
    const auto src = hom_basis(jj);
    const auto tgt = hom_basis(jj + 1);
    const auto sb = basis_in(r, w, src, e);
    const auto tb = basis_in(r, w, tgt, e);
    F2Matrix m(tb.size, sb.size);
    const auto& cols = res.maps[jj];
    for (std::size_t h = 0; h < cols.size(); ++h) {
      if (tb.offsets[h] == npos) continue;
      for (const auto& entry : cols[h]) {
        const std::size_t g = entry.generator;
        if (sb.offsets[g] == npos) continue;
        for (std::size_t u = 0; u < sb.monos[g]->size(); ++u)
          for (auto t : entry.coefficient.terms) {
            const std::size_t idx = tb.index(h, sb.monos[g]->key(u) + t);
            if (idx == npos) throw std::logic_error("ext_dim: degree mismatch");
            m.flip(idx, sb.offsets[g] + u);
          }
      }
    }
    return m;
  };
  const std::size_t jj = static_cast<std::size_t>(j);
  const auto here = basis_in(r, w, hom_basis(jj), e);
  std::int64_t dim = static_cast<std::int64_t>(here.size);
  if (jj + 1 < res.degrees.size()) dim -= static_cast<std::int64_t>(f2_rank(delta(jj)));
  if (jj >= 1) dim -= static_cast<std::int64_t>(f2_rank(delta(jj - 1)));
  return dim;
}

LocalCohomologyTable resolution_local_cohomology(const ModulePresentation& m, int lo, int hi) {
  const FreeResolution res = free_resolution(m);
  if (!res.exact) throw StabilizationError("free resolution of " + m.name + " incomplete at its bound", res.bound, -1);
  LocalCohomologyTable out;
  out.module = m.name;
  out.rank = m.rank;
  out.lo = lo;
  out.hi = hi;
  out.h.assign(m.rank + 1, GradedDim{});
  out.stabilized = m.stabilized;
  for (int i = 0; i <= m.rank; ++i)
    for (int n = lo; n <= hi; ++n) out.h[i].set(n, ext_dim(res, m.rank - i, -n - m.rank * m.weight));
  return out;
}

}  // namespace kuforge::localcoh
