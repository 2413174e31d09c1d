#include <algorithm>
#include <limits>

#include "kuforge/milnor.hpp"

namespace kuforge::milnor {

namespace {

void place_block(F2Matrix& dst, std::size_t row0, std::size_t col0, const F2Matrix& block) {
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c)
      if (block.get(r, c)) dst.flip(row0 + r, col0 + c);
}

}  // namespace

bool Bicomplex::contains(int s, int t) const {
  if (s + t < 0 || s + t > rank) return false;
  if (kind == BicomplexKind::B) return s >= 0 && t >= index;
  return s <= 0 && t <= index;
}

int Bicomplex::min_slice() const {
  int best = std::numeric_limits<int>::max();
  for (const auto& c : cells) best = std::min(best, c.s + 2 * (c.t - index));
  return cells.empty() ? 0 : best;
}

Bicomplex bicomplex(BicomplexKind kind, int i, int r, int degree_bound) {
  Bicomplex bi{kind, i, r, degree_bound, {}};
  if (kind == BicomplexKind::B) {
    for (int t = i; t <= r; ++t)
      for (int s = 0; s + t <= r; ++s) bi.cells.push_back({s, t});
  } else {
    for (int t = 0; t <= i; ++t)
      for (int s = -t; s <= 0; ++s)
        if (s + t <= r) bi.cells.push_back({s, t});
  }
  std::sort(bi.cells.begin(), bi.cells.end(), [](const BicomplexCell& x, const BicomplexCell& y) {
    return x.ext_degree() != y.ext_degree() ? x.ext_degree() < y.ext_degree() : x.s < y.s;
  });
  return bi;
}

std::size_t Bicomplex::total_dim(int m, int slice) const {
  std::size_t d = 0;
  for (const auto& c : cells)
    if (c.ext_degree() == m) d += ext_sym_dim(rank, m, sym_degree(c, slice));
  return d;
}

F2Matrix Bicomplex::total_differential(int m, int slice) const {
  std::map<std::pair<int, int>, std::size_t> src_off, tgt_off;
  std::size_t src_dim = 0, tgt_dim = 0;
  for (const auto& c : cells) {
    if (c.ext_degree() == m) {
      src_off[{c.s, c.t}] = src_dim;
      src_dim += ext_sym_dim(rank, m, sym_degree(c, slice));
    } else if (c.ext_degree() == m - 1) {
      tgt_off[{c.s, c.t}] = tgt_dim;
      tgt_dim += ext_sym_dim(rank, m - 1, sym_degree(c, slice));
    }
  }
  F2Matrix d(tgt_dim, src_dim);
  for (const auto& c : cells) {
    if (c.ext_degree() != m) continue;
    const int b = sym_degree(c, slice);
    if (b < 0) continue;
    const std::size_t col0 = src_off[{c.s, c.t}];
    if (contains(c.s - 1, c.t)) place_block(d, tgt_off[{c.s - 1, c.t}], col0, tau_matrix(0, rank, m, b));
    if (contains(c.s, c.t - 1)) place_block(d, tgt_off[{c.s, c.t - 1}], col0, tau_matrix(1, rank, m, b));
  }
  return d;
}

TotalHomology total_homology(const Bicomplex& bi, int r) {
  if (r != bi.rank) throw std::invalid_argument("total_homology: rank differs from the bicomplex");
  TotalHomology out;
  out.slice_min = bi.min_slice();
  out.slice_max = bi.degree_bound;
  out.truncated = !bi.cells.empty();
  for (int w = out.slice_min; w <= out.slice_max; ++w) {
    std::vector<std::size_t> rk(static_cast<std::size_t>(r) + 2, 0);
    for (int m = 1; m <= r; ++m) rk[static_cast<std::size_t>(m)] = exactla::f2_rank(bi.total_differential(m, w));
    for (int m = 0; m <= r; ++m) {
      const std::size_t dim = bi.total_dim(m, w);
      const std::size_t h = dim - rk[static_cast<std::size_t>(m)] - rk[static_cast<std::size_t>(m) + 1];
      if (h != 0) out.by_degree[m].set(w, static_cast<std::int64_t>(h));
    }
  }
  return out;
}

}  // namespace kuforge::milnor
