#include "kuforge/milnor.hpp"

#include <bit>
#include <stdexcept>

namespace kuforge::milnor {

using polyalg::ExtMask;
using polyalg::monomials;

namespace {

std::vector<std::size_t> mask_positions(int r, int a) {
  std::vector<std::size_t> pos(std::size_t{1} << r, static_cast<std::size_t>(-1));
  const auto masks = polyalg::ext_basis(r, a);
  for (std::size_t k = 0; k < masks.size(); ++k) pos[masks[k]] = k;
  return pos;
}

}  // namespace

std::size_t ext_sym_dim(int r, int a, int b) {
  if (a < 0 || a > r || b < 0) return 0;
  return polyalg::ext_dim(r, a) * polyalg::sym_dim(r, b);
}

F2Matrix q_matrix(int i, int r, int n) {
  const int c = (1 << (i + 1)) - 1;
  const auto src = monomials(r, n);
  const auto tgt = monomials(r, n + c);
  F2Matrix m(tgt->size(), src->size());
  for (std::size_t col = 0; col < src->size(); ++col) {
    const auto key = src->key(col);
    for (int j = 0; j < r; ++j)
      if (polyalg::exponent_of(key, r, j) % 2 != 0) m.flip(tgt->index_of(key + polyalg::var_key(r, j, c)), col);
  }
  return m;
}

GradedMap milnor_derivation(int i, int r, int n) {
  GradedMap g;
  g.source = BasisDescriptor::sym(r, n);
  g.target = BasisDescriptor::sym(r, n + (1 << (i + 1)) - 1);
  g.shift = (1 << (i + 1)) - 1;
  g.blocks.emplace(n, q_matrix(i, r, n));
  return g;
}

F2Matrix tau_matrix(int i, int r, int a, int b) {
  const int p = 1 << i;
  const std::size_t rows = ext_sym_dim(r, a - 1, b + p);
  const std::size_t cols = ext_sym_dim(r, a, b);
  F2Matrix m(rows, cols);
  if (rows == 0 || cols == 0) return m;
  const auto src_masks = polyalg::ext_basis(r, a);
  const auto tgt_pos = mask_positions(r, a - 1);
  const auto src = monomials(r, b);
  const auto tgt = monomials(r, b + p);
  for (std::size_t mi = 0; mi < src_masks.size(); ++mi) {
    const ExtMask mask = src_masks[mi];
    for (std::size_t g = 0; g < src->size(); ++g) {
      const std::size_t col = mi * src->size() + g;
      for (int j = 0; j < r; ++j) {
        if (((mask >> j) & 1U) == 0) continue;
        const std::size_t tm = tgt_pos[mask & ~(ExtMask{1} << j)];
        const std::size_t tg = tgt->index_of(src->key(g) + polyalg::var_key(r, j, p));
        m.flip(tm * tgt->size() + tg, col);
      }
    }
  }
  return m;
}

GradedMap koszul_tau(int i, int r, int a, int b) {
  GradedMap g;
  g.source = BasisDescriptor::ext_sym(r, a, b);
  g.target = BasisDescriptor::ext_sym(r, a - 1, b + (1 << i));
  g.shift = 1 << i;
  g.blocks.emplace(b, tau_matrix(i, r, a, b));
  return g;
}

SubquotientSpace make_subquotient(const BasisDescriptor& ambient, const F2Matrix& numerator,
                                  const F2Matrix& denominator) {
  if (numerator.rows() != denominator.rows())
    throw std::invalid_argument("make_subquotient: ambient dimensions differ");
  const F2Matrix den = exactla::f2_image(denominator);
  const exactla::Echelon e = exactla::rref(F2Matrix::hconcat(den, numerator));
  std::vector<std::size_t> picked;
  for (std::size_t p : e.pivots)
    if (p >= den.cols()) picked.push_back(p - den.cols());
  if (exactla::f2_rank(numerator) != e.rank())
    throw std::invalid_argument("make_subquotient: denominator not contained in numerator");

  SubquotientSpace q;
  q.ambient = ambient;
  q.inclusion = numerator.select_columns(picked);
  q.denominator = den;
  const F2Matrix left = exactla::f2_left_inverse(F2Matrix::hconcat(den, q.inclusion));
  std::vector<std::size_t> tail;
  for (std::size_t k = 0; k < picked.size(); ++k) tail.push_back(den.cols() + k);
  q.projection = left.select_rows(tail);
  return q;
}

SubquotientSpace make_subspace(const BasisDescriptor& ambient, const F2Matrix& span) {
  return make_subquotient(ambient, span, F2Matrix(span.rows(), 0));
}

F2Matrix induced_map(const F2Matrix& f, const SubquotientSpace& src, const SubquotientSpace& tgt) {
  if (!(tgt.projection * (f * src.denominator)).is_zero())
    throw std::invalid_argument("induced_map: map does not respect the denominators");
  return tgt.projection * (f * src.inclusion);
}

F2Matrix k_span(int r, int n) {
  if (n < 0) return F2Matrix(0, 0);
  if (n == 0) return F2Matrix::identity(1);
  return exactla::f2_image(q_matrix(0, r, n - 1));
}

SubquotientSpace kernel_functor_K(int r, int n) {
  return make_subspace(BasisDescriptor::sym(r, n), k_span(r, n));
}

std::size_t k_dim(int r, int n) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  return exactla::f2_rank(q_matrix(0, r, n - 1));
}

namespace {

F2Matrix l_span(int r, int n) {
  const std::size_t amb = polyalg::sym_dim(r, n);
  if (n < 3) return F2Matrix(amb, 0);
  return exactla::f2_image(q_matrix(1, r, n - 3) * k_span(r, n - 3));
}

}  // namespace

LFunctors l_functors(int r, int n) {
  const F2Matrix k = k_span(r, n);
  const F2Matrix lt = k * exactla::f2_kernel(q_matrix(1, r, n) * k);
  return {make_subspace(BasisDescriptor::sym(r, n), l_span(r, n)), make_subspace(BasisDescriptor::sym(r, n), lt)};
}

std::size_t l_dim(int r, int n) {
  if (n < 3) return 0;
  return exactla::f2_rank(q_matrix(1, r, n - 3) * k_span(r, n - 3));
}

std::size_t ltilde_dim(int r, int n) {
  if (n < 0) return 0;
  const F2Matrix k = k_span(r, n);
  return k.cols() - exactla::f2_rank(q_matrix(1, r, n) * k);
}

GradedDim q1_homology_on_K(int r, int n) {
  GradedDim g;
  g.set(n, static_cast<std::int64_t>(ltilde_dim(r, n)) - static_cast<std::int64_t>(l_dim(r, n)));
  return g;
}

std::size_t qi_homology_dim(int i, int r, int n) {
  const int c = (1 << (i + 1)) - 1;
  const std::size_t dim = polyalg::sym_dim(r, n);
  const std::size_t rk_out = exactla::f2_rank(q_matrix(i, r, n));
  const std::size_t rk_in = n >= c ? exactla::f2_rank(q_matrix(i, r, n - c)) : 0;
  return dim - rk_out - rk_in;
}

F2Matrix kfrak_span(int r, int a, int b) {
  if (a == 0) return b == 0 ? F2Matrix::identity(1) : F2Matrix(1, 0);
  if (a > r || b < 0) return F2Matrix(ext_sym_dim(r, a - 1, b + 1), 0);
  return exactla::f2_image(tau_matrix(0, r, a, b));
}

std::size_t kfrak_dim(int r, int a, int b) {
  if (a == 0) return b == 0 ? 1 : 0;
  if (a > r || b < 0) return 0;
  return exactla::f2_rank(tau_matrix(0, r, a, b));
}

namespace {

// tau_1 applied to 𝔎_{a+1,b-2}, landing in the ambient of 𝔎_{a,b}.
F2Matrix lfrak_relations(int r, int a, int b) {
  const std::size_t amb = ext_sym_dim(r, a - 1, b + 1);
  if (b < 2 || a + 1 > r) return F2Matrix(amb, 0);
  return tau_matrix(1, r, a, b - 1) * kfrak_span(r, a + 1, b - 2);
}

}  // namespace

std::size_t lfrak_dim(int r, int a, int b) {
  if (a == 0) return kfrak_dim(r, a, b);
  return kfrak_dim(r, a, b) - exactla::f2_rank(lfrak_relations(r, a, b));
}

KfrakLfrak kfrak_lfrak(int r, int a, int b) {
  if (a == 0) {
    BasisDescriptor unit{BasisDescriptor::Kind::unit, r, 0, 0, {}};
    const F2Matrix span = kfrak_span(r, 0, b);
    auto k = make_subspace(unit, span);
    return {k, k};
  }
  const BasisDescriptor amb = BasisDescriptor::ext_sym(r, a - 1, b + 1);
  const F2Matrix span = kfrak_span(r, a, b);
  return {make_subspace(amb, span), make_subquotient(amb, span, lfrak_relations(r, a, b))};
}

GradedDim j_complex_homology(int r, int b) {
  std::vector<std::size_t> dims;
  std::vector<std::size_t> ranks;  // ranks[n] = rank of T_n -> T_{n-1}
  for (int n = 0; n + 1 <= r && b - 2 * n >= 0; ++n) {
    dims.push_back(kfrak_dim(r, n + 1, b - 2 * n));
    if (n == 0) {
      ranks.push_back(0);
    } else {
      const F2Matrix d = tau_matrix(1, r, n, b - 2 * n + 1) * kfrak_span(r, n + 1, b - 2 * n);
      ranks.push_back(exactla::f2_rank(d));
    }
  }
  GradedDim h;
  for (std::size_t n = 0; n < dims.size(); ++n) {
    const std::size_t next = n + 1 < ranks.size() ? ranks[n + 1] : 0;
    h.set(static_cast<int>(n), static_cast<std::int64_t>(dims[n] - ranks[n] - next));
  }
  return h;
}

std::uint64_t pbar_dim(int r, int d) {
  std::uint64_t s = 0;
  for (int j = 1; j <= std::min(d, r); ++j) s += polyalg::binomial(r, j);
  return s;
}

}  // namespace kuforge::milnor
