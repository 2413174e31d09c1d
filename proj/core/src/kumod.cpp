#include "kuforge/kumod.hpp"

#include <stdexcept>

#include "kuforge/groupring.hpp"
#include "kuforge/milnor.hpp"
#include "kuforge/polyalg.hpp"

namespace kuforge::kumod {

namespace {

std::int64_t as_i64(std::size_t x) { return static_cast<std::int64_t>(x); }

}  // namespace

GradedDim hz_cohom_table(int r, int nmax) {
  GradedDim g;
  g.set(0, 1);
  for (int n = 1; n <= nmax; ++n) g.set(n, as_i64(milnor::k_dim(r, n)));
  return g;
}

GradedDim hz_hom_table(int r, int nmax) {
  GradedDim g;
  g.set(0, 1);
  for (int n = 1; n <= nmax; ++n) g.set(n, as_i64(milnor::k_dim(r, n + 1)));
  return g;
}

QfrakTables qfrak_tables(int r, int nmax) {
  QfrakTables t;
  t.rank = r;
  for (int n = 0; n <= nmax; ++n) {
    QfrakRow row;
    row.degree = n;
    row.cohom_image = as_i64(milnor::l_dim(r, n));
    row.cohom_kernel = as_i64(milnor::ltilde_dim(r, n));
    row.hom_image = as_i64(milnor::l_dim(r, n + 4));
    row.hom_kernel = as_i64(milnor::k_dim(r, n + 1)) - as_i64(milnor::l_dim(r, n + 1));
    t.rows.push_back(row);
  }
  return t;
}

KuCohomTable ku_cohom_table(int r, int nmax) {
  KuCohomTable t;
  t.rank = r;
  for (int n = 0; n <= nmax; ++n) {
    KuCohomRow row;
    row.degree = n;
    row.torsion_dim = as_i64(milnor::l_dim(r, n));
    row.modv_dim = as_i64(milnor::ltilde_dim(r, n));
    if (n == 0) {
      row.polynomial_unit = true;
      row.cotorsion_modv_dim = 1;
      row.z2_free_rank = as_i64(std::size_t{1} << r);
    } else if (n % 2 == 0) {
      row.cotorsion_modv_dim = as_i64(milnor::pbar_dim(r, n / 2));
      row.z2_free_rank = as_i64((std::size_t{1} << r) - 1);
    }
    t.rows.push_back(row);
  }
  return t;
}

KuHomTable ku_hom_table(int r, int nmax) {
  KuHomTable t;
  t.rank = r;
  for (int n = 0; n <= nmax; ++n) {
    KuHomRow row;
    row.degree = n;
    row.torsion_dim = as_i64(milnor::l_dim(r, n + 4));
    row.modv_dim = (n == 0 ? 1 : 0) + as_i64(milnor::k_dim(r, n + 1)) - as_i64(milnor::l_dim(r, n + 1));
    if (n == 0)
      row.cotorsion_modv_dim = 1;
    else if (n % 2 == 1)
      row.cotorsion_modv_dim = as_i64(milnor::pbar_dim(r, (n + 1) / 2));
    if (n % 2 == 0)
      row.cotorsion = FinAbGroup::integers(1);
    else if (n % 2 == 1 && r > 0)
      row.cotorsion = groupring::rn_group(r, (n + 1) / 2);
    t.rows.push_back(row);
  }
  return t;
}

CotorsionTower cotorsion_tower(int r, int d, int kmax) {
  CotorsionTower t;
  t.d = d;
  t.free_rank = as_i64((std::size_t{1} << r) - 1);
  if (d >= 1 && r > 0) t.mod_2k = groupring::completion_tower(r, d, kmax);
  return t;
}

std::vector<bool> poly_multiply(int r, int n, const std::vector<bool>& f, int m, const std::vector<bool>& g) {
  const auto bn = polyalg::monomials(r, n);
  const auto bm = polyalg::monomials(r, m);
  const auto bt = polyalg::monomials(r, n + m);
  if (f.size() != bn->size() || g.size() != bm->size()) throw std::invalid_argument("poly_multiply: size mismatch");
  std::vector<bool> out(bt->size(), false);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f[i]) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g[j]) out[bt->index_of(bn->key(i) + bm->key(j))].flip();
  }
  return out;
}

bool kernel_closed_under_products(int r, int n, int m) {
  const auto a = milnor::l_functors(r, n).Ltilde.inclusion;
  const auto b = milnor::l_functors(r, m).Ltilde.inclusion;
  const auto q0 = milnor::q_matrix(0, r, n + m);
  const auto q1 = milnor::q_matrix(1, r, n + m);
  const std::size_t dim = polyalg::sym_dim(r, n + m);
  for (std::size_t i = 0; i < a.cols(); ++i) {
    std::vector<bool> f(a.rows());
    for (std::size_t k = 0; k < a.rows(); ++k) f[k] = a.get(k, i);
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::vector<bool> g(b.rows());
      for (std::size_t k = 0; k < b.rows(); ++k) g[k] = b.get(k, j);
      const auto p = poly_multiply(r, n, f, m, g);
      exactla::F2Matrix v(dim, 1);
      for (std::size_t k = 0; k < dim; ++k) v.set(k, 0, p[k]);
      if (!(q0 * v).is_zero() || !(q1 * v).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace kuforge::kumod
