#pragma once

#include <cstdint>
#include <vector>

#include "kuforge/graded.hpp"
#include "kuforge/intmatrix.hpp"

namespace kuforge::kumod {

using exactla::FinAbGroup;
using exactla::GradedDim;

// Degree 0 holds the rank (1) of the free summand Z; other entries are F2-dimensions.
GradedDim hz_cohom_table(int r, int nmax);
GradedDim hz_hom_table(int r, int nmax);

struct QfrakRow {
  int degree = 0;
  std::int64_t cohom_image = 0;   // dim L_n
  std::int64_t cohom_kernel = 0;  // dim Ltilde_n
  std::int64_t hom_image = 0;     // dim L_{n+4}
  std::int64_t hom_kernel = 0;    // dim K_{n+1} - dim L_{n+1}
};

struct QfrakTables {
  int rank = 0;
  std::vector<QfrakRow> rows;
};

QfrakTables qfrak_tables(int r, int nmax);

struct KuCohomRow {
  int degree = 0;
  std::int64_t torsion_dim = 0;
  std::int64_t modv_dim = 0;
  std::int64_t cotorsion_modv_dim = 0;
  std::int64_t z2_free_rank = 0;
  bool polynomial_unit = false;  // degree 0 carries the Z[v] summand
};

struct KuCohomTable {
  int rank = 0;
  std::vector<KuCohomRow> rows;
};

KuCohomTable ku_cohom_table(int r, int nmax);

struct KuHomRow {
  int degree = 0;
  std::int64_t torsion_dim = 0;         // v-torsion, dim of the image of the k-invariant
  std::int64_t modv_dim = 0;            // ku_n / v, dim of its kernel (degree 0 counts the Z as 1)
  std::int64_t cotorsion_modv_dim = 0;  // 1 for the Z in degree 0, p_d-dimension in degree 2d - 1
  FinAbGroup cotorsion;                 // Z in even degrees, R^d in degree 2d - 1
};

struct KuHomTable {
  int rank = 0;
  std::vector<KuHomRow> rows;
};

KuHomTable ku_hom_table(int r, int nmax);

// The cotorsion of ku^{2d} as a pro-group: free Z_2-rank and the quotients mod 2^k, k = 1..kmax.
struct CotorsionTower {
  int d = 0;
  std::int64_t free_rank = 0;
  std::vector<FinAbGroup> mod_2k;
};

CotorsionTower cotorsion_tower(int r, int d, int kmax = 6);

// Product of homogeneous polynomials given as coefficient columns over monomial bases.
std::vector<bool> poly_multiply(int r, int n, const std::vector<bool>& f, int m, const std::vector<bool>& g);

// Checks that products of basis elements of Ltilde_n and Ltilde_m stay in Ltilde_{n+m}.
bool kernel_closed_under_products(int r, int n, int m);

}  // namespace kuforge::kumod
