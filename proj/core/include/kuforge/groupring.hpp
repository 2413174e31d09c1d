#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kuforge/f2matrix.hpp"
#include "kuforge/intmatrix.hpp"

namespace kuforge::groupring {

using exactla::FinAbGroup;
using exactla::IntMatrix;

// Sublattice of the augmentation ideal of Z[F_2^r], in the basis [g] - [0], g = 1 .. 2^r - 1
// (row g - 1). Columns of `basis` form a Z-basis of the sublattice.
struct GroupRingLattice {
  int rank = 0;
  int power = 1;
  IntMatrix basis;

  std::size_t ambient_rank() const { return basis.rows(); }
  bool contains(const IntMatrix& column) const;
};

// Coordinates of ([g] - [0]) * ([h] - [0]) in the [g] - [0] basis.
std::vector<long> basis_product(int r, unsigned g, unsigned h);

// Product of an element (coordinates) with the generator [h] - [0].
IntMatrix multiply_by_generator(int r, const IntMatrix& element, unsigned h);

// Column basis of the lattice spanned by the columns of `gens`.
IntMatrix lattice_basis(const IntMatrix& gens);

GroupRingLattice aug_power_lattice(int r, int n);

struct FiltrationReport {
  int n = 0;
  FinAbGroup quotient;     // R^n = P / P^{n+1}
  FinAbGroup subquotient;  // P^n / P^{n+1}
  std::size_t two_torsion_dim = 0;
  std::size_t head_dim = 0;  // dim R^n / 2 R^n, by F2 rank
};

FinAbGroup rn_group(int r, int n);
FinAbGroup filtration_subquotient(int r, int n);
std::size_t two_torsion_dim(int r, int n);
std::size_t head_dim(int r, int n);
FiltrationReport filtration_report(int r, int n);

// Is every element of P^{n+k}(F_2^n) divisible by 2^k?
bool completion_inclusion_check(int n, int k);

// (P^d + 2^k P) / 2^k P for k = 1 .. kmax.
std::vector<FinAbGroup> completion_tower(int r, int d, int kmax);

// Rank of the image of P^n in F_2[V] (mod 2 reduction of the lattice).
std::size_t mod2_image_rank(int r, int n);

// Dimension of the n-th power of the augmentation ideal of F_2[V], by direct multiplication in F_2[V].
std::size_t f2_augmentation_power_dim(int r, int n);

}  // namespace kuforge::groupring
