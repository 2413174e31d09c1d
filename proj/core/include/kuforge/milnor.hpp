#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "kuforge/f2matrix.hpp"
#include "kuforge/graded.hpp"
#include "kuforge/polyalg.hpp"

namespace kuforge::milnor {

using exactla::BasisDescriptor;
using exactla::F2Matrix;
using exactla::GradedDim;
using exactla::GradedMap;

// Q_i : S^n -> S^{n + 2^{i+1} - 1}, columns indexed by monomials of S^n.
F2Matrix q_matrix(int i, int r, int n);
GradedMap milnor_derivation(int i, int r, int n);

// tau_i : L^a (x) S^b -> L^{a-1} (x) S^{b + 2^i} in the mask-major basis.
F2Matrix tau_matrix(int i, int r, int a, int b);
GradedMap koszul_tau(int i, int r, int a, int b);

std::size_t ext_sym_dim(int r, int a, int b);

// A subquotient N / D of an ambient space, with D contained in N.
struct SubquotientSpace {
  BasisDescriptor ambient;
  F2Matrix inclusion;    // ambient x dim, representatives of a basis of N / D
  F2Matrix projection;   // dim x ambient, kills D and inverts inclusion
  F2Matrix denominator;  // ambient x dim D

  std::size_t dim() const { return inclusion.cols(); }
  std::size_t ambient_dim() const { return inclusion.rows(); }
};

SubquotientSpace make_subquotient(const BasisDescriptor& ambient, const F2Matrix& numerator,
                                  const F2Matrix& denominator);
SubquotientSpace make_subspace(const BasisDescriptor& ambient, const F2Matrix& span);

// Matrix of f restricted and corestricted to the given subquotients.
F2Matrix induced_map(const F2Matrix& f, const SubquotientSpace& src, const SubquotientSpace& tgt);

// K_n = ker Q_0 on S^n; for n >= 1 it is spanned by Q_0 of monomials.
SubquotientSpace kernel_functor_K(int r, int n);
// Independent columns spanning K_n inside S^n, cheaper than the full subquotient.
F2Matrix k_span(int r, int n);

struct LFunctors {
  SubquotientSpace L;
  SubquotientSpace Ltilde;
};
LFunctors l_functors(int r, int n);

std::size_t k_dim(int r, int n);
std::size_t l_dim(int r, int n);
std::size_t ltilde_dim(int r, int n);

// dim Ltilde_n / L_n, reported in degree n.
GradedDim q1_homology_on_K(int r, int n);

// Homology dim of (S^*, Q_i) at S^n.
std::size_t qi_homology_dim(int i, int r, int n);

struct KfrakLfrak {
  SubquotientSpace kfrak;
  SubquotientSpace lfrak;
};
// Both live in L^{a-1} (x) S^{b+1}; for a = 0 the ambient is the unit space F.
KfrakLfrak kfrak_lfrak(int r, int a, int b);
F2Matrix kfrak_span(int r, int a, int b);
std::size_t kfrak_dim(int r, int a, int b);
std::size_t lfrak_dim(int r, int a, int b);

// Homology of 𝔎_{n+1,b-2n} -> ... -> 𝔎_{2,b-2} -> 𝔎_{1,b} under tau_1, keyed by n.
GradedDim j_complex_homology(int r, int b);

// Sum_{j=1}^{min(d,r)} C(r,j).
std::uint64_t pbar_dim(int r, int d);

enum class BicomplexKind { B, D };

struct BicomplexCell {
  int s;
  int t;
  int ext_degree() const { return s + t; }
};

// Cell (s,t) holds L^{s+t} (x) S^{w - s - 2(t - index)} in slice w; horizontal maps are
// tau_0 (s -> s-1), vertical maps tau_1 (t -> t-1); total degree is s + t.
struct Bicomplex {
  BicomplexKind kind;
  int index;
  int rank;
  int degree_bound;
  std::vector<BicomplexCell> cells;

  bool contains(int s, int t) const;
  int sym_degree(const BicomplexCell& c, int slice) const { return slice - c.s - 2 * (c.t - index); }
  int min_slice() const;
  // Matrix of the total differential Tot_m -> Tot_{m-1} in a slice.
  F2Matrix total_differential(int m, int slice) const;
  std::size_t total_dim(int m, int slice) const;
};

Bicomplex bicomplex(BicomplexKind kind, int i, int r, int degree_bound = 24);

struct TotalHomology {
  std::map<int, GradedDim> by_degree;  // homological degree -> slice dims
  int slice_min = 0;
  int slice_max = 0;
  bool truncated = false;  // cells exist beyond slice_max
  const GradedDim& in_degree(int m) const {
    static const GradedDim none;
    auto it = by_degree.find(m);
    return it == by_degree.end() ? none : it->second;
  }
};

TotalHomology total_homology(const Bicomplex& bi, int r);

}  // namespace kuforge::milnor
