#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kuforge/graded.hpp"

namespace kuforge::polyalg {

inline constexpr int kMaxRank = 8;
inline constexpr int kMaxExponent = 255;

std::uint64_t binomial(int n, int k);
std::uint64_t sym_dim(int r, int n);
std::uint64_t ext_dim(int r, int a);

struct ExpVec {
  std::vector<int> e;

  int rank() const { return static_cast<int>(e.size()); }
  int degree() const;
  int odd_count() const;
  auto operator<=>(const ExpVec&) const = default;
  std::string to_string() const;
};

// Monomial packed one byte per variable, x1 in the most significant byte used;
// numeric order of keys equals lexicographic order of exponent vectors.
using MonoKey = std::uint64_t;

MonoKey pack(const ExpVec& m);
ExpVec unpack(MonoKey key, int r);
inline MonoKey var_key(int r, int j, int power = 1) {
  return static_cast<MonoKey>(power) << (8 * (r - 1 - j));
}
inline int exponent_of(MonoKey key, int r, int j) { return static_cast<int>((key >> (8 * (r - 1 - j))) & 0xFF); }

// Subset of {0..r-1}; bit j set when x_{j+1} is present.
using ExtMask = std::uint32_t;

// Lexicographically ordered monomials of degree n in r variables.
class MonomialBasis {
 public:
  MonomialBasis(int r, int n);

  int rank() const { return r_; }
  int degree() const { return n_; }
  std::size_t size() const { return keys_.size(); }
  MonoKey key(std::size_t i) const { return keys_[i]; }
  ExpVec monomial(std::size_t i) const { return unpack(keys_[i], r_); }
  const std::vector<MonoKey>& keys() const { return keys_; }

  // Position of a key; npos when absent.
  std::size_t index_of(MonoKey key) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  int r_;
  int n_;
  std::vector<MonoKey> keys_;
};

// Shared cache; safe to call from several threads.
std::shared_ptr<const MonomialBasis> monomials(int r, int n);

std::vector<ExpVec> sym_basis(int r, int n);
std::vector<ExtMask> ext_basis(int r, int a);
std::size_t ext_index(int r, ExtMask mask);

struct ExtSymTerm {
  ExtMask mask;
  ExpVec mono;
};
// Mask-major ordering: index = ext_index(mask) * dim S^b + monomial index.
std::vector<ExtSymTerm> ext_sym_basis(int r, int a, int b);

exactla::GradedMap frobenius(int r, int n);

std::vector<ExpVec> filtration_basis(int r, int t, int n);
std::uint64_t filtration_dim(int r, int t, int n);

std::uint64_t trunc_sym_dim(int r, int i, int n);

// Monomials with all exponents below `bound`, for the cokernel of the bound-th powers.
std::uint64_t bounded_monomial_count(int r, int bound, int n);

// x^e  <->  x_M * (x^g)^2 with M the odd coordinates.
struct SplitMonomial {
  ExtMask mask;
  ExpVec half;
};
SplitMonomial split_monomial(const ExpVec& m);
ExpVec join_monomial(const SplitMonomial& s, int r);

}  // namespace kuforge::polyalg
