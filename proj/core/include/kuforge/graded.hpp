#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kuforge/f2matrix.hpp"

namespace kuforge::exactla {

// Finitely supported degree -> dimension map; zero entries are never stored.
class GradedDim {
 public:
  using Map = std::map<int, std::int64_t>;

  GradedDim() = default;
  GradedDim(std::initializer_list<std::pair<const int, std::int64_t>> init);

  std::int64_t at(int degree) const;
  void set(int degree, std::int64_t dim);
  void add(int degree, std::int64_t dim);

  const Map& entries() const { return dims_; }
  bool empty() const { return dims_.empty(); }
  std::int64_t total() const;
  int min_degree() const;
  int max_degree() const;

  GradedDim shifted(int by) const;
  GradedDim restricted(int lo, int hi) const;
  GradedDim operator+(const GradedDim& other) const;
  // Entrywise difference; throws if any entry would become negative.
  GradedDim operator-(const GradedDim& other) const;

  friend bool operator==(const GradedDim& a, const GradedDim& b) { return a.dims_ == b.dims_; }
  std::string to_string() const;

 private:
  Map dims_;
};

// How a degreewise basis is enumerated; purely descriptive.
struct BasisDescriptor {
  enum class Kind { unit, sym, ext, ext_sym, subquotient, free_module, custom };
  Kind kind = Kind::custom;
  int rank = 0;
  int a = 0;
  int b = 0;
  std::string label;

  static BasisDescriptor sym(int r, int n) { return {Kind::sym, r, 0, n, {}}; }
  static BasisDescriptor ext(int r, int a) { return {Kind::ext, r, a, 0, {}}; }
  static BasisDescriptor ext_sym(int r, int a, int b) { return {Kind::ext_sym, r, a, b, {}}; }
  std::string to_string() const;
};

// Degreewise linear map; blocks are keyed by source degree and land in degree + shift.
struct GradedMap {
  BasisDescriptor source;
  BasisDescriptor target;
  int shift = 0;
  std::map<int, F2Matrix> blocks;

  const F2Matrix* block(int degree) const {
    auto it = blocks.find(degree);
    return it == blocks.end() ? nullptr : &it->second;
  }
};

class ComplexError : public std::runtime_error {
 public:
  ComplexError(const std::string& what, int degree) : std::runtime_error(what), degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

// Homology at the middle term of  d_in  then  d_out, keyed by the middle degree.
// Throws ComplexError when d_out * d_in != 0 somewhere.
GradedDim homology_dims(const GradedMap& d_in, const GradedMap& d_out);

// Homology of a single pair of composable matrices.
std::int64_t homology_dim(const F2Matrix& d_in, const F2Matrix& d_out);

// Ordered list of differentials; maps[k] is followed by maps[k + 1].
struct ChainComplex {
  std::vector<GradedMap> maps;
  void check() const;
};

}  // namespace kuforge::exactla
