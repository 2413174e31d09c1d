#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kuforge/graded.hpp"
#include "kuforge/intmatrix.hpp"
#include "kuforge/module.hpp"

namespace kuforge::localcoh {

using exactla::FinAbGroup;
using exactla::GradedDim;

class StabilizationError : public std::runtime_error {
 public:
  StabilizationError(const std::string& what, int degree, int index)
      : std::runtime_error(what), degree_(degree), index_(index) {}
  int degree() const { return degree_; }
  int index() const { return index_; }

 private:
  int degree_;
  int index_;
};

struct LocalCohomologyTable {
  std::string module;
  int rank = 0;
  int lo = 0;  // internal degree window
  int hi = 0;
  std::vector<GradedDim> h;  // h[i] = dims of H^i_I, i = 0..r
  bool stabilized = true;
  int max_level = 0;  // most levels iterated past the starting power

  const GradedDim& at(int i) const {
    static const GradedDim none;
    return i >= 0 && i < static_cast<int>(h.size()) ? h[static_cast<std::size_t>(i)] : none;
  }
};

struct CechOptions {
  int max_level = 48;  // levels tried past the starting power
  int consecutive = 2;  // consecutive isomorphisms required
  int margin = 2;       // further isomorphisms checked after that
};

// Stable Koszul complex on x_1^k .. x_r^k, k -> infinity, evaluated in degrees lo..hi.
// Throws StabilizationError when the colimit has not settled by max_level.
LocalCohomologyTable cech_local_cohomology(const ModulePresentation& m, int lo, int hi, const CechOptions& opt = {});
// Window -bound..bound.
LocalCohomologyTable cech_local_cohomology(const ModulePresentation& m, int bound);

// Free resolution F_0 <- F_1 <- ... ; maps[j] sends the generators of F_{j+1} into F_j.
struct FreeResolution {
  int rank = 0;
  int weight = 1;
  std::vector<std::vector<int>> degrees;
  std::vector<std::vector<std::vector<PresentationEntry>>> maps;
  int bound = 0;       // generators were searched through this degree
  bool exact = false;  // Euler characteristic matches the module through the bound

  std::size_t length() const { return degrees.empty() ? 0 : degrees.size() - 1; }
};

FreeResolution free_resolution(const ModulePresentation& m, int bound = -1);

// dim Ext^j_S(M, S) in internal degree e.
std::int64_t ext_dim(const FreeResolution& res, int j, int e);

// Local cohomology through graded local duality: H^i_I(M)_n = dual of Ext^{r-i}(M, S)_{-n-r*weight}.
LocalCohomologyTable resolution_local_cohomology(const ModulePresentation& m, int lo, int hi);

// Local cohomology of the integral cohomology ring of BV_+, as groups per internal degree.
struct IntegralLocalCohomology {
  int rank = 0;
  int lo = 0;
  int hi = 0;
  std::vector<std::map<int, FinAbGroup>> h;  // h[j][n]
  // Index of H^0 in degree 0 inside the degree-0 integers.
  int zero_index = 1;
  LocalCohomologyTable mod2;  // the F2 table of K_* underlying the positive part

  FinAbGroup at(int j, int n) const;
  std::int64_t f2_total(int j) const;  // total F2-dimension of the torsion groups of H^j
};

IntegralLocalCohomology integral_cech_local_cohomology(int r, int bound);

// Connecting morphism H^0_I(F) -> H^1_I(K_{>0}) of 0 -> K_{>0} -> K_* -> F -> 0 in degree 0.
struct ConnectingReport {
  int rank = 0;
  std::int64_t rank_from_h0 = 0;  // 1 - rank(H^0(K_*)_0 -> F)
  std::int64_t rank_from_h1 = 0;  // dim H^1(K_{>0})_0 - dim H^1(K_*)_0
  bool cocycle_nonzero = false;   // chain-level image of the unit
  bool nontrivial() const { return rank_from_h0 == 1 && rank_from_h1 == 1 && cocycle_nonzero; }
};

ConnectingReport connecting_hz_local_cohom(int r, int bound);

// A complex graded by slices: diff[slice][k] is the differential C_k -> C_{k-1}.
struct SlicedComplex {
  int bottom = 0;
  int top = 0;
  std::map<int, std::map<int, std::size_t>> dims;  // slice -> degree -> dim
  std::map<int, std::map<int, exactla::F2Matrix>> diff;

  // homological degree -> slice dims
  std::map<int, GradedDim> homology() const;
  std::size_t dim(int slice, int k) const;
};

// Graded Hom over S of the truncation sigma_{>=a} of the Koszul complex into S (x) L^r,
// written in its own dual basis; slices lo..hi.
SlicedComplex dual_truncated_koszul(int r, int a, int lo, int hi);
// sigma_{<=c} of the Koszul complex L^* (x) S with tau_0, slices lo..hi.
SlicedComplex truncated_koszul(int r, int c, int lo, int hi);

// Best single shift s with actual(n) = expected(n + s) on [lo, hi]; matched is false when none works.
struct ShiftMatch {
  bool matched = false;
  int shift = 0;
  std::vector<int> unit_degrees;  // extra one-dimensional summands, when matching with units
};

ShiftMatch match_shift(const GradedDim& actual, const std::function<std::int64_t(int)>& expected, int lo, int hi,
                       int max_shift = 24);
// actual = (units copies of F in distinct degrees) + expected(c - n) for some c.
ShiftMatch match_units_plus_dual(const GradedDim& actual, const std::function<std::int64_t(int)>& dual_of, int units,
                                 int lo, int hi, int max_shift = 24);

}  // namespace kuforge::localcoh
