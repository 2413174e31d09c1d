#pragma once

// Independent, deliberately naive reimplementations used as test oracles.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "kuforge/f2matrix.hpp"

namespace oracle {

using kuforge::exactla::F2Matrix;
using Exps = std::vector<int>;

inline std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t c = 1;
  for (int j = 1; j <= k; ++j) c = c * static_cast<std::uint64_t>(n - k + j) / static_cast<std::uint64_t>(j);
  return c;
}

// sum_{j=1}^{min(d,r)} C(r, j)
inline std::int64_t pbar(int r, int d) {
  std::int64_t s = 0;
  for (int j = 1; j <= std::min(d, r); ++j) s += static_cast<std::int64_t>(choose(r, j));
  return s;
}

// Exponent vectors of degree n in lexicographic order.
inline std::vector<Exps> monomials(int r, int n) {
  std::vector<Exps> out;
  if (n < 0) return out;
  Exps e(static_cast<std::size_t>(r), 0);
  std::function<void(int, int)> rec = [&](int j, int left) {
    if (j == r - 1) {
      e[static_cast<std::size_t>(j)] = left;
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(j)] = k;
      rec(j + 1, left - k);
    }
  };
  if (r == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  rec(0, n);
  return out;
}

inline std::map<Exps, std::size_t> index_of(const std::vector<Exps>& basis) {
  std::map<Exps, std::size_t> idx;
  for (std::size_t k = 0; k < basis.size(); ++k) idx[basis[k]] = k;
  return idx;
}

// Q_i(x^e) = sum_j e_j x^{e + (2^{i+1} - 1) delta_j}, as a matrix S^n -> S^{n + 2^{i+1} - 1}.
inline F2Matrix milnor_q(int i, int r, int n) {
  const int step = (1 << (i + 1)) - 1;
  const auto src = monomials(r, n);
  const auto tgt = monomials(r, n + step);
  const auto idx = index_of(tgt);
  F2Matrix m(tgt.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c)
    for (int j = 0; j < r; ++j) {
      if (src[c][static_cast<std::size_t>(j)] % 2 == 0) continue;
      Exps t = src[c];
      t[static_cast<std::size_t>(j)] += step;
      m.flip(idx.at(t), c);
    }
  return m;
}

// Exterior-symmetric basis: masks of size a in increasing numeric order, then monomials.
struct ExtSym {
  std::vector<std::pair<unsigned, Exps>> terms;
  std::map<std::pair<unsigned, Exps>, std::size_t> idx;
};

inline ExtSym ext_sym(int r, int a, int b) {
  ExtSym out;
  if (a < 0 || b < 0) return out;
  for (unsigned mask = 0; mask < (1U << r); ++mask) {
    if (__builtin_popcount(mask) != a) continue;
    for (const auto& e : monomials(r, b)) {
      out.idx[{mask, e}] = out.terms.size();
      out.terms.push_back({mask, e});
    }
  }
  return out;
}

// tau_i(x_M (x) f) = sum_{j in M} x_{M - j} (x) x_j^{2^i} f.
inline F2Matrix koszul(int i, int r, int a, int b) {
  const auto src = ext_sym(r, a, b);
  const auto tgt = ext_sym(r, a - 1, b + (1 << i));
  F2Matrix m(tgt.terms.size(), src.terms.size());
  for (std::size_t c = 0; c < src.terms.size(); ++c) {
    const auto& [mask, e] = src.terms[c];
    for (int j = 0; j < r; ++j) {
      if (!((mask >> j) & 1U)) continue;
      Exps t = e;
      t[static_cast<std::size_t>(j)] += 1 << i;
      m.flip(tgt.idx.at({mask & ~(1U << j), t}), c);
    }
  }
  return m;
}

inline std::size_t rank(const F2Matrix& m) { return m.empty() ? 0 : kuforge::exactla::f2_rank(m); }

// dim Kfrak_{a,b} = rank of tau_0 on L^a (x) S^b.
inline std::int64_t kfrak(int r, int a, int b) { return static_cast<std::int64_t>(rank(koszul(0, r, a, b))); }

// dim Lfrak_{a,b} = dim Kfrak_{a,b} - rank of tau_1 tau_0 on L^{a+1} (x) S^{b-2}.
inline std::int64_t lfrak(int r, int a, int b) {
  std::int64_t sub = 0;
  if (b >= 2 && a + 1 <= r) sub = static_cast<std::int64_t>(rank(koszul(1, r, a, b - 1) * koszul(0, r, a + 1, b - 2)));
  return kfrak(r, a, b) - sub;
}

}  // namespace oracle
