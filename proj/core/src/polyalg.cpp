#include "kuforge/polyalg.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kuforge::polyalg {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return c;
}

std::uint64_t sym_dim(int r, int n) {
  if (n < 0) return 0;
  if (r == 0) return n == 0 ? 1 : 0;
  return binomial(n + r - 1, r - 1);
}

std::uint64_t ext_dim(int r, int a) { return binomial(r, a); }

int ExpVec::degree() const { return std::accumulate(e.begin(), e.end(), 0); }

int ExpVec::odd_count() const {
  return static_cast<int>(std::count_if(e.begin(), e.end(), [](int x) { return x % 2 != 0; }));
}

std::string ExpVec::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    os << 'x' << (j + 1);
    if (e[j] > 1) os << '^' << e[j];
    any = true;
  }
  if (!any) os << '1';
  return os.str();
}

MonoKey pack(const ExpVec& m) {
  if (m.rank() > kMaxRank) throw std::invalid_argument("pack: rank above 8");
  MonoKey k = 0;
  for (int x : m.e) {
    if (x < 0 || x > kMaxExponent) throw std::invalid_argument("pack: exponent out of range");
    k = (k << 8) | static_cast<MonoKey>(x);
  }
  return k;
}

ExpVec unpack(MonoKey key, int r) {
  ExpVec m;
  m.e.resize(static_cast<std::size_t>(r));
  for (int j = r - 1; j >= 0; --j) {
    m.e[static_cast<std::size_t>(j)] = static_cast<int>(key & 0xFF);
    key >>= 8;
  }
  return m;
}

namespace {

void enumerate(int r, int n, int j, MonoKey prefix, std::vector<MonoKey>& out) {
  if (j == r - 1) {
    out.push_back((prefix << 8) | static_cast<MonoKey>(n));
    return;
  }
  for (int x = 0; x <= n; ++x) enumerate(r, n - x, j + 1, (prefix << 8) | static_cast<MonoKey>(x), out);
}

}  // namespace

MonomialBasis::MonomialBasis(int r, int n) : r_(r), n_(n) {
  if (r < 0 || r > kMaxRank) throw std::invalid_argument("MonomialBasis: rank out of range");
  if (n > kMaxExponent) throw std::invalid_argument("MonomialBasis: degree above 255");
  if (n < 0) return;
  if (r == 0) {
    if (n == 0) keys_.push_back(0);
    return;
  }
  keys_.reserve(sym_dim(r, n));
  enumerate(r, n, 0, 0, keys_);
}

std::size_t MonomialBasis::index_of(MonoKey key) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return npos;
  return static_cast<std::size_t>(it - keys_.begin());
}

std::shared_ptr<const MonomialBasis> monomials(int r, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const MonomialBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{r, n}];
  if (!slot) slot = std::make_shared<const MonomialBasis>(r, n);
  return slot;
}

std::vector<ExpVec> sym_basis(int r, int n) {
  const auto b = monomials(r, n);
  std::vector<ExpVec> out;
  out.reserve(b->size());
  for (std::size_t i = 0; i < b->size(); ++i) out.push_back(b->monomial(i));
  return out;
}

namespace {

// Lexicographic order on sorted index lists: compare lowest elements first.
bool mask_less(ExtMask a, ExtMask b) {
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace

std::vector<ExtMask> ext_basis(int r, int a) {
  std::vector<ExtMask> out;
  if (a < 0 || a > r) return out;
  for (ExtMask m = 0; m < (ExtMask{1} << r); ++m)
    if (std::popcount(m) == a) out.push_back(m);
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

std::size_t ext_index(int r, ExtMask mask) {
  const auto basis = ext_basis(r, std::popcount(mask));
  auto it = std::find(basis.begin(), basis.end(), mask);
  if (it == basis.end()) throw std::invalid_argument("ext_index: mask outside rank");
  return static_cast<std::size_t>(it - basis.begin());
}

std::vector<ExtSymTerm> ext_sym_basis(int r, int a, int b) {
  std::vector<ExtSymTerm> out;
  const auto masks = ext_basis(r, a);
  const auto monos = sym_basis(r, b);
  out.reserve(masks.size() * monos.size());
  for (ExtMask m : masks)
    for (const ExpVec& e : monos) out.push_back({m, e});
  return out;
}

exactla::GradedMap frobenius(int r, int n) {
  exactla::GradedMap g;
  g.source = exactla::BasisDescriptor::sym(r, n);
  g.target = exactla::BasisDescriptor::sym(r, 2 * n);
  g.shift = n;
  const auto src = monomials(r, n);
  const auto tgt = monomials(r, 2 * n);
  exactla::F2Matrix m(tgt->size(), src->size());
  for (std::size_t j = 0; j < src->size(); ++j) m.set(tgt->index_of(src->key(j) * 2), j, true);
  g.blocks.emplace(n, std::move(m));
  return g;
}

std::vector<ExpVec> filtration_basis(int r, int t, int n) {
  std::vector<ExpVec> out;
  for (ExpVec& m : sym_basis(r, n))
    if (m.odd_count() <= t) out.push_back(std::move(m));
  return out;
}

std::uint64_t filtration_dim(int r, int t, int n) {
  std::uint64_t total = 0;
  for (int s = 0; s <= std::min(t, r); ++s)
    if (n >= s && (n - s) % 2 == 0) total += binomial(r, s) * sym_dim(r, (n - s) / 2);
  return total;
}

std::uint64_t bounded_monomial_count(int r, int bound, int n) {
  if (n < 0) return 0;
  // count of solutions of e_1 + ... + e_r = n with 0 <= e_j < bound
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int j = 0; j < r; ++j) {
    std::vector<std::uint64_t> next(ways.size(), 0);
    for (int s = 0; s <= n; ++s) {
      if (ways[static_cast<std::size_t>(s)] == 0) continue;
      for (int x = 0; x < bound && s + x <= n; ++x) next[static_cast<std::size_t>(s + x)] += ways[static_cast<std::size_t>(s)];
    }
    ways.swap(next);
  }
  return ways[static_cast<std::size_t>(n)];
}

std::uint64_t trunc_sym_dim(int r, int i, int n) {
  if (i < 0) throw std::invalid_argument("trunc_sym_dim: negative index");
  if (n < 0) return 0;
  if (i >= 30) return sym_dim(r, n);
  return bounded_monomial_count(r, 1 << i, n);
}

SplitMonomial split_monomial(const ExpVec& m) {
  SplitMonomial s{0, {}};
  s.half.e.resize(m.e.size());
  for (std::size_t j = 0; j < m.e.size(); ++j) {
    if (m.e[j] % 2 != 0) s.mask |= ExtMask{1} << j;
    s.half.e[j] = m.e[j] / 2;
  }
  return s;
}

ExpVec join_monomial(const SplitMonomial& s, int r) {
  ExpVec m;
  m.e.resize(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j)
    m.e[static_cast<std::size_t>(j)] = 2 * s.half.e[static_cast<std::size_t>(j)] + static_cast<int>((s.mask >> j) & 1U);
  return m;
}

}  // namespace kuforge::polyalg
