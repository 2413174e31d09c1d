#include "kuforge/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "kuforge/f2matrix.hpp"
#include "kuforge/graded.hpp"
#include "kuforge/groupring.hpp"
#include "kuforge/intmatrix.hpp"
#include "kuforge/kumod.hpp"
#include "kuforge/localcoh.hpp"
#include "kuforge/milnor.hpp"
#include "kuforge/polyalg.hpp"
#include "kuforge/ss.hpp"

namespace kuforge::verify {

using exactla::F2Matrix;
using exactla::FinAbGroup;
using exactla::GradedDim;
using exactla::IntMatrix;

namespace {

template <class F>
void parallel_for(std::size_t n, int jobs, F&& f) {
  const std::size_t width = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(jobs, 1)));
  if (width <= 1) {
    for (std::size_t k = 0; k < n; ++k) f(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < width; ++t)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < n; k = next++) f(k);
    });
  for (auto& th : pool) th.join();
}

// Counts comparisons and keeps the first mismatch.
struct Tally {
  std::size_t compared = 0;
  std::size_t failed = 0;
  std::string first;

  void expect(bool ok, const std::string& where) {
    ++compared;
    if (ok) return;
    if (failed++ == 0) first = where;
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& where) {
    std::ostringstream os;
    os << where << ": got " << got << ", expected " << want;
    expect(got == want, os.str());
  }
};

class Recorder {
 public:
  explicit Recorder(SuiteReport& rep) : rep_(rep) {}

  void check(const std::string& name, bool ok, const std::string& detail) { rep_.checks.push_back({name, ok, detail}); }
  void tally(const std::string& name, const Tally& t) {
    if (t.failed == 0)
      check(name, true, std::to_string(t.compared) + " values agree");
    else
      check(name, false, std::to_string(t.failed) + " of " + std::to_string(t.compared) + " differ; first " + t.first);
  }

 private:
  SuiteReport& rep_;
};

std::vector<int> ranks(const VerifyOptions& opt, int lo, int hi, const std::string& suite) {
  if (opt.rank) {
    if (*opt.rank < lo || *opt.rank > hi)
      throw std::invalid_argument("suite " + suite + " covers ranks " + std::to_string(lo) + ".." + std::to_string(hi));
    return {*opt.rank};
  }
  std::vector<int> out;
  for (int r = lo; r <= hi; ++r) out.push_back(r);
  return out;
}

std::string tag(std::initializer_list<std::pair<const char*, int>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    os << (first ? "" : " ") << k << "=" << v;
    first = false;
  }
  return os.str();
}

// Sum_{j=1}^{min(d,r)} C(r,j), written out independently of the library helper.
std::int64_t pbar_oracle(int r, int d) {
  std::int64_t s = 0;
  std::int64_t c = 1;
  for (int j = 1; j <= std::min(d, r); ++j) {
    c = c * (r - j + 1) / j;
    s += c;
  }
  return s;
}

std::int64_t i64(std::size_t x) { return static_cast<std::int64_t>(x); }

mpz_class pow2(int d) {
  mpz_class p = 1;
  for (int k = 0; k < d; ++k) p *= 2;
  return p;
}

F2Matrix random_f2(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  F2Matrix m(rows, cols);
  std::bernoulli_distribution bit(0.5);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (bit(rng)) m.set(i, j, true);
  return m;
}

F2Matrix random_invertible(std::mt19937& rng, std::size_t n) {
  for (;;) {
    F2Matrix m = random_f2(rng, n, n);
    if (exactla::f2_rank(m) == n) return m;
  }
}

// ---------------------------------------------------------------- exactla

// Column-style lower echelon form over long; returns the rank and leaves pivots on the diagonal.
std::size_t lattice_echelon(std::vector<std::vector<long>>& cols, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t row = 0; row < n && c < cols.size(); ++row) {
    for (;;) {
      std::size_t best = cols.size();
      for (std::size_t j = c; j < cols.size(); ++j)
        if (cols[j][row] != 0 && (best == cols.size() || std::labs(cols[j][row]) < std::labs(cols[best][row]))) best = j;
      if (best == cols.size()) break;
      std::swap(cols[c], cols[best]);
      bool clean = true;
      for (std::size_t j = c + 1; j < cols.size(); ++j) {
        const long q = cols[j][row] / cols[c][row];
        for (std::size_t i = 0; i < n; ++i) cols[j][i] -= q * cols[c][i];
        if (cols[j][row] != 0) clean = false;
      }
      if (clean) {
        if (cols[c][row] < 0)
          for (auto& x : cols[c]) x = -x;
        ++c;
        break;
      }
    }
  }
  return c;
}

bool in_lattice(std::vector<long> x, const std::vector<std::vector<long>>& h, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j] % h[j][j] != 0) return false;
    const long q = x[j] / h[j][j];
    for (std::size_t i = 0; i < n; ++i) x[i] -= q * h[j][i];
  }
  return std::all_of(x.begin(), x.end(), [](long v) { return v == 0; });
}

void suite_exactla(Recorder& rec, const VerifyOptions&) {
  std::mt19937 rng(20240611);
  {
    Tally t;
    std::uniform_int_distribution<std::size_t> size(1, 90);
    for (int k = 0; k < 200; ++k) {
      const F2Matrix m = random_f2(rng, size(rng), size(rng));
      const F2Matrix ker = exactla::f2_kernel(m);
      t.equal(exactla::f2_rank(m) + ker.cols(), m.cols(), "rank + nullity, sample " + std::to_string(k));
      t.expect((m * ker).is_zero(), "kernel columns not annihilated, sample " + std::to_string(k));
    }
    rec.tally("F2 rank-nullity on random matrices", t);
  }
  {
    Tally t;
    std::uniform_int_distribution<int> size(1, 5);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int k = 0; k < 120; ++k) {
      const std::size_t rows = static_cast<std::size_t>(size(rng));
      const std::size_t cols = static_cast<std::size_t>(size(rng));
      IntMatrix m(rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
      const auto snf = exactla::smith_normal_form(m);
      const std::string where = "sample " + std::to_string(k);
      t.expect(snf.u * m * snf.v == snf.d, "U M V != D, " + where);
      t.expect(snf.d.is_diagonal(), "D not diagonal, " + where);
      t.expect(abs(exactla::determinant(snf.u)) == 1 && abs(exactla::determinant(snf.v)) == 1,
               "transform not unimodular, " + where);
      const std::size_t diag = std::min(rows, cols);
      for (std::size_t i = 0; i + 1 < diag; ++i) {
        const mpz_class& a = snf.d.at(i, i);
        const mpz_class& b = snf.d.at(i + 1, i + 1);
        t.expect(a >= 0 && (b == 0 || (a != 0 && b % a == 0)), "divisibility chain broken, " + where);
      }
    }
    rec.tally("Smith normal form identities", t);
  }
  {
    Tally t;
    std::uniform_int_distribution<int> size(1, 3);
    std::uniform_int_distribution<int> extra(0, 2);
    std::uniform_int_distribution<long> entry(-4, 4);
    for (int k = 0; k < 150; ++k) {
      const std::size_t n = static_cast<std::size_t>(size(rng));
      const std::size_t m = n + static_cast<std::size_t>(extra(rng));
      IntMatrix a(n, m);
      std::vector<std::vector<long>> cols(m, std::vector<long>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          cols[j][i] = entry(rng);
          a.at(i, j) = cols[j][i];
        }
      const FinAbGroup g = exactla::cokernel_structure(a);
      const std::size_t rank = lattice_echelon(cols, n);
      const std::string where = "sample " + std::to_string(k);
      t.equal(g.free_rank(), n - rank, "free rank, " + where);
      if (rank < n) continue;
      // enumerate the fundamental box of the echelon basis and count k-torsion for every k
      long order = 1;
      for (std::size_t j = 0; j < n; ++j) order *= cols[j][j];
      std::vector<std::vector<long>> box;
      std::vector<long> x(n, 0);
      for (long idx = 0; idx < order; ++idx) {
        long rest = idx;
        for (std::size_t j = 0; j < n; ++j) {
          x[j] = rest % cols[j][j];
          rest /= cols[j][j];
        }
        box.push_back(x);
      }
      t.equal(static_cast<long>(box.size()), g.torsion_order().get_si(), "order, " + where);
      for (long q = 1; q <= order; ++q) {
        if (order % q != 0) continue;
        long count = 0;
        for (const auto& v : box) {
          std::vector<long> qv(v);
          for (auto& e : qv) e *= q;
          if (in_lattice(qv, cols, n)) ++count;
        }
        long predicted = 1;
        for (const auto& f : g.invariant_factors()) predicted *= std::gcd(q, f.get_si());
        t.equal(count, predicted, q == 1 ? "trivial torsion, " + where : std::to_string(q) + "-torsion, " + where);
      }
    }
    rec.tally("cokernel structure against enumeration", t);
  }
  {
    Tally t;
    std::uniform_int_distribution<std::size_t> size(1, 30);
    for (int k = 0; k < 100; ++k) {
      const std::size_t n = size(rng), p = size(rng), q = size(rng);
      const F2Matrix d_out = random_f2(rng, p, n);
      const F2Matrix ker = exactla::f2_kernel(d_out);
      const F2Matrix d_in = ker * random_f2(rng, ker.cols(), q);
      const std::int64_t h = exactla::homology_dim(d_in, d_out);
      const F2Matrix P = random_invertible(rng, n);
      const F2Matrix A = random_invertible(rng, p);
      const F2Matrix B = random_invertible(rng, q);
      const std::int64_t h2 = exactla::homology_dim(P * d_in * B, A * d_out * exactla::f2_inverse(P));
      t.equal(h2, h, "homology after basis change, sample " + std::to_string(k));
      t.equal(h, i64(n) - i64(exactla::f2_rank(d_out)) - i64(exactla::f2_rank(d_in)), "homology formula");
    }
    rec.tally("homology invariant under basis changes", t);
  }
}

// ---------------------------------------------------------------- polyalg

void suite_polyalg(Recorder& rec, const VerifyOptions& opt) {
  const auto rs = ranks(opt, 1, 4, "polyalg");
  {
    Tally t;
    for (int r : rs)
      for (int n = 0; n <= 24; ++n)
        for (int s = 0; s <= std::min(r, n); ++s) {
          const std::int64_t diff =
              i64(polyalg::filtration_dim(r, s, n)) - (s == 0 ? 0 : i64(polyalg::filtration_dim(r, s - 1, n)));
          const std::int64_t want =
              (n - s) % 2 == 0 ? i64(polyalg::binomial(r, s)) * i64(polyalg::sym_dim(r, (n - s) / 2)) : 0;
          t.equal(diff, want, tag({{"r", r}, {"n", n}, {"t", s}}));
        }
    rec.tally("filtration quotients of symmetric powers", t);
  }
  {
    Tally t;
    for (int r : rs)
      for (int i = 0; i <= 2; ++i)
        for (int n = 0; n <= 12; ++n) {
          std::int64_t count = 0;
          for (const auto& m : polyalg::sym_basis(r, n))
            if (std::all_of(m.e.begin(), m.e.end(), [i](int e) { return e < (1 << i); })) ++count;
          t.equal(i64(polyalg::trunc_sym_dim(r, i, n)), count, tag({{"r", r}, {"i", i}, {"n", n}}));
        }
    rec.tally("truncated symmetric powers by enumeration", t);
  }
  {
    Tally t;
    for (int r : rs)
      for (int n = 0; n <= 12; ++n) {
        const auto fr = polyalg::frobenius(r, n);
        const F2Matrix* blk = fr.block(n);
        const auto squares = polyalg::filtration_basis(r, 0, 2 * n);
        const std::string where = tag({{"r", r}, {"n", n}});
        if (blk == nullptr) {
          t.expect(false, "missing block, " + where);
          continue;
        }
        const auto tgt = polyalg::monomials(r, 2 * n);
        std::set<std::size_t> hit;
        for (std::size_t c = 0; c < blk->cols(); ++c)
          for (std::size_t row = 0; row < blk->rows(); ++row)
            if (blk->get(row, c)) hit.insert(row);
        std::set<std::size_t> want;
        for (const auto& m : squares) want.insert(tgt->index_of(polyalg::pack(m)));
        t.expect(hit == want, "image differs from the squares, " + where);
        t.equal(exactla::f2_rank(*blk), squares.size(), "rank, " + where);
      }
    rec.tally("Frobenius image equals the bottom filtration", t);
  }
}

// ---------------------------------------------------------------- milnor

void suite_milnor(Recorder& rec, const VerifyOptions& opt) {
  for (int r : ranks(opt, 1, 4, "milnor"))
    for (int i = 0; i <= 2; ++i) {
      Tally t;
      for (int n = 0; n <= 24; ++n) {
        const std::int64_t want = n % 2 == 1 ? 0 : i64(polyalg::trunc_sym_dim(r, i, n / 2));
        t.equal(i64(milnor::qi_homology_dim(i, r, n)), want, tag({{"n", n}}));
      }
      rec.tally("homology of (S, Q" + std::to_string(i) + ") " + tag({{"r", r}}), t);
    }
}

void suite_kfunctor(Recorder& rec, const VerifyOptions& opt) {
  for (int r : ranks(opt, 1, 4, "kfunctor")) {
    Tally t;
    Tally direct;
    for (int n = 0; n <= 24; ++n) {
      const std::int64_t want = n == 0 ? 1 : (n % 2 == 1 ? 0 : pbar_oracle(r, n / 2));
      t.equal(milnor::q1_homology_on_K(r, n).at(n), want, tag({{"n", n}}));
      if (n >= 1) {
        // ker(Q1 on K_n) / im(Q1 from K_{n-3}) straight from matrices
        const F2Matrix kn = milnor::k_span(r, n);
        const std::int64_t ker = i64(kn.cols()) - i64(exactla::f2_rank(milnor::q_matrix(1, r, n) * kn));
        std::int64_t im = 0;
        if (n >= 3) im = i64(exactla::f2_rank(milnor::q_matrix(1, r, n - 3) * milnor::k_span(r, n - 3)));
        direct.equal(ker - im, want, tag({{"n", n}}));
      }
    }
    rec.tally("dim Ltilde/L " + tag({{"r", r}}), t);
    rec.tally("Q1 homology on K from matrices " + tag({{"r", r}}), direct);
    Tally ex;
    for (int n = 0; n <= 5; ++n) ex.equal(milnor::l_dim(r, n), 0U, "L_" + std::to_string(n));
    for (int n : {1, 3, 5}) ex.equal(milnor::ltilde_dim(r, n), 0U, "Ltilde_" + std::to_string(n));
    ex.equal(milnor::ltilde_dim(r, 0), 1U, "Ltilde_0");
    ex.equal(milnor::ltilde_dim(r, 2), static_cast<std::size_t>(r), "Ltilde_2");
    ex.equal(milnor::ltilde_dim(r, 4), static_cast<std::size_t>(polyalg::sym_dim(r, 2)), "Ltilde_4");
    rec.tally("low-degree values of L and Ltilde " + tag({{"r", r}}), ex);
  }
}

// Q_i maps f_t S into f_{t-1} S and induces tau_i on the quotients.
bool filtration_matches_tau(int i, int r, int n, std::string& where) {
  const F2Matrix q = milnor::q_matrix(i, r, n);
  const auto src = polyalg::monomials(r, n);
  const auto tgt = polyalg::monomials(r, n + (1 << (i + 1)) - 1);
  std::map<std::pair<int, int>, F2Matrix> taus;
  for (std::size_t c = 0; c < src->size(); ++c) {
    const auto split = polyalg::split_monomial(src->monomial(c));
    const int t = std::popcount(split.mask);
    const int b = (n - t) / 2;
    std::set<std::size_t> got;
    bool drop_ok = true;
    for (std::size_t row = 0; row < q.rows(); ++row) {
      if (!q.get(row, c)) continue;
      const auto s2 = polyalg::split_monomial(tgt->monomial(row));
      if (std::popcount(s2.mask) != t - 1) drop_ok = false;
      const int b2 = b + (1 << i);
      got.insert(polyalg::ext_index(r, s2.mask) * polyalg::sym_dim(r, b2) +
                 polyalg::monomials(r, b2)->index_of(polyalg::pack(s2.half)));
    }
    if (!drop_ok) {
      where = "image leaves f_{t-1}, " + tag({{"i", i}, {"r", r}, {"n", n}});
      return false;
    }
    if (t == 0) {
      if (!got.empty()) {
        where = "nonzero on f_0, " + tag({{"i", i}, {"r", r}, {"n", n}});
        return false;
      }
      continue;
    }
    auto key = std::make_pair(t, b);
    auto it = taus.find(key);
    if (it == taus.end()) it = taus.emplace(key, milnor::tau_matrix(i, r, t, b)).first;
    const std::size_t col =
        polyalg::ext_index(r, split.mask) * polyalg::sym_dim(r, b) + polyalg::monomials(r, b)->index_of(polyalg::pack(split.half));
    std::set<std::size_t> want;
    for (std::size_t row = 0; row < it->second.rows(); ++row)
      if (it->second.get(row, col)) want.insert(row);
    if (got != want) {
      where = "differs from tau, " + tag({{"i", i}, {"r", r}, {"n", n}, {"t", t}});
      return false;
    }
  }
  return true;
}

void suite_structure(Recorder& rec, const VerifyOptions& opt) {
  const auto rs = ranks(opt, 1, 4, "structure");
  {
    Tally t;
    for (int r : rs)
      for (int n = 0; n <= 12; ++n)
        for (int i = 0; i <= 2; ++i)
          for (int j = 0; j <= 2; ++j) {
            const int ci = (1 << (i + 1)) - 1, cj = (1 << (j + 1)) - 1;
            const F2Matrix ij = milnor::q_matrix(i, r, n + cj) * milnor::q_matrix(j, r, n);
            const F2Matrix ji = milnor::q_matrix(j, r, n + ci) * milnor::q_matrix(i, r, n);
            const std::string where = tag({{"r", r}, {"n", n}, {"i", i}, {"j", j}});
            if (i == j)
              t.expect(ij.is_zero(), "Q_i Q_i != 0, " + where);
            else
              t.expect(ij == ji, "Q_i Q_j != Q_j Q_i, " + where);
          }
    rec.tally("Milnor derivations square to zero and commute", t);
  }
  {
    Tally k, c, l;
    for (int r : rs)
      for (int n = 1; n <= 20; ++n) {
        std::int64_t kf = 0, lf = 0, lf2 = 0;
        for (int a = 1; a <= n; ++a) {
          if ((n - 1 - a) < 0 || (n - 1 - a) % 2 != 0) continue;
          const int b = (n - 1 - a) / 2;
          kf += i64(milnor::kfrak_dim(r, a, b));
          const std::int64_t lab = i64(milnor::lfrak_dim(r, a, b));
          lf += lab;
          if (a >= 2) lf2 += lab;
        }
        const std::string where = tag({{"r", r}, {"n", n}});
        k.equal(i64(milnor::k_dim(r, n)), kf, where);
        c.equal(i64(milnor::k_dim(r, n)) - i64(milnor::l_dim(r, n)), lf, where);
        l.equal(i64(milnor::l_dim(r, n + 3)), lf2, where);
      }
    rec.tally("gr K_n is the sum of Kfrak_{a,b}, a+2b+1=n", k);
    rec.tally("gr Coker Q1 in degree n is the sum of Lfrak_{a,b}, a+2b+1=n", c);
    rec.tally("gr L_{n+3} is the sum of Lfrak_{a,b}, a+2b+1=n, a>=2", l);
  }
  {
    Tally t;
    for (int r : rs)
      for (int b = 0; b <= 12; ++b) {
        const std::string where = tag({{"r", r}, {"b", b}});
        t.equal(milnor::kfrak_dim(r, 1, b), static_cast<std::size_t>(polyalg::sym_dim(r, b + 1)), "Kfrak_1 " + where);
        t.equal(i64(milnor::lfrak_dim(r, 1, b)), pbar_oracle(r, b + 1), "Lfrak_1 " + where);
        t.equal(milnor::kfrak_dim(r, r + 1, b), 0U, "Kfrak_{r+1} " + where);
      }
    rec.tally("Kfrak and Lfrak in exterior degree one", t);
  }
  {
    Tally t;
    for (int r : rs) {
      if (r > 3) continue;
      for (int i = 0; i <= 2; ++i)
        for (int n = 0; n <= 14; ++n) {
          std::string where;
          t.expect(filtration_matches_tau(i, r, n, where), where);
        }
    }
    rec.tally("Q_i on the odd-exponent filtration induces tau_i", t);
  }
}

// ---------------------------------------------------------------- groupring

void suite_groupring(Recorder& rec, const VerifyOptions& opt) {
  if (!opt.rank || *opt.rank == 1) {
    Tally t;
    for (int n = 1; n <= 10; ++n)
      t.equal(groupring::rn_group(1, n).to_string(), FinAbGroup::from_cyclic({pow2(n)}).to_string(), tag({{"n", n}}));
    rec.tally("R^n of the cyclic group is Z/2^n", t);
  }
  std::vector<int> rs;
  if (!opt.rank)
    rs = {2, 3};
  else if (*opt.rank != 1)
    rs = ranks(opt, 2, 3, "groupring");
  for (int r : rs) {
    Tally order, socle, head, sub, chain, mod2;
    std::int64_t running = 0;
    for (int n = 1; n <= 6; ++n) {
      const std::string where = tag({{"n", n}});
      const auto rep = groupring::filtration_report(r, n);
      running += pbar_oracle(r, n);
      order.equal(i64(rep.quotient.log2_order()), running, where);
      order.expect(rep.quotient.is_finite(), "R^n not finite, " + where);
      socle.equal(i64(rep.two_torsion_dim), pbar_oracle(r, n), where);
      head.equal(i64(rep.head_dim), pbar_oracle(r, n), where);
      sub.equal(rep.subquotient.to_string(), FinAbGroup::elementary(static_cast<std::size_t>(pbar_oracle(r, n))).to_string(),
                where);
      if (n <= 5) {
        const auto p = groupring::aug_power_lattice(r, n);
        const auto p1 = groupring::aug_power_lattice(r, n + 1);
        for (std::size_t c = 0; c < p.basis.cols(); ++c) {
          IntMatrix col(p.basis.rows(), 1);
          for (std::size_t i = 0; i < p.basis.rows(); ++i) col.at(i, 0) = 2 * p.basis.at(i, c);
          chain.expect(p1.contains(col), "2 P^n not in P^{n+1}, " + where);
        }
        for (std::size_t c = 0; c < p1.basis.cols(); ++c) {
          IntMatrix col(p1.basis.rows(), 1);
          for (std::size_t i = 0; i < p1.basis.rows(); ++i) col.at(i, 0) = p1.basis.at(i, c);
          chain.expect(p.contains(col), "P^{n+1} not in P^n, " + where);
        }
      }
      mod2.equal(groupring::mod2_image_rank(r, n), groupring::f2_augmentation_power_dim(r, n), where);
    }
    const std::string rt = " " + tag({{"r", r}});
    rec.tally("order of R^n is the product of p_m dims" + rt, order);
    rec.tally("2-torsion of R^n has dim p_n" + rt, socle);
    rec.tally("R^n / 2 has dim p_n" + rt, head);
    rec.tally("P^n / P^{n+1} elementary of dim p_n" + rt, sub);
    rec.tally("2 P^n in P^{n+1} in P^n" + rt, chain);
    rec.tally("mod 2 image of P^n is the power of the F2 augmentation ideal" + rt, mod2);
  }
  if (!opt.rank) {
    Tally t;
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= 3; ++k) t.expect(groupring::completion_inclusion_check(n, k), tag({{"n", n}, {"k", k}}));
    rec.tally("P^{n+k}(F^n) divisible by 2^k", t);
  }
}

// ---------------------------------------------------------------- kumod

void suite_ku(Recorder& rec, const VerifyOptions& opt) {
  if (!opt.rank || *opt.rank == 1) {
    Tally tors, cyc;
    const auto ch = kumod::ku_cohom_table(1, 20);
    const auto h = kumod::ku_hom_table(1, 20);
    for (const auto& row : ch.rows) tors.equal(row.torsion_dim, 0, "cohomology " + tag({{"n", row.degree}}));
    for (const auto& row : h.rows) tors.equal(row.torsion_dim, 0, "homology " + tag({{"n", row.degree}}));
    for (int d = 1; d <= 8; ++d) {
      const auto& row = h.rows[static_cast<std::size_t>(2 * d - 1)];
      const FinAbGroup total = FinAbGroup::elementary(static_cast<std::size_t>(row.torsion_dim)).direct_sum(row.cotorsion);
      cyc.equal(total.to_string(), FinAbGroup::from_cyclic({pow2(d)}).to_string(), tag({{"d", d}}));
    }
    rec.tally("rank one: no v-torsion", tors);
    rec.tally("rank one: ku_{2d-1} is Z/2^d", cyc);
  }
  std::vector<int> rs;
  if (!opt.rank)
    rs = {2, 3, 4};
  else if (*opt.rank != 1)
    rs = ranks(opt, 2, 4, "ku");
  for (int r : rs) {
    const auto ch = kumod::ku_cohom_table(r, 24);
    const auto h = kumod::ku_hom_table(r, 20);
    Tally ses, odd, shadow, cot, modv, closed;
    for (int n = 1; n <= 20; ++n) {
      const std::string where = tag({{"n", n}});
      const auto& row = ch.rows[static_cast<std::size_t>(n)];
      if (n % 2 == 0) {
        ses.equal(i64(milnor::ltilde_dim(r, n)), i64(milnor::l_dim(r, n)) + pbar_oracle(r, n / 2), where);
        ses.equal(row.modv_dim, row.torsion_dim + row.cotorsion_modv_dim, "table " + where);
      } else {
        odd.equal(row.torsion_dim, row.modv_dim, where);
      }
    }
    for (int n = 0; n <= 20; ++n) {
      const std::string where = tag({{"n", n}});
      const auto& hr = h.rows[static_cast<std::size_t>(n)];
      shadow.equal(hr.torsion_dim, ch.rows[static_cast<std::size_t>(n + 4)].torsion_dim, where);
      if (n % 2 == 1) {
        const int d = (n + 1) / 2;
        cot.equal(hr.cotorsion.to_string(), groupring::rn_group(r, d).to_string(), where);
        std::int64_t want = 0;
        for (int m = 1; m <= d; ++m) want += pbar_oracle(r, m);
        cot.equal(i64(hr.cotorsion.log2_order()), want, "order " + where);
      } else {
        cot.equal(hr.cotorsion.to_string(), FinAbGroup::integers(1).to_string(), where);
      }
      if (n >= 1) modv.equal(hr.modv_dim, hr.torsion_dim + hr.cotorsion_modv_dim, where);
    }
    for (int n = 2; n <= 8; n += 2)
      for (int m = n; m <= 8; m += 2)
        closed.expect(kumod::kernel_closed_under_products(r, n, m), tag({{"n", n}, {"m", m}}));
    const std::string rt = " " + tag({{"r", r}});
    rec.tally("even degrees: Ltilde = L + p_d" + rt, ses);
    rec.tally("odd degrees: torsion = mod v" + rt, odd);
    rec.tally("homology torsion in degree n matches cohomology torsion in degree n+4" + rt, shadow);
    rec.tally("cotorsion in degree 2d-1 is R^d" + rt, cot);
    rec.tally("ku_n / v = torsion + cotorsion mod v" + rt, modv);
    rec.tally("Q1-kernel closed under products" + rt, closed);
  }
}

// ---------------------------------------------------------------- bicomplexes

struct BicomplexJob {
  milnor::BicomplexKind kind;
  int r;
  int i;
  milnor::TotalHomology result;
};

void suite_bicomplex(Recorder& rec, const VerifyOptions& opt) {
  const int bound = 20;
  std::vector<BicomplexJob> jobs;
  for (int r : ranks(opt, 1, 4, "bicomplex")) {
    for (int i = 0; i <= r; ++i) jobs.push_back({milnor::BicomplexKind::D, r, i, {}});
    for (int i = 1; i <= r; ++i) jobs.push_back({milnor::BicomplexKind::B, r, i, {}});
  }
  // largest first
  std::stable_sort(jobs.begin(), jobs.end(), [](const BicomplexJob& a, const BicomplexJob& b) {
    return a.r * 8 + a.i > b.r * 8 + b.i;
  });
  parallel_for(jobs.size(), opt.jobs, [&](std::size_t k) {
    auto& j = jobs[k];
    j.result = milnor::total_homology(milnor::bicomplex(j.kind, j.i, j.r, bound), j.r);
  });
  std::sort(jobs.begin(), jobs.end(), [](const BicomplexJob& a, const BicomplexJob& b) {
    return std::tie(a.r, a.kind, a.i) < std::tie(b.r, b.kind, b.i);
  });
  for (const auto& j : jobs) {
    const auto& th = j.result;
    const int r = j.r, i = j.i;
    Tally t;
    std::set<int> allowed;
    if (j.kind == milnor::BicomplexKind::B) {
      allowed = {i};
      for (int w = th.slice_min; w <= th.slice_max; ++w)
        t.equal(th.in_degree(i).at(w), w < 0 ? 0 : i64(milnor::lfrak_dim(r, i, w)), tag({{"H", i}, {"slice", w}}));
      for (const auto& [m, g] : th.by_degree)
        t.expect(allowed.count(m) > 0 || g.empty(), "homology outside degree i at " + std::to_string(m));
      rec.tally("Tot B(" + std::to_string(i) + ") homology is Lfrak_" + std::to_string(i) + " in degree " +
                    std::to_string(i) + " " + tag({{"r", r}}),
                t);
      continue;
    }
    allowed = {0, i};
    for (const auto& [m, g] : th.by_degree)
      t.expect(allowed.count(m) > 0 || g.empty(), "homology in degree " + std::to_string(m));
    if (i == 0) {
      for (int w = th.slice_min; w <= th.slice_max; ++w)
        t.equal(th.in_degree(0).at(w), i64(polyalg::sym_dim(r, w)), tag({{"slice", w}}));
      rec.tally("Tot D(0) homology is S in degree 0 " + tag({{"r", r}}), t);
      continue;
    }
    // degree 0: i+1 units plus the p_d tail starting at the lowest slice
    std::int64_t units = 0;
    for (int w = th.slice_min; w <= th.slice_max; ++w) {
      const int d = w + 2 * i;
      const std::int64_t rest = th.in_degree(0).at(w) - (d >= 1 ? pbar_oracle(r, d) : 0);
      t.expect(rest == 0 || rest == 1, "H_0 residual at slice " + std::to_string(w));
      units += rest;
    }
    t.equal(units, i + 1, "units in H_0");
    const auto top = th.in_degree(i);
    auto lf = [r, i](int b) -> std::int64_t { return b < 0 ? 0 : i64(milnor::lfrak_dim(r, i + 2, b)); };
    if (i + 2 > r) {
      t.expect(top.empty(), "H_i should vanish");
    } else {
      const auto m = localcoh::match_shift(top, lf, th.slice_min, th.slice_max);
      t.expect(m.matched, "H_i is not a shift of Lfrak_{i+2}");
    }
    rec.tally("Tot D(" + std::to_string(i) + ") homology: units + p_d in degree 0, Lfrak_" + std::to_string(i + 2) +
                  " in degree " + std::to_string(i) + " " + tag({{"r", r}}),
              t);
  }
  Tally jt;
  for (int r : ranks(opt, 1, 4, "bicomplex"))
    for (int b = 0; b <= bound; ++b) {
      const GradedDim h = milnor::j_complex_homology(r, b);
      jt.expect(h == GradedDim{{0, pbar_oracle(r, b + 1)}}, tag({{"r", r}, {"b", b}}) + ": " + h.to_string());
    }
  rec.tally("Kfrak complexes: homology p_{b+1} in degree 0 only", jt);
}

// ---------------------------------------------------------------- local duality

void suite_duality(Recorder& rec, const VerifyOptions& opt) {
  const int lo = -12, hi = 12;
  for (int r : ranks(opt, 1, 3, "duality"))
    for (int a = 0; a <= r; ++a) {
      const auto dual = localcoh::dual_truncated_koszul(r, a, lo, hi);
      const auto trunc = localcoh::truncated_koszul(r, r - a, lo - 8, hi + 8);
      const auto hd = dual.homology();
      const auto ht = trunc.homology();
      bool found = false;
      int shift = 0;
      for (int s = -8; s <= 8 && !found; ++s) {
        bool ok = true;
        for (int w = lo; w <= hi && ok; ++w)
          for (int k = 0; k <= r && ok; ++k) ok = dual.dim(w, k) == trunc.dim(w + s, k);
        for (int k = 0; k <= r && ok; ++k) {
          const GradedDim x = hd.count(k) ? hd.at(k) : GradedDim{};
          const GradedDim y = ht.count(k) ? ht.at(k).shifted(-s).restricted(lo, hi) : GradedDim{};
          ok = x == y;
        }
        if (ok) {
          found = true;
          shift = s;
        }
      }
      rec.check("Hom dual of the truncation above " + std::to_string(a) + " matches the truncation below " +
                    std::to_string(r - a) + " " + tag({{"r", r}}),
                found, found ? "dims and homology agree, shift " + std::to_string(shift) : "no common shift in -8..8");
    }
}

// ---------------------------------------------------------------- local cohomology

std::string table_diff(const localcoh::LocalCohomologyTable& a, const localcoh::LocalCohomologyTable& b) {
  for (std::size_t i = 0; i < std::max(a.h.size(), b.h.size()); ++i)
    if (!(a.at(static_cast<int>(i)) == b.at(static_cast<int>(i))))
      return "H^" + std::to_string(i) + ": " + a.at(static_cast<int>(i)).to_string() + " vs " +
             b.at(static_cast<int>(i)).to_string();
  return {};
}

void suite_localcoh(Recorder& rec, const VerifyOptions& opt) {
  const int bound = 16;
  const auto rs = ranks(opt, 2, 3, "localcoh");
  struct Job {
    int r;
    localcoh::ModuleSpec spec;
    localcoh::LocalCohomologyTable cech;
    localcoh::LocalCohomologyTable res;
    std::string error;
  };
  std::vector<Job> jobs;
  for (int r : rs) {
    for (int i = 1; i <= r; ++i) jobs.push_back({r, {localcoh::ModuleKind::Lfrak, r, i}, {}, {}, {}});
    for (auto kind : {localcoh::ModuleKind::Free, localcoh::ModuleKind::Kmodule, localcoh::ModuleKind::Kunital,
                      localcoh::ModuleKind::TorsKu})
      jobs.push_back({r, {kind, r, 1}, {}, {}, {}});
  }
  parallel_for(jobs.size(), opt.jobs, [&](std::size_t k) {
    auto& j = jobs[k];
    try {
      const auto pres = localcoh::present_module(j.spec);
      j.cech = localcoh::cech_local_cohomology(pres, -bound, bound);
      j.res = localcoh::resolution_local_cohomology(pres, -bound, bound);
    } catch (const std::exception& e) {
      j.error = e.what();
    }
  });
  for (const auto& j : jobs) {
    const int r = j.r;
    const std::string name = j.spec.to_string();
    if (!j.error.empty()) {
      rec.check("local cohomology of " + name, false, j.error);
      continue;
    }
    const std::string diff = table_diff(j.cech, j.res);
    rec.check("Cech route equals resolution route for " + name, diff.empty(),
              diff.empty() ? "all H^i agree on -16..16" : diff);
    const auto& t = j.cech;
    auto vanish_except = [&](std::set<int> keep) {
      std::string bad;
      for (int m = 0; m <= r; ++m)
        if (!keep.count(m) && !t.at(m).empty() && bad.empty()) bad = "H^" + std::to_string(m) + " = " + t.at(m).to_string();
      return bad;
    };
    if (j.spec.kind == localcoh::ModuleKind::Free) {
      const std::string bad = vanish_except({r});
      auto sym = [r](int b) -> std::int64_t { return b > 0 ? 0 : i64(polyalg::sym_dim(r, -b)); };
      const auto m = localcoh::match_shift(t.at(r), sym, -bound, bound);
      rec.check("free module: depth r and H^r = DS " + tag({{"r", r}}), bad.empty() && m.matched,
                bad.empty() ? (m.matched ? "shift " + std::to_string(m.shift) : "H^r is not DS") : bad);
      continue;
    }
    if (j.spec.kind != localcoh::ModuleKind::Lfrak) continue;
    const int i = j.spec.index;
    auto lfrak_of = [r](int a) {
      return [r, a](int b) -> std::int64_t { return b < 0 ? 0 : i64(milnor::lfrak_dim(r, a, b)); };
    };
    if (i == 1) {
      const std::string bad = vanish_except({1});
      const auto m = localcoh::match_units_plus_dual(t.at(1), lfrak_of(1), r, -bound, bound);
      rec.check("H(Lfrak_1) = F^r + D Lfrak_1 in degree 1 " + tag({{"r", r}}), bad.empty() && m.matched,
                bad.empty() ? (m.matched ? "dual shift " + std::to_string(m.shift) : "no match") : bad);
    } else if (i < r) {
      const std::string bad = vanish_except({i, r});
      const auto mi = localcoh::match_units_plus_dual(t.at(i), lfrak_of(1), r - i + 1, -bound, bound);
      const auto lr = lfrak_of(r - i + 2);
      const auto mr = localcoh::match_shift(t.at(r), [&](int b) { return lr(-b); }, -bound, bound);
      rec.check("H(Lfrak_" + std::to_string(i) + "): F^{r-i+1} + D Lfrak_1 in degree i, D Lfrak_{r-i+2} in degree r " +
                    tag({{"r", r}}),
                bad.empty() && mi.matched && mr.matched,
                !bad.empty() ? bad : (!mi.matched ? "degree i mismatch" : (!mr.matched ? "degree r mismatch" : "matched")));
      // kernel of H^1(Lfrak_1) -> H^i(Lfrak_i) has i-1 units
      const auto& one = std::find_if(jobs.begin(), jobs.end(), [&](const Job& x) {
        return x.r == r && x.spec.kind == localcoh::ModuleKind::Lfrak && x.spec.index == 1;
      });
      bool ok = false;
      if (one != jobs.end() && one->error.empty()) {
        const auto m1 = localcoh::match_units_plus_dual(one->cech.at(1), lfrak_of(1), r, -bound, bound);
        ok = m1.matched && mi.matched &&
             static_cast<int>(m1.unit_degrees.size()) - static_cast<int>(mi.unit_degrees.size()) == i - 1;
      }
      rec.check("H^1(Lfrak_1) -> H^" + std::to_string(i) + "(Lfrak_" + std::to_string(i) + ") loses " +
                    std::to_string(i - 1) + " units " + tag({{"r", r}}),
                ok, ok ? "unit counts differ by i-1" : "unit counts do not differ by i-1");
    } else {
      const std::string bad = vanish_except({r});
      auto sym = [r](int b) -> std::int64_t { return b > 0 ? 0 : i64(polyalg::sym_dim(r, -b)); };
      const auto m = localcoh::match_shift(t.at(r), sym, -bound, bound);
      rec.check("H(Lfrak_r) = DS in degree r " + tag({{"r", r}}), bad.empty() && m.matched,
                bad.empty() ? (m.matched ? "shift " + std::to_string(m.shift) : "H^r is not DS") : bad);
    }
  }
  for (int r : rs) {
    Tally t;
    const auto integ = localcoh::integral_cech_local_cohomology(r, bound);
    t.expect(integ.h[0].size() == 1 && integ.h[0].count(0) == 1 && integ.h[0].at(0) == FinAbGroup::integers(1),
             "H^0 is not Z in degree 0");
    t.equal(integ.zero_index, 2, "index of H^0 in Z");
    t.expect(integ.h[1].empty(), "H^1 nonzero");
    for (int j = 2; j < r; ++j)
      t.expect(integ.h[j].size() == 1 && integ.h[j].begin()->second == FinAbGroup::elementary(1),
               "H^" + std::to_string(j) + " is not a single F");
    GradedDim top;
    bool elementary = true;
    for (const auto& [n, g] : integ.h[r]) {
      elementary = elementary && g.is_finite() && g.exponent() <= 2;
      top.set(n, i64(g.two_rank()));
    }
    t.expect(elementary, "H^r not elementary abelian");
    auto kd = [r](int b) -> std::int64_t { return b < 1 ? 0 : i64(milnor::k_dim(r, b)); };
    t.expect(localcoh::match_units_plus_dual(top, kd, 1, -bound, bound).matched, "H^r is not F + DK");
    rec.tally("integral local cohomology of HZ*(BV) " + tag({{"r", r}}), t);
    const auto conn = localcoh::connecting_hz_local_cohom(r, bound);
    rec.check("connecting map H^0(F) -> H^1(K>0) nontrivial " + tag({{"r", r}}), conn.nontrivial(),
              "ranks " + std::to_string(conn.rank_from_h0) + "/" + std::to_string(conn.rank_from_h1) +
                  (conn.cocycle_nonzero ? ", cocycle nonzero" : ", cocycle zero"));
  }
}

// ---------------------------------------------------------------- spectral sequence

void suite_ss(Recorder& rec, const VerifyOptions& opt) {
  const int bound = 12;
  for (int r : ranks(opt, 2, 3, "ss")) {
    const std::string rt = " " + tag({{"r", r}});
    ss::KuSpectralSequence seq;
    ss::AbutmentReport ab;
    ss::HZSpectralSequence hz;
    ss::AbutmentReport hab;
    try {
      seq = ss::ku_spectral_sequence(r, bound);
      ab = ss::einfty_consistency(r, bound);
      hz = ss::hz_spectral_sequence(r, bound);
      hab = ss::hz_abutment(r, bound);
    } catch (const std::exception& e) {
      rec.check("spectral sequence assembly" + rt, false, e.what());
      continue;
    }
    {
      Tally t;
      for (const auto& p : ab.problems) t.expect(false, p);
      for (const auto& row : ab.rows) {
        std::ostringstream os;
        os << "m=" << row.degree << ": E-infinity " << row.einfty_log2 << "+Z^" << row.einfty_free << " vs ku "
           << row.target_log2 << "+Z^" << row.target_free;
        t.expect(row.equal(), os.str());
      }
      rec.tally("E-infinity matches ku_m(BV) for m <= 12" + rt, t);
    }
    {
      Tally t;
      for (int s = 1 - r; s <= -2; ++s) t.expect(seq.einfty.column(s).empty(), "column " + std::to_string(s) + " survives");
      t.expect(seq.e1.vanishes_outside_band() && seq.einfty.vanishes_outside_band(), "entries outside -r..0");
      if (r == 2)
        for (const auto& [s, g] : seq.e1.columns) t.expect(s == -1 || s == -2 || g.empty(), "unexpected column");
      rec.tally("middle E-infinity columns vanish" + rt, t);
    }
    {
      Tally t;
      const GradedDim want = seq.layers.from(r - 1).restricted(seq.e1.lo, seq.e1.hi);
      t.expect(seq.einfty.column(-1) == want, "column -1 is not the v^{r-1} part");
      // at odd m = 2d-1 the surviving part of column -1 is the cotorsion R^d
      for (int m = 1; m <= bound; ++m) {
        std::int64_t expect = 0;
        if (m % 2 == 1)
          for (int b = 0; b < (m + 1) / 2; ++b) expect += pbar_oracle(r, b + 1);
        t.equal(seq.einfty.column(-1).at(m), expect, tag({{"m", m}}));
      }
      rec.tally("column -1 at E-infinity is v^{r-1} H^1(Q)" + rt, t);
    }
    {
      Tally t;
      for (int i = 0; i <= r - 3; ++i) {
        const GradedDim layer =
            seq.layers.layers[static_cast<std::size_t>(i)].shifted(-1).restricted(seq.e1.lo, seq.e1.hi);
        t.expect(layer == seq.e1.column(-(i + 2)),
                 "layer " + std::to_string(i) + " vs column " + std::to_string(-(i + 2)));
      }
      for (int m = seq.e1.lo + 1; m <= seq.e1.hi; ++m) {
        std::int64_t killed = 0;
        for (int s = -r; s <= -2; ++s) killed += seq.e1.column(s).at(m - 1) - seq.einfty.column(s).at(m - 1);
        const std::int64_t lost = seq.e1.column(-1).at(m) - seq.einfty.column(-1).at(m);
        t.equal(lost, killed, "bookkeeping " + tag({{"m", m}}));
      }
      if (r >= 3) {
        // the s = -2 column is (r-1) units plus D Lfrak_1 in internal degrees
        GradedDim internal;
        for (const auto& [m, d] : seq.e1.column(-2).entries()) {
          if ((m % 2 + 2) % 2 != 0) {
            t.expect(false, "odd total degree in column -2");
            continue;
          }
          internal.set((-m - 8) / 2, d);
        }
        auto lf = [r](int b) -> std::int64_t { return b < 0 ? 0 : i64(milnor::lfrak_dim(r, 1, b)); };
        const int nlo = (-seq.e1.hi - 8) / 2, nhi = (-seq.e1.lo - 8) / 2;
        t.expect(localcoh::match_units_plus_dual(internal, lf, r - 1, nlo, nhi).matched,
                 "column -2 is not F^{r-1} + D Lfrak_1");
      }
      rec.tally("differentials from column -1 account for every killed class" + rt, t);
    }
    {
      Tally t;
      for (const auto& p : hz.problems) t.expect(false, p);
      t.equal(hz.permanent_index, std::int64_t{1} << (r - 1), "permanent cycle index");
      t.equal(hz.h0_index, 2, "index of H^0");
      for (const auto& p : hab.problems) t.expect(false, p);
      for (const auto& row : hab.rows) t.expect(row.equal(), "HZ abutment " + tag({{"m", row.degree}}));
      rec.tally("HZ: zero column permanent cycles of index 2^{r-1} and abutment" + rt, t);
    }
  }
}

// ----------------------------------------------------------------

struct Entry {
  SuiteInfo info;
  std::function<void(Recorder&, const VerifyOptions&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {{"milnor", 1, "homology of the Milnor derivations"}, suite_milnor},
      {{"kfunctor", 2, "Q1 homology on the Bockstein kernel"}, suite_kfunctor},
      {{"groupring", 3, "augmentation ideal filtration of the group ring"}, suite_groupring},
      {{"ku", 4, "ku cohomology and homology tables"}, suite_ku},
      {{"bicomplex", 5, "total homology of the bicomplexes"}, suite_bicomplex},
      {{"duality", 6, "local duality for truncated Koszul complexes"}, suite_duality},
      {{"localcoh", 7, "local cohomology tables"}, suite_localcoh},
      {{"ss", 8, "local cohomology spectral sequence"}, suite_ss},
      {{"exactla", 0, "exact linear algebra"}, suite_exactla},
      {{"polyalg", 0, "polynomial and exterior bases"}, suite_polyalg},
      {{"structure", 0, "derivations, filtrations and functor identities"}, suite_structure},
  };
  return r;
}

}  // namespace

bool SuiteReport::passed() const { return !checks.empty() && failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

std::string SuiteReport::summary_line() const {
  std::ostringstream os;
  os << (passed() ? "PASS" : "FAIL");
  if (criterion > 0) os << " criterion " << criterion;
  os << " [" << suite << "] " << title << " (" << checks.size() - failures() << "/" << checks.size() << " checks)";
  return os.str();
}

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> out = [] {
    std::vector<SuiteInfo> v;
    for (const auto& e : registry()) v.push_back(e.info);
    return v;
  }();
  return out;
}

bool is_suite(const std::string& name) {
  const auto& s = suites();
  return std::any_of(s.begin(), s.end(), [&](const SuiteInfo& x) { return x.name == name; });
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
  const auto& reg = registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const Entry& e) { return e.info.name == name; });
  if (it == reg.end()) throw std::invalid_argument("unknown suite: " + name);
  SuiteReport rep;
  rep.suite = it->info.name;
  rep.criterion = it->info.criterion;
  rep.title = it->info.title;
  Recorder rec(rep);
  const auto start = std::chrono::steady_clock::now();
  try {
    it->run(rec, opt);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    rec.check("suite completed", false, e.what());
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const VerifyOptions& opt) {
  for (const auto& n : names)
    if (!is_suite(n)) throw std::invalid_argument("unknown suite: " + n);
  std::vector<SuiteReport> out(names.size());
  std::vector<std::string> errors(names.size());
  parallel_for(names.size(), opt.jobs, [&](std::size_t k) {
    try {
      out[k] = run_suite(names[k], opt);
    } catch (const std::invalid_argument& e) {
      errors[k] = e.what();
    }
  });
  for (const auto& e : errors)
    if (!e.empty()) throw std::invalid_argument(e);
  return out;
}

std::vector<SuiteReport> run_acceptance(const VerifyOptions& opt) {
  std::vector<std::string> names;
  for (const auto& s : suites())
    if (s.criterion > 0) names.push_back(s.name);
  return run_suites(names, opt);
}

std::vector<SuiteReport> run_all(const VerifyOptions& opt) {
  std::vector<std::string> names;
  for (const auto& s : suites()) names.push_back(s.name);
  return run_suites(names, opt);
}

}  // namespace kuforge::verify
