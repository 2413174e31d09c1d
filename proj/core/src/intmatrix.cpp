#include "kuforge/intmatrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace kuforge::exactla {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> row_major)
    : IntMatrix(rows, cols) {
  if (row_major.size() != rows * cols) throw std::invalid_argument("IntMatrix: initializer size mismatch");
  std::size_t i = 0;
  for (long v : row_major) data_[i++] = v;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<long>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix product: shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (rhs.at(k, j) != 0) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  IntMatrix out(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out.at(i, j) = at(i, idx[j]);
  return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hconcat: row count mismatch");
  IntMatrix out(a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, a.cols_ + j) = b.at(i, j);
  }
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && at(i, j) != 0) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

mpz_class determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a.at(i, j) = t;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

int cmpabs(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Working state for the Smith reduction; transforms are optional.
class SmithReducer {
 public:
  SmithReducer(const IntMatrix& m, bool track) : a_(m), track_(track) {
    if (track_) {
      u_ = IntMatrix::identity(m.rows());
      v_ = IntMatrix::identity(m.cols());
    }
  }

  std::size_t run() {
    const std::size_t rows = a_.rows();
    const std::size_t cols = a_.cols();
    std::size_t t = 0;
    while (t < rows && t < cols) {
      if (!move_min_to(t, t, rows, t, cols)) break;
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a_.at(i, t) == 0) continue;
          mpz_class q;
          mpz_tdiv_q(q.get_mpz_t(), a_.at(i, t).get_mpz_t(), a_.at(t, t).get_mpz_t());
          add_row(i, t, -q);
          if (a_.at(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a_.at(t, j) == 0) continue;
          mpz_class q;
          mpz_tdiv_q(q.get_mpz_t(), a_.at(t, j).get_mpz_t(), a_.at(t, t).get_mpz_t());
          add_col(j, t, -q);
          if (a_.at(t, j) != 0) clean = false;
        }
        if (!clean) {
          move_min_in_cross(t, rows, cols);
          continue;
        }
        std::size_t bad_row = rows;
        for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a_.at(i, j) != 0 && !mpz_divisible_p(a_.at(i, j).get_mpz_t(), a_.at(t, t).get_mpz_t())) {
              bad_row = i;
              break;
            }
        if (bad_row == rows) break;
        add_row(t, bad_row, 1);
      }
      if (a_.at(t, t) < 0) negate_row(t);
      ++t;
    }
    return t;
  }

  IntMatrix& a() { return a_; }
  IntMatrix& u() { return u_; }
  IntMatrix& v() { return v_; }

 private:
  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < a_.cols(); ++j) std::swap(a_.at(i, j), a_.at(k, j));
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_.at(i, j), u_.at(k, j));
  }
  void swap_cols(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_.at(r, i), a_.at(r, k));
    if (track_)
      for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_.at(r, i), v_.at(r, k));
  }
  // row i += q * row k
  void add_row(std::size_t i, std::size_t k, const mpz_class& q) {
    for (std::size_t j = 0; j < a_.cols(); ++j)
      if (a_.at(k, j) != 0) a_.at(i, j) += q * a_.at(k, j);
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j)
        if (u_.at(k, j) != 0) u_.at(i, j) += q * u_.at(k, j);
  }
  // col j += q * col k
  void add_col(std::size_t j, std::size_t k, const mpz_class& q) {
    for (std::size_t r = 0; r < a_.rows(); ++r)
      if (a_.at(r, k) != 0) a_.at(r, j) += q * a_.at(r, k);
    if (track_)
      for (std::size_t r = 0; r < v_.rows(); ++r)
        if (v_.at(r, k) != 0) v_.at(r, j) += q * v_.at(r, k);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_.at(i, j) = -a_.at(i, j);
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j) u_.at(i, j) = -u_.at(i, j);
  }

  bool move_min_to(std::size_t t, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    std::size_t bi = r1, bj = c1;
    mpz_class best;
    for (std::size_t i = r0; i < r1; ++i)
      for (std::size_t j = c0; j < c1; ++j) {
        const mpz_class& x = a_.at(i, j);
        if (x == 0) continue;
        if (bi == r1 || cmpabs(x, best) < 0) {
          best = x;
          bi = i;
          bj = j;
          if (best == 1 || best == -1) goto found;
        }
      }
    if (bi == r1) return false;
  found:
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void move_min_in_cross(std::size_t t, std::size_t rows, std::size_t cols) {
    std::size_t bi = t, bj = t;
    mpz_class best = a_.at(t, t);
    for (std::size_t i = t + 1; i < rows; ++i)
      if (a_.at(i, t) != 0 && cmpabs(a_.at(i, t), best) < 0) {
        best = a_.at(i, t);
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < cols; ++j)
      if (a_.at(t, j) != 0 && cmpabs(a_.at(t, j), best) < 0) {
        best = a_.at(t, j);
        bi = t;
        bj = j;
      }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
  bool track_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithReducer red(m, true);
  SmithForm out;
  out.rank = red.run();
  out.d = std::move(red.a());
  out.u = std::move(red.u());
  out.v = std::move(red.v());
  return out;
}

std::vector<mpz_class> smith_diagonal(const IntMatrix& m) {
  SmithReducer red(m, false);
  const std::size_t rank = red.run();
  std::vector<mpz_class> d;
  d.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) d.push_back(red.a().at(i, i));
  return d;
}

FinAbGroup::FinAbGroup(std::vector<mpz_class> invariant_factors, std::size_t free_rank)
    : factors_(std::move(invariant_factors)), free_rank_(free_rank) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw std::invalid_argument("FinAbGroup: invariant factor below 2");
    if (i > 0 && !mpz_divisible_p(factors_[i].get_mpz_t(), factors_[i - 1].get_mpz_t()))
      throw std::invalid_argument("FinAbGroup: divisibility chain broken");
  }
}

FinAbGroup FinAbGroup::from_cyclic(const std::vector<mpz_class>& orders, std::size_t extra_free) {
  std::size_t free = extra_free;
  IntMatrix d(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] == 0)
      ++free;
    else
      d.at(i, i) = abs(orders[i]);
  }
  std::vector<mpz_class> f;
  for (const mpz_class& x : smith_diagonal(d))
    if (x > 1) f.push_back(x);
  return FinAbGroup(std::move(f), free);
}

FinAbGroup FinAbGroup::elementary(std::size_t dim, long p) {
  return FinAbGroup(std::vector<mpz_class>(dim, mpz_class(p)), 0);
}

mpz_class FinAbGroup::torsion_order() const {
  mpz_class o = 1;
  for (const mpz_class& f : factors_) o *= f;
  return o;
}

std::size_t FinAbGroup::log2_order() const {
  std::size_t total = 0;
  for (const mpz_class& f : factors_) {
    if (mpz_popcount(f.get_mpz_t()) != 1) throw std::domain_error("log2_order: not a 2-group");
    total += mpz_sizeinbase(f.get_mpz_t(), 2) - 1;
  }
  return total;
}

std::size_t FinAbGroup::two_rank() const {
  return static_cast<std::size_t>(
      std::count_if(factors_.begin(), factors_.end(), [](const mpz_class& f) { return mpz_even_p(f.get_mpz_t()); }));
}

mpz_class FinAbGroup::exponent() const { return factors_.empty() ? mpz_class(1) : factors_.back(); }

FinAbGroup FinAbGroup::direct_sum(const FinAbGroup& other) const {
  std::vector<mpz_class> all = factors_;
  all.insert(all.end(), other.factors_.begin(), other.factors_.end());
  return from_cyclic(all, free_rank_ + other.free_rank_);
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < factors_.size();) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    os << (first ? "" : " + ");
    if (j - i == 1)
      os << "Z/" << factors_[i].get_str();
    else
      os << "(Z/" << factors_[i].get_str() << ")^" << (j - i);
    first = false;
    i = j;
  }
  if (free_rank_ > 0) {
    os << (first ? "" : " + ") << "Z";
    if (free_rank_ > 1) os << '^' << free_rank_;
  }
  return os.str();
}

FinAbGroup cokernel_structure(const IntMatrix& m) {
  const std::vector<mpz_class> d = smith_diagonal(m);
  std::vector<mpz_class> f;
  for (const mpz_class& x : d)
    if (x > 1) f.push_back(x);
  return FinAbGroup(std::move(f), m.rows() - d.size());
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  std::vector<std::size_t> idx;
  for (std::size_t j = s.rank; j < m.cols(); ++j) idx.push_back(j);
  return s.v.select_columns(idx);
}

std::optional<IntMatrix> integer_solve(const SmithForm& a_snf, const IntMatrix& b) {
  // a = u^-1 d v^-1, so a x = b  <=>  d (v^-1 x) = u b.
  const IntMatrix ub = a_snf.u * b;
  const std::size_t n = a_snf.v.rows();
  IntMatrix y(n, b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t i = 0; i < ub.rows(); ++i) {
      const mpz_class& rhs = ub.at(i, c);
      if (i < a_snf.rank) {
        const mpz_class& di = a_snf.d.at(i, i);
        if (!mpz_divisible_p(rhs.get_mpz_t(), di.get_mpz_t())) return std::nullopt;
        mpz_divexact(y.at(i, c).get_mpz_t(), rhs.get_mpz_t(), di.get_mpz_t());
      } else if (rhs != 0) {
        return std::nullopt;
      }
    }
  }
  return a_snf.v * y;
}

}  // namespace kuforge::exactla
