#include "kuforge/f2matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace kuforge::exactla {

namespace {

std::size_t words_for(std::size_t cols) { return (cols + F2Matrix::kWordBits - 1) / F2Matrix::kWordBits; }

template <typename F>
void for_each_set_bit(std::span<const F2Matrix::Word> words, F&& f) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    F2Matrix::Word x = words[w];
    while (x != 0) {
      const int b = std::countr_zero(x);
      f(w * F2Matrix::kWordBits + static_cast<std::size_t>(b));
      x &= x - 1;
    }
  }
}

}  // namespace

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_(words_for(cols)), data_(rows * words_for(cols), 0) {}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void F2Matrix::xor_row_from(std::size_t dst, const F2Matrix& other, std::size_t src) {
  Word* d = data_.data() + dst * wpr_;
  const Word* s = other.data_.data() + src * other.wpr_;
  for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

void F2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * wpr_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * wpr_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * wpr_));
}

bool F2Matrix::row_is_zero(std::size_t r) const {
  const auto rw = row(r);
  return std::all_of(rw.begin(), rw.end(), [](Word w) { return w == 0; });
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for_each_set_bit(row(r), [&](std::size_t c) { t.set(c, r, true); });
  }
  return t;
}

F2Matrix F2Matrix::column(std::size_t c) const {
  F2Matrix out(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, c)) out.set(r, 0, true);
  return out;
}

F2Matrix F2Matrix::select_columns(std::span<const std::size_t> idx) const {
  F2Matrix out(rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < idx.size(); ++j)
      if (get(r, idx[j])) out.set(r, j, true);
  return out;
}

F2Matrix F2Matrix::select_rows(std::span<const std::size_t> idx) const {
  F2Matrix out(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(idx[i] * wpr_), wpr_,
                out.data_.begin() + static_cast<std::ptrdiff_t>(i * wpr_));
  return out;
}

F2Matrix F2Matrix::hconcat(const F2Matrix& a, const F2Matrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hconcat: row count mismatch");
  F2Matrix out(a.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::copy_n(a.data_.begin() + static_cast<std::ptrdiff_t>(r * a.wpr_), a.wpr_,
                out.data_.begin() + static_cast<std::ptrdiff_t>(r * out.wpr_));
    for_each_set_bit(b.row(r), [&](std::size_t c) { out.set(r, a.cols_ + c, true); });
  }
  return out;
}

F2Matrix F2Matrix::vconcat(const F2Matrix& a, const F2Matrix& b) {
  if (a.cols_ != b.cols_) throw std::invalid_argument("vconcat: column count mismatch");
  F2Matrix out(a.rows_ + b.rows_, a.cols_);
  std::copy(a.data_.begin(), a.data_.end(), out.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(),
            out.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
  return out;
}

bool F2Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

std::size_t F2Matrix::popcount() const {
  std::size_t n = 0;
  for (Word w : data_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("F2Matrix product: shape mismatch");
  F2Matrix out(rows_, rhs.cols_);
  if (rhs.cols_ == 0) return out;
  for (std::size_t r = 0; r < rows_; ++r) {
    Word* d = out.data_.data() + r * out.wpr_;
    for_each_set_bit(row(r), [&](std::size_t k) {
      const Word* s = rhs.data_.data() + k * rhs.wpr_;
      for (std::size_t w = 0; w < out.wpr_; ++w) d[w] ^= s[w];
    });
  }
  return out;
}

F2Matrix F2Matrix::operator+(const F2Matrix& rhs) const {
  F2Matrix out = *this;
  out += rhs;
  return out;
}

F2Matrix& F2Matrix::operator+=(const F2Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("F2Matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] ^= rhs.data_[i];
  return *this;
}

std::string F2Matrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
    s.push_back('\n');
  }
  return s;
}

Echelon rref(F2Matrix m) {
  Echelon e;
  const std::size_t rows = m.rows();
  const std::size_t wpr = m.words_per_row();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < rows; ++c) {
    const std::size_t w = c / F2Matrix::kWordBits;
    const F2Matrix::Word bit = F2Matrix::Word{1} << (c % F2Matrix::kWordBits);
    std::size_t p = lead;
    while (p < rows && (m.row(p)[w] & bit) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(p, lead);
    const auto piv = m.row(lead);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead) continue;
      auto rw = m.row(r);
      if ((rw[w] & bit) == 0) continue;
      for (std::size_t k = w; k < wpr; ++k) rw[k] ^= piv[k];
    }
    e.pivots.push_back(c);
    ++lead;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t f2_rank(F2Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t wpr = m.words_per_row();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < rows; ++c) {
    const std::size_t w = c / F2Matrix::kWordBits;
    const F2Matrix::Word bit = F2Matrix::Word{1} << (c % F2Matrix::kWordBits);
    std::size_t p = lead;
    while (p < rows && (m.row(p)[w] & bit) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(p, lead);
    const auto piv = m.row(lead);
    for (std::size_t r = lead + 1; r < rows; ++r) {
      auto rw = m.row(r);
      if ((rw[w] & bit) == 0) continue;
      for (std::size_t k = w; k < wpr; ++k) rw[k] ^= piv[k];
    }
    ++lead;
  }
  return lead;
}

namespace {

F2Matrix kernel_from_echelon(const Echelon& e, std::size_t cols) {
  std::vector<char> is_pivot(cols, 0);
  for (std::size_t p : e.pivots) is_pivot[p] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  F2Matrix k(cols, free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const std::size_t f = free_cols[j];
    k.set(f, j, true);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      if (e.reduced.get(i, f)) k.set(e.pivots[i], j, true);
  }
  return k;
}

}  // namespace

F2Decomposition f2_decompose(const F2Matrix& m) {
  Echelon e = rref(m);
  F2Decomposition d;
  d.rank = e.rank();
  d.kernel_basis = kernel_from_echelon(e, m.cols());
  d.image_basis = m.select_columns(e.pivots);
  return d;
}

F2Matrix f2_kernel(const F2Matrix& m) { return kernel_from_echelon(rref(m), m.cols()); }

F2Matrix f2_image(const F2Matrix& m) { return m.select_columns(rref(m).pivots); }

std::optional<F2Matrix> f2_solve(const F2Matrix& a, const F2Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("f2_solve: row count mismatch");
  const Echelon e = rref(F2Matrix::hconcat(a, b));
  F2Matrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    const std::size_t p = e.pivots[i];
    if (p >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (e.reduced.get(i, a.cols() + j)) x.set(p, j, true);
  }
  return x;
}

F2Matrix f2_inverse(const F2Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("f2_inverse: matrix not square");
  const std::size_t n = m.rows();
  const Echelon e = rref(F2Matrix::hconcat(m, F2Matrix::identity(n)));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw std::domain_error("f2_inverse: singular matrix");
  F2Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (e.reduced.get(i, n + j)) inv.set(i, j, true);
  return inv;
}

F2Matrix f2_left_inverse(const F2Matrix& m) {
  const std::size_t k = m.cols();
  const Echelon e = rref(m.transpose());
  if (e.rank() != k) throw std::domain_error("f2_left_inverse: columns are dependent");
  const F2Matrix inv = f2_inverse(m.select_rows(e.pivots));
  F2Matrix x(k, m.rows());
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t target = e.pivots[j];
    for (std::size_t i = 0; i < k; ++i)
      if (inv.get(i, j)) x.set(i, target, true);
  }
  return x;
}

}  // namespace kuforge::exactla
