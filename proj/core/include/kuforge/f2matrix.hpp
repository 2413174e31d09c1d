#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kuforge::exactla {

// Dense matrix over F2, rows packed into 64-bit words.
// Convention throughout: columns index the source, rows the target.
class F2Matrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);

  static F2Matrix identity(std::size_t n);
  static F2Matrix zero(std::size_t rows, std::size_t cols) { return F2Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * wpr_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    Word& w = data_[r * wpr_ + c / kWordBits];
    const Word bit = Word{1} << (c % kWordBits);
    w = v ? (w | bit) : (w & ~bit);
  }
  void flip(std::size_t r, std::size_t c) {
    data_[r * wpr_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
  }

  std::span<Word> row(std::size_t r) { return {data_.data() + r * wpr_, wpr_}; }
  std::span<const Word> row(std::size_t r) const { return {data_.data() + r * wpr_, wpr_}; }

  // row(dst) ^= other.row(src); both matrices must have the same column count.
  void xor_row_from(std::size_t dst, const F2Matrix& other, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);
  bool row_is_zero(std::size_t r) const;

  F2Matrix transpose() const;
  F2Matrix column(std::size_t c) const;
  F2Matrix select_columns(std::span<const std::size_t> idx) const;
  F2Matrix select_rows(std::span<const std::size_t> idx) const;
  static F2Matrix hconcat(const F2Matrix& a, const F2Matrix& b);
  static F2Matrix vconcat(const F2Matrix& a, const F2Matrix& b);

  bool is_zero() const;
  std::size_t popcount() const;

  F2Matrix operator*(const F2Matrix& rhs) const;
  F2Matrix operator+(const F2Matrix& rhs) const;
  F2Matrix& operator+=(const F2Matrix& rhs);
  friend bool operator==(const F2Matrix& a, const F2Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t wpr_ = 0;
  std::vector<Word> data_;
};

// Reduced row echelon form together with the pivot column of each nonzero row.
struct Echelon {
  F2Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

Echelon rref(F2Matrix m);

struct F2Decomposition {
  std::size_t rank = 0;
  F2Matrix kernel_basis;  // cols x nullity
  F2Matrix image_basis;   // rows x rank, pivot columns of the input
};

F2Decomposition f2_decompose(const F2Matrix& m);
std::size_t f2_rank(F2Matrix m);
F2Matrix f2_kernel(const F2Matrix& m);
F2Matrix f2_image(const F2Matrix& m);

// Solves a * x = b (b may have several columns); nullopt when inconsistent.
std::optional<F2Matrix> f2_solve(const F2Matrix& a, const F2Matrix& b);

// Inverse of a square matrix; throws std::domain_error when singular.
F2Matrix f2_inverse(const F2Matrix& m);

// Some x with x * m = I, for m of full column rank; throws otherwise.
F2Matrix f2_left_inverse(const F2Matrix& m);

}  // namespace kuforge::exactla
