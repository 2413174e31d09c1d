#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace kuforge::exactla {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> row_major);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<long>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix transpose() const;
  IntMatrix select_columns(const std::vector<std::size_t>& idx) const;
  static IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);

  bool is_zero() const;
  bool is_diagonal() const;
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

// Exact determinant (Bareiss).
mpz_class determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix d;
  IntMatrix u;  // rows x rows
  IntMatrix v;  // cols x cols
  std::size_t rank = 0;
};

// u * m * v = d with d diagonal, nonnegative, each entry dividing the next.
SmithForm smith_normal_form(const IntMatrix& m);

// Diagonal of the Smith form only; no transforms are accumulated.
std::vector<mpz_class> smith_diagonal(const IntMatrix& m);

class FinAbGroup {
 public:
  FinAbGroup() = default;
  FinAbGroup(std::vector<mpz_class> invariant_factors, std::size_t free_rank);

  // Normalizes an arbitrary list of cyclic orders (entries 0 or 1 allowed: 0 is free, 1 trivial).
  static FinAbGroup from_cyclic(const std::vector<mpz_class>& orders, std::size_t extra_free = 0);
  static FinAbGroup elementary(std::size_t dim, long p = 2);
  static FinAbGroup integers(std::size_t rank = 1) { return FinAbGroup({}, rank); }

  const std::vector<mpz_class>& invariant_factors() const { return factors_; }
  std::size_t free_rank() const { return free_rank_; }
  bool is_trivial() const { return factors_.empty() && free_rank_ == 0; }
  bool is_finite() const { return free_rank_ == 0; }

  mpz_class torsion_order() const;
  // log2 of the torsion order; throws unless the torsion is a 2-group.
  std::size_t log2_order() const;
  std::size_t two_rank() const;  // dim of the 2-torsion subgroup of the torsion part
  mpz_class exponent() const;

  FinAbGroup direct_sum(const FinAbGroup& other) const;

  std::string to_string() const;
  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
    return a.free_rank_ == b.free_rank_ && a.factors_ == b.factors_;
  }

 private:
  std::vector<mpz_class> factors_;
  std::size_t free_rank_ = 0;
};

// Z^rows / image(m).
FinAbGroup cokernel_structure(const IntMatrix& m);

// Basis of the integer kernel of m as columns.
IntMatrix integer_kernel(const IntMatrix& m);

// Integer x with a * x = b for a single column b, if one exists.
std::optional<IntMatrix> integer_solve(const SmithForm& a_snf, const IntMatrix& b);

}  // namespace kuforge::exactla
