#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fnc {

// prime field F_p, 2 <= p <= 65521
class field {
 public:
  explicit field(uint32_t p);
  uint32_t modulus() const { return p_; }
  uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % p_; }
  uint32_t sub(uint32_t a, uint32_t b) const { return (a + p_ - b % p_) % p_; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((uint64_t(a) * b) % p_);
  }
  uint32_t neg(uint32_t a) const { return a % p_ == 0 ? 0 : p_ - a % p_; }
  uint32_t inv(uint32_t a) const;  // throws on 0
  bool operator==(const field& o) const { return p_ == o.p_; }
  bool operator!=(const field& o) const { return p_ != o.p_; }

 private:
  uint32_t p_;
};

bool is_prime(uint32_t n);

// dense row-major matrix over F_p; zero rows/cols allowed
class mat {
 public:
  mat(field f, size_t rows, size_t cols);  // zero-filled
  static mat identity(field f, size_t n);
  static mat from_rows(field f, const std::vector<std::vector<uint32_t>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const field& f() const { return field_; }

  uint32_t at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
  void set(size_t r, size_t c, uint32_t v) { e_[r * cols_ + c] = v % field_.modulus(); }

  mat mul(const mat& o) const;
  mat col(size_t j) const;                                // single-column slice
  mat cols_at(const std::vector<size_t>& idx) const;      // column submatrix
  bool is_zero() const;
  bool operator==(const mat& o) const;
  bool operator!=(const mat& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  field field_;
  size_t rows_, cols_;
  std::vector<uint32_t> e_;
};

// rank over F_p
size_t rank(const mat& m);

// columns concatenated in order; all operands share rows and field
mat hconcat(const std::vector<mat>& ms);

// reduced row echelon form, lowest-index pivoting; pivot columns appended to
// *pivots when given
mat rref(const mat& m, std::vector<size_t>* pivots = nullptr);

// X with a*X == b, free variables zero; nullopt when colspace(b) is not
// contained in colspace(a)
std::optional<mat> solve_right(const mat& a, const mat& b);

// nullopt when singular
std::optional<mat> invert(const mat& a);

// indices of a lexicographically-least maximal independent column set
std::vector<size_t> pivot_columns(const mat& m);

// submatrix of the pivot columns: same column space, full column rank
mat column_basis(const mat& m);

// zero-pad on the right to exactly new_cols columns
mat pad_cols(const mat& m, size_t new_cols);

}  // namespace fnc
