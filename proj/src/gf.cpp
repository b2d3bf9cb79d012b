#include "fnc/gf.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace fnc {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

field::field(uint32_t p) : p_(p) {
  if (p < 2 || p > 65521 || !is_prime(p))
    throw std::invalid_argument("field: modulus must be a prime in [2, 65521]");
}

uint32_t field::inv(uint32_t a) const {
  a %= p_;
  if (a == 0) throw std::invalid_argument("field: no inverse of zero");
  // extended euclid on (a, p)
  int64_t t = 0, newt = 1, r = p_, newr = a;
  while (newr != 0) {
    int64_t q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  return static_cast<uint32_t>(t < 0 ? t + p_ : t);
}

mat::mat(field f, size_t rows, size_t cols)
    : field_(f), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

mat mat::identity(field f, size_t n) {
  mat m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

mat mat::from_rows(field f, const std::vector<std::vector<uint32_t>>& rows) {
  size_t r = rows.size(), c = r == 0 ? 0 : rows[0].size();
  mat m(f, r, c);
  for (size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw std::invalid_argument("mat: ragged row lengths");
    for (size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

mat mat::mul(const mat& o) const {
  if (field_ != o.field_) throw std::invalid_argument("mat::mul: field mismatch");
  if (cols_ != o.rows_) throw std::invalid_argument("mat::mul: shape mismatch");
  mat r(field_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      uint32_t a = at(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        r.set(i, j, field_.add(r.at(i, j), field_.mul(a, o.at(k, j))));
    }
  return r;
}

mat mat::col(size_t j) const { return cols_at({j}); }

mat mat::cols_at(const std::vector<size_t>& idx) const {
  mat r(field_, rows_, idx.size());
  for (size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= cols_) throw std::out_of_range("mat::cols_at: column index");
    for (size_t i = 0; i < rows_; ++i) r.set(i, j, at(i, idx[j]));
  }
  return r;
}

bool mat::is_zero() const {
  for (uint32_t v : e_)
    if (v != 0) return false;
  return true;
}

bool mat::operator==(const mat& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

std::string mat::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    os << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

mat hconcat(const std::vector<mat>& ms) {
  if (ms.empty()) throw std::invalid_argument("hconcat: empty operand list");
  size_t r = ms[0].rows(), c = 0;
  for (const mat& m : ms) {
    if (m.rows() != r) throw std::invalid_argument("hconcat: row count mismatch");
    if (m.f() != ms[0].f()) throw std::invalid_argument("hconcat: field mismatch");
    c += m.cols();
  }
  mat out(ms[0].f(), r, c);
  size_t off = 0;
  for (const mat& m : ms) {
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < m.cols(); ++j) out.set(i, off + j, m.at(i, j));
    off += m.cols();
  }
  return out;
}

mat rref(const mat& m, std::vector<size_t>* pivots) {
  mat a = m;
  const field& f = a.f();
  size_t row = 0;
  for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    // lowest-index pivot row
    size_t piv = row;
    while (piv < a.rows() && a.at(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (size_t j = 0; j < a.cols(); ++j) {
        uint32_t t = a.at(row, j);
        a.set(row, j, a.at(piv, j));
        a.set(piv, j, t);
      }
    uint32_t s = f.inv(a.at(row, col));
    for (size_t j = 0; j < a.cols(); ++j) a.set(row, j, f.mul(s, a.at(row, j)));
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col) == 0) continue;
      uint32_t t = a.at(i, col);
      for (size_t j = 0; j < a.cols(); ++j)
        a.set(i, j, f.sub(a.at(i, j), f.mul(t, a.at(row, j))));
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  return a;
}

size_t rank(const mat& m) {
  std::vector<size_t> piv;
  rref(m, &piv);
  return piv.size();
}

std::vector<size_t> pivot_columns(const mat& m) {
  std::vector<size_t> piv;
  rref(m, &piv);
  return piv;
}

mat column_basis(const mat& m) { return m.cols_at(pivot_columns(m)); }

mat pad_cols(const mat& m, size_t new_cols) {
  if (new_cols < m.cols()) throw std::invalid_argument("pad_cols: would truncate");
  mat r(m.f(), m.rows(), new_cols);
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r.set(i, j, m.at(i, j));
  return r;
}

std::optional<mat> solve_right(const mat& a, const mat& b) {
  if (a.f() != b.f()) throw std::invalid_argument("solve_right: field mismatch");
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_right: row mismatch");
  std::vector<size_t> piv;
  mat r = rref(hconcat({a, b}), &piv);
  mat x(a.f(), a.cols(), b.cols());
  for (size_t t = 0; t < piv.size(); ++t) {
    if (piv[t] >= a.cols()) return std::nullopt;  // pivot in the b block: inconsistent
    for (size_t j = 0; j < b.cols(); ++j) x.set(piv[t], j, r.at(t, a.cols() + j));
  }
  return x;
}

std::optional<mat> invert(const mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("invert: not square");
  // a*X = I is solvable iff a has full rank, and then X is two-sided
  return solve_right(a, mat::identity(a.f(), a.rows()));
}

}  // namespace fnc
