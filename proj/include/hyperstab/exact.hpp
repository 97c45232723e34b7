#pragma once

// Exact scalar and small dense linear algebra used by every other module.
//
// Two integer representations are used throughout: Checked128, a 128-bit
// integer that throws ArithmeticOverflow instead of wrapping, and Integer
// (GMP).  Combinatorial kernels run on Checked128 and retry on Integer when
// the fast path overflows, so results are exact for any input size.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperstab {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVec = std::vector<std::int64_t>;

struct ArithmeticOverflow : std::overflow_error {
  ArithmeticOverflow() : std::overflow_error("128-bit fast path overflow") {}
};

class Checked128 {
 public:
  Checked128() = default;
  Checked128(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  static Checked128 raw(__int128 v) {
    Checked128 c;
    c.v_ = v;
    return c;
  }
  __int128 value() const { return v_; }

  friend Checked128 operator+(Checked128 a, Checked128 b) {
    __int128 r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow();
    return raw(r);
  }
  friend Checked128 operator-(Checked128 a, Checked128 b) {
    __int128 r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow();
    return raw(r);
  }
  friend Checked128 operator*(Checked128 a, Checked128 b) {
    __int128 r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow();
    return raw(r);
  }
  // Exact division (Bareiss); the caller guarantees divisibility.
  friend Checked128 operator/(Checked128 a, Checked128 b) { return raw(a.v_ / b.v_); }
  Checked128 operator-() const { return Checked128() - *this; }
  Checked128& operator+=(Checked128 b) { return *this = *this + b; }
  Checked128& operator-=(Checked128 b) { return *this = *this - b; }
  Checked128& operator*=(Checked128 b) { return *this = *this * b; }

  friend bool operator==(Checked128 a, Checked128 b) { return a.v_ == b.v_; }
  friend bool operator!=(Checked128 a, Checked128 b) { return a.v_ != b.v_; }
  friend bool operator<(Checked128 a, Checked128 b) { return a.v_ < b.v_; }
  friend bool operator>(Checked128 a, Checked128 b) { return a.v_ > b.v_; }
  friend bool operator<=(Checked128 a, Checked128 b) { return a.v_ <= b.v_; }
  friend bool operator>=(Checked128 a, Checked128 b) { return a.v_ >= b.v_; }

 private:
  __int128 v_ = 0;
};

int sign(const Checked128& x);
int sign(const Integer& x);
int sign(const Rational& x);
Integer to_integer(const Checked128& x);
// Throws ArithmeticOverflow when the value needs more than 63 bits.
std::int64_t to_int64(const Integer& x);

// "p/q" or "p"; whitespace around the number is ignored.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

template <class T>
using Mat = std::vector<std::vector<T>>;

// Fraction-free Gaussian elimination (Bareiss).  Square input.
template <class T>
T bareiss_det(Mat<T> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  T prev(1);
  int flip = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == T(0)) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == T(0)) ++p;
      if (p == n) return T(0);
      std::swap(m[k], m[p]);
      flip = -flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return flip > 0 ? m[n - 1][n - 1] : T(0) - m[n - 1][n - 1];
}

// Rank over Q via fraction-free elimination; any row/column shape.
template <class T>
int bareiss_rank(Mat<T> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  T prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == T(0)) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = T(0);
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

Integer det(const Mat<std::int64_t>& m);
int rank(const Mat<std::int64_t>& m);
int rank(const Mat<Rational>& m);

// Column indices of the leading entries of the row echelon form.
std::vector<int> pivot_columns(const Mat<std::int64_t>& m);

// Generalized cross product of r-1 vectors in Z^r: the functional c with
// c . rows[i] = 0 for all i, c_j = (-1)^j det(rows without column j).
// Zero iff the rows are linearly dependent.
std::vector<Integer> cross_product(const Mat<std::int64_t>& rows);
bool cross_product_fast(const Mat<std::int64_t>& rows, IntVec& out);

// Solves A x = b for square nonsingular A; throws std::domain_error otherwise.
std::vector<Rational> solve(Mat<Rational> a, std::vector<Rational> b);

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat<Rational>& m);

// Basis of the right null space {x : A x = 0}, one vector per free column.
Mat<Rational> nullspace(const Mat<Rational>& a, std::size_t cols);

// Unimodular U (cols x cols) with A U = [H | 0], H of full column rank.  The
// trailing cols - rank(A) columns of U are a Z-basis of {x in Z^cols : A x = 0}.
Mat<Integer> column_hermite_transform(const Mat<Integer>& a, std::size_t cols, int& rank_out);

// Row Hermite normal form of an integer matrix of full row rank: the unique
// H = U A (U unimodular) in echelon form with positive pivots and entries
// above each pivot reduced into [0, pivot).
Mat<Integer> row_hermite_normal_form(Mat<Integer> a);

Integer gcd_of(const std::vector<Integer>& v);

// Sparse rows over Q, sorted by column, without explicit zeros.
using SparseRow = std::vector<std::pair<int, Rational>>;

// Rank by incremental elimination on leading columns; suited to the very
// sparse incidence matrices of cell and order complexes.
int sparse_rank(std::vector<SparseRow> rows);

template <class To, class From>
Mat<To> convert(const Mat<From>& m) {
  Mat<To> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].reserve(m[i].size());
    for (const auto& x : m[i]) out[i].push_back(To(x));
  }
  return out;
}

}  // namespace hyperstab
