#include "hyperstab/exact.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>

namespace hyperstab {

int sign(const Checked128& x) { return x.value() > 0 ? 1 : (x.value() < 0 ? -1 : 0); }
int sign(const Integer& x) { return sgn(x); }
int sign(const Rational& x) { return sgn(x); }

Integer to_integer(const Checked128& x) {
  __int128 v = x.value();
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer out = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  out <<= 64;
  out += static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  return neg ? Integer(-out) : out;
}

std::int64_t to_int64(const Integer& x) {
  if (!x.fits_slong_p()) throw ArithmeticOverflow();
  return x.get_si();
}

Rational parse_rational(std::string_view text) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("malformed rational");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed rational");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
        throw std::invalid_argument("malformed rational: " + std::string(s));
      }
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
  };
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(parse_int(text));
  } else {
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    q = Rational(num, den);
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer det(const Mat<std::int64_t>& m) {
  try {
    return to_integer(bareiss_det(convert<Checked128>(m)));
  } catch (const ArithmeticOverflow&) {
    return bareiss_det(convert<Integer>(m));
  }
}

int rank(const Mat<std::int64_t>& m) {
  try {
    return bareiss_rank(convert<Checked128>(m));
  } catch (const ArithmeticOverflow&) {
    return bareiss_rank(convert<Integer>(m));
  }
}

int rank(const Mat<Rational>& m) {
  Mat<Rational> copy = m;
  return static_cast<int>(rref(copy).size());
}

std::vector<int> pivot_columns(const Mat<std::int64_t>& m) {
  Mat<Rational> q = convert<Rational>(m);
  return rref(q);
}

namespace {

template <class T>
std::vector<T> cross_product_impl(const Mat<std::int64_t>& rows) {
  const std::size_t r = rows.size() + 1;
  std::vector<T> out(r);
  Mat<T> minor(r - 1, std::vector<T>(r - 1));
  for (std::size_t skip = 0; skip < r; ++skip) {
    for (std::size_t i = 0; i + 1 < r; ++i) {
      std::size_t c = 0;
      for (std::size_t j = 0; j < r; ++j) {
        if (j == skip) continue;
        minor[i][c++] = T(rows[i][j]);
      }
    }
    T d = bareiss_det(minor);
    out[skip] = (skip % 2 == 0) ? d : T(0) - d;
  }
  return out;
}

}  // namespace

bool cross_product_fast(const Mat<std::int64_t>& rows, IntVec& out) {
  try {
    auto v = cross_product_impl<Checked128>(rows);
    out.resize(v.size());
    constexpr __int128 lim = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].value() > lim || v[i].value() < -lim) return false;
      out[i] = static_cast<std::int64_t>(v[i].value());
    }
    return true;
  } catch (const ArithmeticOverflow&) {
    return false;
  }
}

std::vector<Integer> cross_product(const Mat<std::int64_t>& rows) {
  IntVec fast;
  if (cross_product_fast(rows, fast)) {
    std::vector<Integer> out;
    for (auto x : fast) out.emplace_back(static_cast<long>(x));
    return out;
  }
  return cross_product_impl<Integer>(rows);
}

std::vector<int> rref(Mat<Rational>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

std::vector<Rational> solve(Mat<Rational> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::domain_error("solve: matrix not square");
    a[i].push_back(b[i]);
  }
  auto piv = rref(a);
  if (piv.size() != n || (n > 0 && piv.back() != static_cast<int>(n - 1))) {
    throw std::domain_error("solve: singular system");
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

Mat<Rational> nullspace(const Mat<Rational>& a, std::size_t cols) {
  Mat<Rational> m = a;
  auto piv = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : piv) is_pivot[p] = true;
  Mat<Rational> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat<Integer> column_hermite_transform(const Mat<Integer>& a_in, std::size_t cols, int& rank_out) {
  Mat<Integer> a = a_in;
  Mat<Integer> u(cols, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;
  // Column operation helpers act on both a and u.
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : u) std::swap(row[x], row[y]);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer& f) {
    for (auto& row : a) row[dst] -= f * row[src];
    for (auto& row : u) row[dst] -= f * row[src];
  };
  std::size_t c = 0;
  for (std::size_t r = 0; r < a.size() && c < cols; ++r) {
    // Euclid on row r across columns c..cols-1.
    for (;;) {
      std::size_t best = cols;
      for (std::size_t j = c; j < cols; ++j) {
        if (a[r][j] != 0 && (best == cols || abs(a[r][j]) < abs(a[r][best]))) best = j;
      }
      if (best == cols) break;
      if (best != c) col_swap(best, c);
      bool done = true;
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (a[r][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][j].get_mpz_t(), a[r][c].get_mpz_t());
        col_axpy(j, c, q);
        if (a[r][j] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][c] != 0) ++c;
  }
  rank_out = static_cast<int>(c);
  return u;
}

Mat<Integer> row_hermite_normal_form(Mat<Integer> a) {
  if (a.empty()) return a;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (a[i][c] != 0 && (best == rows || abs(a[i][c]) < abs(a[best][c]))) best = i;
      }
      if (best == rows) break;
      std::swap(a[best], a[r]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0) {
      for (std::size_t j = c; j < cols; ++j) a[r][j] = -a[r][j];
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
    }
    ++r;
  }
  return a;
}

Integer gcd_of(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

int sparse_rank(std::vector<SparseRow> rows) {
  std::sort(rows.begin(), rows.end(), [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
  std::map<int, SparseRow> pivots;
  SparseRow scratch;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        int lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        break;
      }
      const SparseRow& p = it->second;
      Rational f = row.front().second / p.front().second;
      scratch.clear();
      std::size_t a = 0, b = 0;
      while (a < row.size() || b < p.size()) {
        if (b == p.size() || (a < row.size() && row[a].first < p[b].first)) {
          scratch.push_back(row[a++]);
        } else if (a == row.size() || p[b].first < row[a].first) {
          scratch.emplace_back(p[b].first, -f * p[b].second);
          ++b;
        } else {
          Rational v = row[a].second - f * p[b].second;
          if (v != 0) scratch.emplace_back(row[a].first, std::move(v));
          ++a;
          ++b;
        }
      }
      row.swap(scratch);
    }
  }
  return static_cast<int>(pivots.size());
}

}  // namespace hyperstab
