#include "hyperstab/degeneration.hpp"

#include <algorithm>

namespace hyperstab::degen {

TPolynomial::TPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

TPolynomial TPolynomial::monomial(Rational c, int degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = std::move(c);
  return TPolynomial(std::move(v));
}

void TPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int TPolynomial::order() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

Rational TPolynomial::eval(const Rational& t) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

TPolynomial TPolynomial::substitute_power(int e) const {
  if (c_.empty()) return {};
  std::vector<Rational> out(static_cast<std::size_t>(degree()) * e + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) out[i * e] = c_[i];
  return TPolynomial(std::move(out));
}

TPolynomial operator+(const TPolynomial& a, const TPolynomial& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return TPolynomial(std::move(out));
}

TPolynomial operator-(const TPolynomial& a, const TPolynomial& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
  return TPolynomial(std::move(out));
}

TPolynomial operator*(const TPolynomial& a, const TPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return TPolynomial(std::move(out));
}

std::string to_string(const TPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    std::string coef = hyperstab::to_string(Rational(abs(c[i])));
    if (!out.empty()) out += c[i] < 0 ? " - " : " + ";
    else if (c[i] < 0) out += "-";
    if (i == 0) {
      out += coef;
    } else {
      if (coef != "1") out += coef + "*";
      out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return out;
}

void TMatrix::validate() const {
  if (k < 1 || n <= k) throw std::invalid_argument("matrix needs n > k >= 1");
  if (static_cast<int>(entries.size()) != k) throw std::invalid_argument("matrix has wrong number of rows");
  for (const auto& row : entries) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix row has wrong length");
  }
  auto minors = plucker_minors(*this);
  if (std::all_of(minors.begin(), minors.end(), [](const TPolynomial& p) { return p.is_zero(); })) {
    throw std::invalid_argument("matrix has no nonzero maximal minor");
  }
}

namespace {

// Laplace expansion along the first of the given rows.
TPolynomial laplace(const TMatrix& m, std::vector<int>& rows, std::vector<int>& cols) {
  if (rows.empty()) return TPolynomial({Rational(1)});
  const int r = rows.front();
  rows.erase(rows.begin());
  TPolynomial acc;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const TPolynomial& a = m.entries[r][cols[j]];
    if (a.is_zero()) continue;
    int c = cols[j];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(j));
    TPolynomial sub = laplace(m, rows, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(j), c);
    acc = j % 2 ? acc - a * sub : acc + a * sub;
  }
  rows.insert(rows.begin(), r);
  return acc;
}

}  // namespace

TPolynomial minor(const TMatrix& m, const KSubset& columns) {
  if (static_cast<int>(columns.size()) != m.k) throw std::invalid_argument("minor needs k columns");
  std::vector<int> rows(m.k), cols;
  for (int i = 0; i < m.k; ++i) rows[i] = i;
  for (int c : columns) {
    if (c < 1 || c > m.n) throw std::invalid_argument("column out of range");
    cols.push_back(c - 1);
  }
  return laplace(m, rows, cols);
}

std::vector<TPolynomial> plucker_minors(const TMatrix& m) {
  hyper::HypersimplexConfig cfg(m.k, m.n);
  std::vector<TPolynomial> out;
  out.reserve(cfg.size());
  for (std::size_t v = 0; v < cfg.size(); ++v) out.push_back(minor(m, cfg.subset(v)));
  return out;
}

geom::Lifting valuation_lifting(const TMatrix& m) {
  hyper::HypersimplexConfig cfg(m.k, m.n);
  geom::Lifting lift;
  for (std::size_t v = 0; v < cfg.size(); ++v) {
    int ord = minor(m, cfg.subset(v)).order();
    if (ord < 0) {
      throw DegenerateFamily("Pluecker minor " + hyper::to_string(cfg.subset(v)) + " vanishes identically",
                             cfg.subset(v));
    }
    lift.values.emplace_back(ord);
  }
  return lift;
}

GeneralPosition general_position_check(const TMatrix& m) {
  hyper::HypersimplexConfig cfg(m.k, m.n);
  for (std::size_t v = 0; v < cfg.size(); ++v) {
    if (minor(m, cfg.subset(v)).is_zero()) return {false, cfg.subset(v)};
  }
  return {};
}

GeneralPosition general_position_check(const TMatrix& m, const Rational& t0) {
  hyper::HypersimplexConfig cfg(m.k, m.n);
  for (std::size_t v = 0; v < cfg.size(); ++v) {
    if (minor(m, cfg.subset(v)).eval(t0) == 0) return {false, cfg.subset(v)};
  }
  return {};
}

FamilySubdivision subdivision_from_matrix(const TMatrix& m, const hyper::HypersimplexConfig& cfg) {
  if (cfg.k() != m.k || cfg.n() != m.n) throw std::invalid_argument("configuration does not match matrix");
  auto lift = valuation_lifting(m);
  auto s = cfg.kernel().subdivide(lift);
  return FamilySubdivision{cfg, std::move(lift), std::move(s)};
}

FamilySubdivision subdivision_from_matrix(const TMatrix& m) {
  return subdivision_from_matrix(m, hyper::hypersimplex_vertices(m.k, m.n));
}

TMatrix delete_column(const TMatrix& m, int i) {
  if (i < 1 || i > m.n) throw std::invalid_argument("column out of range");
  TMatrix out{m.k, m.n - 1, m.entries};
  for (auto& row : out.entries) row.erase(row.begin() + (i - 1));
  return out;
}

Contraction contract_column(const TMatrix& m, int i) {
  if (i < 1 || i > m.n) throw std::invalid_argument("column out of range");
  if (m.k < 2) throw std::invalid_argument("contraction needs k >= 2");
  const int c = i - 1;
  int pivot = -1;
  for (int r = 0; r < m.k; ++r) {
    int ord = m.entries[r][c].order();
    if (ord >= 0 && (pivot < 0 || ord < m.entries[pivot][c].order())) pivot = r;
  }
  if (pivot < 0) throw DegenerateFamily("column " + std::to_string(i) + " is zero", {i});
  const TPolynomial& a = m.entries[pivot][c];
  TMatrix out{m.k - 1, m.n - 1, {}};
  for (int r = 0; r < m.k; ++r) {
    if (r == pivot) continue;
    std::vector<TPolynomial> row;
    for (int j = 0; j < m.n; ++j) {
      if (j == c) continue;
      row.push_back(a * m.entries[r][j] - m.entries[r][c] * m.entries[pivot][j]);
    }
    out.entries.push_back(std::move(row));
  }
  return Contraction{std::move(out), (m.k - 2) * a.order()};
}

TMatrix substitute_power(const TMatrix& m, int e) {
  TMatrix out = m;
  for (auto& row : out.entries)
    for (auto& p : row) p = p.substitute_power(e);
  return out;
}

TMatrix random_family(Rng& rng, int k, int n, int max_degree) {
  hyper::HypersimplexConfig cfg(k, n);
  auto coef = [&] {
    std::int64_t c = draw(rng, 1, 6);
    return Rational(c <= 3 ? c : 3 - c);
  };
  for (;;) {
    TMatrix m{k, n, std::vector<std::vector<TPolynomial>>(k, std::vector<TPolynomial>(n))};
    for (auto& row : m.entries) {
      for (auto& p : row) {
        int terms = static_cast<int>(draw(rng, 1, 2));
        for (int t = 0; t < terms; ++t) {
          p = p + TPolynomial::monomial(coef(), static_cast<int>(draw(rng, 0, max_degree)));
        }
      }
    }
    if (general_position_check(m).ok) return m;
  }
}

}  // namespace hyperstab::degen
