#pragma once

// Independent reference computations used only by the tests.  Each one
// takes a different route from the library code it checks: permutation
// expansion instead of elimination, exhaustive subset scans instead of
// adjugate kernels, lattice-point counting instead of triangulation.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "hyperstab/exact.hpp"

namespace oracle {

using hyperstab::Integer;
using hyperstab::IntVec;
using hyperstab::Rational;
using Mask = std::uint64_t;

inline Integer leibniz_det(const std::vector<IntVec>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Integer term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= static_cast<long>(m[i][perm[i]]);
    total += inversions % 2 ? Integer(-term) : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Rank over Q by plain Gaussian elimination on rationals.
inline int q_rank(std::vector<std::vector<Rational>> a) {
  int r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<int>(a.size()); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline int affine_rank(const std::vector<IntVec>& pts, Mask m) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!(m >> i & 1)) continue;
    std::vector<Rational> r;
    for (auto x : pts[i]) r.emplace_back(static_cast<long>(x));
    r.emplace_back(1);
    rows.push_back(r);
  }
  return q_rank(rows);
}

// Lower cells by exhaustive scan: a subset S is a cell iff it spans
// full-dimensionally and some affine function agrees with psi on S and lies
// strictly below psi everywhere else.
inline std::set<Mask> brute_lower_cells(const std::vector<IntVec>& pts, const std::vector<Rational>& psi) {
  const std::size_t n = pts.size();
  const int full = affine_rank(pts, (Mask{1} << n) - 1);
  std::set<Mask> cells;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    if (affine_rank(pts, s) != full) continue;
    // Affine basis inside S.
    std::vector<std::size_t> basis;
    Mask acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(s >> i & 1)) continue;
      if (affine_rank(pts, acc | Mask{1} << i) > static_cast<int>(basis.size())) {
        acc |= Mask{1} << i;
        basis.push_back(i);
      }
    }
    // Solve a.p + b = psi(p) on the basis; free unknowns are set to zero.
    const std::size_t dim = pts[0].size() + 1;
    std::vector<std::vector<Rational>> sys;
    for (auto i : basis) {
      std::vector<Rational> row;
      for (auto x : pts[i]) row.emplace_back(static_cast<long>(x));
      row.emplace_back(1);
      row.push_back(psi[i]);
      sys.push_back(row);
    }
    std::vector<int> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim && r < sys.size(); ++c) {
      std::size_t p = r;
      while (p < sys.size() && sys[p][c] == 0) ++p;
      if (p == sys.size()) continue;
      std::swap(sys[p], sys[r]);
      Rational inv = 1 / sys[r][c];
      for (auto& x : sys[r]) x *= inv;
      for (std::size_t i = 0; i < sys.size(); ++i) {
        if (i == r || sys[i][c] == 0) continue;
        Rational f = sys[i][c];
        for (std::size_t j = 0; j <= dim; ++j) sys[i][j] -= f * sys[r][j];
      }
      piv.push_back(static_cast<int>(c));
      ++r;
    }
    std::vector<Rational> coef(dim);
    for (std::size_t i = 0; i < piv.size(); ++i) coef[piv[i]] = sys[i][dim];
    bool ok = true;
    for (std::size_t p = 0; p < n && ok; ++p) {
      Rational v = coef[dim - 1];
      for (std::size_t j = 0; j + 1 < dim; ++j) v += coef[j] * Rational(static_cast<long>(pts[p][j]));
      if (s >> p & 1) {
        ok = v == psi[p];
      } else {
        ok = v < psi[p];
      }
    }
    if (ok) cells.insert(s);
  }
  return cells;
}

// Faces of conv(pts[m]) as argmin sets of small integer functionals.
inline std::set<Mask> grid_faces(const std::vector<IntVec>& pts, Mask m, int bound) {
  const std::size_t d = pts[0].size();
  std::set<Mask> faces;
  IntVec c(d, -bound);
  for (;;) {
    std::int64_t best = INT64_MAX;
    Mask arg = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!(m >> i & 1)) continue;
      std::int64_t v = 0;
      for (std::size_t j = 0; j < d; ++j) v += c[j] * pts[i][j];
      if (v < best) {
        best = v;
        arg = 0;
      }
      if (v == best) arg |= Mask{1} << i;
    }
    faces.insert(arg);
    std::size_t j = 0;
    while (j < d && c[j] == bound) c[j++] = -bound;
    if (j == d) break;
    ++c[j];
  }
  return faces;
}

// Normalized volume of a d-dimensional lattice polytope from its Ehrhart
// polynomial, sampled at m = 0..d.
template <class Count>
Integer ehrhart_normalized_volume(int d, Count&& count) {
  std::vector<Rational> ys;
  for (int m = 0; m <= d; ++m) ys.emplace_back(count(m));
  // The d-th forward difference is d! times the leading coefficient.
  std::vector<Rational> diff = ys;
  for (int level = 0; level < d; ++level) {
    for (int i = 0; i + 1 < static_cast<int>(diff.size()) - level; ++i) diff[i] = diff[i + 1] - diff[i];
  }
  Rational lead = diff[0];
  if (lead.get_den() != 1) return -1;
  return lead.get_num();
}

// Lattice points x in [0, m]^n with sum m k satisfying extra(x).
template <class Pred>
long count_box(int n, int k, int m, Pred&& extra) {
  IntVec x(n, 0);
  long count = 0;
  for (;;) {
    std::int64_t s = 0;
    for (auto v : x) s += v;
    if (s == static_cast<std::int64_t>(m) * k && extra(x)) ++count;
    int j = 0;
    while (j < n && x[j] == m) x[j++] = 0;
    if (j == n) break;
    ++x[j];
  }
  return count;
}

inline std::vector<IntVec> hypersimplex_points(int k, int n) {
  std::vector<IntVec> pts;
  std::vector<int> sel(n, 0);
  std::fill(sel.begin(), sel.begin() + k, 1);
  // Lexicographic order of k-subsets equals reverse order of indicator
  // vectors under prev_permutation starting from 1..10..0.
  do {
    pts.emplace_back(sel.begin(), sel.end());
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return pts;
}

inline Integer binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace oracle
