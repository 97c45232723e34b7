#include "hyperstab/homology_lab.hpp"

#include <algorithm>
#include <functional>

namespace hyperstab::homology {

using geom::Mask;

std::vector<int> CochainComplex::sizes() const {
  std::vector<int> out;
  for (const auto& b : basis) out.push_back(static_cast<int>(b.size()));
  return out;
}

namespace {

int matrix_rank(const IntMatrix& m) {
  std::vector<SparseRow> rows;
  for (const auto& r : m) {
    SparseRow row;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[j]) row.emplace_back(static_cast<int>(j), Rational(static_cast<long>(r[j])));
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return sparse_rank(std::move(rows));
}

int sign_of_det(const IntMatrix& m, const std::vector<int>& cols) {
  if (m.empty()) return 1;
  IntMatrix sq;
  for (const auto& r : m) {
    IntVec row;
    for (int c : cols) row.push_back(r[c]);
    sq.push_back(std::move(row));
  }
  return sign(det(sq));
}

IntVec diff(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

void CochainComplex::check_composites() const {
  for (std::size_t j = 0; j + 1 < maps.size(); ++j) {
    const auto& a = maps[j];
    const auto& b = maps[j + 1];
    for (std::size_t r = 0; r < b.size(); ++r) {
      for (std::size_t c = 0; c < basis[j].size(); ++c) {
        std::int64_t s = 0;
        for (std::size_t m = 0; m < a.size(); ++m) s += b[r][m] * a[m][c];
        if (s != 0) {
          throw InconsistentComplex("composite of maps " + std::to_string(j + first_degree) + " and " +
                                    std::to_string(j + 1 + first_degree) + " is nonzero");
        }
      }
    }
  }
}

std::vector<int> cohomology_dims(const CochainComplex& c) {
  c.check_composites();
  std::vector<int> ranks;
  for (const auto& m : c.maps) ranks.push_back(matrix_rank(m));
  std::vector<int> out;
  for (std::size_t j = 0; j < c.basis.size(); ++j) {
    int h = static_cast<int>(c.basis[j].size());
    if (j < ranks.size()) h -= ranks[j];
    if (j > 0) h -= ranks[j - 1];
    out.push_back(h);
  }
  return out;
}

bool is_exact(const CochainComplex& c) {
  auto d = cohomology_dims(c);
  return std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
}

CellularComplex::CellularComplex(Subdivision s, int orientation)
    : s_(std::move(s)), poset_(geom::faces_of_subdivision(s_)) {
  if (orientation != 1 && orientation != -1) throw std::invalid_argument("orientation must be +1 or -1");
  const auto& config = *s_.config;
  std::vector<Mask> boundary;
  for (const auto& f : geom::facets(config, config.all())) {
    boundary.push_back(f.vertices);
    hull_functionals_.push_back(f.functional);
  }

  const std::size_t count = poset_.faces.size();
  interior_.resize(count);
  orient_.assign(count, 1);
  frames_.resize(count);
  pivots_.resize(count);
  facet_functionals_.resize(count);
  span_equations_.resize(count);

  // Lexicographically first affinely independent vertex sequence.
  auto frame_of = [&](const std::vector<int>& verts) {
    IntMatrix frame;
    std::vector<int> chosen{verts.front()};
    for (std::size_t i = 1; i < verts.size(); ++i) {
      auto row = diff(config.point(verts[i]), config.point(chosen.front()));
      frame.push_back(row);
      if (rank(frame) == static_cast<int>(frame.size())) {
        chosen.push_back(verts[i]);
      } else {
        frame.pop_back();
      }
    }
    return frame;
  };
  std::vector<int> all_idx(config.size());
  for (std::size_t i = 0; i < config.size(); ++i) all_idx[i] = static_cast<int>(i);
  const IntMatrix q_frame = frame_of(all_idx);
  const auto q_piv = pivot_columns(q_frame);
  const int q_sign = sign_of_det(q_frame, q_piv);
  {
    Mat<Rational> h;
    for (std::size_t v = 0; v < config.size(); ++v) {
      std::vector<Rational> row;
      for (auto x : config.homogenized(v)) row.emplace_back(static_cast<long>(x));
      h.push_back(std::move(row));
    }
    hull_equations_ = nullspace(h, config.ambient_dim() + 1);
  }

  for (std::size_t f = 0; f < count; ++f) {
    const auto& face = poset_.faces[f];
    const Mask m = face.mask();
    interior_[f] = std::none_of(boundary.begin(), boundary.end(), [&](Mask b) { return (m & ~b) == 0; });
    frames_[f] = frame_of(face.vertex_indices);
    pivots_[f] = pivot_columns(frames_[f]);
    if (face.affine_dim == config.affine_dim()) {
      orient_[f] = sign_of_det(frames_[f], q_piv) * q_sign * orientation;
    }
    if (face.vertex_indices.size() > 1) {
      for (const auto& sf : geom::facets(config, m)) facet_functionals_[f].push_back(sf.functional);
    }
    Mat<Rational> h;
    for (int v : face.vertex_indices) {
      std::vector<Rational> row;
      for (auto x : config.homogenized(v)) row.emplace_back(static_cast<long>(x));
      h.push_back(std::move(row));
    }
    span_equations_[f] = nullspace(h, config.ambient_dim() + 1);
  }
}

int CellularComplex::codim(int face) const { return s_.config->affine_dim() - poset_.faces[face].affine_dim; }

int CellularComplex::incidence(int face, int facet) const {
  const auto& config = *s_.config;
  const auto& sigma = poset_.faces[face];
  const auto& tau = poset_.faces[facet];
  const Mask tm = tau.mask();
  int p = -1;
  for (int v : sigma.vertex_indices) {
    if (!(tm >> v & 1)) {
      p = v;
      break;
    }
  }
  if (p < 0 || tau.affine_dim + 1 != sigma.affine_dim) throw std::invalid_argument("not a covering pair");
  // Outward direction first, then the frame of the facet.
  IntMatrix x{diff(config.point(tau.vertex_indices.front()), config.point(p))};
  for (const auto& r : frames_[facet]) x.push_back(r);
  return sign_of_det(x, pivots_[face]) * sign_of_det(frames_[face], pivots_[face]) * orient_[face] * orient_[facet];
}

bool CellularComplex::in_hull(const IntVec& hx) const {
  for (const auto& f : hull_functionals_) {
    Integer s = 0;
    for (std::size_t j = 0; j < hx.size(); ++j) s += f[j] * static_cast<long>(hx[j]);
    if (s < 0) return false;
  }
  return true;
}

bool CellularComplex::contains(int face, const IntVec& hx) const {
  for (const auto& eq : span_equations_[face]) {
    Rational s = 0;
    for (std::size_t j = 0; j < hx.size(); ++j) s += eq[j] * static_cast<long>(hx[j]);
    if (s != 0) return false;
  }
  for (const auto& f : facet_functionals_[face]) {
    Integer s = 0;
    for (std::size_t j = 0; j < hx.size(); ++j) s += f[j] * static_cast<long>(hx[j]);
    if (s < 0) return false;
  }
  return true;
}

CochainComplex CellularComplex::restricted(const std::vector<bool>& keep, bool augment) const {
  const int d = s_.config->affine_dim();
  CochainComplex c;
  c.first_degree = augment ? -1 : 0;
  if (augment) c.basis.push_back({-1});
  std::vector<int> slot(poset_.faces.size(), -1);
  for (int j = 0; j <= d; ++j) {
    std::vector<int> b;
    for (std::size_t f = 0; f < poset_.faces.size(); ++f) {
      if (keep[f] && codim(static_cast<int>(f)) == j) {
        slot[f] = static_cast<int>(b.size());
        b.push_back(static_cast<int>(f));
      }
    }
    c.basis.push_back(std::move(b));
  }
  while (c.basis.size() > 1 && c.basis.back().empty()) c.basis.pop_back();
  for (std::size_t j = 0; j + 1 < c.basis.size(); ++j) {
    c.maps.emplace_back(c.basis[j + 1].size(), IntVec(c.basis[j].size(), 0));
  }
  if (augment && c.maps.size() > 0) {
    for (auto& row : c.maps[0]) row[0] = 1;
  }
  const std::size_t shift = augment ? 1 : 0;
  for (auto [face, facet] : poset_.covering) {
    if (!keep[face] || !keep[facet]) continue;
    const std::size_t j = static_cast<std::size_t>(codim(face)) + shift;
    if (j + 1 >= c.basis.size()) continue;
    c.maps[j][slot[facet]][slot[face]] = incidence(face, facet);
  }
  return c;
}

CochainComplex CellularComplex::relative() const { return restricted(interior_, false); }

CochainComplex CellularComplex::summand(const IntVec& x, std::int64_t level) const {
  const auto& config = *s_.config;
  if (x.size() != config.ambient_dim()) throw std::domain_error("point has the wrong dimension");
  if (level < 0) throw std::domain_error("level must be non-negative");
  if (level == 0) {
    if (std::any_of(x.begin(), x.end(), [](std::int64_t v) { return v != 0; })) {
      throw std::domain_error("only the origin lies at level 0");
    }
    return restricted(interior_, true);
  }
  IntVec hx = x;
  hx.push_back(level);
  for (const auto& eq : hull_equations_) {
    Rational s = 0;
    for (std::size_t j = 0; j < hx.size(); ++j) s += eq[j] * static_cast<long>(hx[j]);
    if (s != 0) throw std::domain_error("point lies outside the cone");
  }
  if (!in_hull(hx)) throw std::domain_error("point lies outside the cone");
  std::vector<bool> keep(poset_.faces.size());
  for (std::size_t f = 0; f < keep.size(); ++f) keep[f] = interior_[f] && contains(static_cast<int>(f), hx);
  return restricted(keep, true);
}

CochainComplex CellularComplex::star_removed(int v) const {
  const auto& config = *s_.config;
  if (v < 0 || static_cast<std::size_t>(v) >= config.size() ||
      geom::in_scaled_hull(config, config.all() & ~geom::bit(v), config.point(v), 1)) {
    throw std::invalid_argument("not a vertex of the polytope");
  }
  std::vector<bool> keep(poset_.faces.size());
  for (std::size_t f = 0; f < keep.size(); ++f) {
    const auto& vi = poset_.faces[f].vertex_indices;
    keep[f] = interior_[f] && std::binary_search(vi.begin(), vi.end(), v);
  }
  return restricted(keep, false);
}

CochainComplex strata_cochain_complex(const pair::MatroidSubdivision& ms, int orientation) {
  return CellularComplex(ms.subdivision(), orientation).relative();
}

std::vector<IntVec> lattice_points(int k, int n, std::int64_t level) {
  if (k < 0 || n < k || level < 0) throw hyper::ParameterError("need 0 <= k <= n and level >= 0");
  std::vector<IntVec> out;
  IntVec x(n, 0);
  // Coordinate j takes each value in [0, level] that leaves the remaining
  // total reachable by the coordinates after it.
  std::function<void(int, std::int64_t)> fill = [&](int j, std::int64_t left) {
    if (j == n) {
      if (left == 0) out.push_back(x);
      return;
    }
    const std::int64_t rest = level * (n - j - 1);
    for (std::int64_t v = std::max<std::int64_t>(0, left - rest); v <= std::min(level, left); ++v) {
      x[j] = v;
      fill(j + 1, left - v);
    }
    x[j] = 0;
  };
  fill(0, level * k);
  return out;
}

SummandReport per_s_summand(const Subdivision& s, const IntVec& x, std::int64_t level) {
  SummandReport r;
  r.complex = CellularComplex(s).summand(x, level);
  r.exact = is_exact(r.complex);
  return r;
}

StarReport star_removed_complex(const Subdivision& s, int v) {
  StarReport r;
  r.complex = CellularComplex(s).star_removed(v);
  r.dims = cohomology_dims(r.complex);
  int nonzero = 0;
  for (std::size_t j = 0; j < r.dims.size(); ++j) {
    if (r.dims[j] != 0) {
      ++nonzero;
      r.degree = static_cast<int>(j) + r.complex.first_degree;
    }
  }
  r.concentrated = nonzero == 1 && r.dims[r.degree - r.complex.first_degree] == 1;
  return r;
}

namespace {

using hyper::HypersimplexConfig;

// Interior product with e_j on Lambda^d Q^n.
std::vector<Rational> contract(const std::vector<Rational>& w, int j, const HypersimplexConfig& from,
                               const HypersimplexConfig& to) {
  std::vector<Rational> out(to.size());
  for (std::size_t s = 0; s < from.size(); ++s) {
    if (w[s] == 0) continue;
    const auto& sub = from.subset(s);
    auto it = std::find(sub.begin(), sub.end(), j);
    if (it == sub.end()) continue;
    const auto pos = it - sub.begin();
    hyper::KSubset rest = sub;
    rest.erase(rest.begin() + pos);
    out[to.index_of(rest)] += pos % 2 ? Rational(-w[s]) : w[s];
  }
  return out;
}

int rational_rank(const Mat<Rational>& rows) {
  std::vector<SparseRow> sparse;
  for (const auto& r : rows) {
    SparseRow row;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[j] != 0) row.emplace_back(static_cast<int>(j), r[j]);
    }
    if (!row.empty()) sparse.push_back(std::move(row));
  }
  return sparse_rank(std::move(sparse));
}

long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

int ExteriorSpace::dimension() const {
  int free = n - static_cast<int>(excluded.size());
  return static_cast<int>(choose(free - 1, degree));
}

Mat<Rational> ExteriorSpace::basis() const {
  std::vector<int> free;
  for (int a = 1; a <= n; ++a) {
    if (std::find(excluded.begin(), excluded.end(), a) == excluded.end()) free.push_back(a);
  }
  if (free.empty()) throw std::invalid_argument("no free coordinates");
  HypersimplexConfig coords(degree, n);
  Mat<Rational> out;
  if (degree == 0) return {std::vector<Rational>{Rational(1)}};
  const int r = free.back();
  free.pop_back();
  if (degree > static_cast<int>(free.size())) return out;
  // Wedges of e_a* - e_r* over degree-subsets of the remaining free indices.
  HypersimplexConfig picks(degree, static_cast<int>(free.size()));
  for (std::size_t p = 0; p < picks.size(); ++p) {
    IntMatrix forms;
    for (int t : picks.subset(p)) {
      IntVec f(n, 0);
      f[free[t - 1] - 1] = 1;
      f[r - 1] = -1;
      forms.push_back(std::move(f));
    }
    std::vector<Rational> w(coords.size());
    for (std::size_t s = 0; s < coords.size(); ++s) {
      IntMatrix minor;
      for (const auto& f : forms) {
        IntVec row;
        for (int c : coords.subset(s)) row.push_back(f[c - 1]);
        minor.push_back(std::move(row));
      }
      w[s] = forms.empty() ? Rational(1) : Rational(det(minor));
    }
    out.push_back(std::move(w));
  }
  return out;
}

CanonicalBasis canonical_basis_kernel(int k, int n) {
  if (k < 3 || n <= k) throw hyper::ParameterError("canonical basis kernel needs n > k >= 3");
  HypersimplexConfig top(k - 1, n), mid(k - 2, n), low(k - 3, n);
  const std::size_t block = mid.size();

  // Domain basis vectors in concatenated ambient coordinates.
  Mat<Rational> domain;
  std::vector<int> owner;
  for (int i = 1; i <= n; ++i) {
    for (auto& b : ExteriorSpace{n, {i}, k - 2}.basis()) {
      std::vector<Rational> v(block * n);
      std::copy(b.begin(), b.end(), v.begin() + static_cast<std::ptrdiff_t>(block * (i - 1)));
      domain.push_back(std::move(v));
      owner.push_back(i);
    }
  }
  // theta, one column per domain vector: alpha_i contributes
  // iota_{e_j} alpha_i to the (i, j) component for every j != i.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  Mat<Rational> theta(pairs.size() * low.size(), std::vector<Rational>(domain.size()));
  for (std::size_t c = 0; c < domain.size(); ++c) {
    const int i = owner[c];
    std::vector<Rational> alpha(domain[c].begin() + static_cast<std::ptrdiff_t>(block * (i - 1)),
                                domain[c].begin() + static_cast<std::ptrdiff_t>(block * i));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      auto [a, b] = pairs[p];
      if (a != i && b != i) continue;
      const int j = a == i ? b : a;
      auto part = contract(alpha, j, mid, low);
      for (std::size_t r = 0; r < low.size(); ++r) theta[p * low.size() + r][c] += part[r];
    }
  }
  CanonicalBasis out;
  for (const auto& coeffs : nullspace(theta, domain.size())) {
    std::vector<Rational> v(block * n);
    for (std::size_t c = 0; c < domain.size(); ++c) {
      if (coeffs[c] == 0) continue;
      for (std::size_t x = 0; x < v.size(); ++x) v[x] += coeffs[c] * domain[c][x];
    }
    out.basis.push_back(std::move(v));
  }
  out.dimension = static_cast<int>(out.basis.size());

  Mat<Rational> image;
  for (const auto& beta : ExteriorSpace{n, {}, k - 1}.basis()) {
    std::vector<Rational> v;
    for (int i = 1; i <= n; ++i) {
      auto part = contract(beta, i, top, mid);
      v.insert(v.end(), part.begin(), part.end());
    }
    image.push_back(std::move(v));
  }
  out.image_rank = rational_rank(image);
  Mat<Rational> both = out.basis;
  both.insert(both.end(), image.begin(), image.end());
  out.kernel_equals_image = out.image_rank == out.dimension && rational_rank(both) == out.dimension;
  return out;
}

}  // namespace hyperstab::homology
