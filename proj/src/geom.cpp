#include "hyperstab/geom.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hyperstab/lp.hpp"

namespace hyperstab::geom {

std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(__builtin_ctzll(m));
    m &= m - 1;
  }
  return out;
}

Mask indices_mask(const std::vector<int>& idx) {
  Mask m = 0;
  for (int i : idx) m |= bit(i);
  return m;
}

namespace {

// Calls fn(subset) for every k-subset of items in lexicographic order until
// fn returns false.
template <class Fn>
void for_each_subset(const std::vector<int>& items, int k, Fn&& fn) {
  const int n = static_cast<int>(items.size());
  if (k > n || k < 0) return;
  std::vector<int> pos(k);
  std::iota(pos.begin(), pos.end(), 0);
  std::vector<int> chosen(k);
  for (;;) {
    for (int i = 0; i < k; ++i) chosen[i] = items[pos[i]];
    if (!fn(chosen)) return;
    int i = k - 1;
    while (i >= 0 && pos[i] == n - k + i) --i;
    if (i < 0) return;
    ++pos[i];
    for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

Mat<std::int64_t> reduced_rows(const PointConfig& config, const std::vector<int>& idx) {
  Mat<std::int64_t> rows;
  rows.reserve(idx.size());
  for (int i : idx) rows.push_back(config.reduced(i));
  return rows;
}

// Coordinates (among the configuration's reduced ones) on which the vertex
// set has full rank.
std::vector<int> local_pivots(const PointConfig& config, const std::vector<int>& idx) {
  return pivot_columns(reduced_rows(config, idx));
}

IntVec project(const IntVec& v, const std::vector<int>& cols) {
  IntVec out(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) out[j] = v[cols[j]];
  return out;
}

Integer dot_reduced(const std::vector<Integer>& c, const IntVec& v) {
  Integer s = 0;
  for (std::size_t j = 0; j < c.size(); ++j) s += c[j] * static_cast<long>(v[j]);
  return s;
}

// Greedy affine basis: the first vertices, in index order, that are
// affinely independent.
std::vector<int> greedy_basis(const PointConfig& config, const std::vector<int>& idx) {
  std::vector<int> basis;
  Mat<std::int64_t> rows;
  int r = 0;
  for (int i : idx) {
    rows.push_back(config.reduced(i));
    int nr = rank(rows);
    if (nr > r) {
      r = nr;
      basis.push_back(i);
    } else {
      rows.pop_back();
    }
  }
  return basis;
}

}  // namespace

PointConfig::PointConfig(std::vector<IntVec> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("point configuration is empty");
  if (points_.size() > kMaxPoints) throw std::invalid_argument("point configuration exceeds 64 points");
  const std::size_t n = points_.front().size();
  if (n == 0) throw std::invalid_argument("points must have positive dimension");
  for (const auto& p : points_) {
    if (p.size() != n) throw std::invalid_argument("points have inconsistent dimensions");
  }
  {
    auto sorted = points_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("duplicate points in configuration");
    }
  }
  Mat<std::int64_t> hom;
  for (std::size_t i = 0; i < points_.size(); ++i) hom.push_back(homogenized(i));
  pivots_ = pivot_columns(hom);
  for (const auto& row : hom) reduced_.push_back(project(row, pivots_));
}

IntVec PointConfig::homogenized(std::size_t i) const {
  IntVec h = points_[i];
  h.push_back(1);
  return h;
}

int affine_dimension(const PointConfig& config, Mask vertices) {
  if (vertices == 0) return -1;
  return rank(reduced_rows(config, mask_indices(vertices))) - 1;
}

Cell make_cell(const PointConfig& config, Mask vertices) {
  if (config.size() < 64 && (vertices >> config.size()) != 0) {
    throw std::out_of_range("cell vertex index out of range");
  }
  return Cell{mask_indices(vertices), affine_dimension(config, vertices)};
}

Subdivision make_subdivision(ConfigPtr config, std::vector<Mask> cells) {
  Subdivision s{std::move(config), {}};
  for (Mask m : cells) s.maximal_cells.push_back(make_cell(*s.config, m));
  std::sort(s.maximal_cells.begin(), s.maximal_cells.end());
  s.maximal_cells.erase(std::unique(s.maximal_cells.begin(), s.maximal_cells.end()), s.maximal_cells.end());
  return s;
}

Subdivision trivial_subdivision(ConfigPtr config) {
  Mask all = config->all();
  return make_subdivision(std::move(config), {all});
}

std::vector<SupportedFace> facets(const PointConfig& config, Mask vertices) {
  std::vector<SupportedFace> out;
  const auto idx = mask_indices(vertices);
  if (idx.size() < 2) return out;
  const auto piv = local_pivots(config, idx);
  const int r = static_cast<int>(piv.size());
  if (r < 2) return out;
  std::vector<IntVec> local;
  for (int i : idx) local.push_back(project(config.reduced(i), piv));
  std::map<int, std::size_t> pos;
  for (std::size_t a = 0; a < idx.size(); ++a) pos[idx[a]] = a;

  const std::size_t hom_dim = config.ambient_dim() + 1;
  // Pivot columns of the configuration's reduced coordinates, as homogenized
  // coordinate indices, so functionals can be lifted back.
  const auto& hom_cols = config.reduced_columns();

  std::vector<Mask> found;
  Mat<std::int64_t> rows(r - 1);
  IntVec fast;
  for_each_subset(idx, r - 1, [&](const std::vector<int>& sub) {
    Mask sm = indices_mask(sub);
    for (Mask f : found) {
      if ((sm & ~f) == 0) return true;
    }
    for (int a = 0; a < r - 1; ++a) rows[a] = local[pos[sub[a]]];
    std::vector<Integer> c;
    if (cross_product_fast(rows, fast)) {
      c.reserve(fast.size());
      for (auto x : fast) c.emplace_back(static_cast<long>(x));
    } else {
      c = cross_product(rows);
    }
    bool zero = std::all_of(c.begin(), c.end(), [](const Integer& x) { return x == 0; });
    if (zero) return true;
    int side = 0;
    Mask on = 0;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      int sg = sign(dot_reduced(c, local[a]));
      if (sg == 0) {
        on |= bit(idx[a]);
      } else if (side == 0) {
        side = sg;
      } else if (sg != side) {
        return true;
      }
    }
    if (side < 0) {
      for (auto& x : c) x = -x;
    }
    found.push_back(on);
    std::vector<Integer> functional(hom_dim);
    for (int j = 0; j < r; ++j) functional[hom_cols[piv[j]]] = c[j];
    out.push_back({on, std::move(functional)});
    return true;
  });
  std::sort(out.begin(), out.end(), [](const SupportedFace& a, const SupportedFace& b) {
    return mask_indices(a.vertices) < mask_indices(b.vertices);
  });
  return out;
}

namespace {

void collect_faces(const PointConfig& config, Mask top, std::map<Mask, std::vector<Mask>>& facets_of) {
  std::vector<Mask> stack{top};
  while (!stack.empty()) {
    Mask f = stack.back();
    stack.pop_back();
    if (facets_of.count(f)) continue;
    std::vector<Mask> fs;
    for (auto& sf : facets(config, f)) fs.push_back(sf.vertices);
    for (Mask g : fs) {
      if (!facets_of.count(g)) stack.push_back(g);
    }
    facets_of.emplace(f, std::move(fs));
  }
}

}  // namespace

std::vector<Mask> face_masks(const PointConfig& config, Mask vertices) {
  std::map<Mask, std::vector<Mask>> facets_of;
  collect_faces(config, vertices, facets_of);
  std::vector<Mask> out;
  for (auto& [m, _] : facets_of) out.push_back(m);
  return out;
}

std::vector<std::pair<int, int>> polytope_edges(const Cell& cell, const PointConfig& config) {
  for (int v : cell.vertex_indices) {
    if (v < 0 || static_cast<std::size_t>(v) >= config.size()) throw std::out_of_range("cell vertex out of range");
  }
  Mask m = cell.mask();
  std::vector<std::pair<int, int>> edges;
  for (Mask f : face_masks(config, m)) {
    if (affine_dimension(config, f) != 1) continue;
    auto pts = mask_indices(f);
    // Endpoints: extreme points along a coordinate that varies on the edge.
    std::size_t coord = 0;
    while (config.point(pts[0])[coord] == config.point(pts[1])[coord]) ++coord;
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(), [&](int a, int b) {
      return config.point(a)[coord] < config.point(b)[coord];
    });
    edges.emplace_back(std::min(*lo, *hi), std::max(*lo, *hi));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

FacePoset faces_of_subdivision(const Subdivision& s) {
  const auto& config = *s.config;
  std::map<Mask, std::vector<Mask>> facets_of;
  for (const auto& c : s.maximal_cells) collect_faces(config, c.mask(), facets_of);
  FacePoset poset;
  for (auto& [m, _] : facets_of) poset.faces.push_back(make_cell(config, m));
  std::sort(poset.faces.begin(), poset.faces.end(), [](const Cell& a, const Cell& b) {
    if (a.affine_dim != b.affine_dim) return a.affine_dim < b.affine_dim;
    return a.vertex_indices < b.vertex_indices;
  });
  for (std::size_t i = 0; i < poset.faces.size(); ++i) poset.lookup[poset.faces[i].mask()] = static_cast<int>(i);
  for (std::size_t i = 0; i < poset.faces.size(); ++i) {
    for (Mask g : facets_of.at(poset.faces[i].mask())) {
      poset.covering.emplace_back(static_cast<int>(i), poset.lookup.at(g));
    }
  }
  std::sort(poset.covering.begin(), poset.covering.end());
  poset.containing_cells.resize(poset.faces.size());
  for (std::size_t i = 0; i < poset.faces.size(); ++i) {
    Mask f = poset.faces[i].mask();
    for (std::size_t c = 0; c < s.maximal_cells.size(); ++c) {
      if ((f & ~s.maximal_cells[c].mask()) == 0) poset.containing_cells[i].push_back(static_cast<int>(c));
    }
  }
  return poset;
}

std::vector<Integer> integral_values(const Lifting& lift) {
  Integer den = 1;
  for (const auto& q : lift.values) den = lcm(den, Integer(q.get_den()));
  std::vector<Integer> out;
  out.reserve(lift.values.size());
  for (const auto& q : lift.values) out.push_back(q.get_num() * (den / q.get_den()));
  return out;
}

LowerHullKernel::LowerHullKernel(ConfigPtr config) : config_(std::move(config)) {
  const auto& cfg = *config_;
  rank_ = cfg.affine_dim() + 1;
  std::vector<int> all(cfg.size());
  std::iota(all.begin(), all.end(), 0);
  const int r = rank_;
  Mat<std::int64_t> m(r, IntVec(r));
  Mat<std::int64_t> minor(r - 1, IntVec(r - 1));
  for_each_subset(all, r, [&](const std::vector<int>& sub) {
    for (int i = 0; i < r; ++i) m[i] = cfg.reduced(sub[i]);
    Integer d = det(m);
    if (d == 0) return true;
    Basis b;
    b.mask = indices_mask(sub);
    b.members = sub;
    b.adj.assign(static_cast<std::size_t>(r) * r, 0);
    const int sg = sgn(d);
    b.det = to_int64(Integer(abs(d)));
    // adj[i][j] = (-1)^(i+j) det(m without row j, column i).
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        for (int a = 0, ra = 0; a < r; ++a) {
          if (a == j) continue;
          for (int c = 0, rc = 0; c < r; ++c) {
            if (c == i) continue;
            minor[ra][rc++] = m[a][c];
          }
          ++ra;
        }
        Integer cof = r == 1 ? Integer(1) : det(minor);
        if ((i + j) % 2) cof = -cof;
        b.adj[static_cast<std::size_t>(i) * r + j] = to_int64(Integer(cof * sg));
      }
    }
    bases_.push_back(std::move(b));
    return true;
  });
}

template <class T>
std::vector<Mask> LowerHullKernel::lower_cells_impl(const std::vector<T>& h) const {
  const auto& cfg = *config_;
  const int r = rank_;
  const std::size_t n = cfg.size();
  std::vector<Mask> cells;
  std::vector<T> w(r);
  for (const auto& b : bases_) {
    bool covered = false;
    for (Mask c : cells) {
      if ((b.mask & ~c) == 0) {
        covered = true;
        break;
      }
    }
    if (covered) continue;
    for (int i = 0; i < r; ++i) {
      T acc(0);
      for (int j = 0; j < r; ++j) acc += T(b.adj[static_cast<std::size_t>(i) * r + j]) * h[b.members[j]];
      w[i] = acc;
    }
    Mask on = 0;
    bool lower = true;
    for (std::size_t p = 0; p < n && lower; ++p) {
      const auto& v = cfg.reduced(p);
      T s = T(b.det) * h[p];
      for (int i = 0; i < r; ++i) s -= w[i] * T(v[i]);
      if (s < T(0)) lower = false;
      if (s == T(0)) on |= bit(static_cast<int>(p));
    }
    if (lower) cells.push_back(on);
  }
  return cells;
}

std::vector<Mask> LowerHullKernel::lower_cells(const std::vector<Integer>& heights) const {
  if (heights.size() != config_->size()) throw DomainMismatch("lifting size does not match configuration");
  bool small = std::all_of(heights.begin(), heights.end(), [](const Integer& x) { return x.fits_slong_p(); });
  if (small) {
    std::vector<Checked128> h;
    h.reserve(heights.size());
    for (const auto& x : heights) h.emplace_back(static_cast<std::int64_t>(x.get_si()));
    try {
      return lower_cells_impl(h);
    } catch (const ArithmeticOverflow&) {
    }
  }
  return lower_cells_impl(heights);
}

Subdivision LowerHullKernel::subdivide(const Lifting& lift) const {
  if (lift.values.size() != config_->size()) throw DomainMismatch("lifting size does not match configuration");
  return make_subdivision(config_, lower_cells(integral_values(lift)));
}

Subdivision lower_envelope_subdivision(ConfigPtr config, const Lifting& lift) {
  if (!config) throw std::invalid_argument("null configuration");
  if (lift.values.size() != config->size()) throw DomainMismatch("lifting size does not match configuration");
  return LowerHullKernel(std::move(config)).subdivide(lift);
}

const char* to_string(ConePosition p) {
  switch (p) {
    case ConePosition::Interior:
      return "interior";
    case ConePosition::Boundary:
      return "boundary";
    case ConePosition::Outside:
      return "outside";
  }
  return "?";
}

ConePosition in_secondary_cone(const Lifting& lift, const Subdivision& s) {
  if (lift.values.size() != s.config->size()) throw DomainMismatch("lifting and subdivision disagree on configuration");
  Subdivision t = lower_envelope_subdivision(s.config, lift);
  if (t == s) return ConePosition::Interior;
  for (const auto& c : s.maximal_cells) {
    Mask m = c.mask();
    bool inside = std::any_of(t.maximal_cells.begin(), t.maximal_cells.end(),
                              [&](const Cell& tc) { return (m & ~tc.mask()) == 0; });
    if (!inside) return ConePosition::Outside;
  }
  return ConePosition::Boundary;
}

Cell argmin_face(const PointConfig& config, const Lifting& lift) {
  if (lift.values.size() != config.size()) throw DomainMismatch("lifting size does not match configuration");
  const Rational lo = *std::min_element(lift.values.begin(), lift.values.end());
  Mask m = 0;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (lift.values[i] == lo) m |= bit(static_cast<int>(i));
  }
  return make_cell(config, m);
}

Integer simplex_volume(const PointConfig& config, Mask simplex) {
  auto idx = mask_indices(simplex);
  const std::size_t d = idx.size() - 1;
  if (d == 0) return 1;
  const auto& base = config.point(idx[0]);
  const std::size_t n = config.ambient_dim();
  Mat<std::int64_t> e(n, IntVec(d));
  for (std::size_t j = 0; j < d; ++j) {
    const auto& p = config.point(idx[j + 1]);
    for (std::size_t c = 0; c < n; ++c) e[c][j] = p[c] - base[c];
  }
  Integer g = 0;
  std::vector<int> rows(n);
  std::iota(rows.begin(), rows.end(), 0);
  Mat<std::int64_t> minor(d, IntVec(d));
  for_each_subset(rows, static_cast<int>(d), [&](const std::vector<int>& sub) {
    for (std::size_t a = 0; a < d; ++a) minor[a] = e[sub[a]];
    g = gcd(g, det(minor));
    return g != 1;
  });
  if (g == 0) throw std::domain_error("simplex is degenerate");
  return g;
}

std::vector<Mask> placing_triangulation(const PointConfig& config, Mask vertices) {
  if (vertices == 0) return {};
  const int dim = affine_dimension(config, vertices);
  if (popcount(vertices) == dim + 1) return {vertices};
  const Mask apex = vertices & (~vertices + 1);
  std::vector<Mask> out;
  for (const auto& f : facets(config, vertices)) {
    if (f.vertices & apex) continue;
    for (Mask s : placing_triangulation(config, f.vertices)) out.push_back(s | apex);
  }
  return out;
}

Integer normalized_volume(const PointConfig& config, const Cell& cell) {
  Integer total = 0;
  for (Mask s : placing_triangulation(config, cell.mask())) total += simplex_volume(config, s);
  return total;
}

bool in_scaled_hull(const PointConfig& config, Mask vertices, const IntVec& x, std::int64_t level) {
  if (level <= 0) throw std::invalid_argument("level must be positive");
  if (x.size() != config.ambient_dim()) throw DomainMismatch("point dimension mismatch");
  auto idx = mask_indices(vertices);
  IntVec hx = x;
  hx.push_back(level);
  Mat<std::int64_t> rows;
  for (int i : idx) rows.push_back(config.homogenized(i));
  const int r = rank(rows);
  rows.push_back(hx);
  if (rank(rows) != r) return false;
  if (idx.size() == 1) return true;
  for (const auto& f : facets(config, vertices)) {
    Integer s = 0;
    for (std::size_t j = 0; j < hx.size(); ++j) s += f.functional[j] * static_cast<long>(hx[j]);
    if (s < 0) return false;
  }
  return true;
}

namespace {

void validate_cells(const Subdivision& s) {
  if (!s.config) throw StructuralError("subdivision has no configuration");
  const auto& config = *s.config;
  if (s.maximal_cells.empty()) throw StructuralError("subdivision has no cells");
  for (const auto& c : s.maximal_cells) {
    if (c.vertex_indices.empty()) throw StructuralError("empty cell");
    for (std::size_t i = 0; i < c.vertex_indices.size(); ++i) {
      int v = c.vertex_indices[i];
      if (v < 0 || static_cast<std::size_t>(v) >= config.size()) throw StructuralError("cell vertex out of range");
      if (i > 0 && c.vertex_indices[i - 1] >= v) throw StructuralError("cell vertices not sorted and distinct");
    }
    if (affine_dimension(config, c.mask()) != config.affine_dim()) throw StructuralError("cell is not full-dimensional");
  }
}

}  // namespace

void validate_subdivision(const Subdivision& s) {
  validate_cells(s);
  const auto& config = *s.config;
  if (s.maximal_cells.empty()) throw StructuralError("subdivision has no cells");
  const int dim = config.affine_dim();
  for (const auto& c : s.maximal_cells) {
    if (c.vertex_indices.empty()) throw StructuralError("empty cell");
    for (std::size_t i = 0; i < c.vertex_indices.size(); ++i) {
      int v = c.vertex_indices[i];
      if (v < 0 || static_cast<std::size_t>(v) >= config.size()) throw StructuralError("cell vertex out of range");
      if (i > 0 && c.vertex_indices[i - 1] >= v) throw StructuralError("cell vertices not sorted and distinct");
    }
    if (affine_dimension(config, c.mask()) != dim) throw StructuralError("cell is not full-dimensional");
    for (std::size_t p = 0; p < config.size(); ++p) {
      if (c.mask() & bit(static_cast<int>(p))) continue;
      if (in_scaled_hull(config, c.mask(), config.point(p), 1)) {
        throw StructuralError("cell omits configuration point " + std::to_string(p) + " lying in its hull");
      }
    }
  }
  Integer sum = 0;
  for (const auto& c : s.maximal_cells) sum += normalized_volume(config, c);
  Integer total = normalized_volume(config, make_cell(config, config.all()));
  if (sum != total) {
    throw StructuralError("cell volumes sum to " + sum.get_str() + ", hull volume is " + total.get_str());
  }
  // Each pair of cells must be separated by a hyperplane meeting both in
  // exactly their common vertices.
  const int r = dim + 1;
  for (std::size_t a = 0; a < s.maximal_cells.size(); ++a) {
    for (std::size_t b = a + 1; b < s.maximal_cells.size(); ++b) {
      Mask ma = s.maximal_cells[a].mask(), mb = s.maximal_cells[b].mask();
      Mask common = ma & mb;
      lp::Problem prob(r + 1);
      const std::size_t t = r;
      auto row = [&](std::size_t p, int scale, Rational tcoef) {
        std::vector<Rational> c(r + 1);
        for (int j = 0; j < r; ++j) c[j] = Rational(scale * config.reduced(p)[j]);
        c[t] = tcoef;
        return c;
      };
      for (std::size_t p = 0; p < config.size(); ++p) {
        Mask pb = bit(static_cast<int>(p));
        if (common & pb) {
          prob.add(row(p, 1, 0), lp::Sense::Equal, 0);
        } else if (ma & pb) {
          prob.add(row(p, 1, -1), lp::Sense::GreaterEqual, 0);
        } else if (mb & pb) {
          prob.add(row(p, -1, -1), lp::Sense::GreaterEqual, 0);
        }
      }
      std::vector<Rational> cap(r + 1);
      cap[t] = 1;
      prob.add(cap, lp::Sense::LessEqual, 1);
      prob.objective[t] = 1;
      auto sol = lp::maximize(prob);
      if (sol.status != lp::Status::Optimal || sol.value <= 0) {
        throw StructuralError("cells " + std::to_string(a) + " and " + std::to_string(b) +
                              " do not meet in a common face");
      }
    }
  }
}

CoherenceResult coherence_certificate(const Subdivision& candidate) {
  // A certificate that reproduces the candidate proves it is a subdivision,
  // so the full structural check runs only when none is found.
  validate_cells(candidate);
  const auto& config = *candidate.config;
  const std::size_t n = config.size();
  const int r = config.affine_dim() + 1;

  // Heights affine on every cell, modulo affine functions, form the null
  // space of `equal`.  The strict inequalities are posed on that space.
  Mat<Rational> equal;
  std::set<std::vector<Rational>> strict;
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (int g : greedy_basis(config, all)) {
    std::vector<Rational> c(n);
    c[g] = 1;
    equal.push_back(std::move(c));
  }
  for (const auto& cell : candidate.maximal_cells) {
    auto basis = greedy_basis(config, cell.vertex_indices);
    Mat<Rational> bt(r, std::vector<Rational>(r));
    for (int j = 0; j < r; ++j) {
      for (int i = 0; i < r; ++i) bt[i][j] = Rational(config.reduced(basis[j])[i]);
    }
    const Mask cm = cell.mask();
    for (std::size_t p = 0; p < n; ++p) {
      if (std::find(basis.begin(), basis.end(), static_cast<int>(p)) != basis.end()) continue;
      std::vector<Rational> rhs(r);
      for (int i = 0; i < r; ++i) rhs[i] = Rational(config.reduced(p)[i]);
      auto lambda = solve(bt, rhs);
      std::vector<Rational> c(n);
      c[p] = 1;
      for (int j = 0; j < r; ++j) c[basis[j]] -= lambda[j];
      if (cm & bit(static_cast<int>(p))) {
        equal.push_back(std::move(c));
      } else {
        strict.insert(std::move(c));
      }
    }
  }
  const Mat<Rational> space = nullspace(equal, n);
  const std::size_t d = space.size();
  Lifting lift;
  lift.values.assign(n, Rational(0));
  if (!strict.empty()) {
    if (d == 0) {
      validate_subdivision(candidate);
      return CoherenceResult{};
    }
    lp::Problem prob(d + 1);
    std::set<std::vector<Rational>> rows;
    for (const auto& c : strict) {
      std::vector<Rational> row(d + 1);
      for (std::size_t q = 0; q < d; ++q) {
        for (std::size_t p = 0; p < n; ++p) {
          if (c[p] != 0 && space[q][p] != 0) row[q] += c[p] * space[q][p];
        }
      }
      row[d] = -1;
      if (rows.insert(row).second) prob.add(row, lp::Sense::GreaterEqual, 0);
    }
    std::vector<Rational> cap(d + 1);
    cap[d] = 1;
    prob.add(cap, lp::Sense::LessEqual, 1);
    prob.objective[d] = 1;
    auto sol = lp::maximize(prob);
    if (sol.status != lp::Status::Optimal || sol.value <= 0) {
      validate_subdivision(candidate);
      return CoherenceResult{};
    }
    for (std::size_t q = 0; q < d; ++q) {
      if (sol.x[q] == 0) continue;
      for (std::size_t p = 0; p < n; ++p) lift.values[p] += sol.x[q] * space[q][p];
    }
  }
  if (!(lower_envelope_subdivision(candidate.config, lift) == candidate)) {
    validate_subdivision(candidate);
    throw std::logic_error("coherence certificate failed re-verification");
  }
  return CoherenceResult{std::move(lift)};
}

IntVec primitive(IntVec v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

ConeZ make_cone(std::vector<IntVec> gens) {
  std::vector<IntVec> cleaned;
  for (auto& g : gens) {
    if (std::all_of(g.begin(), g.end(), [](std::int64_t x) { return x == 0; })) continue;
    cleaned.push_back(primitive(std::move(g)));
  }
  std::sort(cleaned.begin(), cleaned.end());
  cleaned.erase(std::unique(cleaned.begin(), cleaned.end()), cleaned.end());
  std::vector<bool> keep(cleaned.size(), true);
  for (std::size_t i = 0; i < cleaned.size(); ++i) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < cleaned.size(); ++j) {
      if (j != i && keep[j]) others.push_back(j);
    }
    if (others.empty()) continue;
    lp::Problem prob(others.size());
    for (std::size_t v = 0; v < others.size(); ++v) prob.nonnegative.push_back(v);
    for (std::size_t c = 0; c < cleaned[i].size(); ++c) {
      std::vector<Rational> row(others.size());
      for (std::size_t v = 0; v < others.size(); ++v) row[v] = Rational(cleaned[others[v]][c]);
      prob.add(row, lp::Sense::Equal, Rational(cleaned[i][c]));
    }
    if (lp::maximize(prob).status == lp::Status::Optimal) keep[i] = false;
  }
  ConeZ cone;
  for (std::size_t i = 0; i < cleaned.size(); ++i) {
    if (keep[i]) cone.generators.push_back(cleaned[i]);
  }
  return cone;
}

}  // namespace hyperstab::geom
