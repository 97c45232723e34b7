#include "hyperstab/stable_pair.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hyperstab::pair {

using hyper::ElementSet;

namespace {

ElementSet union_of(const HypersimplexConfig& cfg, const Cell& c) {
  ElementSet u = 0;
  for (int v : c.vertex_indices) u |= cfg.elements(v);
  return u;
}

ElementSet intersection_of(const HypersimplexConfig& cfg, const Cell& c) {
  ElementSet x = ~ElementSet{0};
  for (int v : c.vertex_indices) x &= cfg.elements(v);
  return x;
}

std::vector<int> labels(ElementSet e) {
  std::vector<int> out;
  for (int j = 0; j < 32; ++j) {
    if (e >> j & 1) out.push_back(j + 1);
  }
  return out;
}

bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

}  // namespace

MatroidSubdivision::MatroidSubdivision(HypersimplexConfig cfg, Subdivision s) : cfg_(std::move(cfg)), s_(std::move(s)) {
  if (!(*s_.config == *cfg_.config())) throw std::invalid_argument("subdivision is not over this hypersimplex");
  auto verdict = hyper::check_matroid_subdivision(s_, cfg_);
  if (!verdict.ok) throw NotMatroid(verdict.cell, *verdict.witness);
  faces_ = std::make_shared<const geom::FacePoset>(geom::faces_of_subdivision(s_));
}

bool StrataPoset::contains(int larger, int smaller) const {
  return subset_of(strata[smaller].face.mask(), strata[larger].face.mask());
}

StrataPoset strata_poset(const MatroidSubdivision& ms) {
  const auto& cfg = ms.cfg();
  const auto& poset = ms.faces();
  const ElementSet all = (ElementSet{1} << cfg.n()) - 1;
  StrataPoset out;
  for (std::size_t f = 0; f < poset.faces.size(); ++f) {
    const Cell& face = poset.faces[f];
    if (union_of(cfg, face) != all) continue;
    Stratum st;
    st.face = face;
    st.face_index = static_cast<int>(f);
    st.stratum_dim = face.affine_dim - (cfg.n() - cfg.k());
    if (st.stratum_dim < 0) throw std::logic_error("stratum of negative dimension");
    st.divisor_labels = labels(intersection_of(cfg, face) & all);
    out.strata.push_back(std::move(st));
  }
  std::sort(out.strata.begin(), out.strata.end(), [](const Stratum& a, const Stratum& b) {
    if (a.stratum_dim != b.stratum_dim) return a.stratum_dim > b.stratum_dim;
    return a.face.vertex_indices < b.face.vertex_indices;
  });
  std::map<int, int> by_face;
  for (std::size_t i = 0; i < out.strata.size(); ++i) by_face[out.strata[i].face_index] = static_cast<int>(i);
  for (auto [big, small] : poset.covering) {
    auto a = by_face.find(big), b = by_face.find(small);
    if (a != by_face.end() && b != by_face.end()) out.covering.emplace_back(a->second, b->second);
  }
  std::sort(out.covering.begin(), out.covering.end());
  return out;
}

std::vector<Cell> components(const Subdivision& s) { return s.maximal_cells; }

StrataPoset divisor_strata(const MatroidSubdivision& ms, int i) {
  if (i < 1 || i > ms.n()) throw std::invalid_argument("divisor index out of range");
  StrataPoset all = strata_poset(ms);
  StrataPoset out;
  std::vector<int> remap(all.strata.size(), -1);
  for (std::size_t s = 0; s < all.strata.size(); ++s) {
    const auto& l = all.strata[s].divisor_labels;
    if (std::find(l.begin(), l.end(), i) == l.end()) continue;
    remap[s] = static_cast<int>(out.strata.size());
    out.strata.push_back(all.strata[s]);
  }
  for (auto [a, b] : all.covering) {
    if (remap[a] >= 0 && remap[b] >= 0) out.covering.emplace_back(remap[a], remap[b]);
  }
  return out;
}

std::vector<int> DualComplex::face_counts(bool boundary_only) const {
  std::vector<int> counts;
  for (const auto& c : cells) {
    if (boundary_only && !c.boundary) continue;
    if (static_cast<int>(counts.size()) <= c.dim) counts.resize(c.dim + 1);
    ++counts[c.dim];
  }
  return counts;
}

DualComplex dual_complex(const MatroidSubdivision& ms) {
  const StrataPoset sp = strata_poset(ms);
  const int k = ms.k();
  DualComplex dc;
  std::vector<int> open_cell(sp.strata.size()), boundary_cell(sp.strata.size(), -1);
  for (std::size_t y = 0; y < sp.strata.size(); ++y) {
    open_cell[y] = static_cast<int>(dc.cells.size());
    dc.cells.push_back({static_cast<int>(y), false, (k - 1) - sp.strata[y].stratum_dim});
    if (!sp.strata[y].divisor_labels.empty()) {
      boundary_cell[y] = static_cast<int>(dc.cells.size());
      dc.cells.push_back({static_cast<int>(y), true, (k - 2) - sp.strata[y].stratum_dim});
    }
  }
  // sigma_Y is a face of sigma_Y' when Y' lies in the closure of Y; the
  // boundary cells follow the same rule and sit inside their own sigma_Y.
  for (std::size_t y = 0; y < sp.strata.size(); ++y) {
    for (std::size_t z = 0; z < sp.strata.size(); ++z) {
      if (!sp.contains(static_cast<int>(y), static_cast<int>(z))) continue;
      if (y != z) {
        dc.faces.emplace_back(open_cell[z], open_cell[y]);
        if (boundary_cell[y] >= 0 && boundary_cell[z] >= 0) dc.faces.emplace_back(boundary_cell[z], boundary_cell[y]);
      }
      if (boundary_cell[y] >= 0) dc.faces.emplace_back(open_cell[z], boundary_cell[y]);
    }
  }
  std::sort(dc.faces.begin(), dc.faces.end());
  return dc;
}

bool Homology::acyclic() const {
  return minus_one == 0 && std::all_of(reduced_betti.begin(), reduced_betti.end(), [](int b) { return b == 0; });
}

Homology poset_homology(int size, const std::vector<std::pair<int, int>>& less) {
  Homology h;
  if (size == 0) {
    h.minus_one = 1;
    return h;
  }
  std::vector<std::vector<int>> up(size);
  for (auto [a, b] : less) up[a].push_back(b);
  for (auto& u : up) std::sort(u.begin(), u.end());
  // Chains by dimension, each stored as an ascending sequence in the order.
  std::vector<std::vector<std::vector<int>>> chains(1);
  for (int v = 0; v < size; ++v) chains[0].push_back({v});
  for (;;) {
    std::vector<std::vector<int>> next;
    for (const auto& c : chains.back()) {
      for (int w : up[c.back()]) {
        auto d = c;
        d.push_back(w);
        next.push_back(std::move(d));
      }
    }
    if (next.empty()) break;
    chains.push_back(std::move(next));
  }
  std::vector<std::map<std::vector<int>, int>> index(chains.size());
  for (std::size_t d = 0; d < chains.size(); ++d) {
    for (std::size_t i = 0; i < chains[d].size(); ++i) index[d][chains[d][i]] = static_cast<int>(i);
  }
  // rank of the boundary from dimension d to d - 1.
  std::vector<int> rank_of(chains.size() + 1, 0);
  for (std::size_t d = 1; d < chains.size(); ++d) {
    std::vector<SparseRow> rows;
    for (const auto& c : chains[d]) {
      SparseRow row;
      for (std::size_t i = 0; i < c.size(); ++i) {
        auto face = c;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        row.emplace_back(index[d - 1].at(face), Rational(i % 2 ? -1 : 1));
      }
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      rows.push_back(std::move(row));
    }
    rank_of[d] = sparse_rank(std::move(rows));
  }
  for (std::size_t d = 0; d < chains.size(); ++d) {
    int b = static_cast<int>(chains[d].size()) - rank_of[d] - rank_of[d + 1];
    h.reduced_betti.push_back(b);
  }
  h.reduced_betti[0] -= 1;
  return h;
}

namespace {

Homology cell_poset_homology(const DualComplex& dc, bool boundary_only) {
  std::vector<int> id(dc.cells.size(), -1);
  int size = 0;
  for (std::size_t c = 0; c < dc.cells.size(); ++c) {
    if (!boundary_only || dc.cells[c].boundary) id[c] = size++;
  }
  std::vector<std::pair<int, int>> less;
  for (auto [cell, face] : dc.faces) {
    if (id[cell] >= 0 && id[face] >= 0) less.emplace_back(id[face], id[cell]);
  }
  return poset_homology(size, less);
}

}  // namespace

Homology sigma_homology(const DualComplex& dc) { return cell_poset_homology(dc, false); }
Homology boundary_homology(const DualComplex& dc) { return cell_poset_homology(dc, true); }

TreeCheck check_tree(const MatroidSubdivision& ms, const DualComplex& dc) {
  TreeCheck out;
  if (ms.k() != 2) {
    out.reason = "tree check applies to k = 2 only";
    return out;
  }
  const StrataPoset sp = strata_poset(ms);
  std::vector<int> vertices, edges;
  for (std::size_t c = 0; c < dc.cells.size(); ++c) {
    (dc.cells[c].dim == 0 ? vertices : edges).push_back(static_cast<int>(c));
    if (dc.cells[c].dim > 1) {
      out.reason = "cell of dimension above one";
      return out;
    }
  }
  std::map<int, int> vid;
  for (std::size_t i = 0; i < vertices.size(); ++i) vid[vertices[i]] = static_cast<int>(i);
  std::vector<int> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> degree(vertices.size(), 0);
  for (int e : edges) {
    std::vector<int> ends;
    for (auto [cell, face] : dc.faces) {
      if (cell == e) ends.push_back(vid.at(face));
    }
    if (ends.size() != 2) {
      out.reason = "edge with " + std::to_string(ends.size()) + " endpoints";
      return out;
    }
    ++degree[ends[0]];
    ++degree[ends[1]];
    parent[find(ends[0])] = find(ends[1]);
  }
  if (vertices.size() != edges.size() + 1) {
    out.reason = "Euler characteristic is not 1";
    return out;
  }
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (find(static_cast<int>(v)) != find(0)) {
      out.reason = "not connected";
      return out;
    }
  }
  std::vector<int> leaf_labels;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    const DualCell& c = dc.cells[vertices[v]];
    if (c.boundary) {
      if (degree[v] != 1) {
        out.reason = "boundary vertex is not a leaf";
        return out;
      }
      const auto& l = sp.strata[c.stratum].divisor_labels;
      if (l.size() != 1) {
        out.reason = "leaf carries more than one label";
        return out;
      }
      leaf_labels.push_back(l[0]);
      ++out.leaves;
    } else {
      if (degree[v] < 3) {
        out.reason = "internal vertex of degree " + std::to_string(degree[v]);
        return out;
      }
      ++out.internal_vertices;
    }
  }
  std::sort(leaf_labels.begin(), leaf_labels.end());
  std::vector<int> expected(ms.n());
  std::iota(expected.begin(), expected.end(), 1);
  if (leaf_labels != expected) {
    out.reason = "leaves are not labelled 1..n";
    return out;
  }
  out.ok = true;
  return out;
}

namespace {

// Quotient of M = {x : sum x = 0} by the saturated span of face - e_I, in
// the coordinates x_1..x_{n-1}.  Rows of the result are the functionals.
Mat<Integer> quotient_functionals(const HypersimplexConfig& cfg, const Cell& face, int vertex) {
  const int n = cfg.n();
  const auto& config = *cfg.config();
  Mat<Integer> w;
  for (int v : face.vertex_indices) {
    if (v == vertex) continue;
    std::vector<Integer> row(n - 1);
    for (int j = 0; j < n - 1; ++j) row[j] = static_cast<long>(config.point(v)[j] - config.point(vertex)[j]);
    w.push_back(std::move(row));
  }
  if (w.empty()) w.push_back(std::vector<Integer>(n - 1));
  int r = 0;
  auto u = column_hermite_transform(w, n - 1, r);
  Mat<Integer> f;
  for (int j = r; j < n - 1; ++j) {
    std::vector<Integer> col(n - 1);
    for (int i = 0; i < n - 1; ++i) col[i] = u[i][j];
    f.push_back(std::move(col));
  }
  return f;
}

IntVec project(const Mat<Integer>& f, const IntVec& a, const IntVec& b) {
  IntVec out(f.size());
  for (std::size_t r = 0; r < f.size(); ++r) {
    Integer s = 0;
    for (std::size_t j = 0; j < f[r].size(); ++j) s += f[r][j] * static_cast<long>(a[j] - b[j]);
    out[r] = to_int64(s);
  }
  return geom::primitive(out);
}

using Code = std::vector<long>;

// Lexicographically least encoding over all orderings of the rays.
std::string canonical_key(int c, const std::vector<IntVec>& rays, const std::vector<LocalCone>& cones,
                          const std::vector<std::vector<std::vector<int>>>& ray_ids) {
  const int m = static_cast<int>(rays.size());
  if (m > 9) throw std::runtime_error("germ has too many rays for exhaustive normalization");
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> pos(m);
  Code best;
  bool have = false;
  do {
    for (int p = 0; p < m; ++p) pos[perm[p]] = p;
    Code code{c, m};
    if (c > 0 && m > 0) {
      Mat<Integer> a(c, std::vector<Integer>(m));
      for (int p = 0; p < m; ++p)
        for (int r = 0; r < c; ++r) a[r][p] = static_cast<long>(rays[perm[p]][r]);
      for (const auto& row : row_hermite_normal_form(a))
        for (const auto& x : row) code.push_back(x.get_si());
    }
    // Cone and facet structure in the permuted ray positions.
    std::vector<std::pair<Code, std::vector<ElementSet>>> blocks;
    for (std::size_t ci = 0; ci < cones.size(); ++ci) {
      std::vector<int> own;
      for (int id : ray_ids[ci][0]) own.push_back(pos[id]);
      std::sort(own.begin(), own.end());
      std::vector<std::pair<Code, ElementSet>> fs;
      for (std::size_t fi = 0; fi < cones[ci].facets.size(); ++fi) {
        Code fc;
        for (int id : ray_ids[ci][fi + 1]) fc.push_back(pos[id]);
        std::sort(fc.begin(), fc.end());
        ElementSet l = 0;
        for (int x : cones[ci].facets[fi].second) l |= ElementSet{1} << (x - 1);
        fc.insert(fc.begin(), static_cast<long>(fc.size()));
        fc.push_back(__builtin_popcount(l));
        fs.emplace_back(std::move(fc), l);
      }
      std::sort(fs.begin(), fs.end());
      Code block{static_cast<long>(own.size())};
      block.insert(block.end(), own.begin(), own.end());
      block.push_back(static_cast<long>(fs.size()));
      std::vector<ElementSet> ls;
      for (auto& [fc, l] : fs) {
        block.insert(block.end(), fc.begin(), fc.end());
        ls.push_back(l);
      }
      blocks.emplace_back(std::move(block), std::move(ls));
    }
    std::sort(blocks.begin(), blocks.end());
    code.push_back(static_cast<long>(blocks.size()));
    std::vector<ElementSet> marked;
    for (auto& [b, ls] : blocks) {
      code.insert(code.end(), b.begin(), b.end());
      for (auto l : ls) {
        if (l) marked.push_back(l);
      }
    }
    // Which marked facets share divisors, independent of label names.
    for (std::size_t x = 0; x < marked.size(); ++x)
      for (std::size_t y = x + 1; y < marked.size(); ++y) code.push_back(__builtin_popcount(marked[x] & marked[y]));
    if (!have || code < best) {
      best = std::move(code);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::string key;
  for (std::size_t i = 0; i < best.size(); ++i) {
    if (i) key += ',';
    key += std::to_string(best[i]);
  }
  return key;
}

}  // namespace

Germ local_germ(const MatroidSubdivision& ms, const Cell& face, int vertex) {
  const auto& cfg = ms.cfg();
  const auto& poset = ms.faces();
  const auto& config = *cfg.config();
  if (!std::binary_search(face.vertex_indices.begin(), face.vertex_indices.end(), vertex)) {
    throw std::invalid_argument("vertex is not in the face");
  }
  const Mask fm = face.mask();
  const int fi = poset.index_of(fm);
  if (fi < 0) throw std::invalid_argument("not a face of the subdivision");
  const int fdim = poset.faces[fi].affine_dim;
  const auto functionals = quotient_functionals(cfg, poset.faces[fi], vertex);

  Germ g;
  g.face_index = fi;
  g.vertex = vertex;
  g.quotient_rank = static_cast<int>(functionals.size());
  const int cell_dim = config.affine_dim();

  std::vector<IntVec> all_rays;
  auto ray_id = [&](const IntVec& r) {
    auto it = std::find(all_rays.begin(), all_rays.end(), r);
    if (it != all_rays.end()) return static_cast<int>(it - all_rays.begin());
    all_rays.push_back(r);
    return static_cast<int>(all_rays.size()) - 1;
  };
  // Per cone: [own ray ids, facet 0 ray ids, facet 1 ray ids, ...].
  std::vector<std::vector<std::vector<int>>> ids;

  for (int ci : poset.containing_cells[fi]) {
    const Mask cm = ms.subdivision().maximal_cells[ci].mask();
    LocalCone lc;
    lc.cell = ci;
    std::vector<std::pair<Mask, IntVec>> covers;
    std::vector<Mask> cell_facets;
    for (std::size_t h = 0; h < poset.faces.size(); ++h) {
      const Cell& f = poset.faces[h];
      const Mask hm = f.mask();
      if (!subset_of(fm, hm) || !subset_of(hm, cm)) continue;
      if (f.affine_dim == fdim + 1) {
        int v = geom::mask_indices(hm & ~fm).front();
        covers.emplace_back(hm, project(functionals, config.point(v), config.point(vertex)));
      }
      if (f.affine_dim == cell_dim - 1) cell_facets.push_back(hm);
    }
    std::vector<std::vector<int>> cone_ids(1);
    for (auto& [hm, r] : covers) {
      lc.cone.generators.push_back(r);
      cone_ids[0].push_back(ray_id(r));
    }
    for (Mask hm : cell_facets) {
      std::vector<int> in, in_ids;
      for (std::size_t r = 0; r < covers.size(); ++r) {
        if (subset_of(covers[r].first, hm)) {
          in.push_back(static_cast<int>(r));
          in_ids.push_back(cone_ids[0][r]);
        }
      }
      ElementSet l = intersection_of(cfg, geom::make_cell(config, hm)) & ((ElementSet{1} << cfg.n()) - 1);
      lc.facets.emplace_back(in, labels(l));
      cone_ids.push_back(in_ids);
    }
    g.local_cones.push_back(std::move(lc));
    ids.push_back(std::move(cone_ids));
  }
  g.canonical_key = canonical_key(g.quotient_rank, all_rays, g.local_cones, ids);
  return g;
}

PointLemmaReport verify_point_lemma(const MatroidSubdivision& ms) {
  const auto& cfg = ms.cfg();
  const auto& poset = ms.faces();
  const int k = ms.k(), n = ms.n();
  PointLemmaReport report;
  hyper::HypersimplexConfig sub(k - 1, n);
  for (std::size_t j = 0; j < sub.size(); ++j) {
    const auto& J = sub.subset(j);
    ++report.checked;
    auto fail = [&](std::string why) { report.failures.push_back({J, std::move(why)}); };
    Mask gamma = 0;
    for (int i = 1; i <= n; ++i) {
      if (std::binary_search(J.begin(), J.end(), i)) continue;
      gamma |= geom::bit(cfg.index_of(sub.elements(j) | ElementSet{1} << (i - 1)));
    }
    const int fi = poset.index_of(gamma);
    if (fi < 0) {
      fail("not a face");
      continue;
    }
    const Cell& face = poset.faces[fi];
    if (face.affine_dim != n - k) {
      fail("stratum is not a point");
      continue;
    }
    if (poset.containing_cells[fi].size() != 1) {
      fail("lies in " + std::to_string(poset.containing_cells[fi].size()) + " components");
      continue;
    }
    Germ g = local_germ(ms, face, face.vertex_indices.front());
    const auto& cone = g.local_cones.front();
    if (static_cast<int>(cone.cone.generators.size()) != k - 1) {
      fail("local cone is not simplicial");
      continue;
    }
    if (k > 1) {
      Mat<std::int64_t> m(cone.cone.generators.begin(), cone.cone.generators.end());
      if (abs(det(m)) != 1) {
        fail("local cone is not unimodular");
        continue;
      }
    }
    int labelled = 0;
    for (const auto& f : cone.facets) labelled += f.second.empty() ? 0 : 1;
    if (static_cast<int>(cone.facets.size()) != k - 1 || labelled != k - 1) {
      fail("local cone facets are not all boundary");
      continue;
    }
  }
  return report;
}

std::vector<GermClass> germ_catalog(const std::vector<MatroidSubdivision>& inputs) {
  std::vector<std::vector<Germ>> per_input(inputs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto sp = strata_poset(inputs[i]);
    for (const auto& st : sp.strata) {
      per_input[i].push_back(local_germ(inputs[i], st.face, st.face.vertex_indices.front()));
    }
  }
  std::vector<GermClass> out;
  std::map<std::string, std::size_t> where;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    for (auto& g : per_input[i]) {
      auto it = where.find(g.canonical_key);
      if (it == where.end()) {
        where.emplace(g.canonical_key, out.size());
        out.push_back(GermClass{g.canonical_key, 1, g, static_cast<int>(i)});
      } else {
        ++out[it->second].multiplicity;
      }
    }
  }
  return out;
}

long graded_dimension(int k, int n, int m) {
  if (m < 0) throw std::invalid_argument("level must be non-negative");
  // Compositions of m k into n parts bounded by m, by dynamic programming.
  std::vector<long> ways(static_cast<std::size_t>(m) * k + 1, 0);
  ways[0] = 1;
  for (int part = 0; part < n; ++part) {
    std::vector<long> next(ways.size(), 0);
    for (std::size_t s = 0; s < ways.size(); ++s) {
      if (!ways[s]) continue;
      for (int x = 0; x <= m && s + x < ways.size(); ++x) next[s + x] += ways[s];
    }
    ways.swap(next);
  }
  return ways.back();
}

long graded_dimension_by_cells(const MatroidSubdivision& ms, int m) {
  if (m < 0) throw std::invalid_argument("level must be non-negative");
  const auto& poset = ms.faces();
  const auto& config = *ms.cfg().config();
  const int n = ms.n(), k = ms.k();
  std::vector<IntVec> points;
  if (m > 0) {
    IntVec x(n, 0);
    for (;;) {
      std::int64_t s = std::accumulate(x.begin(), x.end(), std::int64_t{0});
      if (s == static_cast<std::int64_t>(m) * k) points.push_back(x);
      int j = 0;
      while (j < n && x[j] == m) x[j++] = 0;
      if (j == n) break;
      ++x[j];
    }
  }
  long total = 0;
  for (std::size_t g = 0; g < poset.faces.size(); ++g) {
    const Mask gm = poset.faces[g].mask();
    long weight = 0;
    for (const auto& f : poset.faces) {
      if (subset_of(gm, f.mask())) weight += (f.affine_dim - poset.faces[g].affine_dim) % 2 ? -1 : 1;
    }
    if (weight == 0) continue;
    long count = 0;
    if (m == 0) {
      count = 1;
    } else {
      for (const auto& x : points) count += geom::in_scaled_hull(config, gm, x, m) ? 1 : 0;
    }
    total += weight * count;
  }
  return total;
}

}  // namespace hyperstab::pair
