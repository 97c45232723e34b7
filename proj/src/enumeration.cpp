#include "hyperstab/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "hyperstab/degeneration.hpp"

namespace hyperstab::enumerate {

using geom::Mask;

namespace {

using Key = std::vector<Mask>;

Key key_of(const Subdivision& s) {
  Key k;
  for (const auto& c : s.maximal_cells) k.push_back(c.mask());
  return k;
}

long choose(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

geom::Lifting decode(std::int64_t idx, const std::vector<std::int64_t>& grid, std::size_t points) {
  geom::Lifting l;
  const auto g = static_cast<std::int64_t>(grid.size());
  for (std::size_t p = 0; p < points; ++p) {
    l.values.emplace_back(static_cast<long>(grid[idx % g]));
    idx /= g;
  }
  return l;
}

std::int64_t sweep_size(const HypersimplexConfig& cfg, const std::vector<std::int64_t>& grid) {
  if (grid.empty()) throw std::invalid_argument("empty weight grid");
  std::int64_t total = 1;
  for (std::size_t p = 0; p < cfg.size(); ++p) {
    if (total > INT64_MAX / static_cast<std::int64_t>(grid.size())) throw std::invalid_argument("sweep too large");
    total *= static_cast<std::int64_t>(grid.size());
  }
  return total;
}

HypersimplexConfig checked_config(int k, int n) {
  auto cfg = hyper::hypersimplex_vertices(k, n);
  if (cfg.size() > 20) {
    throw hyper::ParameterError("enumeration is capped at 20 vertices; Delta(" + std::to_string(k) + "," +
                                std::to_string(n) + ") has " + std::to_string(choose(n, k)));
  }
  return cfg;
}

Inventory finish(const HypersimplexConfig& cfg, const std::vector<std::int64_t>& grid,
                 const std::map<Key, std::int64_t>& found) {
  Inventory inv;
  inv.cfg = cfg;
  inv.grid = grid;
  std::vector<std::pair<Key, std::int64_t>> items(found.begin(), found.end());
  inv.entries.resize(items.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < items.size(); ++i) {
    InventoryEntry& e = inv.entries[i];
    e.witness = decode(items[i].second, grid, cfg.size());
    e.subdivision = geom::make_subdivision(cfg.config(), items[i].first);
    e.cells = static_cast<int>(e.subdivision.maximal_cells.size());
    e.matroid = hyper::is_matroid_subdivision(e.subdivision, cfg);
    e.certificate = geom::coherence_certificate(e.subdivision).certificate;
    e.certified = e.certificate && cfg.kernel().subdivide(*e.certificate) == e.subdivision;
  }
  return inv;
}

}  // namespace

Inventory Inventory::matroid_only() const {
  Inventory out;
  out.cfg = cfg;
  out.grid = grid;
  out.sampled = sampled;
  for (const auto& e : entries) {
    if (e.matroid) out.entries.push_back(e);
  }
  return out;
}

Inventory enumerate_regular_subdivisions(int k, int n, const std::vector<std::int64_t>& grid) {
  const auto cfg = checked_config(k, n);
  const std::int64_t total = sweep_size(cfg, grid);
  const auto& kernel = cfg.kernel();
  std::map<Key, std::int64_t> found;
#pragma omp parallel
  {
    std::map<Key, std::int64_t> local;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t idx = 0; idx < total; ++idx) {
      auto key = key_of(kernel.subdivide(decode(idx, grid, cfg.size())));
      local.emplace(std::move(key), idx);  // keeps the smallest index seen here
    }
#pragma omp critical
    for (auto& [key, idx] : local) {
      auto [it, fresh] = found.emplace(key, idx);
      if (!fresh) it->second = std::min(it->second, idx);
    }
  }
  return finish(cfg, grid, found);
}

Inventory enumerate_regular_subdivisions_serial(int k, int n, const std::vector<std::int64_t>& grid) {
  const auto cfg = checked_config(k, n);
  const std::int64_t total = sweep_size(cfg, grid);
  std::map<Key, std::int64_t> found;
  for (std::int64_t idx = 0; idx < total; ++idx) {
    auto s = cfg.kernel().subdivide(decode(idx, grid, cfg.size()));
    found.emplace(key_of(s), idx);
  }
  return finish(cfg, grid, found);
}

Inventory sample_matroid_subdivisions(int k, int n, int count, std::uint64_t seed, int max_degree, int max_draws) {
  HypersimplexConfig cfg(k, n);
  if (n <= k || k < 1) throw hyper::ParameterError("need n > k >= 1");
  Rng rng(seed);
  Inventory inv;
  inv.cfg = cfg;
  inv.sampled = true;
  std::set<Key> seen;
  for (int draw = 0; draw < max_draws && static_cast<int>(inv.entries.size()) < count; ++draw) {
    auto fam = degen::subdivision_from_matrix(degen::random_family(rng, k, n, max_degree), cfg);
    auto key = key_of(fam.subdivision);
    if (!seen.insert(key).second) continue;
    InventoryEntry e;
    e.cells = static_cast<int>(fam.subdivision.maximal_cells.size());
    e.matroid = hyper::is_matroid_subdivision(fam.subdivision, cfg);
    e.witness = fam.lifting;
    e.certificate = fam.lifting;
    e.certified = true;
    e.subdivision = std::move(fam.subdivision);
    inv.entries.push_back(std::move(e));
  }
  std::sort(inv.entries.begin(), inv.entries.end(), [](const InventoryEntry& a, const InventoryEntry& b) {
    return key_of(a.subdivision) < key_of(b.subdivision);
  });
  return inv;
}

Inventory complement(const Inventory& inv) {
  Inventory out;
  out.cfg = hyper::complement_config(inv.cfg);
  out.grid = inv.grid;
  out.sampled = inv.sampled;
  const ElementSet all = (ElementSet{1} << inv.cfg.n()) - 1;
  auto move = [&](const geom::Lifting& l) {
    geom::Lifting m;
    m.values.resize(l.values.size());
    for (std::size_t v = 0; v < l.values.size(); ++v) m.values[out.cfg.index_of(~inv.cfg.elements(v) & all)] = l.values[v];
    return m;
  };
  for (const auto& e : inv.entries) {
    InventoryEntry c = e;
    c.subdivision = hyper::complement(e.subdivision, inv.cfg);
    c.witness = move(e.witness);
    if (e.certificate) c.certificate = move(*e.certificate);
    c.matroid = hyper::is_matroid_subdivision(c.subdivision, out.cfg);
    out.entries.push_back(std::move(c));
  }
  std::sort(out.entries.begin(), out.entries.end(), [](const InventoryEntry& a, const InventoryEntry& b) {
    return key_of(a.subdivision) < key_of(b.subdivision);
  });
  return out;
}

namespace {

bool compatible(ElementSet a, ElementSet b, ElementSet all) {
  return (a & b) == 0 || (a & ~b) == 0 || (b & ~a) == 0 || (a | b) == all;
}

}  // namespace

std::string tree_shape(const Tree& t, int n) {
  std::vector<int> sizes;
  for (ElementSet s : t) {
    int a = __builtin_popcount(s);
    sizes.push_back(std::min(a, n - a));
  }
  std::sort(sizes.begin(), sizes.end());
  std::string out = "splits:";
  for (std::size_t i = 0; i < sizes.size(); ++i) out += (i ? "," : "") + std::to_string(sizes[i]);
  return out;
}

TreeCensus tree_oracle(int n) {
  if (n < 3 || n > 12) throw hyper::ParameterError("tree oracle needs 3 <= n <= 12");
  const ElementSet all = (ElementSet{1} << n) - 1;
  const ElementSet last = ElementSet{1} << (n - 1);
  // Candidate splits: sides of size at least two avoiding n.
  std::vector<ElementSet> splits;
  for (ElementSet s = 1; s < all; ++s) {
    if (s & last) continue;
    int a = __builtin_popcount(s);
    if (a >= 2 && n - a >= 2) splits.push_back(s);
  }
  TreeCensus out;
  Tree current;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    out.trees.push_back(current);
    for (std::size_t i = from; i < splits.size(); ++i) {
      bool ok = std::all_of(current.begin(), current.end(), [&](ElementSet t) { return compatible(t, splits[i], all); });
      if (!ok) continue;
      current.push_back(splits[i]);
      grow(i + 1);
      current.pop_back();
    }
  };
  grow(0);
  std::sort(out.trees.begin(), out.trees.end());
  out.count = static_cast<long>(out.trees.size());
  for (const auto& t : out.trees) ++out.shapes[tree_shape(t, n)];
  return out;
}

Tree tree_of(const pair::MatroidSubdivision& ms) {
  if (ms.k() != 2) throw std::invalid_argument("trees arise for k = 2 only");
  const auto sp = pair::strata_poset(ms);
  const auto dc = pair::dual_complex(ms);
  const int n = ms.n();
  std::vector<std::vector<std::pair<int, int>>> adj(dc.cells.size());  // (neighbour, edge cell)
  for (std::size_t e = 0; e < dc.cells.size(); ++e) {
    if (dc.cells[e].dim != 1) continue;
    std::vector<int> ends;
    for (auto [cell, face] : dc.faces) {
      if (cell == static_cast<int>(e)) ends.push_back(face);
    }
    if (ends.size() != 2) throw std::logic_error("dual complex edge without two endpoints");
    adj[ends[0]].emplace_back(ends[1], static_cast<int>(e));
    adj[ends[1]].emplace_back(ends[0], static_cast<int>(e));
  }
  const ElementSet last = ElementSet{1} << (n - 1);
  Tree out;
  for (std::size_t e = 0; e < dc.cells.size(); ++e) {
    if (dc.cells[e].dim != 1) continue;
    int a = -1, b = -1;
    for (std::size_t v = 0; v < adj.size(); ++v) {
      for (auto [w, edge] : adj[v]) {
        if (edge == static_cast<int>(e)) {
          a = static_cast<int>(v);
          b = w;
        }
      }
    }
    if (dc.cells[a].boundary || dc.cells[b].boundary) continue;
    // Leaves reachable from a without crossing e.
    ElementSet side = 0;
    std::vector<bool> seen(dc.cells.size());
    std::vector<int> stack{a};
    seen[a] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (dc.cells[v].boundary) {
        for (int l : sp.strata[dc.cells[v].stratum].divisor_labels) side |= ElementSet{1} << (l - 1);
      }
      for (auto [w, edge] : adj[v]) {
        if (edge == static_cast<int>(e) || seen[w]) continue;
        seen[w] = true;
        stack.push_back(w);
      }
    }
    if (side & last) side = ((ElementSet{1} << n) - 1) & ~side;
    out.push_back(side);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct ColoredGraph {
  std::vector<std::vector<int>> color;  // per node
  std::vector<std::set<int>> out, in;
};

ColoredGraph graph_of(const pair::StrataPoset& sp, int n) {
  const int m = static_cast<int>(sp.strata.size());
  ColoredGraph g;
  g.color.resize(m + n);
  g.out.resize(m + n);
  g.in.resize(m + n);
  for (auto [a, b] : sp.covering) {
    g.out[a].insert(b);
    g.in[b].insert(a);
  }
  for (int s = 0; s < m; ++s) {
    for (int l : sp.strata[s].divisor_labels) {
      g.out[s].insert(m + l - 1);
      g.in[m + l - 1].insert(s);
    }
  }
  for (int v = 0; v < m + n; ++v) {
    const bool label = v >= m;
    g.color[v] = {label ? 1 : 0, label ? 0 : sp.strata[v].stratum_dim, static_cast<int>(g.out[v].size()),
                  static_cast<int>(g.in[v].size())};
  }
  return g;
}

}  // namespace

bool strata_isomorphic(const pair::StrataPoset& a, const pair::StrataPoset& b, int n) {
  if (a.strata.size() != b.strata.size() || a.covering.size() != b.covering.size()) return false;
  const auto ga = graph_of(a, n), gb = graph_of(b, n);
  const int size = static_cast<int>(ga.color.size());
  {
    auto ca = ga.color, cb = gb.color;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return false;
  }
  std::vector<int> map(size, -1), inverse(size, -1);
  std::function<bool(int)> extend = [&](int v) {
    if (v == size) return true;
    for (int w = 0; w < size; ++w) {
      if (inverse[w] >= 0 || gb.color[w] != ga.color[v]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        ok = ga.out[v].count(u) == gb.out[w].count(map[u]) && ga.in[v].count(u) == gb.in[w].count(map[u]);
      }
      if (!ok) continue;
      map[v] = w;
      inverse[w] = v;
      if (extend(v + 1)) return true;
      map[v] = -1;
      inverse[w] = -1;
    }
    return false;
  };
  return extend(0);
}

SurfaceCensus surface_type_census(const Inventory& inv) {
  SurfaceCensus census;
  const auto& cfg = inv.cfg;
  if (cfg.k() != 3 || cfg.n() != 5) census.failures.push_back("census expects a Delta(3,5) inventory");
  std::vector<pair::StrataPoset> reps;
  for (std::size_t i = 0; i < inv.entries.size(); ++i) {
    const auto& e = inv.entries[i];
    if (!e.matroid || e.cells < 2) continue;
    pair::MatroidSubdivision ms(cfg, e.subdivision);
    auto sp = pair::strata_poset(ms);
    std::size_t c = 0;
    while (c < reps.size() && !strata_isomorphic(reps[c], sp, cfg.n())) ++c;
    if (c == reps.size()) {
      reps.push_back(sp);
      SurfaceClass cls;
      cls.components = e.cells;
      cls.boundary_face_counts = pair::dual_complex(ms).face_counts(true);
      census.classes.push_back(cls);
    }
    auto& cls = census.classes[c];
    ++cls.multiplicity;
    cls.members.push_back(static_cast<int>(i));
    if (e.cells != cls.components) census.failures.push_back("isomorphic strata with different component counts");
    if (!pair::verify_point_lemma(ms).ok()) census.failures.push_back("entry " + std::to_string(i) + " fails the point lemma");
  }
  for (auto& cls : census.classes) {
    if (cls.components != 3) continue;
    pair::MatroidSubdivision ms(cfg, inv.entries[cls.members.front()].subdivision);
    const auto& cells = ms.subdivision().maximal_cells;
    const int d = cfg.config()->affine_dim();
    auto meet = [&](std::size_t a, std::size_t b) {
      return geom::make_cell(*cfg.config(), cells[a].mask() & cells[b].mask());
    };
    for (std::size_t mid = 0; mid < 3; ++mid) {
      std::size_t a = (mid + 1) % 3, b = (mid + 2) % 3;
      if (meet(mid, a).affine_dim != d - 1 || meet(mid, b).affine_dim != d - 1) continue;
      auto ends = meet(a, b);
      auto sp = pair::strata_poset(ms);
      for (const auto& s : sp.strata) {
        if (s.face == ends && s.stratum_dim == 0) cls.ends_meet_in_point = true;
      }
    }
    if (!cls.ends_meet_in_point) census.failures.push_back("end components of a chain do not meet in a point");
  }
  std::stable_sort(census.classes.begin(), census.classes.end(),
                   [](const SurfaceClass& x, const SurfaceClass& y) { return x.components < y.components; });
  std::vector<int> comps;
  for (const auto& c : census.classes) comps.push_back(c.components);
  if (comps != std::vector<int>{2, 3}) {
    census.failures.push_back("expected two surface classes with 2 and 3 components, found " +
                              std::to_string(comps.size()));
  }
  return census;
}

}  // namespace hyperstab::enumerate
