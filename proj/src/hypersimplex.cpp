#include "hyperstab/hypersimplex.hpp"

#include <algorithm>
#include <sstream>

namespace hyperstab::hyper {

std::string to_string(const KSubset& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

KSubset parse_subset(const std::string& text) {
  KSubset out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed subset: " + text);
    }
    if (used != item.size() || v < 1) throw std::invalid_argument("malformed subset: " + text);
    if (!out.empty() && v <= out.back()) throw std::invalid_argument("subset is not strictly increasing: " + text);
    out.push_back(v);
  }
  return out;
}

HypersimplexConfig::HypersimplexConfig(int k, int n) : k_(k), n_(n), slot_(std::make_shared<KernelSlot>()) {
  if (n < 1 || k < 0 || k > n) throw ParameterError("need 0 <= k <= n and n >= 1");
  if (n > 31) throw ParameterError("n too large");
  std::vector<int> sel(n, 0);
  std::fill(sel.begin(), sel.begin() + k, 1);
  std::vector<IntVec> points;
  do {
    KSubset s;
    ElementSet e = 0;
    IntVec p(n, 0);
    for (int j = 0; j < n; ++j) {
      if (sel[j]) {
        s.push_back(j + 1);
        e |= ElementSet{1} << j;
        p[j] = 1;
      }
    }
    subsets_.push_back(std::move(s));
    lookup_.emplace(e, static_cast<int>(elements_.size()));
    elements_.push_back(e);
    points.push_back(std::move(p));
  } while (std::prev_permutation(sel.begin(), sel.end()));
  if (points.size() > geom::kMaxPoints) throw ParameterError("hypersimplex has more than 64 vertices");
  config_ = std::make_shared<const geom::PointConfig>(std::move(points));
}

int HypersimplexConfig::index_of(ElementSet e) const {
  auto it = lookup_.find(e);
  return it == lookup_.end() ? -1 : it->second;
}

int HypersimplexConfig::index_of(const KSubset& s) const {
  ElementSet e = 0;
  for (int j : s) {
    if (j < 1 || j > n_) return -1;
    e |= ElementSet{1} << (j - 1);
  }
  if (static_cast<int>(s.size()) != k_ || __builtin_popcount(e) != k_) return -1;
  return index_of(e);
}

const geom::LowerHullKernel& HypersimplexConfig::kernel() const {
  std::call_once(slot_->once, [&] { slot_->kernel = std::make_unique<geom::LowerHullKernel>(config_); });
  return *slot_->kernel;
}

HypersimplexConfig hypersimplex_vertices(int k, int n) {
  if (!(n > k && k >= 1)) throw ParameterError("hypersimplex needs n > k >= 1");
  return HypersimplexConfig(k, n);
}

HypersimplexConfig recognize(const geom::PointConfig& config) {
  const int n = static_cast<int>(config.ambient_dim());
  std::int64_t k = 0;
  for (auto x : config.point(0)) k += x;
  if (k < 0 || k > n) throw ParameterError("configuration is not a hypersimplex");
  HypersimplexConfig cfg(static_cast<int>(k), n);
  if (!(*cfg.config() == config)) throw ParameterError("configuration is not a hypersimplex");
  return cfg;
}

std::string to_string(FacetLabel f) { return (f.sign == Sign::Plus ? "+" : "-") + std::to_string(f.i); }

FacetLabel parse_facet(const std::string& text) {
  if (text.size() < 2 || (text[0] != '+' && text[0] != '-')) throw std::invalid_argument("facet must be +i or -i");
  FacetLabel f;
  f.sign = text[0] == '+' ? Sign::Plus : Sign::Minus;
  std::size_t used = 0;
  try {
    f.i = std::stoi(text.substr(1), &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("facet must be +i or -i");
  }
  if (used != text.size() - 1) throw std::invalid_argument("facet must be +i or -i");
  return f;
}

Mask facet_mask(const HypersimplexConfig& cfg, FacetLabel f) {
  if (f.i < 1 || f.i > cfg.n()) throw ParameterError("facet index out of range");
  const ElementSet bit = ElementSet{1} << (f.i - 1);
  Mask m = 0;
  for (std::size_t v = 0; v < cfg.size(); ++v) {
    bool in = (cfg.elements(v) & bit) != 0;
    if (in == (f.sign == Sign::Plus)) m |= geom::bit(static_cast<int>(v));
  }
  return m;
}

Cell facet_vertex_set(const HypersimplexConfig& cfg, FacetLabel f) {
  return geom::make_cell(*cfg.config(), facet_mask(cfg, f));
}

bool is_matroid_direction(const IntVec& a, const IntVec& b) {
  int plus = 0, minus = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    auto d = a[j] - b[j];
    if (d == 1) {
      ++plus;
    } else if (d == -1) {
      ++minus;
    } else if (d != 0) {
      return false;
    }
  }
  return plus == 1 && minus == 1;
}

std::optional<std::pair<int, int>> non_matroid_edge(const Cell& cell, const HypersimplexConfig& cfg) {
  const auto& config = *cfg.config();
  for (auto [a, b] : geom::polytope_edges(cell, config)) {
    if (!is_matroid_direction(config.point(a), config.point(b))) return std::pair{a, b};
  }
  return std::nullopt;
}

bool is_matroid_polytope(const Cell& cell, const HypersimplexConfig& cfg) { return !non_matroid_edge(cell, cfg); }

MatroidVerdict check_matroid_subdivision(const Subdivision& s, const HypersimplexConfig& cfg) {
  for (std::size_t c = 0; c < s.maximal_cells.size(); ++c) {
    if (auto e = non_matroid_edge(s.maximal_cells[c], cfg)) return MatroidVerdict{false, static_cast<int>(c), e};
  }
  return MatroidVerdict{};
}

bool is_matroid_subdivision(const Subdivision& s, const HypersimplexConfig& cfg) {
  return check_matroid_subdivision(s, cfg).ok;
}

std::vector<int> facet_index_map(const HypersimplexConfig& cfg, FacetLabel f, const HypersimplexConfig& target) {
  const int i = f.i;
  std::vector<int> map(cfg.size(), -1);
  for (std::size_t v = 0; v < cfg.size(); ++v) {
    const auto& s = cfg.subset(v);
    bool has = std::find(s.begin(), s.end(), i) != s.end();
    if (has != (f.sign == Sign::Plus)) continue;
    KSubset t;
    for (int j : s) {
      if (j == i) continue;
      t.push_back(j < i ? j : j - 1);
    }
    map[v] = target.index_of(t);
  }
  return map;
}

Restriction restrict_to_facet(const Subdivision& s, const HypersimplexConfig& cfg, FacetLabel f) {
  if (f.i < 1 || f.i > cfg.n()) throw ParameterError("facet index out of range");
  const int tk = f.sign == Sign::Plus ? cfg.k() - 1 : cfg.k();
  const int tn = cfg.n() - 1;
  HypersimplexConfig target(tk, tn);
  if (tk == 0 || tk == tn) {
    return Restriction{target, geom::trivial_subdivision(target.config()), true};
  }
  const Mask fm = facet_mask(cfg, f);
  const int dim = geom::affine_dimension(*cfg.config(), fm);
  const auto map = facet_index_map(cfg, f, target);
  std::vector<Mask> cells;
  for (const auto& c : s.maximal_cells) {
    Mask x = c.mask() & fm;
    if (x == 0 || geom::affine_dimension(*cfg.config(), x) != dim) continue;
    Mask y = 0;
    for (int v : geom::mask_indices(x)) y |= geom::bit(map[v]);
    cells.push_back(y);
  }
  return Restriction{target, geom::make_subdivision(target.config(), std::move(cells)), false};
}

Cell weight_polytope(const std::vector<KSubset>& support, const HypersimplexConfig& cfg) {
  if (support.empty()) throw std::invalid_argument("empty support");
  Mask m = 0;
  for (const auto& s : support) {
    int idx = cfg.index_of(s);
    if (idx < 0) throw std::invalid_argument("subset " + to_string(s) + " is not a vertex");
    m |= geom::bit(idx);
  }
  return geom::make_cell(*cfg.config(), m);
}

HypersimplexConfig complement_config(const HypersimplexConfig& cfg) { return HypersimplexConfig(cfg.n() - cfg.k(), cfg.n()); }

Subdivision complement(const Subdivision& s, const HypersimplexConfig& cfg) {
  HypersimplexConfig dual = complement_config(cfg);
  const ElementSet all = (ElementSet{1} << cfg.n()) - 1;
  std::vector<Mask> cells;
  for (const auto& c : s.maximal_cells) {
    Mask m = 0;
    for (int v : c.vertex_indices) m |= geom::bit(dual.index_of(all & ~cfg.elements(v)));
    cells.push_back(m);
  }
  return geom::make_subdivision(dual.config(), std::move(cells));
}

}  // namespace hyperstab::hyper
