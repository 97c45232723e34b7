#pragma once

// The hypersimplex Delta(k, n) as a point configuration, its facets
// Gamma_i^+ = {x_i = 1} and Gamma_i^- = {x_i = 0}, the matroid edge test and
// restriction of subdivisions to facets.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperstab/geom.hpp"

namespace hyperstab::hyper {

using geom::Cell;
using geom::Mask;
using geom::Subdivision;

struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Sorted, 1-based.
using KSubset = std::vector<int>;
using ElementSet = std::uint32_t;  // bit j-1 set iff j in the subset

std::string to_string(const KSubset& s);  // "1,3,4"
KSubset parse_subset(const std::string& text);

class HypersimplexConfig {
 public:
  // 0 <= k <= n; the extreme cases are single points and only arise as
  // degenerate restriction targets.
  HypersimplexConfig(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  std::size_t size() const { return subsets_.size(); }
  const geom::ConfigPtr& config() const { return config_; }
  const KSubset& subset(std::size_t idx) const { return subsets_[idx]; }
  ElementSet elements(std::size_t idx) const { return elements_[idx]; }
  int index_of(const KSubset& s) const;  // -1 when not a vertex
  int index_of(ElementSet e) const;

  // Built once on first use and shared between copies.
  const geom::LowerHullKernel& kernel() const;

  friend bool operator==(const HypersimplexConfig& a, const HypersimplexConfig& b) {
    return a.k_ == b.k_ && a.n_ == b.n_;
  }

 private:
  struct KernelSlot {
    std::once_flag once;
    std::unique_ptr<geom::LowerHullKernel> kernel;
  };
  int k_, n_;
  std::vector<KSubset> subsets_;
  std::vector<ElementSet> elements_;
  std::unordered_map<ElementSet, int> lookup_;
  geom::ConfigPtr config_;
  std::shared_ptr<KernelSlot> slot_;
};

HypersimplexConfig hypersimplex_vertices(int k, int n);

// Recovers (k, n) from a configuration of 0/1 vectors in lexicographic order.
HypersimplexConfig recognize(const geom::PointConfig& config);

enum class Sign { Plus, Minus };
struct FacetLabel {
  Sign sign = Sign::Plus;
  int i = 1;
};
std::string to_string(FacetLabel f);           // "+2" or "-2"
FacetLabel parse_facet(const std::string& text);

Cell facet_vertex_set(const HypersimplexConfig& cfg, FacetLabel f);
Mask facet_mask(const HypersimplexConfig& cfg, FacetLabel f);

bool is_matroid_direction(const IntVec& a, const IntVec& b);

// Returns the first edge whose direction is not e_i - e_j.
std::optional<std::pair<int, int>> non_matroid_edge(const Cell& cell, const HypersimplexConfig& cfg);
bool is_matroid_polytope(const Cell& cell, const HypersimplexConfig& cfg);

struct MatroidVerdict {
  bool ok = true;
  int cell = -1;                              // first failing cell
  std::optional<std::pair<int, int>> witness;  // its failing edge
};
MatroidVerdict check_matroid_subdivision(const Subdivision& s, const HypersimplexConfig& cfg);
bool is_matroid_subdivision(const Subdivision& s, const HypersimplexConfig& cfg);

struct Restriction {
  HypersimplexConfig target;
  Subdivision subdivision;
  bool degenerate = false;  // target is a single point
};

Restriction restrict_to_facet(const Subdivision& s, const HypersimplexConfig& cfg, FacetLabel f);

Cell weight_polytope(const std::vector<KSubset>& support, const HypersimplexConfig& cfg);

// I -> [n] \ I, carrying subdivisions of Delta(k, n) to Delta(n - k, n).
HypersimplexConfig complement_config(const HypersimplexConfig& cfg);
Subdivision complement(const Subdivision& s, const HypersimplexConfig& cfg);

// Vertex index maps for the two facet re-coordinatizations; -1 off the
// facet.  Plus(i): I -> I \ {i}; Minus(i): I -> I; both relabel [n] \ {i}
// to [n - 1] preserving order.
std::vector<int> facet_index_map(const HypersimplexConfig& cfg, FacetLabel f, const HypersimplexConfig& target);

}  // namespace hyperstab::hyper
