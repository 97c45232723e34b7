#pragma once

// Desk-scale inventories of regular subdivisions of small hypersimplices,
// the leaf-labelled tree oracle and the census of degenerate surfaces.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperstab/stable_pair.hpp"

namespace hyperstab::enumerate {

using geom::Subdivision;
using hyper::ElementSet;
using hyper::HypersimplexConfig;

struct InventoryEntry {
  Subdivision subdivision;
  geom::Lifting witness;                     // first grid lifting producing it
  std::optional<geom::Lifting> certificate;  // from the coherence LP
  bool certified = false;                    // certificate reproduces the subdivision
  int cells = 0;
  bool matroid = false;
};

struct Inventory {
  HypersimplexConfig cfg{2, 4};
  std::vector<std::int64_t> grid;
  bool sampled = false;
  std::vector<InventoryEntry> entries;  // sorted by cell list

  Inventory matroid_only() const;
};

// Every lifting with values in the grid, deduplicated.  Needs C(n, k) <= 20.
Inventory enumerate_regular_subdivisions(int k, int n, const std::vector<std::int64_t>& grid);
// Single-threaded reference with the same output.
Inventory enumerate_regular_subdivisions_serial(int k, int n, const std::vector<std::int64_t>& grid);

// Distinct matroid subdivisions from random degenerations, deterministic in
// the seed.  Stops after max_draws families even when short of count.
Inventory sample_matroid_subdivisions(int k, int n, int count, std::uint64_t seed, int max_degree = 2,
                                      int max_draws = 20000);

// I -> [n] \ I applied to every entry.
Inventory complement(const Inventory& inv);

// A tree with labelled leaves 1..n and no internal vertex of degree 2,
// given by its internal edges as splits.  Each split is stored as the side
// not containing n.
using Tree = std::vector<ElementSet>;

struct TreeCensus {
  long count = 0;
  std::map<std::string, long> shapes;  // internal vertex degrees -> count
  std::vector<Tree> trees;             // sorted
};
TreeCensus tree_oracle(int n);
std::string tree_shape(const Tree& t, int n);

// Splits of the tree dual_complex(ms) for k = 2.
Tree tree_of(const pair::MatroidSubdivision& ms);

// Structural comparison of strata posets with divisor labels, up to poset
// isomorphism and renaming of the labels.
bool strata_isomorphic(const pair::StrataPoset& a, const pair::StrataPoset& b, int n);

struct SurfaceClass {
  int components = 0;
  int multiplicity = 0;
  std::vector<int> members;  // entry positions
  // Three-component classes: the two end components meet in a point stratum.
  bool ends_meet_in_point = false;
  std::vector<int> boundary_face_counts;  // of the first member
};
struct SurfaceCensus {
  std::vector<SurfaceClass> classes;  // by components, then first member
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
// Groups the nontrivial matroid entries of a Delta(3,5) inventory.
SurfaceCensus surface_type_census(const Inventory& inv);

}  // namespace hyperstab::enumerate
