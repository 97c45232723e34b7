#pragma once

// Exact polyhedral kernel: lower-envelope (regular) subdivisions of finite
// point configurations, face lattices, secondary-cone membership, coherence
// certificates and lattice-normalized volumes.
//
// Configurations are small (at most 64 points) so vertex sets are carried as
// 64-bit masks internally and as sorted index lists in the public types.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperstab/exact.hpp"

namespace hyperstab::geom {

using Mask = std::uint64_t;
constexpr std::size_t kMaxPoints = 64;

struct DomainMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct StructuralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Mask bit(int i) { return Mask{1} << i; }
std::vector<int> mask_indices(Mask m);
Mask indices_mask(const std::vector<int>& idx);
inline int popcount(Mask m) { return __builtin_popcountll(m); }

class PointConfig {
 public:
  explicit PointConfig(std::vector<IntVec> points);

  std::size_t size() const { return points_.size(); }
  std::size_t ambient_dim() const { return points_.front().size(); }
  const IntVec& point(std::size_t i) const { return points_[i]; }
  const std::vector<IntVec>& points() const { return points_; }
  int affine_dim() const { return static_cast<int>(pivots_.size()) - 1; }
  Mask all() const { return size() == 64 ? ~Mask{0} : (bit(static_cast<int>(size())) - 1); }

  // (p, 1) restricted to a fixed set of affine_dim()+1 coordinates on which
  // the homogenized configuration has full rank.  Affine relations among
  // points are exactly the linear relations among these vectors.
  const IntVec& reduced(std::size_t i) const { return reduced_[i]; }
  IntVec homogenized(std::size_t i) const;
  // Homogenized coordinate index behind each reduced coordinate.
  const std::vector<int>& reduced_columns() const { return pivots_; }

  friend bool operator==(const PointConfig& a, const PointConfig& b) { return a.points_ == b.points_; }

 private:
  std::vector<IntVec> points_;
  std::vector<int> pivots_;
  std::vector<IntVec> reduced_;
};

using ConfigPtr = std::shared_ptr<const PointConfig>;

struct Lifting {
  std::vector<Rational> values;  // indexed by point
};

struct Cell {
  std::vector<int> vertex_indices;  // sorted
  int affine_dim = -1;

  Mask mask() const { return indices_mask(vertex_indices); }
  friend bool operator==(const Cell& a, const Cell& b) { return a.vertex_indices == b.vertex_indices; }
  friend bool operator<(const Cell& a, const Cell& b) { return a.vertex_indices < b.vertex_indices; }
};

Cell make_cell(const PointConfig& config, Mask vertices);
int affine_dimension(const PointConfig& config, Mask vertices);

struct Subdivision {
  ConfigPtr config;
  std::vector<Cell> maximal_cells;  // sorted by vertex list

  friend bool operator==(const Subdivision& a, const Subdivision& b) {
    return *a.config == *b.config && a.maximal_cells == b.maximal_cells;
  }
};

Subdivision make_subdivision(ConfigPtr config, std::vector<Mask> cells);
Subdivision trivial_subdivision(ConfigPtr config);

struct FacePoset {
  std::vector<Cell> faces;  // sorted by (affine_dim, vertex list); empty face omitted
  std::vector<std::pair<int, int>> covering;  // (face, facet of that face)
  std::vector<std::vector<int>> containing_cells;  // maximal cell indices per face

  std::unordered_map<Mask, int> lookup;

  int index_of(Mask vertices) const {
    auto it = lookup.find(vertices);
    return it == lookup.end() ? -1 : it->second;
  }
};

// A face together with an exposing functional on homogenized coordinates:
// c . (p, 1) >= 0 for the vertices of the ambient polytope, with equality
// exactly on the face.  Only meaningful on the ambient polytope's span.
struct SupportedFace {
  Mask vertices = 0;
  std::vector<Integer> functional;
};

// Facets of conv(vertices), each with an exposing functional.
std::vector<SupportedFace> facets(const PointConfig& config, Mask vertices);

// All nonempty faces of conv(vertices) including itself.
std::vector<Mask> face_masks(const PointConfig& config, Mask vertices);

class LowerHullKernel;

Subdivision lower_envelope_subdivision(ConfigPtr config, const Lifting& lift);

std::vector<std::pair<int, int>> polytope_edges(const Cell& cell, const PointConfig& config);

FacePoset faces_of_subdivision(const Subdivision& s);

enum class ConePosition { Interior, Boundary, Outside };
const char* to_string(ConePosition p);

ConePosition in_secondary_cone(const Lifting& lift, const Subdivision& s);

Cell argmin_face(const PointConfig& config, const Lifting& lift);

struct CoherenceResult {
  std::optional<Lifting> certificate;  // empty when the strict LP is infeasible
};

// Throws StructuralError when the candidate is not a polyhedral subdivision.
CoherenceResult coherence_certificate(const Subdivision& candidate);

// Throws StructuralError with the failing invariant.
void validate_subdivision(const Subdivision& s);

Integer normalized_volume(const PointConfig& config, const Cell& cell);

// Simplices (vertex masks) of the placing triangulation of conv(vertices),
// placing vertices in increasing index order.
std::vector<Mask> placing_triangulation(const PointConfig& config, Mask vertices);

// Lattice index of the simplex in Z^n intersected with its affine span.
Integer simplex_volume(const PointConfig& config, Mask simplex);

// Does x / level lie in conv(vertices)?  Level must be positive.
bool in_scaled_hull(const PointConfig& config, Mask vertices, const IntVec& x, std::int64_t level);

struct ConeZ {
  std::vector<IntVec> generators;  // primitive, irredundant
};

// Removes zero vectors, makes generators primitive and drops redundant ones.
ConeZ make_cone(std::vector<IntVec> gens);
IntVec primitive(IntVec v);

// Integer scaling of a lifting to a common denominator, with positive factor.
std::vector<Integer> integral_values(const Lifting& lift);

// Cached per-configuration data for repeated lower-envelope computations:
// every affinely independent (d+1)-subset with its signed adjugate.
class LowerHullKernel {
 public:
  explicit LowerHullKernel(ConfigPtr config);

  const ConfigPtr& config() const { return config_; }
  std::size_t basis_count() const { return bases_.size(); }
  Subdivision subdivide(const Lifting& lift) const;
  std::vector<Mask> lower_cells(const std::vector<Integer>& heights) const;

 private:
  struct Basis {
    Mask mask = 0;
    std::vector<int> members;
    std::vector<std::int64_t> adj;  // row-major r x r, sign-normalized
    std::int64_t det = 0;           // positive
  };
  template <class T>
  std::vector<Mask> lower_cells_impl(const std::vector<T>& heights) const;

  ConfigPtr config_;
  int rank_ = 0;
  std::vector<Basis> bases_;
};

}  // namespace hyperstab::geom
