#pragma once

// Cellular cochain complexes of a subdivision relative to the boundary of
// the polytope, their per-lattice-point summands, and the exterior-algebra
// kernel whose dimension is h^0(omega_X(D)).

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperstab/exact.hpp"
#include "hyperstab/stable_pair.hpp"

namespace hyperstab::homology {

using geom::Subdivision;
using IntMatrix = Mat<std::int64_t>;

struct InconsistentComplex : std::logic_error {
  using std::logic_error::logic_error;
};

// Degrees run from first_degree upwards.  basis[j] holds face-poset indices
// (or -1 for the augmentation term); maps[j] sends degree j to degree j + 1
// and has basis[j + 1].size() rows and basis[j].size() columns.
struct CochainComplex {
  int first_degree = 0;
  std::vector<std::vector<int>> basis;
  std::vector<IntMatrix> maps;

  std::vector<int> sizes() const;
  // Throws InconsistentComplex unless every composite of two maps is zero.
  void check_composites() const;
};

std::vector<int> cohomology_dims(const CochainComplex& c);
bool is_exact(const CochainComplex& c);

// The oriented face data of one subdivision, prepared once and queried for
// the full complex, per-point summands and star-removed complexes.
class CellularComplex {
 public:
  // orientation = +1 or -1 selects the fixed orientation of the polytope.
  explicit CellularComplex(Subdivision s, int orientation = 1);

  const Subdivision& subdivision() const { return s_; }
  const geom::FacePoset& faces() const { return poset_; }
  bool interior(int face) const { return interior_[face]; }
  int codim(int face) const;
  // Incidence sign of a covering pair (face, facet of that face).
  int incidence(int face, int facet) const;

  // Codimension-j interior faces in degree j.
  CochainComplex relative() const;
  // Augmented summand for the lattice point x at the given level (x = 0 at
  // level 0).  Throws std::domain_error outside level * conv.
  CochainComplex summand(const IntVec& x, std::int64_t level) const;
  // Interior faces having v as a vertex.
  CochainComplex star_removed(int v) const;

 private:
  bool contains(int face, const IntVec& hx) const;
  bool in_hull(const IntVec& hx) const;
  CochainComplex restricted(const std::vector<bool>& keep, bool augment) const;

  Subdivision s_;
  geom::FacePoset poset_;
  std::vector<bool> interior_;
  std::vector<int> orient_;  // +-1 relative to the lexicographic frame
  std::vector<IntMatrix> frames_;
  std::vector<std::vector<int>> pivots_;
  std::vector<std::vector<std::vector<Integer>>> facet_functionals_;
  std::vector<Mat<Rational>> span_equations_;
  std::vector<std::vector<Integer>> hull_functionals_;
  Mat<Rational> hull_equations_;
};

// Requires a matroid subdivision.
CochainComplex strata_cochain_complex(const pair::MatroidSubdivision& ms, int orientation = 1);

struct SummandReport {
  CochainComplex complex;
  bool exact = false;
};
// Lattice points of level * Delta(k, n) in lexicographic order.
std::vector<IntVec> lattice_points(int k, int n, std::int64_t level);

SummandReport per_s_summand(const Subdivision& s, const IntVec& x, std::int64_t level);

struct StarReport {
  CochainComplex complex;
  std::vector<int> dims;
  // Homology is a single Q in one degree.
  bool concentrated = false;
  int degree = -1;
};
StarReport star_removed_complex(const Subdivision& s, int v);

// Lambda^d of {x in Q^n : sum x = 0, x_i = 0 for i in excluded}, embedded in
// Lambda^d Q^n with coordinates indexed by the d-subsets of [n] in
// lexicographic order.
struct ExteriorSpace {
  int n = 0;
  std::vector<int> excluded;  // 1-based
  int degree = 0;

  int dimension() const;
  Mat<Rational> basis() const;  // one row per basis vector
};

struct CanonicalBasis {
  int dimension = 0;
  // Kernel vectors, each the concatenation over i = 1..n of coordinates in
  // Lambda^{k-2} Q^n.
  Mat<Rational> basis;
  int image_rank = 0;           // rank of Lambda^{k-1} h^dual inside the domain
  bool kernel_equals_image = false;
};
CanonicalBasis canonical_basis_kernel(int k, int n);

}  // namespace hyperstab::homology
