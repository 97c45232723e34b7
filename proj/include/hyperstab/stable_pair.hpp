#pragma once

// Combinatorial shadow of the stable pair (X, D) attached to a matroid
// subdivision of Delta(k, n): strata, divisors, the dual complex (Sigma,
// dSigma), the point lemma and local germs.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hyperstab/hypersimplex.hpp"

namespace hyperstab::pair {

using geom::Cell;
using geom::Mask;
using geom::Subdivision;
using hyper::HypersimplexConfig;

struct NotMatroid : std::invalid_argument {
  NotMatroid(int cell, std::pair<int, int> edge)
      : std::invalid_argument("subdivision is not matroid: cell " + std::to_string(cell) + " has edge (" +
                              std::to_string(edge.first) + ", " + std::to_string(edge.second) + ")"),
        cell(cell),
        edge(edge) {}
  int cell;
  std::pair<int, int> edge;
};

// A subdivision of Delta(k, n) with its face poset computed once.
class MatroidSubdivision {
 public:
  // Throws NotMatroid unless every cell passes the edge test.
  MatroidSubdivision(HypersimplexConfig cfg, Subdivision s);

  const HypersimplexConfig& cfg() const { return cfg_; }
  const Subdivision& subdivision() const { return s_; }
  const geom::FacePoset& faces() const { return *faces_; }
  int k() const { return cfg_.k(); }
  int n() const { return cfg_.n(); }

 private:
  HypersimplexConfig cfg_;
  Subdivision s_;
  std::shared_ptr<const geom::FacePoset> faces_;
};

struct Stratum {
  Cell face;
  int face_index = -1;  // into the face poset
  int stratum_dim = 0;
  std::vector<int> divisor_labels;  // i with face inside Gamma_i^+
};

struct StrataPoset {
  std::vector<Stratum> strata;  // sorted by (stratum_dim descending, vertex list)
  std::vector<std::pair<int, int>> covering;  // (larger, smaller) stratum indices

  bool contains(int larger, int smaller) const;  // closure of larger contains smaller
};

StrataPoset strata_poset(const MatroidSubdivision& ms);
std::vector<Cell> components(const Subdivision& s);
StrataPoset divisor_strata(const MatroidSubdivision& ms, int i);

struct DualCell {
  int stratum = -1;
  bool boundary = false;  // sigma^d_Y rather than sigma_Y
  int dim = 0;
};

struct DualComplex {
  std::vector<DualCell> cells;
  std::vector<std::pair<int, int>> faces;  // (cell, proper face) pairs, all of them

  std::vector<int> face_counts(bool boundary_only) const;
};

DualComplex dual_complex(const MatroidSubdivision& ms);

// Reduced rational homology of the order complex of a finite poset.  The
// empty complex has reduced homology only in degree -1.
struct Homology {
  int minus_one = 0;
  std::vector<int> reduced_betti;  // index j = degree j

  bool acyclic() const;
};
Homology poset_homology(int size, const std::vector<std::pair<int, int>>& less);  // (a, b): a < b

Homology sigma_homology(const DualComplex& dc);
Homology boundary_homology(const DualComplex& dc);

struct TreeCheck {
  bool ok = false;
  std::string reason;
  int internal_vertices = 0;
  int leaves = 0;
};
// k = 2 only: Sigma is a tree whose leaves are the n boundary cells with
// labels 1..n and whose internal vertices have degree at least 3.
TreeCheck check_tree(const MatroidSubdivision& ms, const DualComplex& dc);

struct PointLemmaFailure {
  std::vector<int> subset;  // J
  std::string reason;
};
struct PointLemmaReport {
  int checked = 0;
  std::vector<PointLemmaFailure> failures;
  bool ok() const { return failures.empty(); }
};
PointLemmaReport verify_point_lemma(const MatroidSubdivision& ms);

struct LocalCone {
  int cell = -1;
  geom::ConeZ cone;
  // Facets of the cone, each given by the rays (indices into cone
  // generators) it contains and the divisor labels of the matching cell facet.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> facets;
};

struct Germ {
  int face_index = -1;
  int vertex = -1;
  int quotient_rank = 0;
  std::vector<LocalCone> local_cones;
  std::string canonical_key;
};

Germ local_germ(const MatroidSubdivision& ms, const Cell& face, int vertex);

struct GermClass {
  std::string canonical_key;
  int multiplicity = 0;
  Germ representative;
  int subdivision = -1;  // input position of the representative
};

std::vector<GermClass> germ_catalog(const std::vector<MatroidSubdivision>& inputs);

// |m Delta(k, n) intersected with Z^n|.
long graded_dimension(int k, int n, int m);
// The same count assembled cell by cell: relative-interior lattice points of
// every face of the subdivision, obtained by inclusion-exclusion.
long graded_dimension_by_cells(const MatroidSubdivision& ms, int m);

}  // namespace hyperstab::pair
