#pragma once

// One-parameter families of arrangements as k x n matrices over Q[t], their
// Pluecker minors and the valuation lifting psi(I) = ord_{t=0} P_I.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperstab/exact.hpp"
#include "hyperstab/hypersimplex.hpp"
#include "hyperstab/random.hpp"

namespace hyperstab::degen {

using hyper::KSubset;

class TPolynomial {
 public:
  TPolynomial() = default;
  explicit TPolynomial(std::vector<Rational> coeffs);
  static TPolynomial monomial(Rational c, int degree);

  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // Lowest degree with a nonzero coefficient; -1 for the zero polynomial.
  int order() const;
  Rational eval(const Rational& t) const;
  // p(t^e).
  TPolynomial substitute_power(int e) const;

  friend TPolynomial operator+(const TPolynomial& a, const TPolynomial& b);
  friend TPolynomial operator-(const TPolynomial& a, const TPolynomial& b);
  friend TPolynomial operator*(const TPolynomial& a, const TPolynomial& b);
  friend bool operator==(const TPolynomial& a, const TPolynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

std::string to_string(const TPolynomial& p);

struct DegenerateFamily : std::runtime_error {
  DegenerateFamily(const std::string& what, KSubset s) : std::runtime_error(what), subset(std::move(s)) {}
  KSubset subset;
};

struct TMatrix {
  int k = 0, n = 0;
  std::vector<std::vector<TPolynomial>> entries;  // k rows of n entries

  // Shape checks plus n > k and some nonzero maximal minor.
  void validate() const;
};

// Aligned with the lexicographic vertex order of Delta(k, n).
std::vector<TPolynomial> plucker_minors(const TMatrix& m);
TPolynomial minor(const TMatrix& m, const KSubset& columns);

geom::Lifting valuation_lifting(const TMatrix& m);

struct GeneralPosition {
  bool ok = true;
  std::optional<KSubset> witness;
};
GeneralPosition general_position_check(const TMatrix& m);
GeneralPosition general_position_check(const TMatrix& m, const Rational& t0);

struct FamilySubdivision {
  hyper::HypersimplexConfig cfg;
  geom::Lifting lifting;
  geom::Subdivision subdivision;
};
FamilySubdivision subdivision_from_matrix(const TMatrix& m);
FamilySubdivision subdivision_from_matrix(const TMatrix& m, const hyper::HypersimplexConfig& cfg);

// Column i removed (1-based).
TMatrix delete_column(const TMatrix& m, int i);

// Eliminates column i against the row whose entry there has least order.
// The contracted family's minors satisfy
//   ord P'_J = ord P_{J + i} + offset
// for every (k-1)-subset J of the remaining columns (relabelled).
struct Contraction {
  TMatrix matrix;
  int offset = 0;
};
Contraction contract_column(const TMatrix& m, int i);

TMatrix substitute_power(const TMatrix& m, int e);

// Random family whose entries are sums of one or two monomials c t^a with
// 0 <= a <= max_degree and c a nonzero integer in [-3, 3].  Draws until all
// maximal minors are nonzero polynomials.
TMatrix random_family(Rng& rng, int k, int n, int max_degree);

}  // namespace hyperstab::degen
