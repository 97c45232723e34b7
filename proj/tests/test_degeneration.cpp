#include <doctest.h>

#include "fixtures.hpp"
#include "hyperstab/degeneration.hpp"
#include "oracles.hpp"

using namespace hyperstab;
using namespace hyperstab::degen;
using fixture::poly;
using hyper::FacetLabel;
using hyper::Sign;

namespace {

TMatrix example24() {
  return TMatrix{2, 4, {{poly({1}), poly({0}), poly({1}), poly({1})}, {poly({0}), poly({1}), poly({1}), poly({1, 1})}}};
}

// Columns 1, 2, 3 become dependent at t = 0 and only there.
TMatrix concurrent35() {
  return TMatrix{3,
                 5,
                 {{poly({1}), poly({0}), poly({1}), poly({0}), poly({1})},
                  {poly({0}), poly({1}), poly({1}), poly({0}), poly({2})},
                  {poly({0}), poly({0}), poly({0, 1}), poly({1}), poly({5})}}};
}

IntVec integer_values(const TPolynomial& p) {
  IntVec out;
  for (const auto& c : p.coefficients()) {
    REQUIRE(c.get_den() == 1);
    out.push_back(c.get_num().get_si());
  }
  return out;
}

std::int64_t eval_int(const TPolynomial& p, std::int64_t t) {
  std::int64_t acc = 0;
  IntVec c = integer_values(p);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

TMatrix row_op(TMatrix m, int target, int source, const TPolynomial& factor) {
  for (int j = 0; j < m.n; ++j) m.entries[target][j] = m.entries[target][j] + factor * m.entries[source][j];
  return m;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  auto p = poly({1, 1});
  CHECK(p * p == poly({1, 2, 1}));
  CHECK((p - p).is_zero());
  CHECK(poly({0, 0, 3, 0}).order() == 2);
  CHECK(poly({0, 0, 3, 0}).degree() == 2);
  CHECK(TPolynomial().order() == -1);
  CHECK(poly({1, 0, -2}).substitute_power(2) == poly({1, 0, 0, 0, -2}));
  CHECK(p.eval(Rational(1, 2)) == Rational(3, 2));
  CHECK(to_string(poly({-1, 0, 3})) == "-1 + 3*t^2");
  CHECK(to_string(poly({0, -1})) == "-t");
}

TEST_CASE("Pluecker minors of the running example") {
  auto m = example24();
  m.validate();
  auto p = plucker_minors(m);
  REQUIRE(p.size() == 6);
  CHECK(p[0] == poly({1}));
  CHECK(p[1] == poly({1}));
  CHECK(p[2] == poly({1, 1}));
  CHECK(p[3] == poly({-1}));
  // det of columns (0, 1) and (1, 1 + t); the t terms cancel.
  CHECK(p[4] == poly({-1}));
  for (std::size_t v = 0; v < 6; ++v) {
    for (std::int64_t t = -2; t <= 2; ++t) {
      hyper::HypersimplexConfig cfg(2, 4);
      const auto& cols = cfg.subset(v);
      std::vector<IntVec> sub(2, IntVec(2));
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) sub[r][c] = eval_int(m.entries[r][cols[c] - 1], t);
      CHECK(oracle::leibniz_det(sub) == eval_int(p[v], t));
    }
  }
  CHECK(p[5] == poly({0, 1}));
  auto psi = valuation_lifting(m);
  CHECK(psi.values == fixture::lift_of({0, 0, 0, 0, 0, 1}).values);
  CHECK(general_position_check(m).ok);
  auto at0 = general_position_check(m, Rational(0));
  CHECK_FALSE(at0.ok);
  REQUIRE(at0.witness);
  CHECK(*at0.witness == hyper::KSubset{3, 4});

  auto s = subdivision_from_matrix(m).subdivision;
  REQUIRE(s.maximal_cells.size() == 2);
  CHECK(s.maximal_cells[0].vertex_indices == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(s.maximal_cells[1].vertex_indices == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("constant matrices") {
  // (I_2 | columns (1,1), (1,2)): every minor is a nonzero constant.
  TMatrix m{2, 4, {{poly({1}), poly({0}), poly({1}), poly({1})}, {poly({0}), poly({1}), poly({1}), poly({2})}}};
  for (const auto& p : plucker_minors(m)) CHECK(p.degree() == 0);
  CHECK(valuation_lifting(m).values == fixture::lift_of({0, 0, 0, 0, 0, 0}).values);
  CHECK(subdivision_from_matrix(m).subdivision.maximal_cells.size() == 1);
  CHECK(general_position_check(m, Rational(7)).ok);
}

TEST_CASE("equal columns give zero minors") {
  TMatrix m{2, 4, {{poly({1}), poly({0}), poly({1}), poly({1})}, {poly({0}), poly({1}), poly({1}), poly({1})}}};
  CHECK(minor(m, {3, 4}).is_zero());
  try {
    valuation_lifting(m);
    FAIL("expected a degenerate family");
  } catch (const DegenerateFamily& e) {
    CHECK(e.subset == hyper::KSubset{3, 4});
  }
  auto g = general_position_check(m);
  CHECK_FALSE(g.ok);
  CHECK(*g.witness == hyper::KSubset{3, 4});
}

TEST_CASE("malformed matrices") {
  CHECK_THROWS(TMatrix{2, 2, {{poly({1}), poly({0})}, {poly({0}), poly({1})}}}.validate());
  CHECK_THROWS(TMatrix{2, 3, {{poly({1}), poly({0}), poly({1})}}}.validate());
  CHECK_THROWS(TMatrix{2, 3, {{poly({1}), poly({2}), poly({1})}, {poly({2}), poly({4}), poly({2})}}}.validate());
}

TEST_CASE("three concurrent lines give a two-cell matroid subdivision") {
  auto m = concurrent35();
  auto gp = general_position_check(m, Rational(0));
  CHECK_FALSE(gp.ok);
  CHECK(*gp.witness == hyper::KSubset{1, 2, 3});
  auto fam = subdivision_from_matrix(m);
  int raised = 0;
  for (const auto& v : fam.lifting.values) raised += v != 0;
  CHECK(raised == 1);
  CHECK(fam.subdivision.maximal_cells.size() == 2);
  CHECK(hyper::is_matroid_subdivision(fam.subdivision, fam.cfg));
}

TEST_CASE("minors agree with integer determinants at sample points") {
  Rng rng(3);
  for (auto [k, n] : {std::pair{2, 5}, {3, 6}, {4, 6}}) {
    for (int trial = 0; trial < 6; ++trial) {
      auto m = random_family(rng, k, n, 2);
      auto minors = plucker_minors(m);
      hyper::HypersimplexConfig cfg(k, n);
      for (std::int64_t t = -3; t <= 2 * k - 2; ++t) {
        for (std::size_t v = 0; v < cfg.size(); ++v) {
          std::vector<IntVec> sub(k, IntVec(k));
          for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) sub[r][c] = eval_int(m.entries[r][cfg.subset(v)[c] - 1], t);
          CHECK(oracle::leibniz_det(sub) == eval_int(minors[v], t));
        }
      }
    }
  }
}

TEST_CASE("degenerations always give matroid subdivisions") {
  Rng rng(17);
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6}}) {
    hyper::HypersimplexConfig cfg(k, n);
    for (int trial = 0; trial < 25; ++trial) {
      auto fam = subdivision_from_matrix(random_family(rng, k, n, 2), cfg);
      CHECK(hyper::is_matroid_subdivision(fam.subdivision, cfg));
      for (const auto& v : fam.lifting.values) CHECK(v >= 0);
    }
  }
}

TEST_CASE("reparametrization and unit changes of basis") {
  Rng rng(29);
  hyper::HypersimplexConfig cfg(3, 6);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = random_family(rng, 3, 6, 2);
    auto fam = subdivision_from_matrix(m, cfg);

    auto sq = subdivision_from_matrix(substitute_power(m, 2), cfg);
    for (std::size_t v = 0; v < cfg.size(); ++v) CHECK(sq.lifting.values[v] == 2 * fam.lifting.values[v]);
    CHECK(sq.subdivision == fam.subdivision);

    auto scaled = m;
    for (auto& row : scaled.entries) row[trial % 6] = poly({-3}) * row[trial % 6];
    CHECK(valuation_lifting(scaled).values == fam.lifting.values);

    auto moved = row_op(row_op(m, 0, 2, poly({1, 0, 2})), 1, 0, poly({0, -1}));
    CHECK(valuation_lifting(moved).values == fam.lifting.values);
  }
}

TEST_CASE("column deletion matches the Minus restriction") {
  Rng rng(41);
  for (auto [k, n] : {std::pair{2, 5}, {3, 6}}) {
    hyper::HypersimplexConfig cfg(k, n);
    for (int trial = 0; trial < 10; ++trial) {
      auto m = random_family(rng, k, n, 2);
      auto s = subdivision_from_matrix(m, cfg).subdivision;
      for (int i = 1; i <= n; ++i) {
        auto r = hyper::restrict_to_facet(s, cfg, FacetLabel{Sign::Minus, i});
        CHECK(subdivision_from_matrix(delete_column(m, i), r.target).subdivision == r.subdivision);
      }
    }
  }
}

TEST_CASE("contraction matches the Plus restriction") {
  Rng rng(43);
  for (auto [k, n] : {std::pair{3, 5}, {3, 6}}) {
    hyper::HypersimplexConfig cfg(k, n);
    hyper::HypersimplexConfig small(k - 1, n - 1);
    for (int trial = 0; trial < 10; ++trial) {
      auto m = random_family(rng, k, n, 2);
      auto fam = subdivision_from_matrix(m, cfg);
      for (int i = 1; i <= n; ++i) {
        auto c = contract_column(m, i);
        auto psi = valuation_lifting(c.matrix);
        auto map = hyper::facet_index_map(cfg, FacetLabel{Sign::Plus, i}, small);
        for (std::size_t v = 0; v < cfg.size(); ++v) {
          if (map[v] < 0) continue;
          CHECK(psi.values[map[v]] == fam.lifting.values[v] + c.offset);
        }
        auto r = hyper::restrict_to_facet(fam.subdivision, cfg, FacetLabel{Sign::Plus, i});
        CHECK(small.kernel().subdivide(psi) == r.subdivision);
      }
    }
  }
}
