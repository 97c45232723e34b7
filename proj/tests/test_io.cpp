#include <doctest.h>

#include "fixtures.hpp"
#include "hyperstab/enumeration.hpp"
#include "hyperstab/io.hpp"
#include "hyperstab/verify.hpp"

using namespace hyperstab;
using io::Json;

namespace {

const std::string kData = HYPERSTAB_TEST_DATA;

Json parse(const char* text) { return Json::parse(text); }

}  // namespace

TEST_CASE("subdivision files survive a write and read") {
  auto inv = enumerate::enumerate_regular_subdivisions(2, 5, {0, 1});
  for (const auto& e : inv.entries) {
    const std::string text = io::dump(io::subdivision_json(inv.cfg, e.subdivision));
    auto back = io::parse_subdivision(Json::parse(text));
    CHECK(back.cfg == inv.cfg);
    CHECK(back.subdivision == e.subdivision);
    CHECK(io::dump(io::subdivision_json(back.cfg, back.subdivision)) == text);
  }
}

TEST_CASE("cells are written in sorted order whatever the input order") {
  auto f = io::parse_subdivision(parse(
      R"({"k":2,"n":4,"cells":[[[1,3],[1,4],[2,3],[2,4],[3,4]],[[2,4],[1,2],[1,3],[1,4],[2,3]]]})"));
  auto golden = io::parse_subdivision(io::read_json(kData + "/split24.json"));
  CHECK(f.subdivision == golden.subdivision);
}

TEST_CASE("malformed subdivisions are rejected") {
  const char* bad[] = {
      R"([1,2])",
      R"({"k":2,"cells":[[[1,2]]]})",
      R"({"k":2,"n":4,"cells":[]})",
      R"({"k":2,"n":4,"cells":[[[1,5],[1,2]]]})",
      R"({"k":2,"n":4,"cells":[[[2,1],[1,3]]]})",
      R"({"k":2,"n":4,"cells":[[[1,2,3]]]})",
      R"({"k":2,"n":4,"cells":[[[1,2],[1,2]]]})",
      R"({"k":3,"n":2,"cells":[[[1,2]]]})",
      // a single non-full-dimensional cell
      R"({"k":2,"n":4,"cells":[[[1,2],[1,3],[1,4]]]})",
      // the same cell twice
      R"({"k":2,"n":4,"cells":[[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]],[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]]})",
  };
  for (const char* text : bad) CHECK_THROWS_AS(io::parse_subdivision(parse(text)), io::InputError);
  CHECK_THROWS_AS(io::parse_subdivision(io::read_json(kData + "/overlap24.json")), io::InputError);
  CHECK_THROWS_AS(io::read_json(kData + "/absent.json"), io::InputError);
}

TEST_CASE("weights files") {
  hyper::HypersimplexConfig cfg(2, 4);
  auto l = io::parse_weights(io::read_json(kData + "/split24_weights.json"), cfg);
  CHECK(cfg.k() == 2);
  CHECK(cfg.n() == 4);
  CHECK(l.values[cfg.index_of(hyper::KSubset{3, 4})] == 1);
  CHECK(l.values[cfg.index_of(hyper::KSubset{1, 2})] == 0);

  geom::Lifting odd;
  for (int v = 0; v < 6; ++v) {
    Rational q(v - 2, 3);
    q.canonicalize();
    odd.values.push_back(q);
  }
  auto back = io::parse_weights(io::weights_json(cfg, odd), cfg);
  CHECK(back.values == odd.values);

  CHECK_THROWS_AS(io::parse_weights(parse(R"({"k":2,"n":3,"weights":{"1,2":"0","1,3":"0"}})"), cfg),
                  io::InputError);
  CHECK_THROWS_AS(io::parse_weights(parse(R"({"k":2,"n":3,"weights":{"1,2":"0","1,3":"0","2,3":"x"}})"), cfg),
                  io::InputError);
  CHECK_THROWS_AS(io::parse_weights(parse(R"({"k":2,"n":3,"weights":{"1,2":"0","1,3":"0","3,2":"1"}})"), cfg),
                  io::InputError);
  CHECK_THROWS_AS(io::parse_weights(parse(R"({"k":2,"n":3,"weights":{"1,2":"0","1,3":"0","2,3":"1","1":"1"}})"), cfg),
                  io::InputError);
}

TEST_CASE("matrix files") {
  auto m = io::parse_matrix(io::read_json(kData + "/running_matrix.json"));
  CHECK(m.k == 2);
  CHECK(m.entries[1][3] == fixture::poly({1, 1}));
  auto fam = degen::subdivision_from_matrix(m);
  CHECK(fam.subdivision == io::parse_subdivision(io::read_json(kData + "/split24.json")).subdivision);

  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto r = degen::random_family(rng, 3, 5, 2);
    auto back = io::parse_matrix(Json::parse(io::dump(io::matrix_json(r))));
    CHECK(back.entries == r.entries);
  }
  CHECK_THROWS_AS(io::parse_matrix(parse(R"({"k":2,"n":3,"entries":[[["1"],["1"],["1"]]]})")), io::InputError);
  // every maximal minor vanishes
  CHECK_THROWS_AS(io::parse_matrix(parse(R"({"k":2,"n":3,"entries":[[["1"],["1"],["1"]],[["2"],["2"],["2"]]]})")),
                  io::InputError);
}

TEST_CASE("dump keeps short arrays on one line and ends with a newline") {
  Json j;
  j["a"] = Json::array({1, 2, 3});
  j["b"] = Json::array({Json::array({1, 2}), Json::array({3})});
  j["c"] = Json::object();
  CHECK(io::dump(j) == "{\n  \"a\": [1,2,3],\n  \"b\": [[1,2],[3]],\n  \"c\": {}\n}\n");
  Json long_list = Json::array();
  for (int i = 0; i < 60; ++i) long_list.push_back(i);
  CHECK(io::dump(long_list).find("[\n") == 0);
  CHECK(Json::parse(io::dump(long_list)) == long_list);
}

TEST_CASE("strata and dual complex emitters") {
  auto f = io::parse_subdivision(io::read_json(kData + "/split24.json"));
  pair::MatroidSubdivision ms(f.cfg, f.subdivision);
  auto sp = pair::strata_poset(ms);
  auto j = io::strata_json(ms, sp);
  CHECK(j["strata"].size() == sp.strata.size());
  CHECK(j["covering"].size() == sp.covering.size());
  auto dot = io::strata_dot(ms, sp);
  CHECK(dot.find("rank=same") != std::string::npos);
  CHECK(dot.find("divisors=\"3\"") != std::string::npos);

  auto dc = pair::dual_complex(ms);
  auto dj = io::dual_complex_json(ms, dc);
  CHECK(dj["cells"].size() == dc.cells.size());
  CHECK(dj["homology"]["sigma"]["reduced_betti"] == Json::array({0, 0}));
  auto ddot = io::dual_complex_dot(ms, dc);
  // A tree: one edge per codimension-one incidence, vertices minus one.
  std::size_t edges = 0;
  for (std::size_t p = ddot.find(" -- "); p != std::string::npos; p = ddot.find(" -- ", p + 1)) ++edges;
  CHECK(edges + 1 == dc.cells.size());
}

TEST_CASE("invariant suite") {
  auto f = io::parse_subdivision(io::read_json(kData + "/split24.json"));
  auto good = verify::run_suite(f.cfg, f.subdivision);
  CHECK(good.passed());
  CHECK(good.matroid);
  CHECK(good.checks.size() == 7);

  verify::SuiteOptions wrong;
  wrong.claimed_matroid = false;
  wrong.certificate = geom::Lifting{std::vector<Rational>(6)};
  auto bad = verify::run_suite(f.cfg, f.subdivision, wrong);
  CHECK_FALSE(bad.passed());
  CHECK(bad.failures.size() == 2);

  auto diag = io::parse_subdivision(io::read_json(kData + "/diagonal24.json"));
  auto d = verify::run_suite(diag.cfg, diag.subdivision);
  CHECK(d.passed());
  CHECK_FALSE(d.matroid);
  CHECK(d.checks.size() == 2);
}
