#include "hyperstab/verify.hpp"

#include "hyperstab/homology_lab.hpp"

namespace hyperstab::verify {

namespace {

long choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

io::Json SuiteReport::json() const {
  io::Json j;
  j["matroid"] = matroid;
  io::Json c = io::Json::object();
  for (const auto& [name, ok] : checks) c[name] = ok;
  j["checks"] = std::move(c);
  j["failures"] = failures;
  j["passed"] = passed();
  return j;
}

SuiteReport run_suite(const hyper::HypersimplexConfig& cfg, const geom::Subdivision& s, const SuiteOptions& opt) {
  SuiteReport r;
  auto record = [&](const std::string& name, bool ok, const std::string& why = {}) {
    r.checks.emplace_back(name, ok);
    if (!ok) r.failures.push_back(why.empty() ? name : name + ": " + why);
  };

  Integer volume = 0;
  for (const auto& c : s.maximal_cells) volume += geom::normalized_volume(*s.config, c);
  const Integer total = geom::normalized_volume(*s.config, geom::make_cell(*s.config, s.config->all()));
  record("volume", volume == total, "cells sum to " + volume.get_str() + ", hull " + total.get_str());

  if (opt.certificate) {
    record("coherence", cfg.kernel().subdivide(*opt.certificate) == s, "recorded certificate does not reproduce");
  } else {
    auto cert = geom::coherence_certificate(s).certificate;
    record("coherence", cert && cfg.kernel().subdivide(*cert) == s, "no strictly convex lifting");
  }

  const auto verdict = hyper::check_matroid_subdivision(s, cfg);
  r.matroid = verdict.ok;
  if (opt.claimed_matroid) record("matroid_flag", *opt.claimed_matroid == verdict.ok, "recorded flag disagrees");
  if (!verdict.ok) return r;

  pair::MatroidSubdivision ms(cfg, s);
  const auto lemma = pair::verify_point_lemma(ms);
  record("point_lemma", lemma.ok(), lemma.ok() ? "" : lemma.failures.front().reason);

  const auto dims = homology::cohomology_dims(homology::strata_cochain_complex(ms));
  bool vanishing = !dims.empty() && dims[0] == 1;
  for (std::size_t i = 1; i < dims.size(); ++i) vanishing = vanishing && dims[i] == 0;
  record("cohomology_vanishing", vanishing);

  homology::CellularComplex cc(s);
  bool exact = true;
  std::string first_bad;
  for (int level = 0; level <= opt.max_level && exact; ++level) {
    for (const auto& x : homology::lattice_points(cfg.k(), cfg.n(), level)) {
      if (!homology::is_exact(cc.summand(x, level))) {
        exact = false;
        first_bad = "level " + std::to_string(level);
        break;
      }
    }
  }
  record("per_point_exactness", exact, first_bad);

  const auto dc = pair::dual_complex(ms);
  if (cfg.k() == 2) {
    const auto tree = pair::check_tree(ms, dc);
    record("dual_tree", tree.ok, tree.reason);
  } else {
    record("sigma_acyclic", pair::sigma_homology(dc).acyclic());
    // The (k-2)-skeleton of the (n-1)-simplex is a wedge of C(n-1, k-1)
    // spheres of dimension k-2.
    const auto h = pair::boundary_homology(dc);
    bool sphere_wedge = h.minus_one == 0;
    for (std::size_t d = 0; d < h.reduced_betti.size(); ++d) {
      const long want = static_cast<int>(d) == cfg.k() - 2 ? choose(cfg.n() - 1, cfg.k() - 1) : 0;
      sphere_wedge = sphere_wedge && h.reduced_betti[d] == want;
    }
    if (static_cast<int>(h.reduced_betti.size()) <= cfg.k() - 2) sphere_wedge = false;
    record("boundary_homology", sphere_wedge);
  }

  bool restrictions = true;
  std::string bad_facet;
  for (int i = 1; i <= cfg.n() && restrictions; ++i) {
    for (auto sign : {hyper::Sign::Plus, hyper::Sign::Minus}) {
      const hyper::FacetLabel f{sign, i};
      const auto res = hyper::restrict_to_facet(s, cfg, f);
      if (!res.degenerate && !hyper::is_matroid_subdivision(res.subdivision, res.target)) {
        restrictions = false;
        bad_facet = hyper::to_string(f);
        break;
      }
    }
  }
  record("restrictions_matroid", restrictions, bad_facet);
  return r;
}

}  // namespace hyperstab::verify
