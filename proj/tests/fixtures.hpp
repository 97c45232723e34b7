#pragma once

#include <vector>

#include "hyperstab/degeneration.hpp"
#include "hyperstab/hypersimplex.hpp"

namespace fixture {

using namespace hyperstab;

inline geom::Lifting lift_of(std::vector<long> v) {
  geom::Lifting l;
  for (long x : v) l.values.emplace_back(x);
  return l;
}

// The split of Delta(2,4) along the square {13, 14, 23, 24}.
inline geom::Subdivision split24(const hyper::HypersimplexConfig& cfg) {
  return cfg.kernel().subdivide(lift_of({1, 0, 0, 0, 0, 0}));
}

// Matroid subdivisions from random degenerations, deterministic per seed.
inline std::vector<geom::Subdivision> degenerations(const hyper::HypersimplexConfig& cfg, int count,
                                                    std::uint64_t seed, int max_degree = 2) {
  Rng rng(seed);
  std::vector<geom::Subdivision> out;
  for (int i = 0; i < count; ++i) {
    auto m = degen::random_family(rng, cfg.k(), cfg.n(), max_degree);
    out.push_back(degen::subdivision_from_matrix(m, cfg).subdivision);
  }
  return out;
}

inline degen::TPolynomial poly(std::vector<long> c) {
  std::vector<Rational> q(c.begin(), c.end());
  return degen::TPolynomial(std::move(q));
}

}  // namespace fixture
