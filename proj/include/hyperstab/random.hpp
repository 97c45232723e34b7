#pragma once

// Portable bounded draws.  std::uniform_int_distribution is implementation
// defined, which would make seeded outputs differ between standard
// libraries; this rejection sampler only depends on mt19937_64 itself.

#include <cstdint>
#include <random>

namespace hyperstab {

using Rng = std::mt19937_64;

inline std::int64_t draw(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

}  // namespace hyperstab
