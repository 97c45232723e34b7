#pragma once

// The per-subdivision invariant suite run by verify-all.

#include <optional>
#include <string>
#include <vector>

#include "hyperstab/io.hpp"

namespace hyperstab::verify {

struct SuiteOptions {
  int max_level = 2;                         // per-point exactness at levels 0..max_level
  std::optional<geom::Lifting> certificate;  // checked instead of solving the LP
  std::optional<bool> claimed_matroid;
};

struct SuiteReport {
  std::vector<std::pair<std::string, bool>> checks;  // in a fixed order
  std::vector<std::string> failures;
  bool matroid = false;
  bool passed() const { return failures.empty(); }

  io::Json json() const;
};

SuiteReport run_suite(const hyper::HypersimplexConfig& cfg, const geom::Subdivision& s, const SuiteOptions& opt = {});

}  // namespace hyperstab::verify
