#pragma once

// Dense exact simplex over the rationals.  Two phases, Bland's rule, so it
// terminates on degenerate problems.  Sized for certificates with at most a
// few hundred rows.

#include <vector>

#include "hyperstab/exact.hpp"

namespace hyperstab::lp {

enum class Sense { LessEqual, Equal, GreaterEqual };

struct Constraint {
  std::vector<Rational> coeffs;
  Sense sense = Sense::LessEqual;
  Rational rhs;
};

struct Problem {
  explicit Problem(std::size_t vars) : num_vars(vars), objective(vars) {}
  std::size_t num_vars;
  std::vector<Constraint> constraints;
  std::vector<Rational> objective;  // maximized
  std::vector<std::size_t> nonnegative;  // all other variables are free

  void add(std::vector<Rational> coeffs, Sense sense, Rational rhs) {
    coeffs.resize(num_vars);
    constraints.push_back({std::move(coeffs), sense, std::move(rhs)});
  }
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational value;
  std::vector<Rational> x;
};

Solution maximize(const Problem& problem);

}  // namespace hyperstab::lp
