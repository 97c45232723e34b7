#include "hyperstab/lp.hpp"

#include <algorithm>

namespace hyperstab::lp {

namespace {

class Tableau {
 public:
  Tableau(Mat<Rational> rows, std::vector<Rational> rhs, std::vector<std::size_t> basis)
      : a_(std::move(rows)), b_(std::move(rhs)), basis_(std::move(basis)) {}

  // Maximizes cost . x over the current feasible basis.  Columns flagged in
  // `blocked` never enter.  Returns false when unbounded.
  bool run(const std::vector<Rational>& cost, const std::vector<bool>& blocked) {
    const std::size_t cols = cost.size();
    reduced_ = cost;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) reduced_[j] -= cb * a_[i][j];
    }
    for (;;) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!blocked[j] && reduced_[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols) return true;
      std::size_t leave = a_.size();
      Rational best;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i][enter] <= 0) continue;
        Rational ratio = b_[i] / a_[i][enter];
        if (leave == a_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == a_.size()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const std::size_t cols = a_[row].size();
    Rational inv = 1 / a_[row][col];
    for (std::size_t j = 0; j < cols; ++j) a_[row][j] *= inv;
    b_[row] *= inv;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == row || a_[i][col] == 0) continue;
      Rational f = a_[i][col];
      for (std::size_t j = 0; j < cols; ++j) {
        if (a_[row][j] != 0) a_[i][j] -= f * a_[row][j];
      }
      b_[i] -= f * b_[row];
    }
    if (!reduced_.empty() && reduced_[col] != 0) {
      Rational f = reduced_[col];
      for (std::size_t j = 0; j < cols; ++j) reduced_[j] -= f * a_[row][j];
    }
    basis_[row] = col;
  }

  void drop_row(std::size_t row) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(row));
    b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
  }

  std::size_t rows() const { return a_.size(); }
  const std::vector<Rational>& row(std::size_t i) const { return a_[i]; }
  const Rational& rhs(std::size_t i) const { return b_[i]; }
  std::size_t basic(std::size_t i) const { return basis_[i]; }

 private:
  Mat<Rational> a_;
  std::vector<Rational> b_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
};

}  // namespace

Solution maximize(const Problem& problem) {
  const std::size_t n = problem.num_vars;
  std::vector<bool> nonneg(n, false);
  for (auto v : problem.nonnegative) nonneg.at(v) = true;

  // Column layout: one column per nonnegative variable, two per free one.
  std::vector<std::size_t> pos_col(n), neg_col(n, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t v = 0; v < n; ++v) {
    pos_col[v] = cols++;
    if (!nonneg[v]) neg_col[v] = cols++;
  }
  const std::size_t structural = cols;

  const std::size_t m = problem.constraints.size();
  std::vector<Sense> sense(m);
  std::vector<Rational> rhs(m);
  Mat<Rational> base(m, std::vector<Rational>(structural));
  std::size_t slacks = 0, artificials = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = problem.constraints[i];
    const bool flip = c.rhs < 0;
    sense[i] = c.sense;
    if (flip && c.sense != Sense::Equal) {
      sense[i] = c.sense == Sense::LessEqual ? Sense::GreaterEqual : Sense::LessEqual;
    }
    rhs[i] = flip ? Rational(-c.rhs) : c.rhs;
    for (std::size_t v = 0; v < n; ++v) {
      if (c.coeffs[v] == 0) continue;
      Rational a = flip ? Rational(-c.coeffs[v]) : c.coeffs[v];
      base[i][pos_col[v]] = a;
      if (neg_col[v] != SIZE_MAX) base[i][neg_col[v]] = -a;
    }
    if (sense[i] != Sense::Equal) ++slacks;
    if (sense[i] != Sense::LessEqual) ++artificials;
  }

  const std::size_t total = structural + slacks + artificials;
  Mat<Rational> rows(m, std::vector<Rational>(total));
  std::vector<std::size_t> basis(m);
  std::vector<bool> is_artificial(total, false);
  std::size_t next_slack = structural, next_art = structural + slacks;
  for (std::size_t i = 0; i < m; ++i) {
    std::copy(base[i].begin(), base[i].end(), rows[i].begin());
    if (sense[i] == Sense::LessEqual) {
      rows[i][next_slack] = 1;
      basis[i] = next_slack++;
    } else {
      if (sense[i] == Sense::GreaterEqual) rows[i][next_slack++] = -1;
      rows[i][next_art] = 1;
      is_artificial[next_art] = true;
      basis[i] = next_art++;
    }
  }

  Tableau tab(std::move(rows), rhs, basis);
  std::vector<bool> none_blocked(total, false);
  if (artificials > 0) {
    std::vector<Rational> phase1(total);
    for (std::size_t j = 0; j < total; ++j) {
      if (is_artificial[j]) phase1[j] = -1;
    }
    tab.run(phase1, none_blocked);
    Rational infeas;
    for (std::size_t i = 0; i < tab.rows(); ++i) {
      if (is_artificial[tab.basic(i)]) infeas += tab.rhs(i);
    }
    if (infeas != 0) return Solution{Status::Infeasible, {}, {}};
    for (std::size_t i = 0; i < tab.rows();) {
      if (!is_artificial[tab.basic(i)]) {
        ++i;
        continue;
      }
      std::size_t col = total;
      for (std::size_t j = 0; j < total; ++j) {
        if (!is_artificial[j] && tab.row(i)[j] != 0) {
          col = j;
          break;
        }
      }
      if (col == total) {
        tab.drop_row(i);
      } else {
        tab.pivot(i, col);
        ++i;
      }
    }
  }

  std::vector<Rational> cost(total);
  for (std::size_t v = 0; v < n; ++v) {
    cost[pos_col[v]] = problem.objective[v];
    if (neg_col[v] != SIZE_MAX) cost[neg_col[v]] = -problem.objective[v];
  }
  if (!tab.run(cost, is_artificial)) return Solution{Status::Unbounded, {}, {}};

  std::vector<Rational> col_value(total);
  for (std::size_t i = 0; i < tab.rows(); ++i) col_value[tab.basic(i)] = tab.rhs(i);
  Solution sol;
  sol.status = Status::Optimal;
  sol.x.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    sol.x[v] = col_value[pos_col[v]];
    if (neg_col[v] != SIZE_MAX) sol.x[v] -= col_value[neg_col[v]];
    sol.value += problem.objective[v] * sol.x[v];
  }
  return sol;
}

}  // namespace hyperstab::lp
