#include "tuvote/simplex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tuvote {

BoundOverrides BoundOverrides::from(const IPInstance& instance) {
  BoundOverrides b;
  for (const auto& v : instance.variables) {
    b.lower.push_back(v.lower);
    b.upper.push_back(v.upper);
  }
  return b;
}

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

struct Row {
  std::vector<Term> terms;
  Sense sense;
  Rational rhs;
};

// Dense tableau B^-1 [A | slacks | artificials] with explicit values for all
// columns. Nonbasic columns always sit at one of their bounds.
class BoundedSimplex {
 public:
  BoundedSimplex(const IPInstance& inst, const BoundOverrides& bounds) : inst_(inst), n_(inst.variables.size()) {
    if (bounds.lower.size() != n_ || bounds.upper.size() != n_) {
      throw std::invalid_argument("bound overrides do not match the variable count");
    }
    lower_ = bounds.lower;
    upper_ = bounds.upper;
    for (std::size_t j = 0; j < n_; ++j) {
      if (upper_[j] && *upper_[j] < lower_[j]) infeasible_ = true;
    }

    std::vector<Row> rows;
    for (const auto& c : inst.constraints) {
      std::map<std::size_t, Rational> merged;
      for (const auto& t : c.terms) merged[t.var] += t.coef;
      Row row{{}, c.sense, c.rhs};
      for (auto& [var, coef] : merged) {
        if (coef != 0) row.terms.push_back({var, coef});
      }
      if (row.terms.empty()) {
        // Empty rows are checked here and dropped.
        bool ok = c.sense == Sense::le ? 0 <= c.rhs : c.sense == Sense::eq ? c.rhs == 0 : 0 >= c.rhs;
        if (!ok) infeasible_ = true;
        continue;
      }
      rows.push_back(std::move(row));
    }
    if (infeasible_) return;

    rows_ = rows.size();
    std::size_t slacks = 0;
    for (const auto& r : rows) slacks += r.sense != Sense::eq;

    // Residual of each row with every structural column at its lower bound.
    std::vector<Rational> residual(rows_);
    std::vector<bool> needs_artificial(rows_);
    std::size_t artificials = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      residual[i] = rows[i].rhs;
      for (const auto& t : rows[i].terms) residual[i] -= t.coef * lower_[t.var];
      bool slack_fits = (rows[i].sense == Sense::le && residual[i] >= 0) ||
                        (rows[i].sense == Sense::ge && residual[i] <= 0);
      needs_artificial[i] = !slack_fits;
      artificials += needs_artificial[i];
    }

    first_slack_ = n_;
    first_artificial_ = n_ + slacks;
    total_ = first_artificial_ + artificials;
    lower_.resize(total_, Rational(0));
    upper_.resize(total_, std::nullopt);
    x_.assign(total_, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) x_[j] = lower_[j];
    t_.assign(rows_, std::vector<Rational>(total_));
    basis_.assign(rows_, 0);
    row_of_.assign(total_, kNonbasic);

    std::size_t next_slack = first_slack_;
    std::size_t next_art = first_artificial_;
    for (std::size_t i = 0; i < rows_; ++i) {
      auto& row = t_[i];
      for (const auto& t : rows[i].terms) row[t.var] = t.coef;
      std::optional<std::size_t> slack;
      if (rows[i].sense != Sense::eq) {
        slack = next_slack++;
        row[*slack] = rows[i].sense == Sense::le ? 1 : -1;
      }
      std::size_t basic;
      if (needs_artificial[i]) {
        basic = next_art++;
        row[basic] = residual[i] >= 0 ? 1 : -1;
      } else {
        basic = *slack;
      }
      if (row[basic] < 0) {
        for (auto& v : row) {
          if (!v.is_zero()) v = -v;
        }
        residual[i] = -residual[i];
      }
      basis_[i] = basic;
      row_of_[basic] = static_cast<long>(i);
      x_[basic] = residual[i];
    }
  }

  LPSolution solve() {
    LPSolution out;
    if (infeasible_) {
      out.status = LpStatus::infeasible;
      return out;
    }

    if (total_ > first_artificial_) {
      cost_.assign(total_, Rational(0));
      for (std::size_t j = first_artificial_; j < total_; ++j) cost_[j] = -1;
      compute_reduced_costs();
      if (iterate() != LpStatus::optimal) throw std::logic_error("phase one cannot be unbounded");
      for (std::size_t j = first_artificial_; j < total_; ++j) {
        if (!x_[j].is_zero()) {
          out.status = LpStatus::infeasible;
          out.pivots = iterations_;
          return out;
        }
      }
      drive_out_artificials();
    }

    cost_.assign(total_, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) {
      cost_[j] = inst_.sense == ObjectiveSense::maximize ? inst_.objective[j] : Rational(-inst_.objective[j]);
    }
    compute_reduced_costs();
    out.status = iterate();
    out.pivots = iterations_;
    if (out.status != LpStatus::optimal) return out;

    out.values.assign(x_.begin(), x_.begin() + static_cast<std::ptrdiff_t>(n_));
    out.objective = inst_.evaluate(out.values);
    verify(out.values);
    return out;
  }

 private:
  static constexpr long kNonbasic = -1;

  bool is_fixed(std::size_t j) const { return upper_[j] && *upper_[j] == lower_[j]; }

  void compute_reduced_costs() {
    d_ = cost_;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& cb = cost_[basis_[i]];
      if (cb.is_zero()) continue;
      const auto& row = t_[i];
      for (std::size_t j = 0; j < total_; ++j) {
        if (!row[j].is_zero()) d_[j] -= cb * row[j];
      }
    }
  }

  // Maximises cost_ . x from the current basis. Bland's rule: lowest-index
  // improving column enters; among tied blocking variables the lowest index
  // leaves (the entering column itself when its own bound blocks first).
  LpStatus iterate() {
    while (true) {
      std::size_t entering = total_;
      int direction = 0;
      for (std::size_t j = 0; j < total_; ++j) {
        if (row_of_[j] != kNonbasic || is_fixed(j)) continue;
        int s = d_[j].sign();
        if (s > 0 && (!upper_[j] || x_[j] < *upper_[j])) {
          entering = j;
          direction = 1;
          break;
        }
        if (s < 0 && x_[j] > lower_[j]) {
          entering = j;
          direction = -1;
          break;
        }
      }
      if (entering == total_) return LpStatus::optimal;

      std::optional<Rational> step;
      std::size_t leaving_var = total_;
      std::size_t leaving_row = rows_;
      auto consider = [&](const Rational& limit, std::size_t var, std::size_t row) {
        if (!step || limit < *step || (limit == *step && var < leaving_var)) {
          step = limit;
          leaving_var = var;
          leaving_row = row;
        }
      };
      if (upper_[entering]) consider(*upper_[entering] - lower_[entering], entering, rows_);
      for (std::size_t i = 0; i < rows_; ++i) {
        const Rational& a = t_[i][entering];
        if (a.is_zero()) continue;
        const std::size_t b = basis_[i];
        // Basic value moves by -a * direction per unit step.
        bool decreasing = (a.sign() > 0) == (direction > 0);
        if (decreasing) {
          consider((x_[b] - lower_[b]) / abs(a), b, i);
        } else if (upper_[b]) {
          consider((*upper_[b] - x_[b]) / abs(a), b, i);
        }
      }
      if (!step) return LpStatus::unbounded;

      ++iterations_;
      if (!step->is_zero()) {
        Rational delta = direction > 0 ? *step : Rational(-*step);
        x_[entering] += delta;
        for (std::size_t i = 0; i < rows_; ++i) {
          const Rational& a = t_[i][entering];
          if (!a.is_zero()) x_[basis_[i]] -= a * delta;
        }
      }
      if (leaving_row == rows_) continue;  // bound flip
      pivot(leaving_row, entering);
    }
  }

  void pivot(std::size_t r, std::size_t j) {
    auto& prow = t_[r];
    const Rational inv = 1 / prow[j];
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k < total_; ++k) {
      if (prow[k].is_zero()) continue;
      prow[k] *= inv;
      nz.push_back(k);
    }
    Rational f;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || t_[i][j].is_zero()) continue;
      f = t_[i][j];
      auto& row = t_[i];
      for (auto k : nz) row[k] -= f * prow[k];
    }
    if (!d_[j].is_zero()) {
      f = d_[j];
      for (auto k : nz) d_[k] -= f * prow[k];
    }
    const std::size_t old = basis_[r];
    row_of_[old] = kNonbasic;
    basis_[r] = j;
    row_of_[j] = static_cast<long>(r);
  }

  // Swaps zero-valued basic artificials for real columns, then pins every
  // artificial at zero. Rows with no real column left are redundant.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < first_artificial_) continue;
      for (std::size_t k = 0; k < first_artificial_; ++k) {
        if (row_of_[k] == kNonbasic && !t_[i][k].is_zero()) {
          pivot(i, k);
          break;
        }
      }
    }
    for (std::size_t j = first_artificial_; j < total_; ++j) upper_[j] = Rational(0);
  }

  void verify(const std::vector<Rational>& values) const {
    for (std::size_t j = 0; j < n_; ++j) {
      if (values[j] < lower_[j] || (upper_[j] && values[j] > *upper_[j])) {
        throw std::logic_error("simplex returned a point outside the variable bounds");
      }
    }
    for (const auto& c : inst_.constraints) {
      Rational lhs = 0;
      for (const auto& t : c.terms) lhs += t.coef * values[t.var];
      bool ok = c.sense == Sense::le ? lhs <= c.rhs : c.sense == Sense::eq ? lhs == c.rhs : lhs >= c.rhs;
      if (!ok) throw std::logic_error("simplex returned a point violating '" + c.label + "'");
    }
  }

  const IPInstance& inst_;
  std::size_t n_;
  std::size_t rows_ = 0;
  std::size_t first_slack_ = 0;
  std::size_t first_artificial_ = 0;
  std::size_t total_ = 0;
  bool infeasible_ = false;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> lower_;
  std::vector<std::optional<Rational>> upper_;
  std::vector<Rational> x_;
  std::vector<std::size_t> basis_;
  std::vector<long> row_of_;
  std::vector<Rational> cost_;
  std::vector<Rational> d_;
  std::size_t iterations_ = 0;
};

}  // namespace

LPSolution solve_lp(const IPInstance& instance) { return solve_lp(instance, BoundOverrides::from(instance)); }

LPSolution solve_lp(const IPInstance& instance, const BoundOverrides& bounds) {
  return BoundedSimplex(instance, bounds).solve();
}

bool is_integral(const LPSolution& solution, const IPInstance& instance) {
  if (solution.status != LpStatus::optimal) return false;
  for (std::size_t j = 0; j < instance.variables.size(); ++j) {
    if (instance.variables[j].integral && !is_integer(solution.values[j])) return false;
  }
  return true;
}

}  // namespace tuvote
