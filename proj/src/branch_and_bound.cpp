#include <stdexcept>
#include <vector>

#include "tuvote/simplex.hpp"

namespace tuvote {
namespace {

// Distance to the nearest integer, as a rational in [0, 1/2].
Rational fractionality(const Rational& v) {
  Rational f = v - floor(v);
  return f <= Rational(1, 2) ? f : Rational(1 - f);
}

// Most fractional committee/deletion variable (ties: lowest index); falls back
// to any other integral variable. Returns nullopt when the point is integral.
std::optional<std::size_t> branching_variable(const IPInstance& inst, const LPSolution& sol) {
  std::optional<std::size_t> best;
  Rational best_frac = 0;
  for (int pass = 0; pass < 2 && !best; ++pass) {
    for (std::size_t j = 0; j < inst.variables.size(); ++j) {
      const Variable& v = inst.variables[j];
      if (!v.integral) continue;
      bool structural = v.role == VarRole::committee || v.role == VarRole::deletion;
      if ((pass == 0) != structural) continue;
      Rational frac = fractionality(sol.values[j]);
      if (frac > best_frac) {
        best = j;
        best_frac = frac;
      }
    }
  }
  return best;
}

bool improves(const IPInstance& inst, const Rational& candidate, const Rational& incumbent) {
  return inst.sense == ObjectiveSense::maximize ? candidate > incumbent : candidate < incumbent;
}

}  // namespace

SolveReport solve_ip(const IPInstance& instance) {
  SolveReport report;
  report.lp = solve_lp(instance);
  report.total_pivots = report.lp.pivots;

  if (report.lp.status != LpStatus::optimal) {
    report.final = report.lp;
    return report;
  }
  if (is_integral(report.lp, instance)) {
    report.lp_integral = true;
    report.final = report.lp;
    report.extracted = extract_solution(instance, report.final.values, report.final.objective);
    return report;
  }

  struct Node {
    BoundOverrides bounds;
  };
  std::optional<LPSolution> incumbent;
  std::vector<Node> stack;

  auto push_children = [&](const BoundOverrides& bounds, const LPSolution& sol, std::size_t var) {
    const Rational down = floor(sol.values[var]);
    Node below{bounds};
    below.bounds.upper[var] = down;
    Node above{bounds};
    above.bounds.lower[var] = down + 1;
    // Depth-first, rounding up first.
    stack.push_back(std::move(below));
    stack.push_back(std::move(above));
  };

  push_children(BoundOverrides::from(instance), report.lp, *branching_variable(instance, report.lp));
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    LPSolution sol = solve_lp(instance, node.bounds);
    ++report.branch_nodes;
    report.total_pivots += sol.pivots;
    if (sol.status == LpStatus::unbounded) {
      throw std::runtime_error("unbounded relaxation below the root of a bounded problem");
    }
    if (sol.status != LpStatus::optimal) continue;
    if (incumbent && !improves(instance, sol.objective, incumbent->objective)) continue;
    auto var = branching_variable(instance, sol);
    if (!var) {
      incumbent = std::move(sol);
      continue;
    }
    push_children(node.bounds, sol, *var);
  }

  if (!incumbent) {
    report.final = LPSolution{};
    report.final.status = LpStatus::infeasible;
    return report;
  }
  if (improves(instance, incumbent->objective, report.lp.objective)) {
    throw std::logic_error("integer optimum beats its own relaxation bound");
  }
  report.final = std::move(*incumbent);
  report.extracted = extract_solution(instance, report.final.values, report.final.objective);
  return report;
}

}  // namespace tuvote
