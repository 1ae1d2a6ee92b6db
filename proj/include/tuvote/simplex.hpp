#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tuvote/formulate.hpp"
#include "tuvote/rational.hpp"

namespace tuvote {

enum class LpStatus { optimal, infeasible, unbounded };

struct LPSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<Rational> values;  // one per instance variable; empty unless optimal
  Rational objective = 0;
  std::size_t pivots = 0;  // simplex iterations over both phases, bound flips included
};

// Per-variable bounds overriding those declared in the instance.
struct BoundOverrides {
  std::vector<Rational> lower;
  std::vector<std::optional<Rational>> upper;

  static BoundOverrides from(const IPInstance& instance);
};

// Continuous relaxation by two-phase primal simplex on the bounded-variable
// standard form with Bland's rule. All arithmetic is exact, and the returned
// solution is a basic (vertex) solution.
LPSolution solve_lp(const IPInstance& instance);
LPSolution solve_lp(const IPInstance& instance, const BoundOverrides& bounds);

// True iff every integrality-flagged variable has denominator 1.
bool is_integral(const LPSolution& solution, const IPInstance& instance);

struct SolveReport {
  LPSolution lp;             // root relaxation
  bool lp_integral = false;  // root relaxation already integral
  std::size_t branch_nodes = 0;
  std::size_t total_pivots = 0;
  LPSolution final;          // optimal integral solution, or the failure status
  std::optional<ExtractedSolution> extracted;
};

// Relaxation first; if it is not integral, depth-first branch-and-bound on the
// most fractional committee/deletion variable with exact bound pruning.
SolveReport solve_ip(const IPInstance& instance);

std::string to_string(LpStatus status);

}  // namespace tuvote
