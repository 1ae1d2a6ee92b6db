#pragma once

#include <vector>

#include "tuvote/formulate.hpp"
#include "tuvote/oracle.hpp"
#include "tuvote/simplex.hpp"

namespace tuvote {

// One feasibility solve made during the search over levels.
struct EgalitarianProbe {
  Rational level;
  bool feasible = false;
  LpStatus lp_status = LpStatus::infeasible;
  bool lp_integral = false;
  std::size_t branch_nodes = 0;
};

struct EgalitarianResult {
  Rational level;  // largest achievable worst-off value
  Committee committee;
  std::vector<EgalitarianProbe> probes;
};

// Binary search over the finite set of per-voter values ({w_r} for CC, prefix
// sums of alpha for PAV), one feasibility IP per probe.
EgalitarianResult egalitarian_solve(const Profile& profile, const ScoringVector& w, std::size_t k);
EgalitarianResult egalitarian_solve(const ApprovalProfile& profile, const OwaVector& alpha, std::size_t k);
// CC(w) on ranked input; CC(w) or PAV(alpha) on approvals. OWA is rejected.
EgalitarianResult egalitarian_solve(const RuleSpec& spec, const Profile& profile);
EgalitarianResult egalitarian_solve(const RuleSpec& spec, const ApprovalProfile& profile);

}  // namespace tuvote
