#include "tuvote/egalitarian.hpp"

#include <algorithm>
#include <stdexcept>

namespace tuvote {
namespace {

template <typename BuildInstance>
EgalitarianResult search_levels(std::vector<Rational> levels, BuildInstance&& build) {
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  EgalitarianResult result;
  auto probe = [&](std::size_t index) {
    IPInstance inst = build(levels[index]);
    SolveReport report = solve_ip(inst);
    EgalitarianProbe p;
    p.level = levels[index];
    p.lp_status = report.lp.status;
    p.lp_integral = report.lp_integral;
    p.branch_nodes = report.branch_nodes;
    p.feasible = report.final.status == LpStatus::optimal;
    result.probes.push_back(p);
    if (p.feasible) {
      result.level = levels[index];
      result.committee = *report.extracted->committee;
    }
    return p.feasible;
  };

  // The lowest level is met by every committee.
  std::size_t lo = 0, hi = levels.size() - 1;
  if (!probe(lo)) throw std::logic_error("lowest egalitarian level is infeasible");
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo + 1) / 2;
    if (probe(mid)) lo = mid;
    else hi = mid - 1;
  }
  if (result.level != levels[lo]) throw std::logic_error("egalitarian search lost its witness");
  return result;
}

}  // namespace

EgalitarianResult egalitarian_solve(const Profile& profile, const ScoringVector& w, std::size_t k) {
  return search_levels(w.padded(profile.num_alternatives()), [&](const Rational& level) {
    return egalitarian_feasibility_ip(profile, w, k, level);
  });
}

EgalitarianResult egalitarian_solve(const ApprovalProfile& profile, const OwaVector& alpha, std::size_t k) {
  std::vector<Rational> levels;
  for (std::size_t t = 0; t <= alpha.size(); ++t) levels.push_back(alpha.prefix_sum(t));
  return search_levels(std::move(levels), [&](const Rational& level) {
    return egalitarian_feasibility_ip(profile, alpha, k, level);
  });
}

EgalitarianResult egalitarian_solve(const RuleSpec& spec, const Profile& profile) {
  if (const auto* cc = std::get_if<CcRule>(&spec.rule)) return egalitarian_solve(profile, cc->w, spec.k);
  throw std::invalid_argument("egalitarian search supports CC on ranked ballots and PAV on approvals");
}

EgalitarianResult egalitarian_solve(const RuleSpec& spec, const ApprovalProfile& profile) {
  if (const auto* pav = std::get_if<PavRule>(&spec.rule)) return egalitarian_solve(profile, pav->alpha, spec.k);
  return egalitarian_solve(spec, profile.to_profile());
}

}  // namespace tuvote
