#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tuvote/formulate.hpp"
#include "tuvote/model.hpp"
#include "tuvote/rational.hpp"

namespace tuvote {

// Brute-force reference semantics. Nothing here goes through the IP builders
// or the simplex.

using Committee = std::vector<AltIndex>;  // sorted

struct OracleResult {
  Rational best_value = 0;
  std::vector<Committee> argmax;  // lexicographic order
};

inline constexpr std::size_t kMaxOracleCommittees = 1'000'000;
inline constexpr std::size_t kMaxYoungOracleVoters = 20;

// CC and OWA read the profile; PAV needs approvals (ApprovalProfile overload).
// Throws std::invalid_argument if |committee| != spec.k.
Rational committee_value(const RuleSpec& spec, const Profile& profile, const Committee& committee);
Rational committee_value(const RuleSpec& spec, const ApprovalProfile& profile, const Committee& committee);

// Worst-off voter's value under CC or PAV.
Rational egalitarian_value(const RuleSpec& spec, const Profile& profile, const Committee& committee);
Rational egalitarian_value(const RuleSpec& spec, const ApprovalProfile& profile, const Committee& committee);

// Enumerates all C(m, k) committees; throws std::length_error beyond
// kMaxOracleCommittees.
OracleResult brute_force_committee(const RuleSpec& spec, const Profile& profile);
OracleResult brute_force_committee(const RuleSpec& spec, const ApprovalProfile& profile);
OracleResult brute_force_egalitarian(const RuleSpec& spec, const Profile& profile);
OracleResult brute_force_egalitarian(const RuleSpec& spec, const ApprovalProfile& profile);

// Strict Condorcet winner, if any.
std::optional<AltIndex> condorcet_winner(const Profile& profile);

struct YoungScore {
  std::size_t score = 0;            // 0: no non-empty subprofile works
  std::vector<VoterIndex> witness;  // voters kept
};

// Exhaustive over voter subsets; n <= kMaxYoungOracleVoters.
YoungScore young_score_bruteforce(const Profile& profile, AltIndex target);

// Largest window of the single-crossing ordering whose median voter(s) rank
// the target first. Throws std::invalid_argument if the ordering does not
// certify single-crossingness.
std::size_t young_score_median(const Profile& profile, const VoterOrdering& ordering, AltIndex target);

// Calls visit(committee) for every k-subset of 0..m-1 in lexicographic order.
template <typename Visit>
void for_each_committee(std::size_t m, std::size_t k, Visit&& visit) {
  if (k > m) return;
  Committee idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(static_cast<const Committee&>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace tuvote
