#include "tuvote/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "tuvote/structure.hpp"

namespace tuvote {
namespace {

void check_size(const RuleSpec& spec, std::size_t m, const Committee& committee) {
  if (committee.size() != spec.k) {
    throw std::invalid_argument("committee has " + std::to_string(committee.size()) + " members, rule expects " +
                                std::to_string(spec.k));
  }
  for (AltIndex c : committee) {
    if (c >= m) throw std::invalid_argument("committee member out of range");
  }
}

// Member scores of one voter, best first.
std::vector<Rational> sorted_member_scores(const ScoringVector& w, const WeakOrder& v, const Committee& committee) {
  std::vector<Rational> scores;
  for (AltIndex c : committee) scores.push_back(w.at_rank(v.rank(c)));
  std::sort(scores.begin(), scores.end(), std::greater<>());
  return scores;
}

Rational voter_value(const RuleSpec& spec, const WeakOrder& v, const Committee& committee) {
  if (const auto* cc = std::get_if<CcRule>(&spec.rule)) {
    return sorted_member_scores(cc->w, v, committee).front();
  }
  if (const auto* owa = std::get_if<OwaRule>(&spec.rule)) {
    auto scores = sorted_member_scores(owa->w, v, committee);
    Rational total = 0;
    for (std::size_t l = 0; l < scores.size(); ++l) total += owa->alpha.values().at(l) * scores[l];
    return total;
  }
  throw std::invalid_argument("PAV is defined on approval ballots");
}

Rational pav_voter_value(const PavRule& pav, const std::vector<AltIndex>& ballot, const Committee& committee) {
  std::size_t hits = 0;
  for (AltIndex c : committee) hits += std::binary_search(ballot.begin(), ballot.end(), c);
  return pav.alpha.prefix_sum(hits);
}

template <typename ProfileT, typename Score>
OracleResult enumerate(const RuleSpec& spec, const ProfileT& profile, Score&& score) {
  const std::size_t m = profile.num_alternatives();
  if (spec.k < 1 || spec.k > m) throw std::invalid_argument("committee size out of range");
  // C(m, k) with early exit once past the limit.
  double count = 1;
  for (std::size_t i = 0; i < spec.k; ++i) count = count * static_cast<double>(m - i) / static_cast<double>(i + 1);
  if (count > static_cast<double>(kMaxOracleCommittees)) {
    throw std::length_error("brute-force search space too large");
  }
  OracleResult out;
  bool first = true;
  for_each_committee(m, spec.k, [&](const Committee& w) {
    Rational value = score(w);
    if (first || value > out.best_value) {
      out.best_value = value;
      out.argmax.clear();
      first = false;
    }
    if (value == out.best_value) out.argmax.push_back(w);
  });
  return out;
}

}  // namespace

Rational committee_value(const RuleSpec& spec, const Profile& profile, const Committee& committee) {
  check_size(spec, profile.num_alternatives(), committee);
  Rational total = 0;
  for (const auto& v : profile.voters()) total += voter_value(spec, v, committee);
  return total;
}

Rational committee_value(const RuleSpec& spec, const ApprovalProfile& profile, const Committee& committee) {
  const auto* pav = std::get_if<PavRule>(&spec.rule);
  if (!pav) return committee_value(spec, profile.to_profile(), committee);
  check_size(spec, profile.num_alternatives(), committee);
  Rational total = 0;
  for (const auto& b : profile.ballots()) total += pav_voter_value(*pav, b, committee);
  return total;
}

Rational egalitarian_value(const RuleSpec& spec, const Profile& profile, const Committee& committee) {
  if (!std::holds_alternative<CcRule>(spec.rule)) {
    throw std::invalid_argument("egalitarian ranked rules: CC only");
  }
  check_size(spec, profile.num_alternatives(), committee);
  std::optional<Rational> worst;
  for (const auto& v : profile.voters()) {
    Rational value = voter_value(spec, v, committee);
    if (!worst || value < *worst) worst = value;
  }
  return *worst;
}

Rational egalitarian_value(const RuleSpec& spec, const ApprovalProfile& profile, const Committee& committee) {
  const auto* pav = std::get_if<PavRule>(&spec.rule);
  if (!pav) return egalitarian_value(spec, profile.to_profile(), committee);
  check_size(spec, profile.num_alternatives(), committee);
  std::optional<Rational> worst;
  for (const auto& b : profile.ballots()) {
    Rational value = pav_voter_value(*pav, b, committee);
    if (!worst || value < *worst) worst = value;
  }
  return *worst;
}

OracleResult brute_force_committee(const RuleSpec& spec, const Profile& profile) {
  return enumerate(spec, profile, [&](const Committee& w) { return committee_value(spec, profile, w); });
}

OracleResult brute_force_committee(const RuleSpec& spec, const ApprovalProfile& profile) {
  return enumerate(spec, profile, [&](const Committee& w) { return committee_value(spec, profile, w); });
}

OracleResult brute_force_egalitarian(const RuleSpec& spec, const Profile& profile) {
  return enumerate(spec, profile, [&](const Committee& w) { return egalitarian_value(spec, profile, w); });
}

OracleResult brute_force_egalitarian(const RuleSpec& spec, const ApprovalProfile& profile) {
  return enumerate(spec, profile, [&](const Committee& w) { return egalitarian_value(spec, profile, w); });
}

std::optional<AltIndex> condorcet_winner(const Profile& profile) {
  const std::size_t m = profile.num_alternatives();
  for (AltIndex c = 0; c < m; ++c) {
    bool wins = true;
    for (AltIndex b = 0; b < m && wins; ++b) {
      if (b != c && profile.majority_margin(b, c) >= 0) wins = false;
    }
    if (wins) return c;
  }
  return std::nullopt;
}

YoungScore young_score_bruteforce(const Profile& profile, AltIndex target) {
  const std::size_t n = profile.num_voters();
  const std::size_t m = profile.num_alternatives();
  if (n > kMaxYoungOracleVoters) throw std::length_error("too many voters for exhaustive Young search");
  if (target >= m) throw std::invalid_argument("target alternative out of range");

  // For every rival b: voters with target > b and voters with b > target.
  std::vector<std::uint32_t> for_target, for_rival;
  for (AltIndex b = 0; b < m; ++b) {
    if (b == target) continue;
    std::uint32_t pro = 0, con = 0;
    for (VoterIndex i = 0; i < n; ++i) {
      if (profile.voter(i).prefers(target, b)) pro |= 1U << i;
      else if (profile.voter(i).prefers(b, target)) con |= 1U << i;
    }
    for_target.push_back(pro);
    for_rival.push_back(con);
  }

  YoungScore best;
  std::uint32_t best_mask = 0;
  const std::uint32_t limit = n == 32 ? 0xffffffffU : (1U << n) - 1;
  for (std::uint32_t mask = 1; mask != 0 && mask <= limit; ++mask) {
    auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best.score) continue;
    bool wins = true;
    for (std::size_t k = 0; k < for_target.size() && wins; ++k) {
      wins = std::popcount(mask & for_target[k]) > std::popcount(mask & for_rival[k]);
    }
    if (wins) {
      best.score = size;
      best_mask = mask;
    }
  }
  for (VoterIndex i = 0; i < n; ++i) {
    if (best_mask & (1U << i)) best.witness.push_back(i);
  }
  return best;
}

std::size_t young_score_median(const Profile& profile, const VoterOrdering& ordering, AltIndex target) {
  if (target >= profile.num_alternatives()) throw std::invalid_argument("target alternative out of range");
  if (!profile.all_linear() || !ordering_certifies_single_crossing(profile, ordering)) {
    throw std::invalid_argument("voter ordering does not certify single-crossing preferences");
  }
  const std::size_t n = ordering.size();
  auto tops = [&](std::size_t pos) { return profile.voter(ordering[pos]).top().front() == target; };

  // Deleting voters from both ends keeps the profile single-crossing, and its
  // strict Condorcet winner is the median voter's top (both middle voters'
  // common top for even length).
  for (std::size_t len = n; len >= 1; --len) {
    for (std::size_t start = 0; start + len <= n; ++start) {
      std::size_t mid = start + (len - 1) / 2;
      if (len % 2 == 1 ? tops(mid) : tops(mid) && tops(mid + 1)) return len;
    }
  }
  return 0;
}

}  // namespace tuvote
