#include <algorithm>
#include <numeric>
#include <random>

#include "tuvote/model.hpp"

namespace tuvote {
namespace {

using Rng = std::mt19937_64;

std::size_t uniform_index(Rng& rng, std::size_t size) {
  return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

std::vector<AltIndex> random_permutation(Rng& rng, std::size_t m) {
  std::vector<AltIndex> perm(m);
  std::iota(perm.begin(), perm.end(), AltIndex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

void require_positive(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw std::invalid_argument("generator needs m >= 1 and n >= 1");
}

}  // namespace

SinglePeakedSample generate_single_peaked(std::size_t m, std::size_t n, std::uint64_t seed) {
  require_positive(m, n);
  Rng rng(seed);
  Axis axis = random_permutation(rng, m);

  std::vector<WeakOrder> voters;
  voters.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Peel the axis from both ends; each removed alternative is the worst of
    // those still remaining.
    std::vector<AltIndex> worst_first;
    std::size_t left = 0, right = m;
    while (right - left > 1) {
      if (rng() & 1U) worst_first.push_back(axis[left++]);
      else worst_first.push_back(axis[--right]);
    }
    worst_first.push_back(axis[left]);
    std::reverse(worst_first.begin(), worst_first.end());
    voters.push_back(WeakOrder::linear(worst_first));
  }
  return {Profile(default_alternative_names(m), std::move(voters)), std::move(axis), seed};
}

SingleCrossingSample generate_single_crossing(std::size_t m, std::size_t n, std::uint64_t seed) {
  require_positive(m, n);
  Rng rng(seed);
  std::vector<AltIndex> current = random_permutation(rng, m);

  std::vector<std::size_t> start_pos(m);
  for (std::size_t p = 0; p < m; ++p) start_pos[current[p]] = p;

  // Maximal chain from the start order to its reverse, one adjacent swap of a
  // not-yet-inverted pair at a time.
  std::vector<std::vector<AltIndex>> chain{current};
  while (true) {
    std::vector<std::size_t> swappable;
    for (std::size_t p = 0; p + 1 < m; ++p) {
      if (start_pos[current[p]] < start_pos[current[p + 1]]) swappable.push_back(p);
    }
    if (swappable.empty()) break;
    std::size_t p = swappable[uniform_index(rng, swappable.size())];
    std::swap(current[p], current[p + 1]);
    chain.push_back(current);
  }

  std::vector<std::size_t> picks(n);
  for (auto& p : picks) p = uniform_index(rng, chain.size());
  std::sort(picks.begin(), picks.end());

  std::vector<WeakOrder> voters;
  voters.reserve(n);
  for (std::size_t p : picks) voters.push_back(WeakOrder::linear(chain[p]));
  VoterOrdering ordering(n);
  std::iota(ordering.begin(), ordering.end(), VoterIndex{0});
  return {Profile(default_alternative_names(m), std::move(voters)), std::move(ordering), seed};
}

CandidateIntervalSample generate_candidate_interval(std::size_t m, std::size_t n, std::uint64_t seed) {
  require_positive(m, n);
  Rng rng(seed);
  Axis axis = random_permutation(rng, m);

  // Enumerate the m(m+1)/2 non-empty intervals so each is equally likely.
  std::vector<std::pair<std::size_t, std::size_t>> intervals;
  for (std::size_t l = 0; l < m; ++l) {
    for (std::size_t r = l; r < m; ++r) intervals.emplace_back(l, r);
  }
  std::vector<std::vector<AltIndex>> ballots;
  ballots.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [l, r] = intervals[uniform_index(rng, intervals.size())];
    ballots.emplace_back(axis.begin() + static_cast<std::ptrdiff_t>(l),
                         axis.begin() + static_cast<std::ptrdiff_t>(r + 1));
  }
  return {ApprovalProfile(default_alternative_names(m), std::move(ballots)), std::move(axis), seed};
}

Profile generate_impartial_culture(std::size_t m, std::size_t n, std::uint64_t seed) {
  require_positive(m, n);
  Rng rng(seed);
  std::vector<WeakOrder> voters;
  voters.reserve(n);
  for (std::size_t i = 0; i < n; ++i) voters.push_back(WeakOrder::linear(random_permutation(rng, m)));
  return Profile(default_alternative_names(m), std::move(voters));
}

ApprovalProfile generate_random_approval(std::size_t m, std::size_t n, std::uint64_t seed) {
  require_positive(m, n);
  Rng rng(seed);
  std::vector<std::vector<AltIndex>> ballots(n);
  for (auto& b : ballots) {
    for (AltIndex c = 0; c < m; ++c) {
      if (rng() & 1U) b.push_back(c);
    }
  }
  return ApprovalProfile(default_alternative_names(m), std::move(ballots));
}

}  // namespace tuvote
