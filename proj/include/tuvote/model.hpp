#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tuvote {

// Alternatives and voters are referred to by zero-based index everywhere in
// the library; names only appear at the text boundary.
using AltIndex = std::size_t;
using VoterIndex = std::size_t;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A complete preorder A_1 > A_2 > ... > A_r over m alternatives.
class WeakOrder {
 public:
  WeakOrder() = default;
  // Classes must be non-empty, pairwise disjoint and cover 0..m-1.
  WeakOrder(std::vector<std::vector<AltIndex>> classes, std::size_t m);

  static WeakOrder linear(const std::vector<AltIndex>& order);

  std::size_t num_alternatives() const { return rank_.size(); }
  std::size_t num_classes() const { return classes_.size(); }
  const std::vector<std::vector<AltIndex>>& classes() const { return classes_; }
  const std::vector<AltIndex>& indifference_class(std::size_t rank) const {
    return classes_.at(rank - 1);
  }

  // 1 = most preferred; members of one indifference class share a rank.
  std::size_t rank(AltIndex c) const { return rank_.at(c); }
  bool prefers(AltIndex x, AltIndex y) const { return rank_.at(x) < rank_.at(y); }
  bool indifferent(AltIndex x, AltIndex y) const { return rank_.at(x) == rank_.at(y); }
  bool is_linear() const { return classes_.size() == rank_.size(); }
  const std::vector<AltIndex>& top() const { return classes_.front(); }

  // {x : rank(x) <= t}, sorted by index. Requires 1 <= t <= num_classes().
  std::vector<AltIndex> top_initial_segment(std::size_t t) const;

  // Alternatives in preference order; ties listed by index.
  std::vector<AltIndex> flattened() const;

  friend bool operator==(const WeakOrder& a, const WeakOrder& b) { return a.rank_ == b.rank_; }

 private:
  std::vector<std::vector<AltIndex>> classes_;
  std::vector<std::size_t> rank_;
};

class Profile {
 public:
  Profile(std::vector<std::string> alternatives, std::vector<WeakOrder> voters);

  std::size_t num_alternatives() const { return alternatives_.size(); }
  std::size_t num_voters() const { return voters_.size(); }
  const std::vector<std::string>& alternatives() const { return alternatives_; }
  const std::string& name(AltIndex c) const { return alternatives_.at(c); }
  const std::vector<WeakOrder>& voters() const { return voters_; }
  const WeakOrder& voter(VoterIndex i) const { return voters_.at(i); }

  // Throws std::invalid_argument for unknown names.
  AltIndex index_of(std::string_view name) const;

  std::size_t rank_of(VoterIndex i, AltIndex c) const { return voters_.at(i).rank(c); }
  std::vector<AltIndex> top_initial_segment(VoterIndex i, std::size_t t) const;

  // |{i : b >_i a}| - |{i : a >_i b}|; voters indifferent between a and b are
  // not counted. Throws std::invalid_argument when a == b.
  long long majority_margin(AltIndex b, AltIndex a) const;

  bool all_linear() const;
  std::size_t max_classes() const;

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::vector<std::string> alternatives_;
  std::vector<WeakOrder> voters_;
};

class ApprovalProfile {
 public:
  // Ballots are sets of alternative indices; they are sorted and deduplicated.
  ApprovalProfile(std::vector<std::string> alternatives, std::vector<std::vector<AltIndex>> ballots);

  std::size_t num_alternatives() const { return alternatives_.size(); }
  std::size_t num_voters() const { return ballots_.size(); }
  const std::vector<std::string>& alternatives() const { return alternatives_; }
  const std::string& name(AltIndex c) const { return alternatives_.at(c); }
  const std::vector<std::vector<AltIndex>>& ballots() const { return ballots_; }
  const std::vector<AltIndex>& ballot(VoterIndex i) const { return ballots_.at(i); }
  bool approves(VoterIndex i, AltIndex c) const;

  AltIndex index_of(std::string_view name) const;

  // Approved class first, then the rest. Empty and full ballots become a
  // single indifference class.
  Profile to_profile() const;

  friend bool operator==(const ApprovalProfile&, const ApprovalProfile&) = default;

 private:
  std::vector<std::string> alternatives_;
  std::vector<std::vector<AltIndex>> ballots_;
};

// Left-to-right ordering of all alternatives.
using Axis = std::vector<AltIndex>;
// Ordering of voters (a permutation of 0..n-1).
using VoterOrdering = std::vector<VoterIndex>;

enum class ProfileFormat { ranked, approval };

Profile parse_ranked_profile(std::string_view text);
ApprovalProfile parse_approval_profile(std::string_view text);

// One "1: ..." line per voter; class members sorted by name.
std::string serialize(const Profile& profile);
std::string serialize(const ApprovalProfile& profile);

// Checks a candidate alternative name against the format's reserved characters.
bool is_valid_alternative_name(std::string_view name);

// Default alternative names: a, b, ..., z for m <= 26, otherwise x1, x2, ...
std::vector<std::string> default_alternative_names(std::size_t m);

struct SinglePeakedSample {
  Profile profile;
  Axis axis;
  std::uint64_t seed;
};

struct SingleCrossingSample {
  Profile profile;
  VoterOrdering ordering;
  std::uint64_t seed;
};

struct CandidateIntervalSample {
  ApprovalProfile profile;
  Axis axis;
  std::uint64_t seed;
};

SinglePeakedSample generate_single_peaked(std::size_t m, std::size_t n, std::uint64_t seed);
SingleCrossingSample generate_single_crossing(std::size_t m, std::size_t n, std::uint64_t seed);
CandidateIntervalSample generate_candidate_interval(std::size_t m, std::size_t n, std::uint64_t seed);

// Uniform linear orders, no structure. Used for off-domain testing and bench.
Profile generate_impartial_culture(std::size_t m, std::size_t n, std::uint64_t seed);
// Each alternative approved independently with probability 1/2.
ApprovalProfile generate_random_approval(std::size_t m, std::size_t n, std::uint64_t seed);

}  // namespace tuvote
