#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "tuvote/model.hpp"
#include "tuvote/rational.hpp"
#include "tuvote/structure.hpp"

using namespace tuvote;
using namespace tuvote::testing;

namespace {

std::size_t error_line(const std::string& text, bool approval = false) {
  try {
    if (approval) {
      parse_approval_profile(text);
    } else {
      parse_ranked_profile(text);
    }
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("minimal ranked profile") {
  Profile p = parse_ranked_profile("3\na b c\n1: a > b > c\n");
  CHECK(p.num_alternatives() == 3);
  CHECK(p.num_voters() == 1);
  CHECK(p.voter(0).is_linear());
  CHECK(p.voter(0).flattened() == std::vector<AltIndex>{0, 1, 2});
}

TEST_CASE("multiplicity prefix repeats the voter") {
  Profile p = parse_ranked_profile("3\na b c\n2: {a,b} > c\n");
  REQUIRE(p.num_voters() == 2);
  CHECK(p.voter(0) == p.voter(1));
  CHECK(p.voter(0).num_classes() == 2);
  CHECK(p.voter(0).indifferent(0, 1));
  CHECK(p.voter(0).prefers(1, 2));
}

TEST_CASE("approval ballots") {
  ApprovalProfile p = parse_approval_profile("4\na b c d\n1: {a,b}\n");
  CHECK(p.num_voters() == 1);
  CHECK(p.ballot(0) == std::vector<AltIndex>{0, 1});
  CHECK(p.approves(0, 1));
  CHECK_FALSE(p.approves(0, 2));

  ApprovalProfile empty = parse_approval_profile("2\na b\n1: {}\n");
  CHECK(empty.ballot(0).empty());
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("3\na b c\n1: a > b > a\n") == 3);      // duplicate
  CHECK(error_line("3\na b c\n1: a > b > z\n") == 3);      // unknown
  CHECK(error_line("3\na b c\n1: a > b\n") == 3);          // missing
  CHECK(error_line("3\na b c\n1: a > b > c\nnonsense\n") == 4);
  CHECK(error_line("3\na b c\n1: a > b > c\n0: a > b > c\n") == 4);
  CHECK(error_line("3\na b\n1: a > b\n") == 2);
  CHECK(error_line("2\na b\n1: a\n", true) == 3);
  CHECK(error_line("2\na b\n1: {a,z}\n", true) == 3);
  CHECK_THROWS_AS(parse_ranked_profile(""), ParseError);
  CHECK_THROWS_AS(parse_ranked_profile("2\na b\n"), ParseError);
}

TEST_CASE("serialization round-trips after normalization") {
  const std::string text = "3\na b c\n1: {b,a} > c\n1: c > b > a\n";
  Profile p = parse_ranked_profile(text);
  std::string once = serialize(p);
  CHECK(once == "3\na b c\n1: {a,b} > c\n1: c > b > a\n");
  CHECK(serialize(parse_ranked_profile(once)) == once);
  CHECK(parse_ranked_profile(once) == p);

  ApprovalProfile a = e2();
  CHECK(serialize(a) == kE2);
  CHECK(parse_approval_profile(serialize(a)) == a);
}

TEST_CASE("rank is the indifference-class index") {
  Profile p = e1();
  CHECK(p.rank_of(1, p.index_of("a")) == 2);
  CHECK(p.rank_of(0, p.index_of("a")) == 1);

  Profile w = parse_ranked_profile("4\na b c d\n1: {a,b} > c > d\n");
  CHECK(w.rank_of(0, w.index_of("b")) == 1);
  CHECK(w.rank_of(0, w.index_of("c")) == 2);
  CHECK(w.rank_of(0, w.index_of("d")) == 3);
}

TEST_CASE("top-initial segments") {
  Profile p = e1();
  CHECK(p.top_initial_segment(2, 2) == std::vector<AltIndex>{1, 2});
  CHECK(p.top_initial_segment(0, 3) == std::vector<AltIndex>{0, 1, 2});
  CHECK_THROWS_AS(p.top_initial_segment(0, 0), std::out_of_range);
  CHECK_THROWS_AS(p.top_initial_segment(0, 4), std::out_of_range);
}

TEST_CASE("majority margins") {
  Profile p1 = e1();
  CHECK(p1.majority_margin(p1.index_of("b"), p1.index_of("a")) == 1);
  Profile p3 = e3();
  CHECK(p3.majority_margin(p3.index_of("c"), p3.index_of("a")) == 1);
  CHECK_THROWS_AS(p3.majority_margin(0, 0), std::invalid_argument);

  // Indifferent voters count on neither side.
  Profile w = parse_ranked_profile("2\na b\n1: {a,b}\n1: a > b\n");
  CHECK(w.majority_margin(0, 1) == 1);
  CHECK(w.majority_margin(1, 0) == -1);
}

TEST_CASE("majority margin is antisymmetric") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Profile p = generate_impartial_culture(5, 7, seed);
    for (AltIndex a = 0; a < 5; ++a) {
      for (AltIndex b = 0; b < 5; ++b) {
        if (a != b) CHECK(p.majority_margin(a, b) == -p.majority_margin(b, a));
      }
    }
  }
}

TEST_CASE("approval to profile gives dichotomous orders") {
  ApprovalProfile a = parse_approval_profile("3\na b c\n1: {a}\n1: {}\n1: {a,b,c}\n");
  Profile p = a.to_profile();
  CHECK(p.voter(0).num_classes() == 2);
  CHECK(p.voter(1).num_classes() == 1);
  CHECK(p.voter(2).num_classes() == 1);
  CHECK(p.max_classes() <= 2);
}

TEST_CASE("weak order validation") {
  CHECK_THROWS_AS(WeakOrder({{0}, {0, 1}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(WeakOrder({{0}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(WeakOrder({{0}, {}, {1}}, 2), std::invalid_argument);
  CHECK_NOTHROW(WeakOrder({{1}, {0}}, 2));
}

TEST_CASE("rationals") {
  CHECK(to_string(parse_rational("7/2")) == "7/2");
  CHECK(to_string(parse_rational("14/4")) == "7/2");
  CHECK(to_string(parse_rational("0.25")) == "1/4");
  CHECK(to_string(parse_rational("-3")) == "-3");
  CHECK(parse_rational_list("1,1/2,1/3").size() == 3);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(ceil(Rational(7, 2)) == 4);
  CHECK(is_integer(Rational(4, 2)));
}

TEST_CASE("generators are deterministic in the seed") {
  CHECK(generate_single_peaked(6, 9, 42).profile == generate_single_peaked(6, 9, 42).profile);
  CHECK(generate_single_crossing(6, 9, 42).profile == generate_single_crossing(6, 9, 42).profile);
  CHECK(generate_candidate_interval(6, 9, 42).profile == generate_candidate_interval(6, 9, 42).profile);
  CHECK(generate_impartial_culture(6, 9, 42) == generate_impartial_culture(6, 9, 42));
  CHECK_FALSE(generate_impartial_culture(6, 9, 1) == generate_impartial_culture(6, 9, 2));
}

TEST_CASE("single-peaked generator respects its hidden axis") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto s = generate_single_peaked(6, 8, seed);
    CHECK(s.profile.all_linear());
    CHECK(s.profile.num_voters() == 8);
    CHECK(single_peaked_wrt(s.profile, s.axis));
  }
}

TEST_CASE("single-crossing generator respects its voter ordering") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto s = generate_single_crossing(5, 7, seed);
    CHECK(single_crossing_wrt(s.profile, s.ordering));
  }
}

TEST_CASE("candidate-interval generator") {
  // m=5, n=8, seed=3: every ballot is a non-empty interval of the hidden axis.
  auto s = generate_candidate_interval(5, 8, 3);
  for (const auto& ballot : s.profile.ballots()) {
    REQUIRE_FALSE(ballot.empty());
    std::size_t lo = 5, hi = 0;
    for (std::size_t pos = 0; pos < 5; ++pos) {
      if (std::binary_search(ballot.begin(), ballot.end(), s.axis[pos])) {
        lo = std::min(lo, pos);
        hi = pos;
      }
    }
    CHECK(hi - lo + 1 == ballot.size());
  }
  CHECK(c1p_by_permutation(build_ballot_matrix(s.profile)));
}

TEST_CASE("default alternative names") {
  CHECK(default_alternative_names(3) == std::vector<std::string>{"a", "b", "c"});
  CHECK(default_alternative_names(27).front() == "x1");
  CHECK(is_valid_alternative_name("abc"));
  CHECK_FALSE(is_valid_alternative_name("a>b"));
  CHECK_FALSE(is_valid_alternative_name(""));
}
