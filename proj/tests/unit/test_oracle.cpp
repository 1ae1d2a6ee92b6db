#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "tuvote/oracle.hpp"
#include "tuvote/structure.hpp"

using namespace tuvote;
using namespace tuvote::testing;

TEST_CASE("committee values of the worked examples") {
  RuleSpec cc{CcRule{ScoringVector::borda(3)}, 1};
  CHECK(committee_value(cc, e1(), {1}) == 7);
  CHECK(committee_value(cc, e1(), {0}) == 6);
  CHECK(committee_value(cc, e1(), {2}) == 5);

  RuleSpec pav{PavRule{OwaVector::harmonic(2)}, 2};
  CHECK(committee_value(pav, e2(), {1, 2}) == Rational(7, 2));

  RuleSpec owa{OwaRule{ScoringVector::borda(3), OwaVector::constant(2)}, 2};
  CHECK(committee_value(owa, e1(), {0, 1}) == 13);
  CHECK(committee_value(owa, e1(), {0, 2}) == 11);
  CHECK(committee_value(owa, e1(), {1, 2}) == 12);

  CHECK_THROWS_AS(committee_value(cc, e1(), {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(committee_value(pav, e1(), {0, 1}), std::invalid_argument);
}

TEST_CASE("brute force argmax sets") {
  RuleSpec cc{CcRule{ScoringVector::borda(3)}, 1};
  OracleResult r = brute_force_committee(cc, e1());
  CHECK(r.best_value == 7);
  CHECK(r.argmax == std::vector<Committee>{{1}});

  // Only {b,c} reaches 7/2.
  RuleSpec pav{PavRule{OwaVector::harmonic(2)}, 2};
  OracleResult p = brute_force_committee(pav, e2());
  CHECK(p.best_value == Rational(7, 2));
  CHECK(p.argmax == std::vector<Committee>{{1, 2}});

  // Symmetric profile: every singleton ties.
  RuleSpec cyc{CcRule{ScoringVector::borda(3)}, 1};
  CHECK(brute_force_committee(cyc, cycle3()).argmax.size() == 3);
}

TEST_CASE("committee enumeration") {
  std::size_t count = 0;
  Committee last;
  for_each_committee(6, 3, [&](const Committee& w) {
    if (count > 0) CHECK(last < w);
    last = w;
    ++count;
  });
  CHECK(count == 20);
  RuleSpec big{CcRule{ScoringVector::borda(40)}, 20};
  Profile p = generate_impartial_culture(40, 2, 1);
  CHECK_THROWS_AS(brute_force_committee(big, p), std::length_error);
}

TEST_CASE("egalitarian values") {
  RuleSpec cc{CcRule{ScoringVector::borda(3)}, 1};
  CHECK(egalitarian_value(cc, e1(), {1}) == 2);
  CHECK(brute_force_egalitarian(cc, e1()).best_value == 2);
  RuleSpec pav{PavRule{OwaVector::harmonic(2)}, 2};
  CHECK(brute_force_egalitarian(pav, e2()).best_value == 1);
  RuleSpec owa{OwaRule{ScoringVector::borda(3), OwaVector::constant(2)}, 2};
  CHECK_THROWS_AS(egalitarian_value(owa, e1(), {0, 1}), std::invalid_argument);
}

TEST_CASE("Condorcet winners") {
  CHECK(condorcet_winner(e4()) == AltIndex{0});
  CHECK_FALSE(condorcet_winner(cycle3()));
  CHECK(condorcet_winner(e3()) == AltIndex{2});
}

TEST_CASE("exhaustive Young scores") {
  CHECK(young_score_bruteforce(e4(), 0).score == 3);
  YoungScore s5 = young_score_bruteforce(e5(), 0);
  CHECK(s5.score == 1);
  CHECK(s5.witness == std::vector<VoterIndex>{0});
  YoungScore s3 = young_score_bruteforce(e3(), 0);
  CHECK(s3.score == 0);
  CHECK(s3.witness.empty());
  CHECK_THROWS_AS(young_score_bruteforce(generate_impartial_culture(3, 21, 0), 0), std::length_error);
}

TEST_CASE("median-window Young score matches exhaustive search on single-crossing profiles") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto s = generate_single_crossing(4, 3 + seed % 8, seed);
    for (AltIndex a = 0; a < 4; ++a) {
      CHECK(young_score_median(s.profile, s.ordering, a) == young_score_bruteforce(s.profile, a).score);
    }
  }
  CHECK_THROWS_AS(young_score_median(cycle3(), {0, 1, 2}, 0), std::invalid_argument);
}

TEST_CASE("OWA degenerations") {
  std::mt19937_64 rng(8);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Profile p = generate_impartial_culture(5, 6, seed);
    ApprovalProfile a = generate_candidate_interval(5, 6, seed).profile;
    const std::size_t k = 1 + seed % 3;
    Committee w;
    for_each_committee(5, k, [&](const Committee& c) {
      if (w.empty() || rng() % 3 == 0) w = c;
    });
    RuleSpec owa_first{OwaRule{ScoringVector::borda(5), OwaVector::first(k)}, k};
    RuleSpec cc{CcRule{ScoringVector::borda(5)}, k};
    CHECK(committee_value(owa_first, p, w) == committee_value(cc, p, w));

    RuleSpec owa_approval{OwaRule{ScoringVector({1, 0}), OwaVector::harmonic(k)}, k};
    RuleSpec pav{PavRule{OwaVector::harmonic(k)}, k};
    CHECK(committee_value(owa_approval, a.to_profile(), w) == committee_value(pav, a, w));
  }
}
