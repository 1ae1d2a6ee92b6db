#include <random>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "tuvote/structure.hpp"

using namespace tuvote;
using namespace tuvote::testing;

namespace {

std::vector<std::uint8_t> bits(const std::string& s) {
  std::vector<std::uint8_t> out;
  for (char ch : s) out.push_back(ch == '1' ? 1 : 0);
  return out;
}

BinaryMatrix random_binary(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density) {
  std::bernoulli_distribution coin(density);
  BinaryMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, coin(rng));
  }
  return m;
}

// Rows are random intervals of a random column order, so C1P holds.
BinaryMatrix random_interval_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> order(cols);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  BinaryMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t a = rng() % cols, b = rng() % cols;
    if (a > b) std::swap(a, b);
    for (std::size_t p = a; p <= b; ++p) m.set(r, order[p], true);
  }
  return m;
}

SignedMatrix random_signed(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  SignedMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, static_cast<int>(rng() % 3) - 1);
  }
  return m;
}

SignedMatrix with_ones_row(const BinaryMatrix& b) {
  BinaryMatrix copy = b;
  copy.append_row(std::vector<std::uint8_t>(b.cols(), 1));
  return SignedMatrix::from_binary(copy);
}

}  // namespace

TEST_CASE("single-peaked matrix of E1") {
  BinaryMatrix m = build_sp_matrix(e1());
  const char* expected[] = {"100", "110", "111", "010", "110", "111", "001", "011", "111"};
  REQUIRE(m.rows() == 9);
  REQUIRE(m.cols() == 3);
  for (std::size_t r = 0; r < 9; ++r) CHECK(m.row(r) == bits(expected[r]));
  CHECK(m.col_labels() == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("single-crossing matrix of E3") {
  BinaryMatrix m = build_sc_matrix(e3());
  REQUIRE(m.cols() == 3);
  auto row_of = [&](const std::string& label) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (m.row_labels()[r] == label) return m.row(r);
    }
    FAIL("missing row " << label);
    return std::vector<std::uint8_t>{};
  };
  CHECK(row_of("a>b") == bits("110"));
  CHECK(row_of("c>a") == bits("110"));
  CHECK(row_of("b>c") == bits("001"));
  CHECK(row_of("b>a") == bits("001"));
  CHECK(row_of("a>c") == bits("001"));
  CHECK(row_of("c>b") == bits("110"));
  CHECK_THROWS_AS(build_sc_matrix(parse_ranked_profile("2\na b\n1: {a,b}\n")), std::invalid_argument);
}

TEST_CASE("recognizers on the worked examples") {
  auto axis = is_single_peaked(e1());
  REQUIRE(axis);
  CHECK(*axis == Axis{0, 1, 2});

  auto ordering = is_single_crossing(e3());
  REQUIRE(ordering);
  CHECK(*ordering == VoterOrdering{0, 1, 2});

  CHECK_FALSE(is_single_peaked(cycle3()));
  CHECK_FALSE(is_single_crossing(cycle3()));

  auto ci = is_candidate_interval(e2());
  REQUIRE(ci);
  CHECK(*ci == Axis{0, 1, 2, 3});
}

TEST_CASE("example matrix has the strong consecutive ones property as given") {
  BinaryMatrix m = c1p_example_matrix();
  CHECK(m.has_strong_c1p());
  auto perm = has_c1p(m);
  REQUIRE(perm);
  CHECK(m.has_strong_c1p(*perm));
  CHECK(*perm == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("has_c1p agrees with permutation search") {
  std::mt19937_64 rng(7);
  int positives = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    BinaryMatrix m = trial % 2 ? random_binary(rng, rows, cols, 0.45) : random_interval_matrix(rng, rows, cols);
    bool expected = c1p_by_permutation(m);
    auto perm = has_c1p(m);
    CHECK(perm.has_value() == expected);
    if (perm) {
      CHECK(rows_consecutive(m, *perm));
      ++positives;
    }
  }
  CHECK(positives > 100);
}

TEST_CASE("has_c1p handles twin and zero columns") {
  BinaryMatrix m({{1, 1, 0, 1}, {0, 1, 1, 1}, {0, 0, 0, 0}});
  auto perm = has_c1p(m);
  REQUIRE(perm);
  CHECK(rows_consecutive(m, *perm));
  // Three pairwise-overlapping pairs on three columns: a triangle, no order works.
  CHECK_FALSE(has_c1p(BinaryMatrix({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})));
}

TEST_CASE("single-peaked recognition agrees with axis search") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Profile p = generate_impartial_culture(4, 1 + seed % 3, seed);
    auto axis = is_single_peaked(p);
    CHECK(axis.has_value() == single_peaked_by_search(p));
    if (axis) {
      CHECK(single_peaked_wrt(p, *axis));
      CHECK(axis_certifies_single_peaked(p, *axis));
    }
  }
}

TEST_CASE("single-peaked recognition on weak orders") {
  // b and c tied second for the first voter: {a} then {a,b,c}; axis a-b-c works.
  Profile ok = parse_ranked_profile("3\na b c\n1: a > {b,c}\n1: c > b > a\n");
  REQUIRE(is_single_peaked(ok));
  CHECK(single_peaked_wrt(ok, *is_single_peaked(ok)));
  // Tied top class.
  Profile bad = parse_ranked_profile("3\na b c\n1: {a,c} > b\n1: b > a > c\n1: b > c > a\n");
  CHECK(is_single_peaked(bad).has_value() == single_peaked_by_search(bad));
}

TEST_CASE("single-crossing recognition agrees with ordering search") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Profile p = generate_impartial_culture(3, 2 + seed % 4, seed);
    auto ordering = is_single_crossing(p);
    CHECK(ordering.has_value() == single_crossing_by_search(p));
    if (ordering) CHECK(single_crossing_wrt(p, *ordering));
  }
}

TEST_CASE("candidate-interval recognition agrees with axis search") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    ApprovalProfile p = generate_random_approval(5, 3, seed);
    auto axis = is_candidate_interval(p);
    CHECK(axis.has_value() == interval_ballots_by_search(p));
    if (axis) CHECK(axis_certifies_candidate_interval(p, *axis));
  }
}

TEST_CASE("generator outputs are recognized with verifying certificates") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto sp = generate_single_peaked(7, 12, seed);
    auto axis = is_single_peaked(sp.profile);
    REQUIRE(axis);
    CHECK(axis_certifies_single_peaked(sp.profile, *axis));
    CHECK(single_peaked_wrt(sp.profile, *axis));

    auto sc = generate_single_crossing(5, 10, seed);
    auto ordering = is_single_crossing(sc.profile);
    REQUIRE(ordering);
    CHECK(ordering_certifies_single_crossing(sc.profile, *ordering));

    auto ci = generate_candidate_interval(7, 12, seed);
    auto ci_axis = is_candidate_interval(ci.profile);
    REQUIRE(ci_axis);
    CHECK(axis_certifies_candidate_interval(ci.profile, *ci_axis));
  }
}

TEST_CASE("axis certificates are canonical") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto axis = is_single_peaked(generate_single_peaked(6, 5, seed).profile);
    REQUIRE(axis);
    Axis reversed(axis->rbegin(), axis->rend());
    CHECK(*axis <= reversed);
  }
}

TEST_CASE("certificate checkers reject wrong certificates") {
  CHECK_FALSE(axis_certifies_single_peaked(e1(), Axis{1, 0, 2}));
  CHECK(axis_certifies_single_peaked(e1(), Axis{2, 1, 0}));
  CHECK_FALSE(axis_certifies_single_peaked(e1(), Axis{0, 1}));
  CHECK_FALSE(ordering_certifies_single_crossing(e3(), VoterOrdering{0, 2, 1}));
}

TEST_CASE("determinant matches the Leibniz expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 6;
    SignedMatrix m = random_signed(rng, n, n);
    CHECK(determinant(m) == leibniz_determinant(m.to_rows()));
  }
}

TEST_CASE("odd cycle incidence matrix is not TU") {
  SignedMatrix m({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  TuResult r = is_totally_unimodular(m);
  REQUIRE(r.verdict == TuVerdict::not_tu);
  CHECK(std::abs(r.witness_det) == 2);
  CHECK(determinant(r.witness) == r.witness_det);
  CHECK(m.submatrix(r.witness_rows, r.witness_cols) == r.witness);
}

TEST_CASE("Ghouila-Houri agrees with determinant enumeration") {
  std::mt19937_64 rng(2024);
  int tu = 0, not_tu = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    SignedMatrix m = random_signed(rng, rows, cols);
    if (trial % 3 == 0) m = SignedMatrix::from_binary(random_interval_matrix(rng, rows, cols));
    bool expected = tu_by_enumeration(m);
    TuResult r = is_totally_unimodular(m);
    CHECK((r.verdict == TuVerdict::tu) == expected);
    if (r.verdict == TuVerdict::not_tu) {
      CHECK(std::abs(determinant(m.submatrix(r.witness_rows, r.witness_cols))) >= 2);
      ++not_tu;
    } else {
      ++tu;
    }
  }
  CHECK(tu > 50);
  CHECK(not_tu > 50);
}

TEST_CASE("single-peaked matrix of E1 with an all-ones row is TU") {
  SignedMatrix m = with_ones_row(build_sp_matrix(e1()));
  CHECK(is_totally_unimodular(m).verdict == TuVerdict::tu);
  CHECK(tu_by_enumeration(m));
}

TEST_CASE("consecutive ones implies TU") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    BinaryMatrix b = random_interval_matrix(rng, 1 + rng() % 8, 1 + rng() % 7);
    REQUIRE(has_c1p(b));
    CHECK(is_totally_unimodular(SignedMatrix::from_binary(b)).verdict == TuVerdict::tu);
  }
}

TEST_CASE("TU-preserving manipulations keep the verdict") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    SignedMatrix m = SignedMatrix::from_binary(random_interval_matrix(rng, 1 + rng() % 5, 1 + rng() % 5));
    REQUIRE(is_totally_unimodular(m).verdict == TuVerdict::tu);
    CHECK(is_totally_unimodular(m.transposed()).verdict == TuVerdict::tu);
    CHECK(is_totally_unimodular(m.negated()).verdict == TuVerdict::tu);
    CHECK(is_totally_unimodular(m.hconcat(SignedMatrix::identity(m.rows()))).verdict == TuVerdict::tu);
    CHECK(tu_by_enumeration(m.hconcat(SignedMatrix::identity(m.rows()))));
  }
}

TEST_CASE("reductions preserve total unimodularity both ways") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    SignedMatrix m = random_signed(rng, 1 + rng() % 5, 1 + rng() % 5);
    if (trial % 2) m = m.hconcat(SignedMatrix::identity(m.rows()));
    SignedMatrix r = tu_reduce(m);
    CHECK(r.rows() <= m.rows());
    CHECK(r.cols() <= m.cols());
    CHECK(tu_by_enumeration(r) == tu_by_enumeration(m));
  }
}

TEST_CASE("TU test gives up beyond its budget") {
  std::mt19937_64 rng(3);
  SignedMatrix m = random_signed(rng, 20, 20);
  // A tiny budget forces the verdict unless a violation turns up early.
  TuResult r = is_totally_unimodular(SignedMatrix::from_binary(random_interval_matrix(rng, 20, 20)), 4);
  CHECK(r.verdict == TuVerdict::budget_exceeded);
  CHECK(is_totally_unimodular(m, 4).verdict != TuVerdict::tu);
}

TEST_CASE("matrix text format") {
  SignedMatrix m({{1, 0, -1}, {0, 1, 1}});
  std::string text = serialize(m);
  CHECK(text == "2 3\n1 0 -1\n0 1 1\n");
  CHECK(parse_matrix(text) == m);
  CHECK_THROWS(parse_matrix("2 2\n1 0\n"));
  CHECK_THROWS(parse_matrix("1 2\n1 2\n"));
  CHECK_THROWS(to_binary(m));
  CHECK(parse_matrix("0 0\n").rows() == 0);
}
