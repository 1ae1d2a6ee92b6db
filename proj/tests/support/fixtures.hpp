#pragma once

#include <string>

#include "tuvote/model.hpp"
#include "tuvote/structure.hpp"

namespace tuvote::testing {

inline const std::string kE1 = "3\na b c\n1: a > b > c\n1: b > a > c\n1: c > b > a\n";
inline const std::string kE2 = "4\na b c d\n1: {a,b}\n1: {b,c}\n1: {c,d}\n";
inline const std::string kE3 = "3\na b c\n2: c > a > b\n1: b > a > c\n";
inline const std::string kE4 = "2\na b\n2: a > b\n1: b > a\n";
inline const std::string kE5 = "3\na b c\n1: a > b > c\n1: b > a > c\n1: b > c > a\n2: c > b > a\n";
inline const std::string kCycle3 = "3\na b c\n1: a > b > c\n1: b > c > a\n1: c > a > b\n";
// CC Borda k=2 relaxation is 35/2, integer optimum 17.
inline const std::string kGap5 =
    "5\na b c d e\n1: b > c > e > a > d\n1: b > d > c > e > a\n1: c > d > a > b > e\n1: e > a > d > b > c\n";

inline Profile e1() { return parse_ranked_profile(kE1); }
inline ApprovalProfile e2() { return parse_approval_profile(kE2); }
inline Profile e3() { return parse_ranked_profile(kE3); }
inline Profile e4() { return parse_ranked_profile(kE4); }
inline Profile e5() { return parse_ranked_profile(kE5); }
inline Profile cycle3() { return parse_ranked_profile(kCycle3); }
inline Profile gap5() { return parse_ranked_profile(kGap5); }

// 5x6 example with the strong consecutive ones property as printed.
inline BinaryMatrix c1p_example_matrix() {
  return BinaryMatrix({{0, 0, 1, 1, 1, 0},
                       {1, 1, 1, 0, 0, 0},
                       {0, 0, 0, 0, 1, 1},
                       {0, 1, 1, 1, 1, 0},
                       {0, 0, 0, 1, 1, 0}});
}

}  // namespace tuvote::testing
