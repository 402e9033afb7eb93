#ifndef DELP_TEST_FIXTURES_HPP
#define DELP_TEST_FIXTURES_HPP

#include <string>

#include "delp/setting.hpp"

namespace fixtures {

// Four defeasible facts feeding two clashing strict rules; the classic
// undercutting-free rebuttal scenario with one conflict and four ways to
// resolve it.
inline const char* kDiamondProgram =
    "a -< .\n"
    "b -< .\n"
    "c -< .\n"
    "d -< .\n"
    "h <- a, b.\n"
    "-h <- c, d.\n";

// Two directly contradictory defeasible facts.
inline const char* kCoinProgram =
    "a -< .\n"
    "-a -< .\n";

inline delp::Setting diamond_full() {
    return delp::Setting::build_full(delp::parse_program(kDiamondProgram));
}

inline delp::Setting coin_full() {
    return delp::Setting::build_full(delp::parse_program(kCoinProgram));
}

inline delp::Literal lit(const std::string& text) { return delp::parse_literal(text); }

}  // namespace fixtures

#endif
