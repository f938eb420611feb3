#pragma once

#include "riskodds/battle.hpp"
#include "riskodds/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace riskodds::verify {

/// Outcome of one verification suite: how many checks ran, how many failed,
/// and a message per failure (plus notable findings).
struct SuiteResult {
    std::string name;
    int checks = 0;
    int failures = 0;
    std::vector<std::string> messages;

    bool passed() const { return failures == 0; }
};

/// Runs the suites for a scope in {"engagement", "battle", "approx", "all"}.
std::vector<SuiteResult> run(std::string_view scope);

// ---------------------------------------------------------------------------
// Independent oracles. These deliberately avoid the implementation paths they
// are used to check: plain unmemoized recursions fed by the enumeration
// oracle, not by closed forms or the memoized engines.
// ---------------------------------------------------------------------------

/// Conquer odds by direct recursion over every engagement outcome sequence.
/// Practical for att_actual + def_actual <= 12 or so.
Rat ac_brute_force(int att_actual, int def_actual, int att_sides = 6, int def_sides = 6);

/// k=1 VC odds by recursion over win/loss sequences until absorption.
Rat vc_k1_brute_force(int attackers, int defenders, const Rat& win_prob);

/// k=2 VC odds by recursion over whole battle trees (no memo).
Rat vc_k2_brute_force(int attackers, int defenders, const battle::LossModel& model,
                      battle::MdPolicy policy);

}  // namespace riskodds::verify
