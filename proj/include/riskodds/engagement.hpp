#pragma once

#include "riskodds/rational.hpp"

#include <array>
#include <vector>

namespace riskodds::engagement {

/// Shape of a single engagement: each side rolls its dice, both are sorted
/// descending, and the top `comparisons` pairs are resolved with ties going
/// to the defender.
struct DiceRule {
    int attacker_dice = 1;   // m
    int defender_dice = 1;   // n
    int attacker_sides = 6;  // a
    int defender_sides = 6;  // d
    int comparisons = 1;     // k, 1 or 2

    /// Throws unsupported_comparisons for k outside {1,2}, invalid_argument otherwise.
    void validate() const;
};

/// Exact distribution of defender losses in one engagement: probs[l] is the
/// probability the defender loses l units, l = 0..k.
struct LossDistribution {
    DiceRule rule;
    std::vector<Rat> probs;

    bool sums_to_one() const;
};

/// Exhaustive enumeration over all a^m * d^n equally likely outcomes.
/// This is the correctness oracle, limited to m <= 4, n <= 3.
LossDistribution enumerate_engagement(const DiceRule& rule);

/// P(top comparison favors the attacker) = sum over the defender's top die.
Rat prob_top_attacker_wins(int attacker_dice, int defender_dice,
                           int attacker_sides, int defender_sides);

/// Complement of prob_top_attacker_wins.
Rat prob_top_defender_wins(int attacker_dice, int defender_dice,
                           int attacker_sides, int defender_sides);

/// P(both of the top-two comparisons favor the attacker); needs m, n >= 2.
Rat prob_two_wins_attacker(int attacker_dice, int defender_dice,
                           int attacker_sides, int defender_sides);

/// P(both comparisons favor the defender); needs m, n >= 2. Separate
/// polynomial branches for a >= d and a <= d agree at a = d.
Rat prob_two_wins_defender(int attacker_dice, int defender_dice,
                           int attacker_sides, int defender_sides);

/// P(each side loses one) = 1 - two-wins-attacker - two-wins-defender.
Rat prob_split(int attacker_dice, int defender_dice,
               int attacker_sides, int defender_sides);

/// Full closed-form loss distribution for a rule (same contract as the oracle).
LossDistribution closed_form_distribution(const DiceRule& rule);

/// One row of the specialization table: dice counts, comparisons, and the
/// defender-loss count the closed polynomial evaluates.
struct SpecializationRow {
    int attacker_dice;
    int defender_dice;
    int comparisons;
    int defender_losses;
};

/// The rows covered by the closed specialization polynomials (every dice
/// pairing that occurs in a standard battle).
const std::array<SpecializationRow, 14>& specialization_rows();

/// Evaluates the closed per-row polynomial at (a, d), picking the a >= d or
/// a <= d branch; at a = d both branches coincide. Throws for unknown rows.
Rat specialization_odds(int attacker_dice, int defender_dice, int comparisons,
                        int defender_losses, int attacker_sides, int defender_sides);

/// Branch-forced variant used to check that both case polynomials agree at a = d.
enum class Branch { AttackerSidesHigh, DefenderSidesHigh };
Rat specialization_odds_branch(int attacker_dice, int defender_dice, int comparisons,
                               int defender_losses, int attacker_sides, int defender_sides,
                               Branch branch);

}  // namespace riskodds::engagement
