#pragma once

#include "riskodds/engagement.hpp"
#include "riskodds/rational.hpp"

#include <utility>
#include <vector>

namespace riskodds::battle {

/// Unit bookkeeping for one battle. Virtual units count how many units a side
/// can lose before it is forced below max-dice capability: A = A_hat - 3,
/// D = D_hat - 1. Virtual counts may be non-positive.
struct BattleUnits {
    int att_actual = 0;  // units in the attacking territory (>= 2 to attack)
    int def_actual = 0;  // defending units (>= 1)

    int att_virtual() const { return att_actual - 3; }
    int def_virtual() const { return def_actual - 1; }
};

/// Per-engagement loss probabilities for the two-comparison engagement:
/// defender loses two / each side loses one / attacker loses two.
struct LossModel {
    Rat def_loses_two;   // p
    Rat each_loses_one;  // q
    Rat att_loses_two;   // r

    /// Throws unless the three probabilities are in [0,1] and sum to exactly 1.
    void validate() const;

    /// The six-sided three-vs-two model: 2890/7776, 2611/7776, 2275/7776.
    static LossModel standard();

    /// Model derived from closed-form engagement odds for any k=2 dice rule.
    static LossModel from_rule(const engagement::DiceRule& rule);
};

/// Whether mutual destruction (both sides hit their loss limit on the same
/// engagement) counts as an attacker loss (Strict) or win (Lenient).
enum class MdPolicy { Strict, Lenient };

/// Full odds report for one battle query (float regime).
struct OddsReport {
    double ac_exact = 0;
    double vc_strict = 0;
    double vc_lenient = 0;
    double vc_lower_bound = 0;
    double vc_upper_bound = 0;
    double vc_normal = 0;
    bool clt_ok = false;
};

// ---------------------------------------------------------------------------
// Exact conquer odds (AC): first-passage dynamic program over actual units.
// Attacker rolls min(3, A_hat-1) dice, defender min(2, D_hat); k is the min of
// the two; absorb at D_hat = 0 (win) and A_hat = 1 (cannot attack).
// ---------------------------------------------------------------------------

double conquer_odds(int att_actual, int def_actual,
                    int att_sides = 6, int def_sides = 6);

/// Rational-mode AC, available for att_actual + def_actual <= kExactStateLimit.
Rat conquer_odds_exact(int att_actual, int def_actual,
                       int att_sides = 6, int def_sides = 6);

/// Whole DP grid: ac[a][d] for a = 0..max_att, d = 0..max_def.
std::vector<std::vector<double>> conquer_odds_table(int max_att, int max_def,
                                                    int att_sides = 6, int def_sides = 6);

inline constexpr int kExactStateLimit = 40;

// ---------------------------------------------------------------------------
// Virtual-conquer odds, one army at stake per engagement (k = 1).
// ---------------------------------------------------------------------------

/// Negative-binomial cumulative form: p^D * sum_{k=0}^{A-1} C(D+k-1, D-1) q^k.
double vc_odds_k1_negbin(int attackers, int defenders, double win_prob);
Rat vc_odds_k1_negbin_exact(int attackers, int defenders, const Rat& win_prob);

/// Lattice-path form: C(A+D-1, A-1) p^D q^A + sum_{k=0}^{A-1} C(A+D, k) p^{A+D-k} q^k.
double vc_odds_k1_lattice(int attackers, int defenders, double win_prob);
Rat vc_odds_k1_lattice_exact(int attackers, int defenders, const Rat& win_prob);

/// Strict binomial-tail bounds on the k=1 VC odds (lower excludes, upper
/// includes the h = A term).
std::pair<double, double> vc_bounds_k1(int attackers, int defenders, double win_prob);
std::pair<Rat, Rat> vc_bounds_k1_exact(int attackers, int defenders, const Rat& win_prob);

struct NegBinStats {
    double mean;            // qD/p
    double sd;              // sqrt(qD)/p
    double mode_threshold;  // (D-1)q/p, where the pmf differential changes sign
};

/// Moments and mode threshold of the negative-binomial pmf over attacker losses.
NegBinStats negbin_pmf_stats(int defenders, double win_prob);

// ---------------------------------------------------------------------------
// Virtual-conquer odds, two armies at stake per engagement (k = 2):
// first-passage recursion over i.i.d. steps losing (2,0), (1,1), (0,2) units
// with probabilities p, q, r.
// ---------------------------------------------------------------------------

double vc_odds_k2(int attackers, int defenders, const LossModel& model, MdPolicy policy);
Rat vc_odds_k2_exact(int attackers, int defenders, const LossModel& model, MdPolicy policy);

/// Whole grid: vc[a][d] for a = 0..max_att, d = 0..max_def (boundary rows use
/// the absorption values; MD cell (0,0) gets the policy value).
std::vector<std::vector<double>> vc_odds_k2_table(int max_att, int max_def,
                                                  const LossModel& model, MdPolicy policy);

/// Extended-battle bounds: with M = ceil((A+D-1)/2) engagements,
/// returns (Pr(Z_M > D), Pr(Z_M >= D)).
std::pair<double, double> vc_bounds_k2(int attackers, int defenders, const LossModel& model);
std::pair<Rat, Rat> vc_bounds_k2_exact(int attackers, int defenders, const LossModel& model);

/// Distribution of Z_M, the defender losses over M engagements: entry j is
/// Pr(Z_M = j), j = 0..2M. Exact trinomial convolution.
std::vector<double> distribution_of_z(int engagements, const LossModel& model);
std::vector<Rat> distribution_of_z_exact(int engagements, const LossModel& model);

// ---------------------------------------------------------------------------
// Threshold searches (monotone in the attacker count).
// ---------------------------------------------------------------------------

/// Smallest A_hat with conquer odds >= target (target in (0,1)).
int min_attackers_ac(double target, int def_actual, int att_sides = 6, int def_sides = 6);

/// Smallest A_hat whose converted virtual battle has VC odds >= target.
int min_attackers_vc(double target, int def_actual, const LossModel& model, MdPolicy policy);

}  // namespace riskodds::battle
