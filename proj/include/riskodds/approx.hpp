#pragma once

#include "riskodds/battle.hpp"
#include "riskodds/rational.hpp"

namespace riskodds::approx {

/// Per-engagement loss moments, kept exact: mu = 2p + q, sigma2 = pq + 4pr + qr.
struct ApproxParams {
    Rat mean_loss;  // mu, expected defender losses per engagement
    Rat variance;   // sigma^2
    battle::LossModel model;

    double mu() const { return to_double(mean_loss); }
    double sigma2() const { return to_double(variance); }
    double sigma() const;
};

ApproxParams loss_moments(const battle::LossModel& model);

/// Attacker threshold where expected defender losses over the extended battle
/// hit D: A* = (2 - mu)/mu * D.
double a_star(int defenders, const ApproxParams& params);

/// The exact ratio A*/D = (2 - mu)/mu.
Rat a_star_ratio(const ApproxParams& params);

/// Attacker counts where D sits s standard deviations above (A1) or below
/// (A2) the expected defender losses.
struct SigmaInterval {
    double a1;
    double a2;
};

SigmaInterval s_interval(int defenders, double s, const ApproxParams& params);

/// Minimum A+D sanctioning the normal approximation:
/// max{18 sigma^2/mu^2, 9 sigma^2 / (2 (1 - mu/2)^2)}.
double clt_min_total(const ApproxParams& params);

/// Derived threshold summary for one defender count.
struct ThresholdReport {
    double a_star = 0;
    double a1 = 0;
    double a2 = 0;
    double s = 0;
    double interval_width = 0;    // A2 - A1
    double percent_increase = 0;  // A2/A1 - 1
    double clt_min_total = 0;
};

ThresholdReport threshold_report(int defenders, double s, const ApproxParams& params);

/// Pr(Z > D) for Z normal with mean (A+D) mu / 2 and sd sqrt((A+D)/2) sigma,
/// via erfc. Degenerate sigma = 0 falls back to a 0 / 0.5 / 1 step on the mean.
double vc_normal_approx(int attackers, int defenders, const ApproxParams& params);

/// The 86%+2 rule: attackers needed for a >50% virtual conquest of
/// def_actual defenders, A_hat* = (7161/8391)(D_hat - 1) + 3.
double rule_86_plus_2(int def_actual);

/// Chain-of-territories variant: A_hat* = 0.86 (D_hat - T - 1) + 3 + T for
/// def_total defenders spread over `territories` connected territories.
double chain_rule(int def_total, int territories);

}  // namespace riskodds::approx
