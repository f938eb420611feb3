#include "riskodds/approx.hpp"

#include <cmath>
#include <stdexcept>

namespace riskodds::approx {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

constexpr double kSqrt2 = 1.4142135623730951;

}  // namespace

double ApproxParams::sigma() const { return std::sqrt(sigma2()); }

ApproxParams loss_moments(const battle::LossModel& model) {
    model.validate();
    const Rat& p = model.def_loses_two;
    const Rat& q = model.each_loses_one;
    const Rat& r = model.att_loses_two;
    return {2 * p + q, p * q + 4 * p * r + q * r, model};
}

double a_star(int defenders, const ApproxParams& params) {
    require(defenders >= 1, "defender count must be >= 1");
    require(params.mean_loss > 0, "mean loss per engagement must be positive");
    return to_double(a_star_ratio(params)) * defenders;
}

Rat a_star_ratio(const ApproxParams& params) {
    require(params.mean_loss > 0, "mean loss per engagement must be positive");
    return (2 - params.mean_loss) / params.mean_loss;
}

SigmaInterval s_interval(int defenders, double s, const ApproxParams& params) {
    require(defenders >= 1, "defender count must be >= 1");
    require(s > 0.0, "sigma multiplier must be positive");
    require(params.mean_loss > 0, "mean loss per engagement must be positive");
    const double mu = params.mu();
    const double ssig = s * params.sigma();
    const double astar = a_star(defenders, params);
    const double root = std::sqrt(4 * defenders * mu + ssig * ssig);
    return {astar + ssig / (mu * mu) * (ssig - root),
            astar + ssig / (mu * mu) * (ssig + root)};
}

double clt_min_total(const ApproxParams& params) {
    require(params.mean_loss > 0 && params.mean_loss < 2,
            "normal-approximation criterion needs 0 < mu < 2");
    const double mu = params.mu();
    const double s2 = params.sigma2();
    const double half_gap = 1 - mu / 2;
    return std::max(18 * s2 / (mu * mu), 9 * s2 / (2 * half_gap * half_gap));
}

ThresholdReport threshold_report(int defenders, double s, const ApproxParams& params) {
    auto iv = s_interval(defenders, s, params);
    ThresholdReport report;
    report.a_star = a_star(defenders, params);
    report.a1 = iv.a1;
    report.a2 = iv.a2;
    report.s = s;
    report.interval_width = iv.a2 - iv.a1;
    report.percent_increase = iv.a2 / iv.a1 - 1;
    report.clt_min_total = clt_min_total(params);
    return report;
}

double vc_normal_approx(int attackers, int defenders, const ApproxParams& params) {
    require(attackers >= 1, "attacker count must be >= 1");
    require(defenders >= 1, "defender count must be >= 1");
    const double mean = (attackers + defenders) * params.mu() / 2;
    const double sd = std::sqrt((attackers + defenders) / 2.0) * params.sigma();
    if (sd == 0.0) {
        // Degenerate model: the tail collapses to a step at the mean.
        if (defenders < mean) return 1.0;
        if (defenders > mean) return 0.0;
        return 0.5;
    }
    return 0.5 * std::erfc((defenders - mean) / (sd * kSqrt2));
}

double rule_86_plus_2(int def_actual) {
    require(def_actual >= 1, "defender count must be >= 1");
    return 7161.0 / 8391.0 * (def_actual - 1) + 3;
}

double chain_rule(int def_total, int territories) {
    require(territories >= 1, "territory count must be >= 1");
    require(def_total >= territories, "need at least one defender per territory");
    return 0.86 * (def_total - territories - 1) + 3 + territories;
}

}  // namespace riskodds::approx
