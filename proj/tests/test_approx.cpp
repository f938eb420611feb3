#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riskodds/approx.hpp"

#include <cmath>

using namespace riskodds;
using namespace riskodds::approx;

namespace {
const battle::LossModel kStandard = battle::LossModel::standard();
const battle::LossModel kUniform{Rat(1, 3), Rat(1, 3), Rat(1, 3)};
const battle::LossModel kSure{Rat(1), Rat(0), Rat(0)};
}

TEST_CASE("loss moments of the standard model are exact") {
    auto params = loss_moments(kStandard);
    CHECK(params.mean_loss == Rat(8391, 7776));
    CHECK(params.variance == Rat(4420535, 6718464));
}

TEST_CASE("loss moments of degenerate and uniform models") {
    auto sure = loss_moments(kSure);
    CHECK(sure.mean_loss == 2);
    CHECK(sure.variance == 0);
    auto uniform = loss_moments(kUniform);
    CHECK(uniform.mean_loss == 1);
    CHECK(uniform.variance == Rat(2, 3));
}

TEST_CASE("attacker threshold ratio") {
    auto params = loss_moments(kStandard);
    CHECK(a_star_ratio(params) == Rat(7161, 8391));
    CHECK(a_star(100, params) == doctest::Approx(7161.0 / 8391.0 * 100).epsilon(1e-12));
    auto uniform = loss_moments(kUniform);
    CHECK(a_star(17, uniform) == doctest::Approx(17.0).epsilon(1e-12));
}

TEST_CASE("sigma interval straddles the threshold and collapses as s -> 0") {
    auto params = loss_moments(kStandard);
    auto iv = s_interval(50, 1.0, params);
    double astar = a_star(50, params);
    CHECK(iv.a1 < astar);
    CHECK(astar < iv.a2);
    auto tight = s_interval(50, 1e-9, params);
    CHECK(tight.a1 == doctest::Approx(astar).epsilon(1e-6));
    CHECK(tight.a2 == doctest::Approx(astar).epsilon(1e-6));
    CHECK_THROWS_AS(s_interval(50, 0.0, params), std::invalid_argument);
    CHECK_THROWS_AS(s_interval(0, 1.0, params), std::invalid_argument);
}

TEST_CASE("sigma interval endpoints satisfy their defining equations") {
    auto params = loss_moments(kStandard);
    const double mu = params.mu(), sigma = params.sigma();
    for (int defenders : {10, 50, 100})
        for (double s : {1.0, 2.0}) {
            auto iv = s_interval(defenders, s, params);
            double above = (iv.a1 + defenders) * mu / 2 +
                           s * sigma * std::sqrt((iv.a1 + defenders) / 2);
            double below = (iv.a2 + defenders) * mu / 2 -
                           s * sigma * std::sqrt((iv.a2 + defenders) / 2);
            CHECK(std::fabs(above - defenders) <= 1e-9 * defenders);
            CHECK(std::fabs(below - defenders) <= 1e-9 * defenders);
            // Closed width form and midpoint symmetry.
            double width = 2 * s * sigma / (mu * mu) *
                           std::sqrt(4 * defenders * mu + s * sigma * s * sigma);
            CHECK(iv.a2 - iv.a1 == doctest::Approx(width).epsilon(1e-9));
            double mid = a_star(defenders, params) + std::pow(s * sigma / mu, 2);
            CHECK((iv.a1 + iv.a2) / 2 == doctest::Approx(mid).epsilon(1e-9));
        }
}

TEST_CASE("normal-approximation size criterion") {
    auto params = loss_moments(kStandard);
    double crit = clt_min_total(params);
    CHECK(crit == doctest::Approx(13.97).epsilon(0.0005));
    CHECK(18 * params.sigma2() / (params.mu() * params.mu()) ==
          doctest::Approx(10.17).epsilon(0.0005));
    // Uniform model: mu = 1, sigma^2 = 2/3, and both parts evaluate to 12.
    CHECK(clt_min_total(loss_moments(kUniform)) == doctest::Approx(12.0).epsilon(1e-12));
    // A deterministic split step has sigma = 0 and needs no size slack at all.
    battle::LossModel always_split{Rat(0), Rat(1), Rat(0)};
    CHECK(clt_min_total(loss_moments(always_split)) == 0.0);
    // Deterministic sweeps (mu = 2 or mu = 0) fall outside the criterion.
    CHECK_THROWS_AS(clt_min_total(loss_moments(kSure)), std::invalid_argument);
}

TEST_CASE("normal approximation of the virtual odds") {
    auto params = loss_moments(kStandard);
    CHECK(vc_normal_approx(97, 89, params) == doctest::Approx(0.923).epsilon(0.005));
    double strict = battle::vc_odds_k2(7, 8, kStandard, battle::MdPolicy::Strict);
    CHECK(std::fabs(vc_normal_approx(7, 8, params) - strict) <= 0.03);
    // With a symmetric model the mean sits exactly on D, so the tail is 1/2.
    auto uniform = loss_moments(kUniform);
    CHECK(vc_normal_approx(20, 20, uniform) == doctest::Approx(0.5).epsilon(1e-12));
    // Degenerate sigma collapses to a step around the mean.
    auto sure = loss_moments(kSure);
    CHECK(vc_normal_approx(5, 5, sure) == 1.0);  // mean 10 > D = 5
    battle::LossModel never{Rat(0), Rat(0), Rat(1)};
    CHECK(vc_normal_approx(5, 5, loss_moments(never)) == 0.0);  // mean 0 < D = 5
}

TEST_CASE("the 86%+2 rule") {
    CHECK(rule_86_plus_2(1) == doctest::Approx(3.0));
    CHECK(rule_86_plus_2(91) == doctest::Approx(7161.0 / 8391.0 * 90 + 3).epsilon(1e-12));
    CHECK(rule_86_plus_2(91) == doctest::Approx(79.807).epsilon(0.001));
    double nine = rule_86_plus_2(9);
    CHECK(nine == doctest::Approx(9.827).epsilon(0.001));
    CHECK(std::ceil(nine) == 10);  // ten attackers are just past the 50% threshold
    CHECK_THROWS_AS(rule_86_plus_2(0), std::invalid_argument);
}

TEST_CASE("chain-of-territories rule") {
    CHECK(chain_rule(10, 1) == doctest::Approx(0.86 * 8 + 4).epsilon(1e-12));
    CHECK(chain_rule(4, 3) == doctest::Approx(6.0).epsilon(1e-12));  // D = T + 1
    CHECK(chain_rule(20, 3) == doctest::Approx(19.76).epsilon(1e-12));
    CHECK(chain_rule(20, 3) < 20);  // fewer total units can still be favored
    CHECK_THROWS_AS(chain_rule(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(chain_rule(2, 0), std::invalid_argument);
}

TEST_CASE("threshold report ties the pieces together") {
    auto params = loss_moments(kStandard);
    auto report = threshold_report(50, 1.0, params);
    CHECK(report.interval_width == doctest::Approx(report.a2 - report.a1));
    CHECK(report.percent_increase == doctest::Approx(report.a2 / report.a1 - 1));
    CHECK(report.clt_min_total == doctest::Approx(clt_min_total(params)));
    // The relative interval shrinks for deeper defense.
    auto far = threshold_report(500, 1.0, params);
    CHECK(far.percent_increase < report.percent_increase);
}

TEST_CASE("variance forms agree on random models") {
    // Deterministic scan over a simplex grid rather than RNG noise.
    for (int i = 1; i < 20; ++i)
        for (int j = 1; i + j < 20; ++j) {
            battle::LossModel model{Rat(i, 20), Rat(j, 20), Rat(20 - i - j, 20)};
            auto params = loss_moments(model);
            const Rat& mu = params.mean_loss;
            Rat definitional = model.def_loses_two * (2 - mu) * (2 - mu) +
                               model.each_loses_one * (1 - mu) * (1 - mu) +
                               model.att_loses_two * mu * mu;
            CHECK(definitional == params.variance);
        }
}
