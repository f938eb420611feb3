#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riskodds/battle.hpp"
#include "riskodds/errors.hpp"
#include "riskodds/verify.hpp"

#include <cmath>

using namespace riskodds;
using namespace riskodds::battle;

namespace {
const LossModel kStandard = LossModel::standard();
}

TEST_CASE("loss model validation") {
    CHECK_NOTHROW(kStandard.validate());
    LossModel bad{Rat(1, 2), Rat(1, 2), Rat(1, 2)};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    LossModel negative{Rat(-1, 2), Rat(1), Rat(1, 2)};
    CHECK_THROWS_AS(negative.validate(), std::invalid_argument);
    auto derived = LossModel::from_rule({3, 2, 6, 6, 2});
    CHECK(derived.def_loses_two == kStandard.def_loses_two);
    CHECK(derived.each_loses_one == kStandard.each_loses_one);
    CHECK(derived.att_loses_two == kStandard.att_loses_two);
}

TEST_CASE("single-engagement battles reduce to the top-die odds") {
    CHECK(conquer_odds_exact(2, 1) == Rat(15, 36));
    CHECK(conquer_odds(2, 1) == doctest::Approx(15.0 / 36).epsilon(1e-12));
}

TEST_CASE("conquer odds reject an attacker that cannot attack") {
    CHECK_THROWS_AS(conquer_odds(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(conquer_odds_exact(30, 30), exact_mode_unavailable);
}

TEST_CASE("conquer odds around the 50% reference cell") {
    CHECK(conquer_odds(4, 2) >= 0.5);
    CHECK(conquer_odds(3, 2) < 0.5);
}

TEST_CASE("more attackers help against a single defender") {
    CHECK(conquer_odds(10, 1) > conquer_odds(3, 1));
}

TEST_CASE("dynamic program matches the unmemoized brute-force recursion") {
    for (int att = 2; att <= 8; ++att)
        for (int def = 1; def <= 8; ++def) {
            if (att + def > 10) continue;
            CHECK(conquer_odds_exact(att, def) == verify::ac_brute_force(att, def));
        }
}

TEST_CASE("negative-binomial cumulative form") {
    for (double p : {0.0, 0.3, 1.0})
        CHECK(vc_odds_k1_negbin(1, 1, p) == doctest::Approx(p).epsilon(1e-15));
    // A=5, D=3, p=1/2: frozen from recursion over all win/loss sequences.
    CHECK(vc_odds_k1_negbin_exact(5, 3, Rat(1, 2)) == Rat(99, 128));
    CHECK(verify::vc_k1_brute_force(5, 3, Rat(1, 2)) == Rat(99, 128));
    // A=2, D=2, p=15/36: frozen from enumerating battles of up to 3 engagements.
    CHECK(vc_odds_k1_negbin_exact(2, 2, Rat(15, 36)) == Rat(325, 864));
    CHECK(verify::vc_k1_brute_force(2, 2, Rat(15, 36)) == Rat(325, 864));
}

TEST_CASE("lattice-path form agrees with the cumulative form") {
    CHECK(vc_odds_k1_lattice(1, 1, 0.42) == doctest::Approx(0.42).epsilon(1e-15));
    CHECK(vc_odds_k1_lattice(10, 10, 1.0) == 1.0);
    CHECK(vc_odds_k1_lattice_exact(3, 4, Rat(6, 10)) ==
          vc_odds_k1_negbin_exact(3, 4, Rat(6, 10)));
    for (int attackers = 1; attackers <= 15; ++attackers)
        for (int defenders = 1; defenders <= 15; ++defenders) {
            double nb = vc_odds_k1_negbin(attackers, defenders, 0.417);
            double lp = vc_odds_k1_lattice(attackers, defenders, 0.417);
            CHECK(std::fabs(nb - lp) <= 1e-12);
        }
}

TEST_CASE("binomial-tail bounds strictly bracket the k=1 odds") {
    for (int attackers = 1; attackers <= 10; ++attackers)
        for (int defenders = 1; defenders <= 10; ++defenders) {
            Rat vc = vc_odds_k1_negbin_exact(attackers, defenders, Rat(417, 1000));
            auto [lower, upper] = vc_bounds_k1_exact(attackers, defenders, Rat(417, 1000));
            CHECK(lower < vc);
            CHECK(vc < upper);
        }
}

TEST_CASE("negative-binomial pmf statistics") {
    auto stats = negbin_pmf_stats(1, 0.5);
    CHECK(stats.mean == doctest::Approx(1.0));
    CHECK(stats.sd == doctest::Approx(std::sqrt(2.0)));
    CHECK(stats.mode_threshold == doctest::Approx(0.0));
    stats = negbin_pmf_stats(10, 15.0 / 36.0);
    CHECK(stats.mean == doctest::Approx(14.0));
    CHECK(stats.mode_threshold == doctest::Approx(12.6));
    CHECK_THROWS_AS(negbin_pmf_stats(10, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(negbin_pmf_stats(10, 1.0), std::invalid_argument);
}

TEST_CASE("one-engagement virtual battles") {
    const double p = to_double(kStandard.def_loses_two);
    const double q = to_double(kStandard.each_loses_one);
    CHECK(vc_odds_k2(1, 1, kStandard, MdPolicy::Strict) == doctest::Approx(p).epsilon(1e-15));
    CHECK(vc_odds_k2(1, 1, kStandard, MdPolicy::Lenient) ==
          doctest::Approx(p + q).epsilon(1e-15));
}

TEST_CASE("headline virtual-conquer odds") {
    CHECK(vc_odds_k2(7, 8, kStandard, MdPolicy::Strict) ==
          doctest::Approx(0.5135568923887733).epsilon(1e-12));
    CHECK(vc_odds_k2(97, 89, kStandard, MdPolicy::Strict) ==
          doctest::Approx(0.9232889).epsilon(1e-6));
    // Odd totals cannot end in mutual destruction.
    CHECK(vc_odds_k2_exact(7, 8, kStandard, MdPolicy::Strict) ==
          vc_odds_k2_exact(7, 8, kStandard, MdPolicy::Lenient));
}

TEST_CASE("first-passage recursion matches whole-tree enumeration") {
    for (int attackers = 1; attackers <= 4; ++attackers)
        for (int defenders = 1; defenders <= 4; ++defenders)
            for (auto policy : {MdPolicy::Strict, MdPolicy::Lenient})
                CHECK(vc_odds_k2_exact(attackers, defenders, kStandard, policy) ==
                      verify::vc_k2_brute_force(attackers, defenders, kStandard, policy));
}

TEST_CASE("extended-battle bounds bracket the exact odds") {
    auto [lower, upper] = vc_bounds_k2_exact(2, 2, kStandard);
    Rat strict = vc_odds_k2_exact(2, 2, kStandard, MdPolicy::Strict);
    Rat lenient = vc_odds_k2_exact(2, 2, kStandard, MdPolicy::Lenient);
    CHECK(lower <= strict);
    CHECK(strict <= lenient);
    CHECK(lenient <= upper);

    LossModel sure{Rat(1), Rat(0), Rat(0)};
    auto certain = vc_bounds_k2_exact(1, 1, sure);
    CHECK(certain.first == 1);
    CHECK(certain.second == 1);

    auto strict_table = vc_odds_k2_table(20, 20, kStandard, MdPolicy::Strict);
    auto lenient_table = vc_odds_k2_table(20, 20, kStandard, MdPolicy::Lenient);
    for (int attackers = 1; attackers <= 20; ++attackers)
        for (int defenders = 1; defenders <= 20; ++defenders) {
            auto [lo, up] = vc_bounds_k2(attackers, defenders, kStandard);
            CHECK(lo <= strict_table[attackers][defenders] + 1e-12);
            CHECK(strict_table[attackers][defenders] <=
                  lenient_table[attackers][defenders] + 1e-12);
            CHECK(lenient_table[attackers][defenders] <= up + 1e-12);
        }
}

TEST_CASE("virtual odds are monotone in both unit counts") {
    auto table = vc_odds_k2_table(25, 25, kStandard, MdPolicy::Strict);
    for (int attackers = 1; attackers <= 24; ++attackers)
        for (int defenders = 1; defenders <= 24; ++defenders) {
            CHECK(table[attackers + 1][defenders] >= table[attackers][defenders] - 1e-12);
            CHECK(table[attackers][defenders + 1] <= table[attackers][defenders] + 1e-12);
        }
}

TEST_CASE("distribution of defender losses over M engagements") {
    auto one = distribution_of_z_exact(1, kStandard);
    CHECK(one.size() == 3);
    CHECK(one[0] == Rat(2275, 7776));
    CHECK(one[1] == Rat(2611, 7776));
    CHECK(one[2] == Rat(2890, 7776));

    LossModel sure{Rat(1), Rat(0), Rat(0)};
    auto degenerate = distribution_of_z_exact(2, sure);
    CHECK(degenerate[4] == 1);
    for (int j = 0; j < 4; ++j) CHECK(degenerate[j] == 0);

    for (int m = 1; m <= 8; ++m) {
        auto dist = distribution_of_z_exact(m, kStandard);
        Rat total = 0;
        for (const Rat& x : dist) total += x;
        CHECK(total == 1);
    }
    CHECK_THROWS_AS(distribution_of_z(0, kStandard), std::invalid_argument);
}

TEST_CASE("the 50% crossing of the loss-tail lands near the attacker threshold") {
    // For growing M the mass at or above D crosses one half when the implied
    // attacker count 2M - D is within one unit of (7161/8391) D.
    for (int defenders : {10, 20}) {
        double target = 7161.0 / 8391.0 * defenders;
        int crossing = 0;
        double prev = 0;
        for (int m = 1; m <= 40 && crossing == 0; ++m) {
            auto dist = distribution_of_z(m, kStandard);
            double at_least = 0;
            for (size_t j = defenders; j < dist.size(); ++j) at_least += dist[j];
            if (prev < 0.5 && at_least >= 0.5) crossing = m;
            prev = at_least;
        }
        REQUIRE(crossing > 0);
        CHECK(std::fabs(2 * crossing - defenders - target) <= 1.0);
    }
}

TEST_CASE("threshold searches") {
    CHECK(min_attackers_ac(0.5, 2) == 4);
    CHECK(min_attackers_ac(0.5, 6) == 7);
    CHECK(min_attackers_ac(0.2, 2) == 3);
    CHECK(min_attackers_vc(0.8, 15, kStandard, MdPolicy::Strict) == 20);
    // Nondecreasing in the target and in the defender count.
    int prev = 0;
    for (double target : {0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8}) {
        int now = min_attackers_ac(target, 5);
        CHECK(now >= prev);
        prev = now;
    }
    prev = 0;
    for (int def = 1; def <= 12; ++def) {
        int now = min_attackers_vc(0.5, def, kStandard, MdPolicy::Strict);
        CHECK(now >= prev);
        prev = now;
    }
    CHECK_THROWS_AS(min_attackers_ac(0.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(min_attackers_ac(1.0, 5), std::invalid_argument);
}

TEST_CASE("virtual unit conversion") {
    BattleUnits units{10, 9};
    CHECK(units.att_virtual() == 7);
    CHECK(units.def_virtual() == 8);
    BattleUnits small{2, 1};
    CHECK(small.att_virtual() == -1);
    CHECK(small.def_virtual() == 0);
}
