#include "riskodds/verify.hpp"

#include "riskodds/approx.hpp"
#include "riskodds/engagement.hpp"
#include "riskodds/reference.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace riskodds::verify {

namespace {

constexpr int kMaxMessages = 24;

class Checker {
public:
    explicit Checker(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& describe) {
        ++result_.checks;
        if (ok) return;
        ++result_.failures;
        if (static_cast<int>(result_.messages.size()) < kMaxMessages)
            result_.messages.push_back("FAIL: " + describe());
        else if (static_cast<int>(result_.messages.size()) == kMaxMessages)
            result_.messages.push_back("... further failures suppressed");
    }

    void note(std::string message) {
        result_.messages.push_back("note: " + std::move(message));
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(10);
    os << x;
    return os.str();
}

// ---------------------------------------------------------------------------
// engagement suites
// ---------------------------------------------------------------------------

SuiteResult engagement_oracle_equivalence() {
    using namespace riskodds::engagement;
    Checker c("engagement: closed forms vs enumeration oracle");
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 2; ++n)
            for (int a = 1; a <= 8; ++a)
                for (int d = 1; d <= 8; ++d)
                    for (int k = 1; k <= std::min({2, m, n}); ++k) {
                        DiceRule rule{m, n, a, d, k};
                        auto oracle = enumerate_engagement(rule);
                        auto closed = closed_form_distribution(rule);
                        c.check(oracle.sums_to_one(), [&] {
                            return "enumeration not normalized at m=" + std::to_string(m) +
                                   " n=" + std::to_string(n) + " a=" + std::to_string(a) +
                                   " d=" + std::to_string(d) + " k=" + std::to_string(k);
                        });
                        for (int l = 0; l <= k; ++l)
                            c.check(oracle.probs[l] == closed.probs[l], [&] {
                                return "closed form != oracle at m=" + std::to_string(m) +
                                       " n=" + std::to_string(n) + " a=" + std::to_string(a) +
                                       " d=" + std::to_string(d) + " k=" + std::to_string(k) +
                                       " l=" + std::to_string(l) + ": " +
                                       frac_str(closed.probs[l]) + " vs " +
                                       frac_str(oracle.probs[l]);
                            });
                    }
    return c.take();
}

SuiteResult engagement_specialization_table() {
    using namespace riskodds::engagement;
    Checker c("engagement: specialization polynomials vs closed forms");
    for (const auto& row : specialization_rows()) {
        const int m = row.attacker_dice, n = row.defender_dice;
        const int k = row.comparisons, l = row.defender_losses;
        bool row_ok = true;
        for (int a = 1; a <= 12 && row_ok; ++a)
            for (int d = 1; d <= 12 && row_ok; ++d) {
                Rat want;
                if (k == 1)
                    want = l == 1 ? prob_top_attacker_wins(m, n, a, d)
                                  : prob_top_defender_wins(m, n, a, d);
                else if (l == 2)
                    want = prob_two_wins_attacker(m, n, a, d);
                else if (l == 0)
                    want = prob_two_wins_defender(m, n, a, d);
                else
                    want = prob_split(m, n, a, d);
                Rat got = specialization_odds(m, n, k, l, a, d);
                if (got != want) {
                    row_ok = false;
                    c.note("suspected published-table erratum: row (" + std::to_string(m) +
                           "," + std::to_string(n) + "," + std::to_string(k) + "," +
                           std::to_string(l) + ") at a=" + std::to_string(a) +
                           " d=" + std::to_string(d) + " gives " + frac_str(got) +
                           ", oracle value " + frac_str(want));
                }
                c.check(got == want, [&] {
                    return "row (" + std::to_string(m) + "," + std::to_string(n) + "," +
                           std::to_string(k) + "," + std::to_string(l) + ") a=" +
                           std::to_string(a) + " d=" + std::to_string(d);
                });
            }
    }
    return c.take();
}

SuiteResult engagement_branch_agreement() {
    using namespace riskodds::engagement;
    Checker c("engagement: case branches agree at a = d");
    for (const auto& row : specialization_rows())
        for (int s = 1; s <= 12; ++s) {
            Rat high = specialization_odds_branch(row.attacker_dice, row.defender_dice,
                                                    row.comparisons, row.defender_losses, s, s,
                                                    Branch::AttackerSidesHigh);
            Rat low = specialization_odds_branch(row.attacker_dice, row.defender_dice,
                                                   row.comparisons, row.defender_losses, s, s,
                                                   Branch::DefenderSidesHigh);
            c.check(high == low, [&] {
                return "branch disagreement at a=d=" + std::to_string(s) + " for row (" +
                       std::to_string(row.attacker_dice) + "," +
                       std::to_string(row.defender_dice) + "," +
                       std::to_string(row.comparisons) + "," +
                       std::to_string(row.defender_losses) + "): " + frac_str(high) + " vs " +
                       frac_str(low);
            });
        }
    return c.take();
}

SuiteResult engagement_complements_and_degenerates() {
    using namespace riskodds::engagement;
    Checker c("engagement: complement identities and degenerate dice");
    for (int a = 1; a <= 8; ++a)
        for (int d = 1; d <= 8; ++d) {
            for (int m = 1; m <= 3; ++m)
                for (int n = 1; n <= 2; ++n) {
                    Rat sum = prob_top_attacker_wins(m, n, a, d) +
                              prob_top_defender_wins(m, n, a, d);
                    c.check(sum == 1, [&] {
                        return "k=1 complements do not sum to 1 at m=" + std::to_string(m) +
                               " n=" + std::to_string(n) + " a=" + std::to_string(a) +
                               " d=" + std::to_string(d);
                    });
                }
            for (int m = 2; m <= 3; ++m) {
                Rat sum = prob_two_wins_attacker(m, 2, a, d) + prob_split(m, 2, a, d) +
                          prob_two_wins_defender(m, 2, a, d);
                c.check(sum == 1, [&] {
                    return "k=2 outcomes do not sum to 1 at m=" + std::to_string(m) +
                           " a=" + std::to_string(a) + " d=" + std::to_string(d);
                });
            }
        }
    // One-sided attacker dice can never beat any defender die.
    for (int d = 1; d <= 8; ++d) {
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 2; ++n)
                c.check(prob_top_attacker_wins(m, n, 1, d) == 0, [&] {
                    return "a=1 should give zero attacker wins, m=" + std::to_string(m) +
                           " n=" + std::to_string(n) + " d=" + std::to_string(d);
                });
        for (int m = 2; m <= 3; ++m)
            c.check(prob_two_wins_attacker(m, 2, 1, d) == 0, [&] {
                return "a=1 should give zero double wins, m=" + std::to_string(m) +
                       " d=" + std::to_string(d);
            });
    }
    return c.take();
}

// ---------------------------------------------------------------------------
// battle suites
// ---------------------------------------------------------------------------

SuiteResult battle_k1_identity() {
    using namespace riskodds::battle;
    Checker c("battle: negative-binomial and lattice-path forms agree");
    const double float_probs[] = {0.1, 0.25, 0.417, 0.5, 0.75, 0.9};
    for (int attackers = 1; attackers <= 30; ++attackers)
        for (int defenders = 1; defenders <= 30; ++defenders)
            for (double p : float_probs) {
                double nb = vc_odds_k1_negbin(attackers, defenders, p);
                double lp = vc_odds_k1_lattice(attackers, defenders, p);
                c.check(std::fabs(nb - lp) <= 1e-12, [&] {
                    return "float forms differ by " + fmt(std::fabs(nb - lp)) + " at A=" +
                           std::to_string(attackers) + " D=" + std::to_string(defenders) +
                           " p=" + fmt(p);
                });
            }
    const Rat exact_probs[] = {Rat(1, 10), Rat(1, 4), Rat(417, 1000),
                               Rat(1, 2), Rat(3, 4), Rat(9, 10)};
    for (int attackers = 1; attackers <= 12; ++attackers)
        for (int defenders = 1; defenders <= 12; ++defenders)
            for (const Rat& p : exact_probs)
                c.check(vc_odds_k1_negbin_exact(attackers, defenders, p) ==
                            vc_odds_k1_lattice_exact(attackers, defenders, p),
                        [&] {
                            return "exact forms differ at A=" + std::to_string(attackers) +
                                   " D=" + std::to_string(defenders) + " p=" + frac_str(p);
                        });
    return c.take();
}

SuiteResult battle_k1_bounds_and_pascal() {
    using namespace riskodds::battle;
    Checker c("battle: k=1 binomial-tail bounds and Pascal split");
    const Rat probs[] = {Rat(1, 10), Rat(1, 2), Rat(9, 10)};
    for (int attackers = 1; attackers <= 12; ++attackers)
        for (int defenders = 1; defenders <= 12; ++defenders) {
            for (const Rat& p : probs) {
                Rat vc = vc_odds_k1_negbin_exact(attackers, defenders, p);
                auto [lower, upper] = vc_bounds_k1_exact(attackers, defenders, p);
                c.check(lower < vc && vc < upper, [&] {
                    return "bounds not strict at A=" + std::to_string(attackers) +
                           " D=" + std::to_string(defenders) + " p=" + frac_str(p);
                });
            }
        }
    for (int attackers = 1; attackers <= 30; ++attackers)
        for (int defenders = 1; defenders <= 30; ++defenders) {
            const int total = attackers + defenders;
            c.check(binomial(total, defenders) == binomial(total - 1, attackers - 1) +
                                                      binomial(total - 1, defenders - 1),
                    [&] {
                        return "Pascal split fails at A=" + std::to_string(attackers) +
                               " D=" + std::to_string(defenders);
                    });
        }
    return c.take();
}

SuiteResult battle_k2_bounds() {
    using namespace riskodds::battle;
    Checker c("battle: extended-battle bounds bracket exact VC");
    const auto model = LossModel::standard();
    auto strict = vc_odds_k2_table(40, 40, model, MdPolicy::Strict);
    auto lenient = vc_odds_k2_table(40, 40, model, MdPolicy::Lenient);
    for (int attackers = 1; attackers <= 40; ++attackers)
        for (int defenders = 1; defenders <= 40; ++defenders) {
            auto [lower, upper] = vc_bounds_k2(attackers, defenders, model);
            double st = strict[attackers][defenders];
            double le = lenient[attackers][defenders];
            bool ordered = lower <= st + 1e-12 && st <= le + 1e-12 && le <= upper + 1e-12;
            c.check(ordered, [&] {
                return "bracket violated at A=" + std::to_string(attackers) +
                       " D=" + std::to_string(defenders) + ": " + fmt(lower) + " " + fmt(st) +
                       " " + fmt(le) + " " + fmt(upper);
            });
        }
    for (int attackers = 1; attackers <= 10; ++attackers)
        for (int defenders = 1; defenders <= 10; ++defenders) {
            auto [lower, upper] = vc_bounds_k2_exact(attackers, defenders, model);
            Rat st = vc_odds_k2_exact(attackers, defenders, model, MdPolicy::Strict);
            Rat le = vc_odds_k2_exact(attackers, defenders, model, MdPolicy::Lenient);
            c.check(lower <= st && st <= le && le <= upper, [&] {
                return "exact bracket violated at A=" + std::to_string(attackers) +
                       " D=" + std::to_string(defenders);
            });
        }
    return c.take();
}

SuiteResult battle_small_instance_oracle() {
    using namespace riskodds::battle;
    Checker c("battle: conquer odds match brute-force recursion");
    for (int att = 2; att <= 9; ++att)
        for (int def = 1; def <= 8; ++def) {
            if (att + def > 10) continue;
            Rat dp = conquer_odds_exact(att, def);
            Rat brute = ac_brute_force(att, def);
            c.check(dp == brute, [&] {
                return "DP != brute force at A_hat=" + std::to_string(att) +
                       " D_hat=" + std::to_string(def) + ": " + frac_str(dp) + " vs " +
                       frac_str(brute);
            });
        }
    return c.take();
}

SuiteResult battle_monotonicity() {
    using namespace riskodds::battle;
    Checker c("battle: odds monotone in attacker and defender counts");
    auto ac = conquer_odds_table(41, 41);
    for (int att = 2; att <= 40; ++att)
        for (int def = 1; def <= 40; ++def) {
            c.check(ac[att + 1][def] >= ac[att][def] - 1e-12, [&] {
                return "AC not nondecreasing in attackers at (" + std::to_string(att) + "," +
                       std::to_string(def) + ")";
            });
            c.check(ac[att][def + 1] <= ac[att][def] + 1e-12, [&] {
                return "AC not nonincreasing in defenders at (" + std::to_string(att) + "," +
                       std::to_string(def) + ")";
            });
        }
    auto vc = vc_odds_k2_table(41, 41, LossModel::standard(), MdPolicy::Strict);
    for (int attackers = 1; attackers <= 40; ++attackers)
        for (int defenders = 1; defenders <= 40; ++defenders) {
            c.check(vc[attackers + 1][defenders] >= vc[attackers][defenders] - 1e-12, [&] {
                return "VC not nondecreasing in attackers at (" + std::to_string(attackers) +
                       "," + std::to_string(defenders) + ")";
            });
            c.check(vc[attackers][defenders + 1] <= vc[attackers][defenders] + 1e-12, [&] {
                return "VC not nonincreasing in defenders at (" + std::to_string(attackers) +
                       "," + std::to_string(defenders) + ")";
            });
        }
    return c.take();
}

SuiteResult battle_z_distribution() {
    using namespace riskodds::battle;
    Checker c("battle: extended-battle loss distribution");
    const auto model = LossModel::standard();
    for (int m = 1; m <= 12; ++m) {
        auto dist = distribution_of_z_exact(m, model);
        Rat total = 0;
        for (const Rat& x : dist) total += x;
        c.check(total == 1, [&] { return "Z_" + std::to_string(m) + " not normalized"; });
        c.check(static_cast<int>(dist.size()) == 2 * m + 1,
                [&] { return "Z_" + std::to_string(m) + " has wrong support"; });
    }
    // Convolution must equal the direct trinomial expansion.
    const int m = 3;
    auto dist = distribution_of_z_exact(m, model);
    std::vector<Rat> direct(2 * m + 1, Rat(0));
    for (int x = 0; x <= m; ++x)
        for (int y = 0; x + y <= m; ++y) {
            int z = m - x - y;
            Rat coeff = Rat(binomial(m, x)) * Rat(binomial(m - x, y));
            Rat term = coeff;
            for (int i = 0; i < x; ++i) term *= model.def_loses_two;
            for (int i = 0; i < y; ++i) term *= model.each_loses_one;
            for (int i = 0; i < z; ++i) term *= model.att_loses_two;
            direct[2 * x + y] += term;
        }
    for (int j = 0; j <= 2 * m; ++j)
        c.check(dist[j] == direct[j], [&] {
            return "convolution != trinomial expansion at j=" + std::to_string(j);
        });
    return c.take();
}

SuiteResult battle_vc_vs_ac_pattern() {
    using namespace riskodds::battle;
    Checker c("battle: VC thresholds sit within [AC, AC+2] (finding only)");
    const auto model = LossModel::standard();
    int scanned = 0;
    for (int def = reference::kMinDefenders; def <= reference::kMaxDefenders; ++def)
        for (int target : reference::kTargets) {
            int ac = min_attackers_ac(target / 100.0, def);
            int vc = min_attackers_vc(target / 100.0, def, model, MdPolicy::Strict);
            ++scanned;
            if (vc < ac || vc > ac + 2)
                c.note("pattern break at D_hat=" + std::to_string(def) + " target=" +
                       std::to_string(target) + "%: VC=" + std::to_string(vc) +
                       " AC=" + std::to_string(ac));
        }
    c.check(scanned == 98, [&] { return "expected 98 cells, scanned " +
                                        std::to_string(scanned); });
    return c.take();
}

// ---------------------------------------------------------------------------
// approx suites
// ---------------------------------------------------------------------------

SuiteResult approx_variance_forms() {
    using namespace riskodds::battle;
    Checker c("approx: both variance forms agree");
    std::mt19937 rng(20240901u);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        double cut1 = uniform(rng), cut2 = uniform(rng);
        if (cut1 > cut2) std::swap(cut1, cut2);
        double p = cut1, q = cut2 - cut1, r = 1 - cut2;
        double mu = 2 * p + q;
        double definitional = p * (2 - mu) * (2 - mu) + q * (1 - mu) * (1 - mu) + r * mu * mu;
        double product = p * q + 4 * p * r + q * r;
        c.check(std::fabs(definitional - product) <= 1e-12, [&] {
            return "variance forms differ by " + fmt(std::fabs(definitional - product)) +
                   " at p=" + fmt(p) + " q=" + fmt(q);
        });
    }
    // Exact agreement for a few rational models.
    const LossModel models[] = {LossModel::standard(),
                                {Rat(1, 3), Rat(1, 3), Rat(1, 3)},
                                {Rat(1), Rat(0), Rat(0)},
                                {Rat(1, 7), Rat(2, 7), Rat(4, 7)}};
    for (const auto& model : models) {
        auto params = approx::loss_moments(model);
        const Rat& mu = params.mean_loss;
        Rat definitional = model.def_loses_two * (2 - mu) * (2 - mu) +
                           model.each_loses_one * (1 - mu) * (1 - mu) +
                           model.att_loses_two * mu * mu;
        c.check(definitional == params.variance,
                [&] { return "exact variance forms differ for model p=" +
                             frac_str(model.def_loses_two); });
    }
    return c.take();
}

SuiteResult approx_interval_identities() {
    Checker c("approx: sigma-interval identities and back-substitution");
    auto params = approx::loss_moments(battle::LossModel::standard());
    const double mu = params.mu(), sigma = params.sigma();
    for (int defenders : {10, 50, 100, 250})
        for (double s : {0.5, 1.0, 2.0, 3.0}) {
            auto iv = approx::s_interval(defenders, s, params);
            double astar = approx::a_star(defenders, params);
            // Each endpoint satisfies its defining equation
            // D = (A+D) mu/2 +- s sigma sqrt((A+D)/2).
            double lhs1 = (iv.a1 + defenders) * mu / 2 +
                          s * sigma * std::sqrt((iv.a1 + defenders) / 2);
            double lhs2 = (iv.a2 + defenders) * mu / 2 -
                          s * sigma * std::sqrt((iv.a2 + defenders) / 2);
            c.check(std::fabs(lhs1 - defenders) <= 1e-9 * defenders, [&] {
                return "A1 back-substitution residual " + fmt(lhs1 - defenders) + " at D=" +
                       std::to_string(defenders) + " s=" + fmt(s);
            });
            c.check(std::fabs(lhs2 - defenders) <= 1e-9 * defenders, [&] {
                return "A2 back-substitution residual " + fmt(lhs2 - defenders) + " at D=" +
                       std::to_string(defenders) + " s=" + fmt(s);
            });
            c.check(iv.a1 < astar && astar < iv.a2, [&] {
                return "interval does not straddle A* at D=" + std::to_string(defenders) +
                       " s=" + fmt(s);
            });
            double width = 2 * s * sigma / (mu * mu) *
                           std::sqrt(4 * defenders * mu + s * sigma * s * sigma);
            c.check(std::fabs((iv.a2 - iv.a1) - width) <= 1e-9 * width, [&] {
                return "interval width mismatch at D=" + std::to_string(defenders) +
                       " s=" + fmt(s);
            });
            double mid = (iv.a1 + iv.a2) / 2;
            double expected_mid = astar + (s * sigma / mu) * (s * sigma / mu);
            c.check(std::fabs(mid - expected_mid) <= 1e-9 * std::fabs(expected_mid), [&] {
                return "interval midpoint mismatch at D=" + std::to_string(defenders) +
                       " s=" + fmt(s);
            });
        }
    // Percentage increase shrinks as the defender count grows.
    double prev = -1;
    bool shrinking = true;
    for (int defenders = 10; defenders <= 500; ++defenders) {
        auto iv = approx::s_interval(defenders, 1.0, params);
        double ratio = iv.a2 / iv.a1 - 1;
        if (prev >= 0 && ratio >= prev) shrinking = false;
        prev = ratio;
    }
    c.check(shrinking, [] { return "A2/A1 - 1 not decreasing over D = 10..500"; });
    return c.take();
}

SuiteResult approx_negbin_sign_change() {
    Checker c("approx: negative-binomial pmf differential changes sign at the threshold");
    for (int defenders = 2; defenders <= 20; ++defenders)
        for (double p : {0.3, 0.5, 0.7}) {
            auto stats = battle::negbin_pmf_stats(defenders, p);
            const double q = 1 - p;
            auto pmf = [&](int a) {
                return std::exp(std::lgamma(defenders + a) - std::lgamma(defenders) -
                                std::lgamma(a + 1) + defenders * std::log(p) +
                                a * std::log(q));
            };
            int scan_to = static_cast<int>(stats.mode_threshold) + 10;
            for (int a = 1; a <= scan_to; ++a) {
                double diff = pmf(a) - pmf(a - 1);
                bool ok = true;
                if (a < stats.mode_threshold - 1e-9) ok = diff > 0;
                else if (a > stats.mode_threshold + 1e-9) ok = diff < 0;
                else ok = std::fabs(diff) <= 1e-12 * pmf(a);
                c.check(ok, [&] {
                    return "pmf differential sign wrong at D=" + std::to_string(defenders) +
                           " p=" + fmt(p) + " A=" + std::to_string(a) +
                           " (threshold " + fmt(stats.mode_threshold) + ")";
                });
            }
        }
    return c.take();
}

SuiteResult approx_normal_quality() {
    using namespace riskodds::battle;
    Checker c("approx: normal approximation tracks exact strict VC");
    auto params = approx::loss_moments(LossModel::standard());
    auto strict = vc_odds_k2_table(200, 200, LossModel::standard(), MdPolicy::Strict);
    double observed_max = 0;
    int arg_a = 0, arg_d = 0;
    for (int attackers = 1; attackers <= 200; ++attackers)
        for (int defenders = 1; defenders <= 200; ++defenders) {
            if (attackers + defenders <= 14) continue;
            double na = approx::vc_normal_approx(attackers, defenders, params);
            double dev = std::fabs(na - strict[attackers][defenders]);
            if (dev > observed_max) {
                observed_max = dev;
                arg_a = attackers;
                arg_d = defenders;
            }
        }
    // Verified bound for this grid; the worst cell sits just past the CLT
    // admissibility floor.
    c.check(observed_max <= 0.035, [&] {
        return "normal approximation deviates " + fmt(observed_max) + " at A=" +
               std::to_string(arg_a) + " D=" + std::to_string(arg_d);
    });
    c.note("observed max |normal - strict VC| = " + fmt(observed_max) + " at A=" +
           std::to_string(arg_a) + ", D=" + std::to_string(arg_d));
    return c.take();
}

SuiteResult approx_point_values_and_tipping() {
    using namespace riskodds::battle;
    Checker c("approx: standard-model point values and tipping sequence");
    auto params = approx::loss_moments(LossModel::standard());
    c.check(params.mean_loss == Rat(8391, 7776),
            [] { return std::string("mu != 8391/7776"); });
    c.check(params.variance == Rat(4420535, 6718464),
            [] { return std::string("sigma^2 != 4420535/6718464"); });
    c.check(approx::a_star_ratio(params) == Rat(7161, 8391),
            [] { return std::string("A*/D != 7161/8391"); });
    double crit = approx::clt_min_total(params);
    c.check(std::fabs(crit - 13.97) <= 0.005,
            [&] { return "clt_min_total = " + fmt(crit) + ", expected 13.97"; });
    double prev = 0;
    for (int n = 1; n <= 10; ++n) {
        double vc = vc_odds_k2(10 * n - 3, 9 * n - 1, LossModel::standard(), MdPolicy::Strict);
        c.check(vc > prev, [&] {
            return "tipping sequence not increasing at n=" + std::to_string(n);
        });
        prev = vc;
    }
    c.check(std::fabs(prev - 0.923) <= 0.002,
            [&] { return "scaled VC endpoint " + fmt(prev) + ", expected ~0.923"; });
    return c.take();
}

}  // namespace

// ---------------------------------------------------------------------------
// independent oracles
// ---------------------------------------------------------------------------

Rat ac_brute_force(int att_actual, int def_actual, int att_sides, int def_sides) {
    if (att_actual < 2) throw std::invalid_argument("cannot attack with the last unit");
    if (def_actual < 1) throw std::invalid_argument("defender count must be >= 1");
    // Distributions come from the enumeration oracle, not the closed forms.
    std::vector<Rat> dist[4][3];
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 2; ++n)
            dist[m][n] = engagement::enumerate_engagement(
                              {m, n, att_sides, def_sides, std::min(m, n)})
                             .probs;
    std::function<Rat(int, int)> go = [&](int att, int def) -> Rat {
        if (def == 0) return 1;
        if (att <= 1) return 0;
        const int m = std::min(3, att - 1);
        const int n = std::min(2, def);
        const int k = std::min(m, n);
        Rat total = 0;
        for (int l = 0; l <= k; ++l) total += dist[m][n][l] * go(att - (k - l), def - l);
        return total;
    };
    return go(att_actual, def_actual);
}

Rat vc_k1_brute_force(int attackers, int defenders, const Rat& win_prob) {
    if (!is_probability(win_prob)) throw std::invalid_argument("win probability out of range");
    const Rat lose_prob = 1 - win_prob;
    std::function<Rat(int, int)> go = [&](int a, int d) -> Rat {
        if (d <= 0) return 1;
        if (a <= 0) return 0;
        return win_prob * go(a, d - 1) + lose_prob * go(a - 1, d);
    };
    return go(attackers, defenders);
}

Rat vc_k2_brute_force(int attackers, int defenders, const battle::LossModel& model,
                      battle::MdPolicy policy) {
    model.validate();
    const Rat md = policy == battle::MdPolicy::Lenient ? 1 : 0;
    std::function<Rat(int, int)> go = [&](int a, int d) -> Rat {
        if (d <= 0 && a <= 0) return md;
        if (d <= 0) return 1;
        if (a <= 0) return 0;
        return model.def_loses_two * go(a, d - 2) + model.each_loses_one * go(a - 1, d - 1) +
               model.att_loses_two * go(a - 2, d);
    };
    return go(attackers, defenders);
}

std::vector<SuiteResult> run(std::string_view scope) {
    std::vector<SuiteResult> results;
    const bool all = scope == "all";
    if (all || scope == "engagement") {
        results.push_back(engagement_oracle_equivalence());
        results.push_back(engagement_specialization_table());
        results.push_back(engagement_branch_agreement());
        results.push_back(engagement_complements_and_degenerates());
    }
    if (all || scope == "battle") {
        results.push_back(battle_k1_identity());
        results.push_back(battle_k1_bounds_and_pascal());
        results.push_back(battle_k2_bounds());
        results.push_back(battle_small_instance_oracle());
        results.push_back(battle_monotonicity());
        results.push_back(battle_z_distribution());
        results.push_back(battle_vc_vs_ac_pattern());
    }
    if (all || scope == "approx") {
        results.push_back(approx_variance_forms());
        results.push_back(approx_interval_identities());
        results.push_back(approx_negbin_sign_change());
        results.push_back(approx_normal_quality());
        results.push_back(approx_point_values_and_tipping());
    }
    if (results.empty())
        throw std::invalid_argument("unknown verification scope: " + std::string(scope));
    return results;
}

}  // namespace riskodds::verify
