#include "riskodds/battle.hpp"

#include "riskodds/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace riskodds::battle {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

Rat rat_pow(const Rat& base, int exp) {
    Rat result = 1;
    Rat b = base;
    int e = exp;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

/// Nonnegative terms, summed smallest-first.
double sum_ascending(std::vector<double> terms) {
    std::sort(terms.begin(), terms.end());
    double total = 0;
    for (double t : terms) total += t;
    return total;
}

/// log C(n, k) via lgamma.
double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

void validate_virtual_pair(int attackers, int defenders) {
    require(attackers >= 1, "attacker count must be >= 1");
    require(defenders >= 1, "defender count must be >= 1");
}

void validate_win_prob(double p) {
    require(p >= 0.0 && p <= 1.0, "win probability must lie in [0, 1]");
}

}  // namespace

void LossModel::validate() const {
    if (!is_probability(def_loses_two) || !is_probability(each_loses_one) ||
        !is_probability(att_loses_two))
        throw std::invalid_argument("loss model entries must lie in [0, 1]");
    if (def_loses_two + each_loses_one + att_loses_two != 1)
        throw std::invalid_argument("loss model must sum to exactly 1");
}

LossModel LossModel::standard() {
    return {Rat(2890, 7776), Rat(2611, 7776), Rat(2275, 7776)};
}

LossModel LossModel::from_rule(const engagement::DiceRule& rule) {
    rule.validate();
    require(rule.comparisons == 2, "loss model needs a two-comparison rule");
    auto dist = engagement::closed_form_distribution(rule);
    return {dist.probs[2], dist.probs[1], dist.probs[0]};
}

// ---------------------------------------------------------------------------
// Conquer odds (AC)
// ---------------------------------------------------------------------------

namespace {

/// Loss distributions for every dice pairing a battle can reach, indexed
/// [m][n]; k = min(m, n), entry l = P(defender loses l).
template <typename Num>
struct EngagementCache {
    std::vector<Num> dist[4][3];

    EngagementCache(int att_sides, int def_sides) {
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 2; ++n) {
                int k = std::min(m, n);
                auto d = engagement::closed_form_distribution(
                    {m, n, att_sides, def_sides, k});
                auto& out = dist[m][n];
                out.reserve(d.probs.size());
                for (const Rat& p : d.probs) {
                    if constexpr (std::is_same_v<Num, double>)
                        out.push_back(to_double(p));
                    else
                        out.push_back(p);
                }
            }
    }
};

template <typename Num>
std::vector<std::vector<Num>> ac_table_impl(int max_att, int max_def,
                                            int att_sides, int def_sides) {
    EngagementCache<Num> cache(att_sides, def_sides);
    std::vector<std::vector<Num>> f(max_att + 1, std::vector<Num>(max_def + 1, Num(0)));
    for (int att = 0; att <= max_att; ++att) f[att][0] = 1;  // no defenders left
    for (int att = 2; att <= max_att; ++att) {
        for (int def = 1; def <= max_def; ++def) {
            const int m = std::min(3, att - 1);
            const int n = std::min(2, def);
            const int k = std::min(m, n);
            const auto& dist = cache.dist[m][n];
            Num total = 0;
            for (int l = 0; l <= k; ++l)
                total += dist[l] * f[att - (k - l)][def - l];
            f[att][def] = total;
        }
    }
    return f;
}

void validate_battle_query(int att_actual, int def_actual, int att_sides, int def_sides) {
    require(att_actual >= 2, "cannot attack with the last unit: need at least 2 attackers");
    require(def_actual >= 1, "defender count must be >= 1");
    require(att_sides >= 1 && def_sides >= 1, "die sides must be >= 1");
}

}  // namespace

double conquer_odds(int att_actual, int def_actual, int att_sides, int def_sides) {
    validate_battle_query(att_actual, def_actual, att_sides, def_sides);
    auto table = ac_table_impl<double>(att_actual, def_actual, att_sides, def_sides);
    return table[att_actual][def_actual];
}

Rat conquer_odds_exact(int att_actual, int def_actual, int att_sides, int def_sides) {
    validate_battle_query(att_actual, def_actual, att_sides, def_sides);
    if (att_actual + def_actual > kExactStateLimit)
        throw exact_mode_unavailable("rational mode supports up to " +
                                     std::to_string(kExactStateLimit) + " total units");
    auto table = ac_table_impl<Rat>(att_actual, def_actual, att_sides, def_sides);
    return table[att_actual][def_actual];
}

std::vector<std::vector<double>> conquer_odds_table(int max_att, int max_def,
                                                    int att_sides, int def_sides) {
    require(max_att >= 0 && max_def >= 0, "table bounds must be nonnegative");
    require(att_sides >= 1 && def_sides >= 1, "die sides must be >= 1");
    return ac_table_impl<double>(max_att, max_def, att_sides, def_sides);
}

// ---------------------------------------------------------------------------
// k = 1 virtual conquer
// ---------------------------------------------------------------------------

double vc_odds_k1_negbin(int attackers, int defenders, double win_prob) {
    validate_virtual_pair(attackers, defenders);
    validate_win_prob(win_prob);
    if (win_prob == 0.0) return 0.0;
    if (win_prob == 1.0) return 1.0;
    const double logp = std::log(win_prob), logq = std::log1p(-win_prob);
    std::vector<double> terms;
    terms.reserve(attackers);
    for (int k = 0; k < attackers; ++k)
        terms.push_back(std::exp(log_binomial(defenders + k - 1, defenders - 1) +
                                 defenders * logp + k * logq));
    return sum_ascending(std::move(terms));
}

Rat vc_odds_k1_negbin_exact(int attackers, int defenders, const Rat& win_prob) {
    validate_virtual_pair(attackers, defenders);
    require(is_probability(win_prob), "win probability must lie in [0, 1]");
    const Rat q = 1 - win_prob;
    Rat sum = 0;
    for (int k = 0; k < attackers; ++k)
        sum += Rat(binomial(defenders + k - 1, defenders - 1)) * rat_pow(q, k);
    return rat_pow(win_prob, defenders) * sum;
}

double vc_odds_k1_lattice(int attackers, int defenders, double win_prob) {
    validate_virtual_pair(attackers, defenders);
    validate_win_prob(win_prob);
    if (win_prob == 0.0) return 0.0;
    if (win_prob == 1.0) return 1.0;
    const int total = attackers + defenders;
    const double logp = std::log(win_prob), logq = std::log1p(-win_prob);
    std::vector<double> terms;
    terms.reserve(attackers + 1);
    terms.push_back(std::exp(log_binomial(total - 1, attackers - 1) +
                             defenders * logp + attackers * logq));
    for (int k = 0; k < attackers; ++k)
        terms.push_back(std::exp(log_binomial(total, k) + (total - k) * logp + k * logq));
    return sum_ascending(std::move(terms));
}

Rat vc_odds_k1_lattice_exact(int attackers, int defenders, const Rat& win_prob) {
    validate_virtual_pair(attackers, defenders);
    require(is_probability(win_prob), "win probability must lie in [0, 1]");
    const Rat q = 1 - win_prob;
    const int total = attackers + defenders;
    Rat sum = Rat(binomial(total - 1, attackers - 1)) * rat_pow(win_prob, defenders) *
              rat_pow(q, attackers);
    for (int k = 0; k < attackers; ++k)
        sum += Rat(binomial(total, k)) * rat_pow(win_prob, total - k) * rat_pow(q, k);
    return sum;
}

std::pair<double, double> vc_bounds_k1(int attackers, int defenders, double win_prob) {
    validate_virtual_pair(attackers, defenders);
    validate_win_prob(win_prob);
    if (win_prob == 0.0) return {0.0, 0.0};
    if (win_prob == 1.0) return {1.0, 1.0};
    const int total = attackers + defenders;
    const double logp = std::log(win_prob), logq = std::log1p(-win_prob);
    std::vector<double> terms;
    for (int h = 0; h < attackers; ++h)
        terms.push_back(std::exp(log_binomial(total, h) + (total - h) * logp + h * logq));
    double lower = sum_ascending(terms);
    terms.push_back(std::exp(log_binomial(total, attackers) + defenders * logp +
                             attackers * logq));
    return {lower, sum_ascending(std::move(terms))};
}

std::pair<Rat, Rat> vc_bounds_k1_exact(int attackers, int defenders, const Rat& win_prob) {
    validate_virtual_pair(attackers, defenders);
    require(is_probability(win_prob), "win probability must lie in [0, 1]");
    const Rat q = 1 - win_prob;
    const int total = attackers + defenders;
    Rat lower = 0;
    for (int h = 0; h < attackers; ++h)
        lower += Rat(binomial(total, h)) * rat_pow(win_prob, total - h) * rat_pow(q, h);
    Rat upper = lower + Rat(binomial(total, attackers)) * rat_pow(win_prob, defenders) *
                            rat_pow(q, attackers);
    return {lower, upper};
}

NegBinStats negbin_pmf_stats(int defenders, double win_prob) {
    require(defenders >= 1, "defender count must be >= 1");
    require(win_prob > 0.0 && win_prob < 1.0, "pmf statistics need 0 < p < 1");
    const double q = 1 - win_prob;
    return {q * defenders / win_prob,
            std::sqrt(q * defenders) / win_prob,
            (defenders - 1) * q / win_prob};
}

// ---------------------------------------------------------------------------
// k = 2 virtual conquer
// ---------------------------------------------------------------------------

namespace {

template <typename Num>
struct ModelView {
    Num p, q, r;
    Num md_value(MdPolicy policy) const {
        return policy == MdPolicy::Lenient ? Num(1) : Num(0);
    }
};

template <typename Num>
ModelView<Num> view(const LossModel& model) {
    if constexpr (std::is_same_v<Num, double>)
        return {to_double(model.def_loses_two), to_double(model.each_loses_one),
                to_double(model.att_loses_two)};
    else
        return {model.def_loses_two, model.each_loses_one, model.att_loses_two};
}

/// Absorption value for non-positive remaining units; interior states must
/// not call this.
template <typename Num>
Num vc_boundary(int attackers, int defenders, const ModelView<Num>& mv, MdPolicy policy) {
    if (defenders <= 0 && attackers <= 0) return mv.md_value(policy);
    if (defenders <= 0) return Num(1);
    return Num(0);
}

template <typename Num>
std::vector<std::vector<Num>> vc_table_impl(int max_att, int max_def,
                                            const ModelView<Num>& mv, MdPolicy policy) {
    std::vector<std::vector<Num>> f(max_att + 1, std::vector<Num>(max_def + 1, Num(0)));
    for (int a = 0; a <= max_att; ++a) f[a][0] = vc_boundary(a, 0, mv, policy);
    for (int d = 1; d <= max_def; ++d) f[0][d] = Num(0);
    auto cell = [&](int a, int d) -> Num {
        if (a <= 0 || d <= 0) return vc_boundary(a, d, mv, policy);
        return f[a][d];
    };
    for (int a = 1; a <= max_att; ++a)
        for (int d = 1; d <= max_def; ++d)
            f[a][d] = mv.p * cell(a, d - 2) + mv.q * cell(a - 1, d - 1) + mv.r * cell(a - 2, d);
    return f;
}

template <typename Num>
Num vc_odds_k2_impl(int attackers, int defenders, const ModelView<Num>& mv, MdPolicy policy) {
    if (attackers <= 0 || defenders <= 0)
        return vc_boundary(attackers, defenders, mv, policy);
    return vc_table_impl(attackers, defenders, mv, policy)[attackers][defenders];
}

template <typename Num>
std::vector<Num> z_distribution_impl(int engagements, const ModelView<Num>& mv) {
    std::vector<Num> dist{Num(1)};
    for (int step = 0; step < engagements; ++step) {
        std::vector<Num> next(dist.size() + 2, Num(0));
        for (size_t j = 0; j < dist.size(); ++j) {
            next[j] += dist[j] * mv.r;
            next[j + 1] += dist[j] * mv.q;
            next[j + 2] += dist[j] * mv.p;
        }
        dist = std::move(next);
    }
    return dist;
}

/// Extended-battle length: ceil((A+D-1)/2) engagements always settle one side.
int extended_battle_length(int attackers, int defenders) {
    return (attackers + defenders) / 2;
}

template <typename Num>
std::pair<Num, Num> vc_bounds_k2_impl(int attackers, int defenders,
                                      const ModelView<Num>& mv) {
    const int m = extended_battle_length(attackers, defenders);
    auto z = z_distribution_impl(m, mv);
    Num upper = 0, lower = 0;
    for (int j = static_cast<int>(z.size()) - 1; j >= defenders; --j) {
        upper += z[j];
        if (j > defenders) lower += z[j];
    }
    return {lower, upper};
}

}  // namespace

double vc_odds_k2(int attackers, int defenders, const LossModel& model, MdPolicy policy) {
    validate_virtual_pair(attackers, defenders);
    model.validate();
    return vc_odds_k2_impl(attackers, defenders, view<double>(model), policy);
}

Rat vc_odds_k2_exact(int attackers, int defenders, const LossModel& model, MdPolicy policy) {
    validate_virtual_pair(attackers, defenders);
    model.validate();
    return vc_odds_k2_impl(attackers, defenders, view<Rat>(model), policy);
}

std::vector<std::vector<double>> vc_odds_k2_table(int max_att, int max_def,
                                                  const LossModel& model, MdPolicy policy) {
    require(max_att >= 0 && max_def >= 0, "table bounds must be nonnegative");
    model.validate();
    return vc_table_impl(max_att, max_def, view<double>(model), policy);
}

std::pair<double, double> vc_bounds_k2(int attackers, int defenders, const LossModel& model) {
    validate_virtual_pair(attackers, defenders);
    model.validate();
    return vc_bounds_k2_impl(attackers, defenders, view<double>(model));
}

std::pair<Rat, Rat> vc_bounds_k2_exact(int attackers, int defenders, const LossModel& model) {
    validate_virtual_pair(attackers, defenders);
    model.validate();
    return vc_bounds_k2_impl(attackers, defenders, view<Rat>(model));
}

std::vector<double> distribution_of_z(int engagements, const LossModel& model) {
    require(engagements >= 1, "extended battle needs at least one engagement");
    model.validate();
    return z_distribution_impl(engagements, view<double>(model));
}

std::vector<Rat> distribution_of_z_exact(int engagements, const LossModel& model) {
    require(engagements >= 1, "extended battle needs at least one engagement");
    model.validate();
    return z_distribution_impl(engagements, view<Rat>(model));
}

// ---------------------------------------------------------------------------
// Threshold searches
// ---------------------------------------------------------------------------

namespace {

constexpr int kSearchCeiling = 4096;  // targets < 1 are always reachable far below this

}  // namespace

int min_attackers_ac(double target, int def_actual, int att_sides, int def_sides) {
    require(target > 0.0 && target < 1.0, "target probability must lie in (0, 1)");
    require(def_actual >= 1, "defender count must be >= 1");
    int cap = std::max(3 * def_actual + 16, 32);
    while (cap <= kSearchCeiling) {
        auto table = ac_table_impl<double>(cap, def_actual, att_sides, def_sides);
        for (int att = 2; att <= cap; ++att)
            if (table[att][def_actual] >= target) return att;
        cap *= 2;
    }
    throw std::runtime_error("threshold search exceeded the attacker ceiling");
}

int min_attackers_vc(double target, int def_actual, const LossModel& model, MdPolicy policy) {
    require(target > 0.0 && target < 1.0, "target probability must lie in (0, 1)");
    require(def_actual >= 1, "defender count must be >= 1");
    model.validate();
    const auto mv = view<double>(model);
    const int defenders = def_actual - 1;
    int cap = std::max(3 * def_actual + 16, 32);
    while (cap <= kSearchCeiling) {
        auto table = vc_table_impl(std::max(cap - 3, 1), std::max(defenders, 1), mv, policy);
        for (int att = 2; att <= cap; ++att) {
            int a = att - 3;
            double odds = (a <= 0 || defenders <= 0)
                              ? vc_boundary(a, defenders, mv, policy)
                              : table[a][defenders];
            if (odds >= target) return att;
        }
        cap *= 2;
    }
    throw std::runtime_error("threshold search exceeded the attacker ceiling");
}

}  // namespace riskodds::battle
