#include "riskodds/engagement.hpp"

#include "riskodds/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace riskodds::engagement {

namespace {

// Enumeration is a desk-scale correctness oracle, not a performance path.
constexpr int kMaxEnumAttackerDice = 4;
constexpr int kMaxEnumDefenderDice = 3;
constexpr long long kMaxEnumOutcomes = 100'000'000;

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

void validate_sides_and_counts(int m, int n, int a, int d) {
    require(m >= 1, "attacker dice count must be >= 1");
    require(n >= 1, "defender dice count must be >= 1");
    require(a >= 1, "attacker die sides must be >= 1");
    require(d >= 1, "defender die sides must be >= 1");
}

}  // namespace

void DiceRule::validate() const {
    validate_sides_and_counts(attacker_dice, defender_dice, attacker_sides, defender_sides);
    if (comparisons < 1 || comparisons > 2)
        throw unsupported_comparisons("unsupported comparisons: k must be 1 or 2, got " +
                                      std::to_string(comparisons));
    require(comparisons <= std::min(attacker_dice, defender_dice),
            "comparisons k must not exceed min(attacker dice, defender dice)");
}

bool LossDistribution::sums_to_one() const {
    Rat total = 0;
    for (const Rat& p : probs) total += p;
    return total == 1;
}

LossDistribution enumerate_engagement(const DiceRule& rule) {
    rule.validate();
    const int m = rule.attacker_dice, n = rule.defender_dice;
    const int a = rule.attacker_sides, d = rule.defender_sides;
    const int k = rule.comparisons;
    if (m > kMaxEnumAttackerDice || n > kMaxEnumDefenderDice)
        throw enumeration_limit_error("enumeration limited to " +
                                      std::to_string(kMaxEnumAttackerDice) + " attacker and " +
                                      std::to_string(kMaxEnumDefenderDice) + " defender dice");
    double outcome_estimate = std::pow(double(a), m) * std::pow(double(d), n);
    if (outcome_estimate > double(kMaxEnumOutcomes))
        throw enumeration_limit_error("enumeration outcome space too large");

    std::vector<long long> tallies(k + 1, 0);
    std::array<int, kMaxEnumAttackerDice> att{};
    std::array<int, kMaxEnumDefenderDice> def{};
    std::array<int, kMaxEnumAttackerDice> att_sorted{};
    std::array<int, kMaxEnumDefenderDice> def_sorted{};
    att.fill(1);

    // Odometer over the full a^m * d^n product space, no symmetry reduction.
    while (true) {
        std::copy(att.begin(), att.begin() + m, att_sorted.begin());
        std::sort(att_sorted.begin(), att_sorted.begin() + m, std::greater<>());
        def.fill(1);
        while (true) {
            std::copy(def.begin(), def.begin() + n, def_sorted.begin());
            std::sort(def_sorted.begin(), def_sorted.begin() + n, std::greater<>());
            int losses = 0;
            for (int i = 0; i < k; ++i)
                if (att_sorted[i] > def_sorted[i]) ++losses;  // ties go to the defender
            ++tallies[losses];
            int j = 0;
            while (j < n && def[j] == d) def[j++] = 1;
            if (j == n) break;
            ++def[j];
        }
        int j = 0;
        while (j < m && att[j] == a) att[j++] = 1;
        if (j == m) break;
        ++att[j];
    }

    BigInt total = ipow(a, m) * ipow(d, n);
    LossDistribution dist{rule, {}};
    dist.probs.reserve(k + 1);
    for (int l = 0; l <= k; ++l) dist.probs.emplace_back(BigInt(tallies[l]), total);
    return dist;
}

Rat prob_top_attacker_wins(int m, int n, int a, int d) {
    validate_sides_and_counts(m, n, a, d);
    BigInt num = 0;
    const BigInt am = ipow(a, m);
    for (int y = 1; y <= std::min(a, d); ++y)
        num += (am - ipow(y, m)) * (ipow(y, n) - ipow(y - 1, n));
    return Rat(num, am * ipow(d, n));
}

Rat prob_top_defender_wins(int m, int n, int a, int d) {
    return 1 - prob_top_attacker_wins(m, n, a, d);
}

Rat prob_two_wins_attacker(int m, int n, int a, int d) {
    validate_sides_and_counts(m, n, a, d);
    require(m >= 2 && n >= 2, "two-comparison odds need at least two dice per side");
    const BigInt am = ipow(a, m);
    BigInt num = 0;
    const int top = std::min(a, d);
    for (int y1 = 2; y1 <= top; ++y1)
        for (int y2 = 1; y2 < y1; ++y2)
            num += n * (ipow(y2, n - 1) - ipow(y2 - 1, n - 1)) *
                   (am - ipow(y1, m) - m * (a - y1) * ipow(y2, m - 1));
    for (int y1 = 1; y1 <= top; ++y1)
        num += (ipow(y1, n) - ipow(y1 - 1, n) - n * ipow(y1 - 1, n - 1)) *
               (am + (m - 1) * ipow(y1, m) - a * m * ipow(y1, m - 1));
    return Rat(num, am * ipow(d, n));
}

Rat prob_two_wins_defender(int m, int n, int a, int d) {
    validate_sides_and_counts(m, n, a, d);
    require(m >= 2 && n >= 2, "two-comparison odds need at least two dice per side");
    BigInt num = 0;
    // Both-dice-low contributions, summed up to min(a, d):
    const int top = std::min(a, d);
    for (int y1 = 2; y1 <= top; ++y1)
        for (int y2 = 1; y2 < y1; ++y2)
            num += n * (ipow(y2, n - 1) - ipow(y2 - 1, n - 1)) *
                   (m * (y1 - y2) * ipow(y2, m - 1) + ipow(y2, m));
    for (int y1 = 1; y1 <= top; ++y1)
        num += (ipow(y1, n) - ipow(y1 - 1, n) - n * ipow(y1 - 1, n - 1)) * ipow(y1, m);
    if (a < d) {
        // Defender top die out of the attacker's reach, second die within it:
        for (int y1 = a + 1; y1 <= d; ++y1)
            for (int y2 = 1; y2 <= a; ++y2)
                num += n * (ipow(y2, n - 1) - ipow(y2 - 1, n - 1)) *
                       (m * (a - y2) * ipow(y2, m - 1) + ipow(y2, m));
        // Both defender dice out of reach:
        num += ipow(a, m) * ipow(d, n) - n * (d - a) * ipow(a, n + m - 1) - ipow(a, m + n);
    }
    return Rat(num, ipow(a, m) * ipow(d, n));
}

Rat prob_split(int m, int n, int a, int d) {
    return 1 - prob_two_wins_attacker(m, n, a, d) - prob_two_wins_defender(m, n, a, d);
}

LossDistribution closed_form_distribution(const DiceRule& rule) {
    rule.validate();
    const int m = rule.attacker_dice, n = rule.defender_dice;
    const int a = rule.attacker_sides, d = rule.defender_sides;
    LossDistribution dist{rule, {}};
    if (rule.comparisons == 1) {
        Rat win = prob_top_attacker_wins(m, n, a, d);
        dist.probs = {1 - win, win};
    } else {
        Rat two = prob_two_wins_attacker(m, n, a, d);
        Rat none = prob_two_wins_defender(m, n, a, d);
        dist.probs = {none, 1 - two - none, two};
    }
    return dist;
}

namespace {

struct RowPolynomials {
    SpecializationRow row;
    Rat (*sides_high)(int a, int d);  // a >= d branch
    Rat (*sides_low)(int a, int d);   // a <= d branch
};

Rat r(BigInt num, BigInt den) { return Rat(std::move(num), std::move(den)); }

const std::array<RowPolynomials, 14>& row_table() {
    using B = BigInt;
    static const std::array<RowPolynomials, 14> rows = {{
        {{1, 1, 1, 1},
         [](int a, int d) { return r(B(2) * a - d - 1, B(2) * a); },
         [](int a, int d) { return r(B(a) - 1, B(2) * d); }},
        {{1, 1, 1, 0},
         [](int a, int d) { return r(B(d) + 1, B(2) * a); },
         [](int a, int d) { return r(B(2) * d - a + 1, B(2) * d); }},
        {{2, 1, 1, 1},
         [](int a, int d) { return r(B(6) * a * a - B(2) * d * d - 3 * d - 1, B(6) * a * a); },
         [](int a, int d) { return r(B(4) * a * a - 3 * a - 1, B(6) * a * d); }},
        {{2, 1, 1, 0},
         [](int a, int d) { return r(B(2) * d * d + 3 * d + 1, B(6) * a * a); },
         [](int a, int d) { return r(B(6) * a * d - B(4) * a * a + 3 * a + 1, B(6) * a * d); }},
        {{3, 1, 1, 1},
         [](int a, int d) {
             return r(B(4) * a * a * a - B(d) * d * d - B(2) * d * d - d, B(4) * a * a * a);
         },
         [](int a, int d) { return r(B(3) * a * a - 2 * a - 1, B(4) * a * d); }},
        {{3, 1, 1, 0},
         [](int a, int d) { return r(B(d) * d * d + B(2) * d * d + d, B(4) * a * a * a); },
         [](int a, int d) { return r(B(4) * a * d - B(3) * a * a + 2 * a + 1, B(4) * a * d); }},
        {{1, 2, 1, 1},
         [](int a, int d) { return r(B(6) * a * d - B(4) * d * d - 3 * d + 1, B(6) * a * d); },
         [](int a, int d) { return r(B(2) * a * a - 3 * a + 1, B(6) * d * d); }},
        {{1, 2, 1, 0},
         [](int a, int d) { return r(B(4) * d * d + 3 * d - 1, B(6) * a * d); },
         [](int a, int d) { return r(B(6) * d * d - B(2) * a * a + 3 * a - 1, B(6) * d * d); }},
        {{2, 2, 2, 2},
         [](int a, int d) {
             return r(B(6) * a * a * d - B(4) * a * d * d - B(6) * a * d - B(2) * a +
                          B(2) * d * d + 3 * d + 1,
                      B(6) * a * a * d);
         },
         [](int a, int d) {
             return r(B(2) * a * a * a - B(4) * a * a + a + 1, B(6) * a * d * d);
         }},
        {{2, 2, 2, 1},
         [](int a, int d) {
             return r(B(4) * a * d * d + B(6) * a * d + B(2) * a - B(2) * d * d * d -
                          B(6) * d * d - 4 * d,
                      B(6) * a * a * d);
         },
         [](int a, int d) {
             return r(B(-2) * a * a * a + B(4) * a * a * d + B(6) * a * a - B(6) * a * d -
                          B(4) * a + 2 * d,
                      B(6) * a * d * d);
         }},
        {{2, 2, 2, 0},
         [](int a, int d) {
             return r(B(2) * d * d * d + B(4) * d * d + d - 1, B(6) * a * a * d);
         },
         [](int a, int d) {
             return r(B(-4) * a * a * d - B(2) * a * a + B(6) * a * d * d + B(6) * a * d +
                          B(3) * a - 2 * d - 1,
                      B(6) * a * d * d);
         }},
        {{3, 2, 2, 2},
         [](int a, int d) {
             return r(B(12) * a * a * a * d - B(6) * a * d * d * d - B(12) * a * d * d -
                          B(12) * a * d - B(6) * a + B(3) * d * d * d + B(10) * d * d +
                          B(9) * d + 2,
                      B(12) * a * a * a * d);
         },
         [](int a, int d) {
             return r(B(6) * a * a * a * a - B(9) * a * a * a - B(2) * a * a + 3 * a + 2,
                      B(12) * a * a * d * d);
         }},
        {{3, 2, 2, 1},
         [](int a, int d) {
             return r(B(30) * a * d * d * d + B(60) * a * d * d + B(60) * a * d + B(30) * a -
                          B(12) * d * d * d * d - B(45) * d * d * d - B(70) * d * d -
                          B(45) * d - 8,
                      B(60) * a * a * a * d);
         },
         [](int a, int d) {
             return r(B(-42) * a * a * a * a + B(60) * a * a * a * d - B(60) * a * a * d +
                          B(75) * a * a * a - B(10) * a * a - B(15) * a - 8,
                      B(60) * a * a * d * d);
         }},
        {{3, 2, 2, 0},
         [](int a, int d) {
             return r(B(6) * d * d * d * d + B(15) * d * d * d + B(10) * d * d - 1,
                      B(30) * a * a * a * d);
         },
         [](int a, int d) {
             return r(B(6) * a * a * a * a - B(30) * a * a * a * d - B(15) * a * a * a +
                          B(30) * a * a * d * d + B(30) * a * a * d + B(10) * a * a - 1,
                      B(30) * a * a * d * d);
         }},
    }};
    return rows;
}

const RowPolynomials& find_row(int m, int n, int k, int l) {
    for (const auto& entry : row_table()) {
        const auto& row = entry.row;
        if (row.attacker_dice == m && row.defender_dice == n && row.comparisons == k &&
            row.defender_losses == l)
            return entry;
    }
    throw std::invalid_argument("no specialization row for (m=" + std::to_string(m) +
                                ", n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                ", l=" + std::to_string(l) + ")");
}

}  // namespace

const std::array<SpecializationRow, 14>& specialization_rows() {
    static const std::array<SpecializationRow, 14> rows = [] {
        std::array<SpecializationRow, 14> out{};
        for (size_t i = 0; i < out.size(); ++i) out[i] = row_table()[i].row;
        return out;
    }();
    return rows;
}

Rat specialization_odds(int m, int n, int k, int l, int a, int d) {
    validate_sides_and_counts(m, n, a, d);
    const auto& entry = find_row(m, n, k, l);
    return a >= d ? entry.sides_high(a, d) : entry.sides_low(a, d);
}

Rat specialization_odds_branch(int m, int n, int k, int l, int a, int d, Branch branch) {
    validate_sides_and_counts(m, n, a, d);
    const auto& entry = find_row(m, n, k, l);
    return branch == Branch::AttackerSidesHigh ? entry.sides_high(a, d) : entry.sides_low(a, d);
}

}  // namespace riskodds::engagement
