// Command-line front end: per-query odds reports, threshold tables, figure
// data, and the verification suite runner.

#include "riskodds/approx.hpp"
#include "riskodds/battle.hpp"
#include "riskodds/engagement.hpp"
#include "riskodds/errors.hpp"
#include "riskodds/reference.hpp"
#include "riskodds/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

namespace {

using json = nlohmann::json;
using namespace riskodds;

constexpr const char* kVersion = "1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitArgError = 2;

enum class Format { Human, Csv, Json, Rational };

Format parse_format(const std::string& name) {
    if (name == "table") return Format::Human;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    if (name == "rational") return Format::Rational;
    throw std::invalid_argument("unknown format: " + name);
}

battle::MdPolicy parse_policy(const std::string& name) {
    if (name == "strict") return battle::MdPolicy::Strict;
    if (name == "lenient") return battle::MdPolicy::Lenient;
    throw std::invalid_argument("unknown md-policy: " + name);
}

/// Full-precision, locale-independent decimal for CSV/JSON-adjacent text.
std::string full(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fixed4(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

void banner() { std::cout << "riskodds " << kVersion << "\n"; }

/// Renders a distribution's probabilities over their least common denominator,
/// so six-sided engagement tables read like the familiar x/7776 values.
std::vector<std::string> common_denominator_strings(const std::vector<Rat>& probs) {
    BigInt lcm = 1;
    for (const Rat& p : probs) lcm = boost::multiprecision::lcm(lcm, denominator(p));
    std::vector<std::string> out;
    out.reserve(probs.size());
    for (const Rat& p : probs) {
        BigInt num = numerator(p) * (lcm / denominator(p));
        out.push_back(num.str() + "/" + lcm.str());
    }
    return out;
}

// ---------------------------------------------------------------------------
// engagement
// ---------------------------------------------------------------------------

struct EngagementArgs {
    int m = 3, n = 2, a = 6, d = 6, k = 2;
    std::string format = "table";
    bool verify = false;
};

int run_engagement(const EngagementArgs& args) {
    engagement::DiceRule rule{args.m, args.n, args.a, args.d, args.k};
    auto dist = engagement::closed_form_distribution(rule);
    Format format = parse_format(args.format);

    bool verified = true;
    if (args.verify) {
        auto oracle = engagement::enumerate_engagement(rule);
        for (int l = 0; l <= rule.comparisons; ++l)
            if (oracle.probs[l] != dist.probs[l]) verified = false;
    }

    auto fractions = common_denominator_strings(dist.probs);
    switch (format) {
        case Format::Human: {
            banner();
            std::cout << "engagement m=" << args.m << " n=" << args.n << " a=" << args.a
                      << " d=" << args.d << " k=" << args.k << "\n";
            for (int l = rule.comparisons; l >= 0; --l)
                std::cout << "  defender loses " << l << ": " << fixed4(to_double(dist.probs[l]))
                          << "  (" << fractions[l] << ")\n";
            if (args.verify)
                std::cout << (verified ? "oracle check: closed forms match enumeration\n"
                                       : "oracle check: MISMATCH against enumeration\n");
            break;
        }
        case Format::Csv: {
            std::cout << "defender_losses,probability\n";
            for (int l = rule.comparisons; l >= 0; --l)
                std::cout << l << "," << full(to_double(dist.probs[l])) << "\n";
            break;
        }
        case Format::Json: {
            json out;
            out["rule"] = {{"attacker_dice", args.m}, {"defender_dice", args.n},
                           {"attacker_sides", args.a}, {"defender_sides", args.d},
                           {"comparisons", args.k}};
            json probs = json::array();
            for (int l = 0; l <= rule.comparisons; ++l)
                probs.push_back({{"defender_losses", l},
                                 {"probability", to_double(dist.probs[l])},
                                 {"fraction", frac_str(dist.probs[l])}});
            out["probs"] = probs;
            if (args.verify) out["oracle_match"] = verified;
            std::cout << out.dump(2) << "\n";
            break;
        }
        case Format::Rational: {
            for (int l = rule.comparisons; l >= 0; --l)
                std::cout << "l=" << l << " " << fractions[l] << "\n";
            break;
        }
    }
    return args.verify && !verified ? kExitVerifyFailure : kExitOk;
}

// ---------------------------------------------------------------------------
// battle
// ---------------------------------------------------------------------------

struct BattleArgs {
    int att = 10, def = 9, a = 6, d = 6;
    std::string format = "table";
    bool exact = false;
};

int run_battle(const BattleArgs& args) {
    Format format = parse_format(args.format);
    bool exact = args.exact || format == Format::Rational;
    if (exact && args.att + args.def > battle::kExactStateLimit)
        throw exact_mode_unavailable("rational mode supports up to " +
                                     std::to_string(battle::kExactStateLimit) +
                                     " total units; use the float formats instead");

    const battle::BattleUnits units{args.att, args.def};
    const auto model = battle::LossModel::from_rule({3, 2, args.a, args.d, 2});
    const auto params = approx::loss_moments(model);
    const int va = units.att_virtual(), vd = units.def_virtual();

    auto vc_float = [&](battle::MdPolicy policy) {
        if (va <= 0 || vd <= 0)
            return vd <= 0 && va > 0 ? 1.0
                 : (vd <= 0 && policy == battle::MdPolicy::Lenient ? 1.0 : 0.0);
        return battle::vc_odds_k2(va, vd, model, policy);
    };

    battle::OddsReport report;
    report.ac_exact = battle::conquer_odds(args.att, args.def, args.a, args.d);
    report.vc_strict = vc_float(battle::MdPolicy::Strict);
    report.vc_lenient = vc_float(battle::MdPolicy::Lenient);
    if (va >= 1 && vd >= 1) {
        auto [lower, upper] = battle::vc_bounds_k2(va, vd, model);
        report.vc_lower_bound = lower;
        report.vc_upper_bound = upper;
        report.vc_normal = approx::vc_normal_approx(va, vd, params);
        report.clt_ok = params.sigma2() > 0 && va + vd > approx::clt_min_total(params);
    } else {
        // Decided before the first engagement; the report collapses onto the
        // exact values and the normal approximation is not applicable.
        report.vc_lower_bound = report.vc_strict;
        report.vc_upper_bound = report.vc_lenient;
        report.vc_normal = report.vc_strict;
        report.clt_ok = false;
    }

    if (format == Format::Rational) {
        Rat ac = battle::conquer_odds_exact(args.att, args.def, args.a, args.d);
        std::cout << "ac_exact " << frac_str(ac) << "\n";
        if (va >= 1 && vd >= 1) {
            std::cout << "vc_strict "
                      << frac_str(battle::vc_odds_k2_exact(va, vd, model,
                                                           battle::MdPolicy::Strict))
                      << "\n";
            std::cout << "vc_lenient "
                      << frac_str(battle::vc_odds_k2_exact(va, vd, model,
                                                           battle::MdPolicy::Lenient))
                      << "\n";
            auto [lower, upper] = battle::vc_bounds_k2_exact(va, vd, model);
            std::cout << "vc_lower_bound " << frac_str(lower) << "\n";
            std::cout << "vc_upper_bound " << frac_str(upper) << "\n";
        } else {
            std::cout << "vc_strict " << (report.vc_strict == 1.0 ? "1" : "0") << "\n";
            std::cout << "vc_lenient " << (report.vc_lenient == 1.0 ? "1" : "0") << "\n";
        }
        return kExitOk;
    }

    if (format == Format::Json) {
        json out;
        out["inputs"] = {{"att_actual", args.att}, {"def_actual", args.def},
                         {"att_sides", args.a}, {"def_sides", args.d},
                         {"att_virtual", va}, {"def_virtual", vd}};
        out["ac_exact"] = report.ac_exact;
        out["vc_strict"] = report.vc_strict;
        out["vc_lenient"] = report.vc_lenient;
        out["vc_lower_bound"] = report.vc_lower_bound;
        out["vc_upper_bound"] = report.vc_upper_bound;
        out["vc_normal"] = report.vc_normal;
        out["clt_ok"] = report.clt_ok;
        if (exact) {
            out["ac_exact_fraction"] =
                frac_str(battle::conquer_odds_exact(args.att, args.def, args.a, args.d));
            if (va >= 1 && vd >= 1)
                out["vc_strict_fraction"] = frac_str(
                    battle::vc_odds_k2_exact(va, vd, model, battle::MdPolicy::Strict));
        }
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }

    if (format == Format::Csv) {
        std::cout << "field,value\n";
        std::cout << "ac_exact," << full(report.ac_exact) << "\n";
        std::cout << "vc_strict," << full(report.vc_strict) << "\n";
        std::cout << "vc_lenient," << full(report.vc_lenient) << "\n";
        std::cout << "vc_lower_bound," << full(report.vc_lower_bound) << "\n";
        std::cout << "vc_upper_bound," << full(report.vc_upper_bound) << "\n";
        std::cout << "vc_normal," << full(report.vc_normal) << "\n";
        std::cout << "clt_ok," << (report.clt_ok ? "1" : "0") << "\n";
        return kExitOk;
    }

    banner();
    std::cout << "battle " << args.att << " vs " << args.def << " (virtual " << va << " vs "
              << vd << ", sides " << args.a << "/" << args.d << ")\n";
    std::cout << "  conquer odds (exact DP):   " << fixed4(report.ac_exact) << "\n";
    std::cout << "  virtual conquer, strict:   " << fixed4(report.vc_strict) << "\n";
    std::cout << "  virtual conquer, lenient:  " << fixed4(report.vc_lenient) << "\n";
    std::cout << "  extended-battle bounds:    [" << fixed4(report.vc_lower_bound) << ", "
              << fixed4(report.vc_upper_bound) << "]\n";
    std::cout << "  normal approximation:      " << fixed4(report.vc_normal)
              << (report.clt_ok ? "" : "  (below the normal-approximation size criterion)")
              << "\n";
    if (exact)
        std::cout << "  exact AC fraction:         "
                  << frac_str(battle::conquer_odds_exact(args.att, args.def, args.a, args.d))
                  << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// threshold
// ---------------------------------------------------------------------------

struct ThresholdArgs {
    int def = 2;
    double target = 50;
    std::string mode = "ac";
    std::string policy = "strict";
    std::string format = "table";
};

int run_threshold(const ThresholdArgs& args) {
    if (args.target <= 0 || args.target >= 100)
        throw std::invalid_argument("target percent must lie strictly between 0 and 100");
    if (args.mode != "ac" && args.mode != "vc")
        throw std::invalid_argument("mode must be ac or vc");
    Format format = parse_format(args.format);
    const double target = args.target / 100.0;
    int result = args.mode == "ac"
                     ? battle::min_attackers_ac(target, args.def)
                     : battle::min_attackers_vc(target, args.def, battle::LossModel::standard(),
                                                parse_policy(args.policy));
    switch (format) {
        case Format::Human:
            banner();
            std::cout << "minimum attackers for " << args.target << "% " << args.mode
                      << " odds against " << args.def << " defenders: " << result << "\n";
            break;
        case Format::Csv:
            std::cout << "def_actual,target_percent,mode,min_attackers\n";
            std::cout << args.def << "," << full(args.target) << "," << args.mode << ","
                      << result << "\n";
            break;
        case Format::Json: {
            json out{{"def_actual", args.def}, {"target_percent", args.target},
                     {"mode", args.mode}, {"min_attackers", result}};
            std::cout << out.dump(2) << "\n";
            break;
        }
        case Format::Rational:
            throw std::invalid_argument("threshold results are integers; rational format "
                                        "does not apply");
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

struct TableArgs {
    std::string which = "vcac";
    int a = 6, d = 6;
    bool diff = false;
    std::string policy = "strict";
    std::string format = "table";
};

int run_table_vcac(Format format, bool diff, battle::MdPolicy policy) {
    const auto model = battle::LossModel::standard();
    struct Cell {
        int def, target, vc, ac;
    };
    std::vector<Cell> cells;
    for (int def = reference::kMinDefenders; def <= reference::kMaxDefenders; ++def)
        for (int target : reference::kTargets)
            cells.push_back({def, target,
                             battle::min_attackers_vc(target / 100.0, def, model, policy),
                             battle::min_attackers_ac(target / 100.0, def)});

    switch (format) {
        case Format::Human: {
            banner();
            std::cout << "minimum attacking armies (VC strict / AC exact)\n";
            std::cout << "  D\\target |";
            for (int target : reference::kTargets) std::printf("  %3d%%   ", target);
            std::cout << "\n";
            for (int def = reference::kMinDefenders; def <= reference::kMaxDefenders; ++def) {
                std::printf("  %8d |", def);
                for (const auto& cell : cells)
                    if (cell.def == def) std::printf(" %3d/%-3d ", cell.vc, cell.ac);
                std::cout << "\n";
            }
            break;
        }
        case Format::Csv:
            std::cout << "def_actual,target_percent,vc_min_attackers,ac_min_attackers\n";
            for (const auto& cell : cells)
                std::cout << cell.def << "," << cell.target << "," << cell.vc << ","
                          << cell.ac << "\n";
            break;
        case Format::Json: {
            json rows = json::array();
            for (const auto& cell : cells)
                rows.push_back({{"def_actual", cell.def}, {"target_percent", cell.target},
                                {"vc_min_attackers", cell.vc}, {"ac_min_attackers", cell.ac}});
            std::cout << json{{"table", rows}}.dump(2) << "\n";
            break;
        }
        case Format::Rational:
            throw std::invalid_argument("threshold tables are integers; rational format "
                                        "does not apply");
    }

    if (diff) {
        auto ac_table = battle::conquer_odds_table(32, reference::kMaxDefenders);
        auto vc_table = battle::vc_odds_k2_table(32, reference::kMaxDefenders, model, policy);
        auto vc_at = [&](int att, int def) {
            int a = att - 3, d = def - 1;
            if (d <= 0) return a > 0 ? 1.0 : 0.0;
            if (a <= 0) return 0.0;
            return vc_table[a][d];
        };
        int mismatches = 0;
        for (const auto& cell : cells) {
            int pub_vc = reference::published_vc(cell.def, cell.target);
            int pub_ac = reference::published_ac(cell.def, cell.target);
            if (cell.vc != pub_vc) {
                ++mismatches;
                std::cout << "diff vc D=" << cell.def << " target=" << cell.target
                          << "%: computed " << cell.vc << " (odds "
                          << fixed4(vc_at(cell.vc, cell.def)) << "), published " << pub_vc
                          << " (odds " << fixed4(vc_at(pub_vc, cell.def)) << ")\n";
            }
            if (cell.ac != pub_ac) {
                ++mismatches;
                std::cout << "diff ac D=" << cell.def << " target=" << cell.target
                          << "%: computed " << cell.ac << " (odds "
                          << fixed4(ac_table[cell.ac][cell.def]) << "), published " << pub_ac
                          << " (odds " << fixed4(ac_table[pub_ac][cell.def]) << ")\n";
            }
        }
        std::cout << "diff total: " << mismatches << " mismatched cells of "
                  << 2 * cells.size() << "\n";
    }
    return kExitOk;
}

int run_table_engagement(Format format, int a, int d) {
    struct Row {
        engagement::SpecializationRow row;
        Rat value;
    };
    std::vector<Row> rows;
    for (const auto& row : engagement::specialization_rows())
        rows.push_back({row, engagement::specialization_odds(
                                 row.attacker_dice, row.defender_dice, row.comparisons,
                                 row.defender_losses, a, d)});

    switch (format) {
        case Format::Human:
            banner();
            std::cout << "engagement odds at a=" << a << ", d=" << d << "\n";
            std::cout << "   m  n  k  l  probability\n";
            for (const auto& row : rows)
                std::printf("  %2d %2d %2d %2d  %s  (%s)\n", row.row.attacker_dice,
                            row.row.defender_dice, row.row.comparisons,
                            row.row.defender_losses, fixed4(to_double(row.value)).c_str(),
                            frac_str(row.value).c_str());
            break;
        case Format::Csv:
            std::cout << "attacker_dice,defender_dice,comparisons,defender_losses,probability\n";
            for (const auto& row : rows)
                std::cout << row.row.attacker_dice << "," << row.row.defender_dice << ","
                          << row.row.comparisons << "," << row.row.defender_losses << ","
                          << full(to_double(row.value)) << "\n";
            break;
        case Format::Json: {
            json out = json::array();
            for (const auto& row : rows)
                out.push_back({{"attacker_dice", row.row.attacker_dice},
                               {"defender_dice", row.row.defender_dice},
                               {"comparisons", row.row.comparisons},
                               {"defender_losses", row.row.defender_losses},
                               {"probability", to_double(row.value)},
                               {"fraction", frac_str(row.value)}});
            std::cout << json{{"attacker_sides", a}, {"defender_sides", d}, {"rows", out}}
                             .dump(2)
                      << "\n";
            break;
        }
        case Format::Rational:
            for (const auto& row : rows)
                std::printf("(%d,%d,%d,%d) %s\n", row.row.attacker_dice,
                            row.row.defender_dice, row.row.comparisons,
                            row.row.defender_losses, frac_str(row.value).c_str());
            break;
    }
    return kExitOk;
}

int run_table(const TableArgs& args) {
    Format format = parse_format(args.format);
    if (args.which == "vcac") return run_table_vcac(format, args.diff, parse_policy(args.policy));
    if (args.which == "engagement") return run_table_engagement(format, args.a, args.d);
    throw std::invalid_argument("table kind must be vcac or engagement");
}

// ---------------------------------------------------------------------------
// dist
// ---------------------------------------------------------------------------

struct DistArgs {
    int m_max = 1;
    std::string p, q, r;
    std::string format = "csv";
};

int run_dist(const DistArgs& args) {
    if (args.m_max < 1)
        throw std::invalid_argument("need at least one engagement column");
    battle::LossModel model = battle::LossModel::standard();
    if (!args.p.empty() || !args.q.empty() || !args.r.empty()) {
        if (args.p.empty() || args.q.empty() || args.r.empty())
            throw std::invalid_argument("custom models need all of --p, --q, --r");
        model = {parse_rational(args.p), parse_rational(args.q), parse_rational(args.r)};
        model.validate();
    }
    Format format = parse_format(args.format);

    if (format == Format::Rational) {
        for (int m = 1; m <= args.m_max; ++m) {
            auto dist = battle::distribution_of_z_exact(m, model);
            Rat tail = 0;
            std::vector<Rat> tails(dist.size());
            for (int j = static_cast<int>(dist.size()) - 1; j >= 0; --j) {
                tails[j] = tail;  // Pr(Z_M > j)
                tail += dist[j];
            }
            for (size_t j = 0; j < dist.size(); ++j)
                std::cout << "M=" << m << " j=" << j << " " << frac_str(dist[j]) << " tail "
                          << frac_str(tails[j]) << "\n";
        }
        return kExitOk;
    }

    json json_rows = json::array();
    if (format == Format::Csv) std::cout << "M,j,probability,tail\n";
    if (format == Format::Human) {
        banner();
        std::cout << "distribution of defender losses over M engagements\n";
        std::cout << "   M    j  probability  Pr(Z>j)\n";
    }
    for (int m = 1; m <= args.m_max; ++m) {
        auto dist = battle::distribution_of_z(m, model);
        double tail = 0;
        std::vector<double> tails(dist.size());
        for (int j = static_cast<int>(dist.size()) - 1; j >= 0; --j) {
            tails[j] = tail;
            tail += dist[j];
        }
        for (size_t j = 0; j < dist.size(); ++j) {
            switch (format) {
                case Format::Csv:
                    std::cout << m << "," << j << "," << full(dist[j]) << "," << full(tails[j])
                              << "\n";
                    break;
                case Format::Human:
                    std::printf("  %3d %4zu  %s       %s\n", m, j, fixed4(dist[j]).c_str(),
                                fixed4(tails[j]).c_str());
                    break;
                case Format::Json:
                    json_rows.push_back({{"M", m}, {"j", j}, {"probability", dist[j]},
                                         {"tail", tails[j]}});
                    break;
                default:
                    break;
            }
        }
    }
    if (format == Format::Json) std::cout << json{{"rows", json_rows}}.dump(2) << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int run_verify(const std::string& scope) {
    auto results = verify::run(scope);
    bool all_passed = true;
    for (const auto& suite : results) {
        std::cout << (suite.passed() ? "ok  " : "FAIL") << "  " << suite.name << " ("
                  << suite.checks << " checks, " << suite.failures << " failures)\n";
        for (const auto& message : suite.messages) std::cout << "      " << message << "\n";
        if (!suite.passed()) all_passed = false;
    }
    std::cout << (all_passed ? "verification passed" : "verification FAILED") << "\n";
    return all_passed ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and approximate conquer odds for generalized dice battles"};
    app.set_version_flag("--version", std::string("riskodds ") + kVersion);
    app.require_subcommand(1);

    EngagementArgs eng;
    auto* eng_cmd = app.add_subcommand("engagement", "single-engagement loss distribution");
    eng_cmd->add_option("-m,--attacker-dice", eng.m, "attacker dice count");
    eng_cmd->add_option("-n,--defender-dice", eng.n, "defender dice count");
    eng_cmd->add_option("-a,--attacker-sides", eng.a, "attacker die sides");
    eng_cmd->add_option("-d,--defender-sides", eng.d, "defender die sides");
    eng_cmd->add_option("-k,--comparisons", eng.k, "dice comparisons per engagement");
    eng_cmd->add_option("--format", eng.format, "table|csv|json|rational");
    eng_cmd->add_flag("--verify", eng.verify, "cross-check against the enumeration oracle");

    BattleArgs bat;
    auto* bat_cmd = app.add_subcommand("battle", "odds report for a whole battle");
    bat_cmd->add_option("-A,--attackers", bat.att, "attacker units in the territory")
        ->required();
    bat_cmd->add_option("-D,--defenders", bat.def, "defender units")->required();
    bat_cmd->add_option("-a,--attacker-sides", bat.a, "attacker die sides");
    bat_cmd->add_option("-d,--defender-sides", bat.d, "defender die sides");
    bat_cmd->add_option("--format", bat.format, "table|csv|json|rational");
    bat_cmd->add_flag("--exact", bat.exact, "force rational mode");

    ThresholdArgs thr;
    auto* thr_cmd = app.add_subcommand("threshold", "minimum attackers for a target");
    thr_cmd->add_option("-D,--defenders", thr.def, "defender units")->required();
    thr_cmd->add_option("-t,--target", thr.target, "target probability in percent")
        ->required();
    thr_cmd->add_option("--mode", thr.mode, "ac|vc");
    thr_cmd->add_option("--md-policy", thr.policy, "strict|lenient");
    thr_cmd->add_option("--format", thr.format, "table|csv|json");

    TableArgs tab;
    auto* tab_cmd = app.add_subcommand("table", "reproduce the reference tables");
    tab_cmd->add_option("which", tab.which, "vcac|engagement")->required();
    tab_cmd->add_option("-a,--attacker-sides", tab.a, "attacker die sides");
    tab_cmd->add_option("-d,--defender-sides", tab.d, "defender die sides");
    tab_cmd->add_flag("--diff", tab.diff, "compare against the published table");
    tab_cmd->add_option("--md-policy", tab.policy, "strict|lenient");
    tab_cmd->add_option("--format", tab.format, "table|csv|json|rational");

    DistArgs dist;
    auto* dist_cmd = app.add_subcommand("dist", "distribution of Z_M per column M");
    dist_cmd->add_option("-M,--max-engagements", dist.m_max, "largest column")->required();
    dist_cmd->add_option("--p", dist.p, "P(defender loses 2), fraction or decimal");
    dist_cmd->add_option("--q", dist.q, "P(each loses 1)");
    dist_cmd->add_option("--r", dist.r, "P(attacker loses 2)");
    dist_cmd->add_option("--format", dist.format, "table|csv|json|rational");

    std::string verify_scope = "all";
    auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    verify_cmd->add_option("scope", verify_scope, "engagement|battle|approx|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitArgError;
    }

    try {
        if (*eng_cmd) return run_engagement(eng);
        if (*bat_cmd) return run_battle(bat);
        if (*thr_cmd) return run_threshold(thr);
        if (*tab_cmd) return run_table(tab);
        if (*dist_cmd) return run_dist(dist);
        if (*verify_cmd) return run_verify(verify_scope);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
    return kExitArgError;
}
