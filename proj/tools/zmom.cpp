// zmom: moments of ideal-counting coefficients of Dedekind zeta functions.
//
// Subcommands: group, splitting, moments, fit, verify, report.
// Exit codes: 0 success, 1 verification failure, 2 configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "zmom/asympt_fit.hpp"
#include "zmom/char_engine.hpp"
#include "zmom/config.hpp"
#include "zmom/group.hpp"
#include "zmom/moment_sieve.hpp"
#include "zmom/report.hpp"
#include "zmom/splitting.hpp"
#include "zmom/verify.hpp"

using namespace zmom;

namespace {

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot write output file: " + output);
    out << text << "\n";
}

Preset load_preset(const RunConfig& cfg) {
    if (!cfg.group_file.empty()) return preset_from_group_file(cfg.group_file);
    if (cfg.preset_name.empty())
        throw std::invalid_argument("no group given (use --preset or --group-file)");
    return preset(cfg.preset_name);
}

ThetaOverrides theta_overrides(const RunConfig& cfg) {
    ThetaOverrides t;
    t.theta1 = cfg.theta1;
    t.theta2 = cfg.theta2;
    t.theta3 = cfg.theta3;
    t.theta4 = cfg.theta4;
    return t;
}

BadPrimeOverride resolve_overrides(const RunConfig& cfg) {
    if (!cfg.overrides_path.empty()) return load_overrides(cfg.overrides_path);
    return parse_overrides(builtin_override_text(cfg.poly));
}

PrimeSplittingCache resolve_cache(const RunConfig& cfg, const FieldPresentation& field,
                                  const BadPrimeOverride& ov, long long need_pmax) {
    if (!cfg.cache_path.empty()) {
        std::ifstream probe(cfg.cache_path);
        if (probe.good()) {
            PrimeSplittingCache cache = load_cache(field, ov, cfg.cache_path);
            if (cache.pmax >= need_pmax) return cache;
            std::cerr << "cache bound " << cache.pmax << " below required " << need_pmax
                      << "; rebuilding\n";
        }
    }
    PrimeSplittingCache cache = build_cache(field, need_pmax, ov, cfg.workers);
    if (!cfg.cache_path.empty()) save_cache(cache, field, cfg.cache_path);
    return cache;
}

int print_results(const std::vector<CheckResult>& results, unsigned long long seed) {
    int failures = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.detail.empty()) std::cout << " — " << r.detail;
        std::cout << "\n";
        if (!r.pass) ++failures;
    }
    std::cout << (failures ? "FAILED" : "OK") << " (" << results.size() << " checks, "
              << failures << " failures, seed " << seed << ")\n";
    return failures ? 1 : 0;
}

struct CliState {
    RunConfig cfg;
    std::string config_path;
    std::string l_text;
    std::string theta_text[4];
    std::string suite = "all";
    std::string csv_path;
    std::string table_path;
    int predicted = -1;

    // file config first, then every CLI flag that was actually given
    void merge(CLI::App* cmd) {
        if (!config_path.empty()) {
            RunConfig file = load_config_file(config_path);
            // CLI flags still take precedence: copy file values only where
            // the flag is absent
            RunConfig merged = file;
            auto given = [&](const char* name) {
                auto opt = cmd->get_option_no_throw(name);
                return opt && opt->count() > 0;
            };
            if (given("--poly")) merged.poly = cfg.poly;
            if (given("--overrides")) merged.overrides_path = cfg.overrides_path;
            if (given("--preset")) merged.preset_name = cfg.preset_name;
            if (given("--nprime")) merged.nprime = cfg.nprime;
            if (given("--group-file")) merged.group_file = cfg.group_file;
            if (given("--x")) merged.x = cfg.x;
            if (given("--pmax")) merged.pmax = cfg.pmax;
            if (given("--checkpoints")) merged.checkpoints = cfg.checkpoints;
            if (given("--max-degree")) merged.max_degree = cfg.max_degree;
            if (given("--workers")) merged.workers = cfg.workers;
            if (given("--seed")) merged.seed = cfg.seed;
            if (given("--assume-ii")) merged.assume_ii = cfg.assume_ii;
            if (given("--cache")) merged.cache_path = cfg.cache_path;
            if (given("--output")) merged.output = cfg.output;
            if (given("--mode")) merged.mode = cfg.mode;
            cfg = merged;
        }
        if (!l_text.empty()) cfg.l_list = parse_l_list(l_text);
        if (!theta_text[0].empty()) cfg.theta1 = Rational::parse(theta_text[0]);
        if (!theta_text[1].empty()) cfg.theta2 = Rational::parse(theta_text[1]);
        if (!theta_text[2].empty()) cfg.theta3 = Rational::parse(theta_text[2]);
        if (!theta_text[3].empty()) cfg.theta4 = Rational::parse(theta_text[3]);
    }
};

void add_common_flags(CLI::App* cmd, CliState& st) {
    cmd->add_option("--config", st.config_path, "config file ([field] [group] [theta] [run])");
    cmd->add_option("--poly", st.cfg.poly, "monic polynomial, e.g. x^3-2 or -2,0,0,1");
    cmd->add_option("--overrides", st.cfg.overrides_path, "bad-prime override file");
    cmd->add_option("--preset", st.cfg.preset_name,
                    "group preset: dihedral:K, symmetric:K, a4, galois:cyclic:K");
    cmd->add_option("--nprime", st.cfg.nprime, "N' choice, e.g. trivial or order2");
    cmd->add_option("--group-file", st.cfg.group_file, "custom group multiplication table file");
    cmd->add_option("--l", st.l_text, "comma-separated moment exponents, e.g. 2,3");
    cmd->add_option("--x", st.cfg.x, "sieve bound X");
    cmd->add_option("--pmax", st.cfg.pmax, "prime cache bound");
    cmd->add_option("--checkpoints", st.cfg.checkpoints, "checkpoint count (default 64)");
    cmd->add_option("--max-degree", st.cfg.max_degree, "largest candidate fit degree");
    cmd->add_option("--workers", st.cfg.workers, "worker threads (0 = hardware)");
    cmd->add_option("--seed", st.cfg.seed, "seed for sampled property tests");
    cmd->add_option("--assume-ii", st.cfg.assume_ii,
                    "declared truth of assumption (II); echoed, never verified");
    cmd->add_option("--cache", st.cfg.cache_path, "splitting cache file to reuse or create");
    cmd->add_option("--output", st.cfg.output, "output file (default stdout)");
    cmd->add_option("--theta1", st.theta_text[0], "override theta1 (rational, e.g. 13/42)");
    cmd->add_option("--theta2", st.theta_text[1], "override theta2");
    cmd->add_option("--theta3", st.theta_text[2], "override theta3");
    cmd->add_option("--theta4", st.theta_text[3], "override theta4");
    cmd->add_option("--mode", st.cfg.mode, "delta mode: direct | dedekind | both");
}

int cmd_group(CliState& st) {
    Preset p = load_preset(st.cfg);
    GroupAnalysis a =
        analyze_group(p, st.cfg.nprime, st.cfg.l_list, st.cfg.assume_ii, theta_overrides(st.cfg));
    emit(group_analysis_json(a), st.cfg.output);
    return 0;
}

int cmd_splitting(CliState& st) {
    if (st.cfg.poly.empty()) throw std::invalid_argument("splitting needs --poly");
    if (st.cfg.pmax < 2) throw std::invalid_argument("splitting needs --pmax >= 2");
    FieldPresentation field = make_field(parse_poly(st.cfg.poly));
    BadPrimeOverride ov = resolve_overrides(st.cfg);
    PrimeSplittingCache cache = resolve_cache(st.cfg, field, ov, st.cfg.pmax);

    nlohmann::ordered_json j;
    j["field"] = field.f.str();
    j["degree"] = field.degree;
    j["disc"] = field.disc.get_str();
    j["irreducibility"] = field.irreducibility_certificate;
    j["pmax"] = cache.pmax;
    j["primes"] = cache.size();
    j["fingerprint"] = cache.fingerprint;

    auto freq = observed_splitting_frequencies(cache, true);
    std::map<std::vector<int>, double> density;
    if (!st.cfg.preset_name.empty() || !st.cfg.group_file.empty()) {
        Preset p = load_preset(st.cfg);
        const NprimeChoice& choice = find_nprime(p, st.cfg.nprime);
        SubgroupData nprime = make_subgroup(p.pres.N, choice.members);
        GroupInvariants inv = group_invariants(p.pres, nprime);
        st.cfg.validate_pairing(field.degree, inv.n_dprime);
        std::vector<uint16_t> gp_members;
        for (uint16_t n : choice.members)
            for (int h = 0; h < p.pres.H.order; ++h)
                gp_members.push_back(uint16_t(n * p.pres.H.order + h));
        density = expected_splitting_densities(p.pres.G, make_subgroup(p.pres.G, gp_members));
    }
    nlohmann::ordered_json types = nlohmann::ordered_json::array();
    for (const auto& [type, f] : freq) {
        nlohmann::ordered_json t;
        std::string s;
        for (size_t i = 0; i < type.size(); ++i) s += (i ? "," : "") + std::to_string(type[i]);
        t["type"] = s;
        t["frequency"] = f;
        if (!density.empty()) {
            double d = density.count(type) ? density.at(type) : 0.0;
            t["density"] = d;
            t["delta"] = f - d;
        }
        types.push_back(t);
    }
    j["splitting_types"] = types;
    emit(j.dump(2), st.cfg.output);
    return 0;
}

int cmd_moments(CliState& st) {
    if (st.cfg.poly.empty()) throw std::invalid_argument("moments needs --poly");
    if (st.cfg.x < 4) throw std::invalid_argument("moments needs --x");
    FieldPresentation field = make_field(parse_poly(st.cfg.poly));
    BadPrimeOverride ov = resolve_overrides(st.cfg);

    SieveTable table;
    std::string fingerprint = cache_fingerprint(field, ov);
    bool have_table = false;
    if (!st.table_path.empty()) {
        std::ifstream probe(st.table_path);
        if (probe.good()) {
            table = load_sieve_table(fingerprint, st.table_path);
            if (table.X >= st.cfg.x) have_table = true;
            else std::cerr << "sieve table bound " << table.X << " below " << st.cfg.x
                           << "; resieving\n";
        }
    }
    if (!have_table) {
        PrimeSplittingCache cache = resolve_cache(st.cfg, field, ov, (long long)st.cfg.x);
        table = sieve_a_values(cache, st.cfg.x);
        if (!st.table_path.empty()) save_sieve_table(table, fingerprint, st.table_path);
    }
    auto cps = geometric_checkpoints(st.cfg.x, st.cfg.checkpoints);
    for (int l : st.cfg.l_list) {
        MomentSeries series = partial_sums(table, l, cps);
        std::string path = st.cfg.output.empty() ? ("moments_l" + std::to_string(l) + ".csv")
                                                 : (st.cfg.output + "_l" + std::to_string(l) +
                                                    ".csv");
        write_moment_csv(series, path);
        std::cout << "wrote " << path << " (" << series.points.size() << " checkpoints)\n";
    }
    return 0;
}

int cmd_fit(CliState& st) {
    if (st.csv_path.empty()) throw std::invalid_argument("fit needs --csv");
    MomentSeries series = read_moment_csv(st.csv_path);
    series.l = st.cfg.l_list.size() == 1 ? st.cfg.l_list[0] : 0;
    FitReport rep = select_degree(samples_from_series(series), st.cfg.max_degree);
    if (st.predicted >= 0) {
        attach_prediction(rep, st.predicted);
    } else if (!st.cfg.preset_name.empty() && st.cfg.l_list.size() == 1) {
        Preset p = load_preset(st.cfg);
        SubgroupData nprime = make_subgroup(p.pres.N, find_nprime(p, st.cfg.nprime).members);
        MomentParameters mp = solve_alpha_beta(group_invariants(p.pres, nprime),
                                               st.cfg.l_list[0]);
        attach_prediction(rep, (long long)(mp.alpha - 1));
    }
    emit(fit_report_json(rep, series.l, st.csv_path), st.cfg.output);
    return rep.conclusive ? 0 : 1;
}

int cmd_verify(CliState& st) {
    std::vector<CheckResult> results;
    auto want = [&](const char* s) { return st.suite == s || st.suite == "all"; };

    if (want("group")) {
        auto r = verify_group_suite(st.cfg.seed);
        results.insert(results.end(), r.begin(), r.end());
    }
    if (want("chi1")) {
        auto r = verify_chi1_suite(true);
        results.insert(results.end(), r.begin(), r.end());
    }
    if (want("euler")) {
        auto r = verify_euler_suite(6);
        results.insert(results.end(), r.begin(), r.end());
    }
    if (want("delta")) {
        auto r = verify_delta_suite(st.cfg.seed);
        results.insert(results.end(), r.begin(), r.end());
    }
    if (want("fit")) {
        auto r = verify_fit_suite(st.cfg.seed);
        results.insert(results.end(), r.begin(), r.end());
    }

    bool field_suites = want("divisibility") || want("oracle") || want("chebotarev") ||
                        want("sieve");
    if (field_suites) {
        std::string poly = st.cfg.poly.empty() ? "x^3-2" : st.cfg.poly;
        long long pmax = st.cfg.pmax > 0 ? st.cfg.pmax : 1000000;
        uint64_t x = st.cfg.x > 0 ? st.cfg.x : 1000000;
        RunConfig sub = st.cfg;
        sub.poly = poly;
        FieldPresentation field = make_field(parse_poly(poly));
        BadPrimeOverride ov = resolve_overrides(sub);
        PrimeSplittingCache cache = resolve_cache(sub, field, ov, std::max<long long>(pmax, x));
        if (want("divisibility")) {
            auto r = verify_divisibility(field, cache);
            results.insert(results.end(), r.begin(), r.end());
        }
        if (want("oracle")) {
            auto r = verify_oracles(field, cache, ov, std::min<long long>(pmax, 100000), 10000);
            results.insert(results.end(), r.begin(), r.end());
        }
        if (want("chebotarev")) {
            std::string preset_name = st.cfg.preset_name;
            if (preset_name.empty()) {
                if (poly == "x^3-2") preset_name = "dihedral:3";
                else if (poly == "x^4-2") preset_name = "dihedral:4";
                else if (poly == "x^2+1") preset_name = "galois:cyclic:2";
            }
            if (preset_name.empty()) {
                results.push_back({"chebotarev", false, "no --preset for this field"});
            } else {
                Preset p = preset(preset_name);
                const NprimeChoice& choice = find_nprime(p, st.cfg.nprime);
                std::vector<uint16_t> gp;
                for (uint16_t n : choice.members)
                    for (int h = 0; h < p.pres.H.order; ++h)
                        gp.push_back(uint16_t(n * p.pres.H.order + h));
                auto r = verify_chebotarev(field, cache, p.pres.G,
                                           make_subgroup(p.pres.G, gp));
                results.insert(results.end(), r.begin(), r.end());
            }
        }
        if (want("sieve")) {
            auto r = verify_sieve_suite(field, cache, x, st.cfg.seed);
            results.insert(results.end(), r.begin(), r.end());
        }
    }
    if (results.empty())
        throw std::invalid_argument("unknown suite '" + st.suite +
                                    "' (group, chi1, euler, delta, fit, divisibility, oracle, "
                                    "chebotarev, sieve, all)");
    return print_results(results, st.cfg.seed);
}

int cmd_report(CliState& st) {
    if (st.cfg.poly.empty() || (st.cfg.preset_name.empty() && st.cfg.group_file.empty()))
        throw std::invalid_argument("report needs a field and a group (--poly, --preset)");
    if (st.cfg.x < 4) throw std::invalid_argument("report needs --x");

    Preset p = load_preset(st.cfg);
    FieldPresentation field = make_field(parse_poly(st.cfg.poly));
    const NprimeChoice& choice = find_nprime(p, st.cfg.nprime);
    SubgroupData nprime = make_subgroup(p.pres.N, choice.members);
    GroupInvariants inv = group_invariants(p.pres, nprime);
    st.cfg.validate_pairing(field.degree, inv.n_dprime);

    GroupAnalysis a =
        analyze_group(p, st.cfg.nprime, st.cfg.l_list, st.cfg.assume_ii, theta_overrides(st.cfg));

    BadPrimeOverride ov = resolve_overrides(st.cfg);
    PrimeSplittingCache cache = resolve_cache(st.cfg, field, ov, (long long)st.cfg.x);
    SieveTable table = sieve_a_values(cache, st.cfg.x);
    auto cps = geometric_checkpoints(st.cfg.x, st.cfg.checkpoints);

    nlohmann::ordered_json j = nlohmann::ordered_json::parse(group_analysis_json(a));
    j["field"] = {{"poly", field.f.str()},
                  {"degree", field.degree},
                  {"disc", field.disc.get_str()},
                  {"x", st.cfg.x}};
    nlohmann::ordered_json fits;
    for (int l : st.cfg.l_list) {
        if (!a.assumptions.assumption_III.at(l)) continue;
        MomentSeries series = partial_sums(table, l, cps);
        FitReport rep = select_degree(samples_from_series(series), st.cfg.max_degree);
        MomentParameters mp = solve_alpha_beta(inv, l);
        attach_prediction(rep, (long long)(mp.alpha - 1));
        fits[std::to_string(l)] = nlohmann::ordered_json::parse(
            fit_report_json(rep, l, field.f.str()));
    }
    j["fits"] = fits;
    emit(j.dump(2), st.cfg.output);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"moments of Dedekind zeta coefficients: group characters, prime splitting, "
                 "moment sums, and asymptotic fits"};
    app.require_subcommand(1);

    CliState st;
    auto* group_cmd = app.add_subcommand("group", "character/assumption analysis of a preset");
    auto* split_cmd = app.add_subcommand("splitting", "build a prime splitting cache");
    auto* mom_cmd = app.add_subcommand("moments", "sieve a(m) and write S_l checkpoints");
    auto* fit_cmd = app.add_subcommand("fit", "fit X*P(log X) to a checkpoint CSV");
    auto* ver_cmd = app.add_subcommand("verify", "run bundled property suites");
    auto* rep_cmd = app.add_subcommand("report", "end-to-end analysis report");
    for (auto* cmd : {group_cmd, split_cmd, mom_cmd, fit_cmd, ver_cmd, rep_cmd})
        add_common_flags(cmd, st);
    fit_cmd->add_option("--csv", st.csv_path, "checkpoint CSV from the moments subcommand");
    mom_cmd->add_option("--table", st.table_path, "binary sieve table to reuse or create");
    fit_cmd->add_option("--predicted-degree", st.predicted, "expected degree to compare against");
    ver_cmd->add_option("--suite", st.suite,
                        "group | chi1 | euler | delta | fit | divisibility | oracle | "
                        "chebotarev | sieve | all");

    CLI11_PARSE(app, argc, argv);

    try {
        CLI::App* active = app.get_subcommands().front();
        st.merge(active);
        if (active == group_cmd) return cmd_group(st);
        if (active == split_cmd) return cmd_splitting(st);
        if (active == mom_cmd) return cmd_moments(st);
        if (active == fit_cmd) return cmd_fit(st);
        if (active == ver_cmd) return cmd_verify(st);
        if (active == rep_cmd) return cmd_report(st);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
