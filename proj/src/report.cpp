#include "zmom/report.hpp"

#include "json.hpp"

namespace zmom {

SubconvexityConfig ThetaOverrides::apply(SubconvexityConfig base) const {
    if (theta1) base.theta1 = *theta1;
    if (theta2) base.theta2 = *theta2;
    if (theta3) base.theta3 = *theta3;
    if (theta4) base.theta4 = *theta4;
    return base;
}

GroupAnalysis analyze_group(const Preset& preset, const std::string& nprime_name,
                            const std::vector<int>& l_list, std::optional<bool> declared_II,
                            const ThetaOverrides& thetas) {
    GroupAnalysis a;
    a.preset_name = preset.name;
    a.nprime_name = nprime_name;

    const NprimeChoice& choice = find_nprime(preset, nprime_name);
    SubgroupData nprime = make_subgroup(preset.pres.N, choice.members);

    auto [c1, c2] = check_normality_equivalence(preset.pres, nprime);
    a.normality_via_parts = c1;
    a.normality_in_g = c2;
    a.invariants = group_invariants(preset.pres, nprime);
    a.assumptions = check_assumptions(preset.pres, nprime, l_list, declared_II);

    for (int l : l_list) {
        PerLReport r;
        r.l = l;
        r.assumption_III = a.assumptions.assumption_III.at(l);
        if (r.assumption_III && a.assumptions.assumption_I) {
            r.params = solve_alpha_beta(a.invariants, l);
            SubconvexityConfig direct =
                thetas.apply(SubconvexityConfig::defaults(a.invariants, DeltaMode::direct));
            r.delta_direct = compute_delta(*r.params, direct);
            SubconvexityConfig dedekind =
                thetas.apply(SubconvexityConfig::defaults(a.invariants, DeltaMode::dedekind));
            try {
                r.delta_dedekind = compute_delta(*r.params, dedekind);
            } catch (const std::domain_error& e) {
                r.dedekind_note = e.what(); // theta1 + theta2 <= 0 for n'' < 3
            }
            if (a.invariants.nprime_normal)
                r.euler = verify_first_order_euler(preset.pres, nprime, l);
        }
        a.per_l.push_back(std::move(r));
    }
    return a;
}

namespace {

nlohmann::ordered_json delta_json(const DeltaReport& d) {
    nlohmann::ordered_json j;
    j["delta"] = d.delta.str();
    j["one_minus_delta"] = d.one_minus_delta.str();
    j["theta"] = {{"theta1", d.config.theta1.str()},
                  {"theta2", d.config.theta2.str()},
                  {"theta3", d.config.theta3.str()},
                  {"theta4", d.config.theta4.str()}};
    return j;
}

} // namespace

std::string group_analysis_json(const GroupAnalysis& a) {
    nlohmann::ordered_json j;
    j["group"] = a.preset_name;
    j["nprime"] = a.nprime_name;
    j["normality_equivalence"] = {{"normal_in_n_and_phi_stable", a.normality_via_parts},
                   {"normal_in_g", a.normality_in_g},
                   {"holds", a.invariants.nprime_normal}};
    j["n"] = a.invariants.n;
    j["n_prime"] = a.invariants.n_prime;
    j["n_dprime"] = a.invariants.n_dprime;
    j["h"] = a.invariants.h;
    nlohmann::ordered_json fixed = nlohmann::ordered_json::array();
    for (auto [h, size] : a.invariants.n_h_dprime)
        fixed.push_back({{"h_index", h}, {"size", size}});
    j["n_h_dprime"] = fixed;

    nlohmann::ordered_json asm_json;
    asm_json["I"] = a.assumptions.assumption_I;
    if (a.assumptions.assumption_II)
        asm_json["II"] = {{"declared", *a.assumptions.assumption_II}, {"verified", false}};
    else
        asm_json["II"] = {{"declared", nullptr}, {"verified", false}};
    nlohmann::ordered_json iii;
    for (auto [l, ok] : a.assumptions.assumption_III) iii[std::to_string(l)] = ok;
    asm_json["III"] = iii;
    if (!a.assumptions.witness.empty()) asm_json["witness"] = a.assumptions.witness;
    j["assumptions"] = asm_json;
    j["note"] = "per_l conclusions are conditional on assumption II as declared";

    nlohmann::ordered_json per_l;
    for (const auto& r : a.per_l) {
        nlohmann::ordered_json e;
        e["assumption_III"] = r.assumption_III;
        if (r.params) {
            e["alpha"] = to_string_i128(r.params->alpha);
            e["beta"] = to_string_i128(r.params->beta);
            e["degree"] = to_string_i128(r.params->alpha - 1);
        }
        if (r.delta_direct) e["delta_direct"] = delta_json(*r.delta_direct);
        if (r.delta_dedekind) e["delta_dedekind"] = delta_json(*r.delta_dedekind);
        if (!r.dedekind_note.empty()) e["dedekind_note"] = r.dedekind_note;
        per_l[std::to_string(r.l)] = e;
    }
    j["per_l"] = per_l;

    nlohmann::ordered_json euler = nlohmann::ordered_json::array();
    for (const auto& r : a.per_l) {
        if (!r.euler) continue;
        for (const auto& row : r.euler->rows) {
            euler.push_back({{"l", r.l},
                             {"class", row.class_index},
                             {"size", row.class_size},
                             {"chi1", row.chi1},
                             {"chi2", row.chi2},
                             {"lhs", to_string_i128(row.lhs)},
                             {"rhs", to_string_i128(row.rhs)},
                             {"ok", row.ok}});
        }
    }
    j["euler_identity"] = euler;
    return j.dump(2);
}

} // namespace zmom
