#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zmom/char_engine.hpp"
#include "zmom/group.hpp"

namespace zmom {

struct ThetaOverrides {
    std::optional<Rational> theta1;
    std::optional<Rational> theta2;
    std::optional<Rational> theta3;
    std::optional<Rational> theta4;

    SubconvexityConfig apply(SubconvexityConfig base) const;
};

struct PerLReport {
    int l = 0;
    bool assumption_III = false;
    std::optional<MomentParameters> params;
    std::optional<DeltaReport> delta_direct;
    std::optional<DeltaReport> delta_dedekind;
    std::optional<EulerReport> euler;
    std::string dedekind_note;
};

// Everything cmd_group_analyze emits: invariants, assumption report,
// alpha/beta/degree/delta per l, and the per-class Euler identity table.
struct GroupAnalysis {
    std::string preset_name;
    std::string nprime_name;
    bool normality_via_parts = false; // N' normal in N and phi-stable
    bool normality_in_g = false;     // N' normal in G
    GroupInvariants invariants;
    AssumptionReport assumptions;
    std::vector<PerLReport> per_l;
};

GroupAnalysis analyze_group(const Preset& preset, const std::string& nprime_name,
                            const std::vector<int>& l_list, std::optional<bool> declared_II,
                            const ThetaOverrides& thetas);

std::string group_analysis_json(const GroupAnalysis& a);

} // namespace zmom
