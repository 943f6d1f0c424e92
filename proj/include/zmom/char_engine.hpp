#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zmom/group.hpp"
#include "zmom/rational.hpp"
#include "zmom/wide_int.hpp"

namespace zmom {

// Integer-valued class function, constant on conjugacy classes by
// construction. `cd` identifies the group; mixing class functions from
// different ClassData instances is an error.
struct ClassFunction {
    const ClassData* cd = nullptr;
    std::vector<long long> values; // one per class

    long long at_element(int g) const { return values[cd->class_of[g]]; }
};

ClassFunction product(const ClassFunction& a, const ClassFunction& b); // chi1 (x) chi2 as characters
ClassFunction difference(const ClassFunction& a, const ClassFunction& b); // e.g. chi1' = chi1 - 1

// <f,g> = (1/|G|) sum_g f(g) g(g); integer-valued characters, no conjugation.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

// Closed form for the induced character chi_1 = Ind_{G'}^G 1 with
// G' = N' x| H: value |N''_h| on elements n1 n2 h whose N''-part lies in the
// image of x -> x phi_h(x^{-1}), zero elsewhere (|N''_{e_H}| read as |N''|).
// Requires N' normal in G.
ClassFunction chi1_formula(const SemidirectPresentation& pres, const SubgroupData& nprime,
                           const ClassData& cd);

// Independent realization: number of fixed cosets of g acting on G/G'.
// Defined for arbitrary subgroups G' of G.
ClassFunction chi1_permutation(const FiniteGroup& G, const SubgroupData& gprime,
                               const ClassData& cd);

// chi_2 = character of (+)_{pi != 1_H} pi^{dim pi} pulled back through G -> H:
// |H|-1 on N, -1 off N. Identically zero when H is trivial.
ClassFunction chi2(const SemidirectPresentation& pres, const ClassData& cd);

struct MomentParameters {
    int l = 0;
    i128 alpha = 0;
    i128 beta = 0;
};

// alpha = (n''^{l-1} - n''_h^{l-1})/h + n''_h^{l-1}, beta = the shared first
// term; throws if assumption (III) fails (h does not divide the difference).
// The result is checked against the 2x2 system before returning.
MomentParameters solve_alpha_beta(const GroupInvariants& inv, int l);

bool assumption_iii_holds(const GroupInvariants& inv, int l);

struct AssumptionReport {
    bool assumption_I = false;
    std::optional<bool> assumption_II; // declared by the user, never computed
    std::map<int, bool> assumption_III;
    bool nprime_normal = false;
    // witness when (I) fails: the (h, |N''_h|) table
    std::vector<std::pair<int, long long>> fixed_sizes;
    std::string witness;
};

AssumptionReport check_assumptions(const SemidirectPresentation& pres, const SubgroupData& nprime,
                                   const std::vector<int>& l_range,
                                   std::optional<bool> declared_II);

struct EulerRow {
    int class_index = 0;
    int representative = 0;
    long long class_size = 0;
    long long chi1 = 0;
    long long chi2 = 0;
    i128 lhs = 0; // chi1^l
    i128 rhs = 0; // alpha chi1 + beta chi1 chi2
    bool ok = false;
};

struct EulerReport {
    int l = 0;
    MomentParameters params;
    std::vector<EulerRow> rows;
    bool all_ok = false;
};

// Vanishing of the p^{-s} coefficient of U_l: chi1(g)^l = alpha chi1(g) +
// beta chi1(g) chi2(g) on every conjugacy class.
EulerReport verify_first_order_euler(const SemidirectPresentation& pres,
                                     const SubgroupData& nprime, int l);

enum class DeltaMode { direct, dedekind };

struct SubconvexityConfig {
    Rational theta1{13, 42}; // Bourgain bound for zeta
    Rational theta2{0};      // Soehne: n''/3 - 1
    Rational theta3{0};      // Heath-Brown: n''/3
    Rational theta4{0};      // convexity default: n''(h-1)/2
    DeltaMode mode = DeltaMode::direct;

    static SubconvexityConfig defaults(const GroupInvariants& inv, DeltaMode mode);
};

struct DeltaReport {
    Rational delta;
    Rational one_minus_delta;
    SubconvexityConfig config;
    i128 poly_degree = 0; // alpha(l) - 1
};

// delta = 1/(alpha theta3 + beta theta4 + 2); dedekind mode substitutes
// theta1 + theta2 for theta3.
DeltaReport compute_delta(const MomentParameters& params, const SubconvexityConfig& config);

} // namespace zmom
