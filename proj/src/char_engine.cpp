#include "zmom/char_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace zmom {

ClassFunction product(const ClassFunction& a, const ClassFunction& b) {
    if (a.cd != b.cd) throw std::invalid_argument("class functions live on different groups");
    ClassFunction r;
    r.cd = a.cd;
    r.values.resize(a.values.size());
    for (size_t i = 0; i < a.values.size(); ++i) r.values[i] = a.values[i] * b.values[i];
    return r;
}

ClassFunction difference(const ClassFunction& a, const ClassFunction& b) {
    if (a.cd != b.cd) throw std::invalid_argument("class functions live on different groups");
    ClassFunction r;
    r.cd = a.cd;
    r.values.resize(a.values.size());
    for (size_t i = 0; i < a.values.size(); ++i) r.values[i] = a.values[i] - b.values[i];
    return r;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.cd != g.cd) throw std::invalid_argument("class functions live on different groups");
    i128 total = 0;
    long long order = 0;
    for (size_t c = 0; c < f.cd->count(); ++c) {
        long long size = (long long)f.cd->classes[c].size();
        total += i128(size) * f.values[c] * g.values[c];
        order += size;
    }
    if (total > i128(INT64_MAX) || total < i128(INT64_MIN))
        throw std::overflow_error("inner product exceeds 64-bit range");
    return Rational((long long)total, order);
}

namespace {

// per-element chi values collapsed onto classes, with a constancy check
ClassFunction collapse(const ClassData& cd, const std::vector<long long>& per_element) {
    ClassFunction f;
    f.cd = &cd;
    f.values.assign(cd.count(), 0);
    std::vector<char> seen(cd.count(), 0);
    for (size_t g = 0; g < per_element.size(); ++g) {
        int c = cd.class_of[g];
        if (!seen[c]) {
            f.values[c] = per_element[g];
            seen[c] = 1;
        } else if (f.values[c] != per_element[g]) {
            throw std::logic_error("value not constant on a conjugacy class");
        }
    }
    return f;
}

} // namespace

ClassFunction chi1_formula(const SemidirectPresentation& pres, const SubgroupData& nprime,
                           const ClassData& cd) {
    auto [c1, c2] = check_normality_equivalence(pres, nprime);
    if (!c1 || !c2)
        throw std::invalid_argument("chi1_formula requires N' normal in G");

    Quotient nq = make_quotient(pres.N, nprime);
    const int hn = pres.H.order;

    // image of x -> x phi_h(x^{-1}) on N'' and |N''_h|, per h
    std::vector<std::vector<char>> in_image(hn, std::vector<char>(nq.q.order, 0));
    std::vector<long long> fix_size(hn, 0);
    for (int h = 0; h < hn; ++h) {
        auto bar = quotient_action_map(pres, nprime, nq, h);
        for (int x = 0; x < nq.q.order; ++x) {
            in_image[h][nq.q.mul(x, nq.q.inverse(bar[x]))] = 1;
            if (bar[x] == x) ++fix_size[h];
        }
    }
    fix_size[pres.H.identity] = nq.q.order; // |N''_{e_H}| read as |N''|

    std::vector<long long> per_element(pres.G.order, 0);
    for (int g = 0; g < pres.G.order; ++g) {
        auto [n, h] = pres.decompose(g);
        int n1 = nq.coset_of[n];
        per_element[g] = in_image[h][n1] ? fix_size[h] : 0;
    }
    return collapse(cd, per_element);
}

ClassFunction chi1_permutation(const FiniteGroup& G, const SubgroupData& gprime,
                               const ClassData& cd) {
    CosetAction act = coset_action(G, gprime);
    std::vector<long long> per_element(G.order, 0);
    for (int g = 0; g < G.order; ++g) per_element[g] = act.fixed_points(g);
    return collapse(cd, per_element);
}

ClassFunction chi2(const SemidirectPresentation& pres, const ClassData& cd) {
    const long long h = pres.H.order;
    std::vector<long long> per_element(pres.G.order, 0);
    for (int g = 0; g < pres.G.order; ++g) {
        auto [n, hh] = pres.decompose(g);
        per_element[g] = (hh == pres.H.identity) ? h - 1 : -1;
    }
    return collapse(cd, per_element);
}

bool assumption_iii_holds(const GroupInvariants& inv, int l) {
    if (l < 1) throw std::invalid_argument("l must be positive");
    i128 lhs = pow_checked_i128(inv.n_dprime, l - 1);
    for (const auto& [h, size] : inv.n_h_dprime) {
        i128 rhs = pow_checked_i128(size, l - 1);
        if ((lhs - rhs) % inv.h != 0) return false;
    }
    return true;
}

MomentParameters solve_alpha_beta(const GroupInvariants& inv, int l) {
    if (l < 1) throw std::invalid_argument("l must be positive");
    if (!inv.fixed_sizes_all_equal())
        throw std::invalid_argument("assumption (I) fails; alpha/beta are undefined");
    long long nh = inv.common_fixed_size();
    i128 a = pow_checked_i128(inv.n_dprime, l - 1);
    i128 b = pow_checked_i128(nh, l - 1);
    if ((a - b) % inv.h != 0)
        throw std::invalid_argument("assumption (III) fails for l=" + std::to_string(l) +
                                    ": h does not divide n''^{l-1} - n''_h^{l-1}");
    MomentParameters mp;
    mp.l = l;
    mp.beta = (a - b) / inv.h;
    mp.alpha = mp.beta + b;

    // check against the 2x2 system: alpha + (h-1) beta = n''^{l-1}, alpha - beta = n''_h^{l-1}
    if (mp.alpha + (inv.h - 1) * mp.beta != a || mp.alpha - mp.beta != b)
        throw std::logic_error("alpha/beta do not satisfy the linear system");
    return mp;
}

AssumptionReport check_assumptions(const SemidirectPresentation& pres, const SubgroupData& nprime,
                                   const std::vector<int>& l_range,
                                   std::optional<bool> declared_II) {
    GroupInvariants inv = group_invariants(pres, nprime);
    AssumptionReport rep;
    rep.nprime_normal = inv.nprime_normal;
    rep.assumption_II = declared_II;
    rep.fixed_sizes = inv.n_h_dprime;

    // (I): all fixed subgroups coincide as sets, not merely in size
    rep.assumption_I = inv.fixed_sizes_all_equal();
    if (rep.assumption_I && inv.nprime_normal && pres.H.order > 1) {
        Quotient nq = make_quotient(pres.N, nprime);
        std::vector<uint16_t> first;
        for (int h = 0; h < pres.H.order; ++h) {
            if (h == pres.H.identity) continue;
            auto fixed = fixed_subgroup(pres, nprime, nq, h).members;
            if (first.empty())
                first = fixed;
            else if (fixed != first) {
                rep.assumption_I = false;
                rep.witness = "N''_h differs as a set at h index " + std::to_string(h);
                break;
            }
        }
    } else if (!rep.assumption_I) {
        rep.witness = "|N''_h| values differ";
    }

    for (int l : l_range) rep.assumption_III[l] = assumption_iii_holds(inv, l);
    return rep;
}

EulerReport verify_first_order_euler(const SemidirectPresentation& pres,
                                     const SubgroupData& nprime, int l) {
    ClassData cd = conjugacy_classes(pres.G);
    ClassFunction c1 = chi1_formula(pres, nprime, cd);
    ClassFunction c2 = chi2(pres, cd);
    ClassFunction c1c2 = product(c1, c2); // the chi1 (x) chi2 character
    GroupInvariants inv = group_invariants(pres, nprime);

    EulerReport rep;
    rep.l = l;
    rep.params = solve_alpha_beta(inv, l);
    rep.all_ok = true;
    for (size_t c = 0; c < cd.count(); ++c) {
        EulerRow row;
        row.class_index = int(c);
        row.representative = cd.classes[c].representative;
        row.class_size = (long long)cd.classes[c].size();
        row.chi1 = c1.values[c];
        row.chi2 = c2.values[c];
        row.lhs = pow_checked_i128(row.chi1, l);
        row.rhs = mul_checked_i128(rep.params.alpha, row.chi1) +
                  mul_checked_i128(rep.params.beta, c1c2.values[c]);
        row.ok = row.lhs == row.rhs;
        rep.all_ok = rep.all_ok && row.ok;
        rep.rows.push_back(row);
    }
    return rep;
}

SubconvexityConfig SubconvexityConfig::defaults(const GroupInvariants& inv, DeltaMode mode) {
    SubconvexityConfig c;
    c.theta1 = Rational(13, 42);
    c.theta2 = Rational(inv.n_dprime, 3) - Rational(1);
    c.theta3 = Rational(inv.n_dprime, 3);
    c.theta4 = Rational(inv.n_dprime * (inv.h - 1), 2);
    c.mode = mode;
    return c;
}

DeltaReport compute_delta(const MomentParameters& params, const SubconvexityConfig& config) {
    Rational theta3 = config.mode == DeltaMode::dedekind ? config.theta1 + config.theta2
                                                         : config.theta3;
    if (theta3 <= Rational(0))
        throw std::domain_error("effective theta3 must be positive (got " + theta3.str() + ")");
    if (params.beta > 0 && config.theta4 <= Rational(0))
        throw std::domain_error("theta4 must be positive when beta > 0");
    if (params.alpha > i128(INT64_MAX) || params.beta > i128(INT64_MAX))
        throw std::overflow_error("alpha/beta too large for exact delta arithmetic");
    Rational denom = Rational((long long)params.alpha) * theta3 +
                     Rational((long long)params.beta) * config.theta4 + Rational(2);
    DeltaReport rep;
    rep.delta = Rational(1) / denom;
    rep.one_minus_delta = Rational(1) - rep.delta;
    rep.config = config;
    rep.poly_degree = params.alpha - 1;
    return rep;
}

} // namespace zmom
