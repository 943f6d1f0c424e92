#include "zmom/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "zmom/asympt_fit.hpp"
#include "zmom/char_engine.hpp"

namespace zmom {

bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

namespace {

CheckResult check(std::string name, bool pass, std::string detail = "") {
    return {std::move(name), pass, std::move(detail)};
}

std::vector<std::string> standard_preset_names(bool include_s6) {
    std::vector<std::string> names = {"dihedral:3", "dihedral:4", "dihedral:5", "a4",
                                      "galois:cyclic:2", "galois:cyclic:3", "galois:cyclic:4",
                                      "galois:cyclic:5", "galois:cyclic:6"};
    if (include_s6) names.push_back("symmetric:6");
    return names;
}

SubgroupData embedded_gprime(const SemidirectPresentation& pres,
                             const std::vector<uint16_t>& nprime_members) {
    std::vector<uint16_t> members;
    for (uint16_t n : nprime_members)
        for (int h = 0; h < pres.H.order; ++h)
            members.push_back(uint16_t(n * pres.H.order + h));
    return make_subgroup(pres.G, std::move(members));
}

std::string vec_str(const std::vector<int>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

std::vector<long long> divisors_of(long long d) {
    std::vector<long long> out;
    for (long long k = 1; k <= d; ++k)
        if (d % k == 0) out.push_back(k);
    return out;
}

} // namespace

std::map<std::vector<int>, double> expected_splitting_densities(const FiniteGroup& G,
                                                                const SubgroupData& gprime) {
    CosetAction act = coset_action(G, gprime);
    ClassData cd = conjugacy_classes(G);
    std::map<std::vector<int>, double> density;
    for (const auto& cls : cd.classes)
        density[act.cycle_type(cls.representative)] += double(cls.size()) / G.order;
    return density;
}

std::map<std::vector<int>, double> observed_splitting_frequencies(
    const PrimeSplittingCache& cache, bool unramified_only) {
    std::map<std::vector<int>, double> freq;
    size_t total = 0;
    for (size_t i = 0; i < cache.size(); ++i) {
        const SplittingType& t = cache.type_at(i);
        if (unramified_only && t.ramified) continue;
        freq[t.residue_degrees] += 1.0;
        ++total;
    }
    for (auto& [k, v] : freq) v /= double(total);
    return freq;
}

// ---------------------------------------------------------------------------
// group suite

std::vector<CheckResult> verify_group_suite(uint64_t seed) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(seed);
    for (const auto& name : standard_preset_names(true)) {
        Preset p = preset(name);
        const FiniteGroup& G = p.pres.G;

        // associativity: exhaustive through order 200, sampled above
        bool assoc = true;
        if (G.order <= 200) {
            for (int a = 0; a < G.order && assoc; ++a)
                for (int b = 0; b < G.order && assoc; ++b)
                    for (int c = 0; c < G.order; ++c)
                        if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) {
                            assoc = false;
                            break;
                        }
        } else {
            std::uniform_int_distribution<int> pick(0, G.order - 1);
            for (int i = 0; i < 100000 && assoc; ++i) {
                int a = pick(rng), b = pick(rng), c = pick(rng);
                assoc = G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c));
            }
        }
        out.push_back(check(name + "/associativity", assoc,
                            G.order <= 200 ? "exhaustive" : "sampled 1e5 triples"));
        out.push_back(check(name + "/order-product",
                            (long long)G.order == (long long)p.pres.N.order * p.pres.H.order));

        // normality-equivalence booleans agree for every cyclic subgroup of N and every
        // preset N' choice
        bool equiv_agree = true;
        std::string equiv_detail;
        std::set<std::vector<uint16_t>> tested;
        auto test_sub = [&](const SubgroupData& sub) {
            if (!tested.insert(sub.members).second) return;
            auto [c1, c2] = check_normality_equivalence(p.pres, sub);
            if (c1 != c2) {
                equiv_agree = false;
                equiv_detail = "booleans differ for a subgroup of size " +
                               std::to_string(sub.size());
            }
        };
        for (int x = 0; x < p.pres.N.order; ++x)
            test_sub(generated_subgroup(p.pres.N, {uint16_t(x)}));
        for (const auto& c : p.nprime_choices)
            test_sub(make_subgroup(p.pres.N, c.members));
        out.push_back(check(name + "/normality-equivalence", equiv_agree, equiv_detail));

        // coset action is a homomorphism
        for (const auto& c : p.nprime_choices) {
            SubgroupData nprime = make_subgroup(p.pres.N, c.members);
            auto [c1, c2] = check_normality_equivalence(p.pres, nprime);
            if (!(c1 && c2)) continue;
            SubgroupData gp = embedded_gprime(p.pres, c.members);
            CosetAction act = coset_action(G, gp);
            bool hom = true;
            auto check_pair = [&](int g1, int g2) {
                int g12 = G.mul(g1, g2);
                for (int cs = 0; cs < act.num_cosets; ++cs)
                    if (act.image(g12, cs) != act.image(g1, act.image(g2, cs))) return false;
                return true;
            };
            if (G.order <= 200) {
                for (int g1 = 0; g1 < G.order && hom; ++g1)
                    for (int g2 = 0; g2 < G.order; ++g2)
                        if (!check_pair(g1, g2)) { hom = false; break; }
            } else {
                std::uniform_int_distribution<int> pick(0, G.order - 1);
                for (int i = 0; i < 20000 && hom; ++i) hom = check_pair(pick(rng), pick(rng));
            }
            out.push_back(check(name + "/" + c.name + "/coset-action-homomorphism", hom));

            // phi-hat is |N''_h|-to-1 onto its image
            Quotient nq = make_quotient(p.pres.N, nprime);
            bool fibers_ok = true;
            for (int h = 0; h < p.pres.H.order && fibers_ok; ++h) {
                if (h == p.pres.H.identity) continue;
                auto bar = quotient_action_map(p.pres, nprime, nq, h);
                long long fix = (long long)fixed_subgroup(p.pres, nprime, nq, h).size();
                std::map<int, long long> fiber;
                for (int x = 0; x < nq.q.order; ++x)
                    fiber[nq.q.mul(bar[x], nq.q.inverse(x))] += 1;
                for (const auto& [img, count] : fiber)
                    if (count != fix) { fibers_ok = false; break; }
            }
            out.push_back(check(name + "/" + c.name + "/phi-hat-fiber-size", fibers_ok));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// chi1 suite

std::vector<CheckResult> verify_chi1_suite(bool include_s6) {
    std::vector<CheckResult> out;
    for (const auto& name : standard_preset_names(include_s6)) {
        Preset p = preset(name);
        ClassData cd = conjugacy_classes(p.pres.G);
        for (const auto& c : p.nprime_choices) {
            SubgroupData nprime = make_subgroup(p.pres.N, c.members);
            auto [c1, c2] = check_normality_equivalence(p.pres, nprime);
            if (!(c1 && c2)) continue;
            std::string tag = name + "/" + c.name;

            ClassFunction formula = chi1_formula(p.pres, nprime, cd);
            SubgroupData gp = embedded_gprime(p.pres, c.members);
            ClassFunction perm = chi1_permutation(p.pres.G, gp, cd);
            out.push_back(check(tag + "/chi1-formula-vs-permutation",
                                formula.values == perm.values));

            ClassFunction one{&cd, std::vector<long long>(cd.count(), 1)};
            out.push_back(check(tag + "/<1,chi1>=1", inner_product(one, formula) == Rational(1)));

            long long index = p.pres.G.order / (long long)gp.size();
            bool divides = true;
            for (long long v : formula.values)
                if (v != 0 && (v < 0 || index % v != 0)) divides = false;
            out.push_back(check(tag + "/chi1-divides-index", divides));

            // Table 1 rows, per element
            GroupInvariants inv = group_invariants(p.pres, nprime);
            Quotient nq = make_quotient(p.pres.N, nprime);
            ClassFunction c2f = chi2(p.pres, cd);
            bool rows_ok = true;
            std::string row_detail;
            for (int g = 0; g < p.pres.G.order && rows_ok; ++g) {
                auto [n, h] = p.pres.decompose(g);
                long long x1 = formula.at_element(g);
                long long x2 = c2f.at_element(g);
                bool in_n = h == p.pres.H.identity;
                if (x2 != (in_n ? inv.h - 1 : -1)) {
                    rows_ok = false;
                    row_detail = "chi2 row mismatch at g=" + std::to_string(g);
                    break;
                }
                if (in_n) {
                    bool n1_trivial = nq.coset_of[n] == nq.coset_of[p.pres.N.identity];
                    long long expect = n1_trivial ? inv.n_dprime : 0;
                    if (x1 != expect) {
                        rows_ok = false;
                        row_detail = "chi1 row mismatch on N at g=" + std::to_string(g);
                    }
                } else {
                    long long nh = 0;
                    for (auto [hh, s] : inv.n_h_dprime)
                        if (hh == h) nh = s;
                    if (x1 != 0 && x1 != nh) {
                        rows_ok = false;
                        row_detail = "chi1 off N is neither 0 nor |N''_h| at g=" +
                                     std::to_string(g);
                    }
                }
            }
            out.push_back(check(tag + "/table1-rows", rows_ok, row_detail));
        }
    }

    // A3 <= A4 via the embedded C3: chi1 values need not divide the index
    {
        Preset p = preset("a4");
        ClassData cd = conjugacy_classes(p.pres.G);
        std::vector<uint16_t> h_members;
        for (int h = 0; h < 3; ++h) h_members.push_back(uint16_t(p.pres.embed_h(h)));
        ClassFunction vals = chi1_permutation(p.pres.G, make_subgroup(p.pres.G, h_members), cd);
        std::set<long long> seen(vals.values.begin(), vals.values.end());
        out.push_back(check("a4/A3-coset-values",
                            seen == std::set<long long>{0, 1, 4},
                            "values 0, 1, 4 and nothing else"));
        SubgroupData whole = make_subgroup(p.pres.G, [&] {
            std::vector<uint16_t> m(p.pres.G.order);
            for (int i = 0; i < p.pres.G.order; ++i) m[i] = uint16_t(i);
            return m;
        }());
        ClassFunction triv = chi1_permutation(p.pres.G, whole, cd);
        bool const1 = std::all_of(triv.values.begin(), triv.values.end(),
                                  [](long long v) { return v == 1; });
        out.push_back(check("a4/G'-equals-G-gives-constant-1", const1));
    }
    return out;
}

// ---------------------------------------------------------------------------
// euler suite

std::vector<CheckResult> verify_euler_suite(int l_max) {
    std::vector<CheckResult> out;
    for (const auto& name : standard_preset_names(true)) {
        Preset p = preset(name);
        for (const auto& c : p.nprime_choices) {
            SubgroupData nprime = make_subgroup(p.pres.N, c.members);
            auto [c1, c2] = check_normality_equivalence(p.pres, nprime);
            if (!(c1 && c2)) continue;
            GroupInvariants inv = group_invariants(p.pres, nprime);
            if (!inv.fixed_sizes_all_equal()) continue;
            for (int l = 1; l <= l_max; ++l) {
                if (!assumption_iii_holds(inv, l)) continue;
                EulerReport rep = verify_first_order_euler(p.pres, nprime, l);
                std::string detail;
                if (!rep.all_ok)
                    for (const auto& row : rep.rows)
                        if (!row.ok)
                            detail = "class " + std::to_string(row.class_index) + ": " +
                                     to_string_i128(row.lhs) + " != " + to_string_i128(row.rhs);
                out.push_back(check(name + "/" + c.name + "/euler-l" + std::to_string(l),
                                    rep.all_ok, detail));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// delta suite

std::vector<CheckResult> verify_delta_suite(uint64_t seed) {
    std::vector<CheckResult> out;
    {
        Preset p = preset("dihedral:3");
        SubgroupData nprime = make_subgroup(p.pres.N, find_nprime(p, "trivial").members);
        GroupInvariants inv = group_invariants(p.pres, nprime);
        MomentParameters mp = solve_alpha_beta(inv, 2);
        DeltaReport direct =
            compute_delta(mp, SubconvexityConfig::defaults(inv, DeltaMode::direct));
        DeltaReport dedekind =
            compute_delta(mp, SubconvexityConfig::defaults(inv, DeltaMode::dedekind));
        out.push_back(check("s3-l2/delta-direct", direct.delta == Rational(2, 11),
                            "got " + direct.delta.str()));
        out.push_back(check("s3-l2/delta-dedekind", dedekind.delta == Rational(42, 173),
                            "got " + dedekind.delta.str()));
        out.push_back(check("s3-l2/dedekind-sharper", dedekind.delta > direct.delta));
    }
    // monotonicity: decreasing any theta strictly increases delta
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> ab(1, 50);
    std::uniform_int_distribution<long long> num(1, 24);
    std::uniform_int_distribution<long long> den(1, 12);
    bool monotone = true;
    for (int i = 0; i < 500 && monotone; ++i) {
        MomentParameters mp;
        mp.l = 2;
        mp.alpha = ab(rng);
        mp.beta = ab(rng);
        SubconvexityConfig cfg;
        cfg.theta3 = Rational(num(rng), den(rng));
        cfg.theta4 = Rational(num(rng), den(rng));
        cfg.mode = DeltaMode::direct;
        Rational base = compute_delta(mp, cfg).delta;
        SubconvexityConfig lower3 = cfg;
        lower3.theta3 = cfg.theta3 * Rational(1, 2);
        SubconvexityConfig lower4 = cfg;
        lower4.theta4 = cfg.theta4 * Rational(2, 3);
        monotone = compute_delta(mp, lower3).delta > base &&
                   compute_delta(mp, lower4).delta > base;
    }
    out.push_back(check("delta-monotone-in-theta", monotone,
                        "500 sampled configs, seed " + std::to_string(seed)));
    return out;
}

// ---------------------------------------------------------------------------
// field suites

std::vector<CheckResult> verify_divisibility(const FieldPresentation& field,
                                             const PrimeSplittingCache& cache) {
    std::vector<CheckResult> out;
    auto divisors = divisors_of(field.degree);
    long long violations = 0;
    size_t checked = 0;
    for (size_t i = 0; i < cache.size(); ++i) {
        const SplittingType& t = cache.type_at(i);
        if (t.ramified) continue;
        ++checked;
        long long a = a_at_prime_power(t, 1);
        if (a != 0 && !std::binary_search(divisors.begin(), divisors.end(), a)) ++violations;
    }
    out.push_back(check(field.f.str() + "/a(p)-divides-degree", violations == 0,
                        std::to_string(checked) + " unramified primes, " +
                            std::to_string(violations) + " violations"));
    return out;
}

std::vector<CheckResult> verify_oracles(const FieldPresentation& field,
                                        const PrimeSplittingCache& cache,
                                        const BadPrimeOverride& overrides, long long oracle_pmax,
                                        uint64_t sieve_bound) {
    std::vector<CheckResult> out;

    // degree-1 prime counts vs the root-count oracle
    long long mismatches = 0;
    size_t checked = 0;
    for (size_t i = 0; i < cache.size() && cache.primes[i] <= oracle_pmax; ++i) {
        long long p = cache.primes[i];
        if (field.is_bad(p)) continue;
        const SplittingType& t = cache.type_at(i);
        int ones = int(std::count(t.residue_degrees.begin(), t.residue_degrees.end(), 1));
        if (ones != root_count_oracle(field.f, p)) ++mismatches;
        ++checked;
    }
    out.push_back(check(field.f.str() + "/root-count-oracle", mismatches == 0,
                        std::to_string(checked) + " primes to " + std::to_string(oracle_pmax)));

    // sieve vs per-m trial-division reconstruction
    if (sieve_bound > 0) {
        SieveTable table = sieve_a_values(cache, sieve_bound);
        long long bad = 0;
        for (uint64_t m = 1; m <= sieve_bound; ++m) {
            uint64_t rest = m;
            long long expect = 1;
            for (uint64_t p = 2; p * p <= rest; ++p) {
                if (rest % p) continue;
                int v = 0;
                while (rest % p == 0) { rest /= p; ++v; }
                expect *= a_at_prime_power(splitting_type(field, (long long)p, overrides), v);
            }
            if (rest > 1)
                expect *= a_at_prime_power(splitting_type(field, (long long)rest, overrides), 1);
            if (expect != (long long)table.at(m)) ++bad;
        }
        out.push_back(check(field.f.str() + "/sieve-vs-per-m-factorization", bad == 0,
                            "m <= " + std::to_string(sieve_bound)));
    }

    // Gaussian field: Kronecker character divisor sum
    if (field.f.c == std::vector<long long>{1, 0, 1}) {
        uint64_t bound = std::max<uint64_t>(sieve_bound, 100000);
        if (cache.pmax >= (long long)bound) {
            SieveTable table = sieve_a_values(cache, bound);
            std::vector<long long> divisor_sum(bound + 1, 0);
            for (uint64_t d = 1; d <= bound; ++d) {
                long long chi = (d % 2 == 0) ? 0 : (d % 4 == 1 ? 1 : -1);
                if (chi == 0) continue;
                for (uint64_t m = d; m <= bound; m += d) divisor_sum[m] += chi;
            }
            long long bad = 0;
            for (uint64_t m = 1; m <= bound; ++m)
                if (divisor_sum[m] != (long long)table.at(m)) ++bad;
            out.push_back(check("x^2+1/kronecker-divisor-sum-oracle", bad == 0,
                                "m <= " + std::to_string(bound)));
        }
    }
    return out;
}

std::vector<CheckResult> verify_chebotarev(const FieldPresentation& field,
                                           const PrimeSplittingCache& cache,
                                           const FiniteGroup& G, const SubgroupData& gprime,
                                           double tolerance) {
    std::vector<CheckResult> out;
    auto density = expected_splitting_densities(G, gprime);
    auto freq = observed_splitting_frequencies(cache, true);
    bool ok = true;
    std::ostringstream detail;
    for (const auto& [type, dens] : density) {
        double f = freq.count(type) ? freq.at(type) : 0.0;
        detail << vec_str(type) << " density " << dens << " observed " << f << "; ";
        if (std::abs(f - dens) > tolerance) ok = false;
    }
    for (const auto& [type, f] : freq)
        if (!density.count(type)) {
            ok = false;
            detail << "unpredicted type " << vec_str(type) << "; ";
        }
    out.push_back(check(field.f.str() + "/chebotarev-frequencies", ok, detail.str()));
    return out;
}

std::vector<CheckResult> verify_sieve_suite(const FieldPresentation& field,
                                            const PrimeSplittingCache& cache, uint64_t X,
                                            uint64_t seed) {
    std::vector<CheckResult> out;
    SieveTable table = sieve_a_values(cache, X);

    std::mt19937_64 rng(seed);
    uint64_t root = uint64_t(std::sqrt(double(X)));
    std::uniform_int_distribution<uint64_t> pick_small(2, std::max<uint64_t>(root, 3));
    long long bad = 0;
    int tested = 0;
    while (tested < 10000) {
        uint64_t m1 = pick_small(rng);
        std::uniform_int_distribution<uint64_t> pick_rest(2, X / m1);
        uint64_t m2 = pick_rest(rng);
        if (m1 * m2 > X || std::gcd(m1, m2) != 1) continue;
        ++tested;
        if ((long long)table.at(m1 * m2) != (long long)table.at(m1) * table.at(m2)) ++bad;
    }
    out.push_back(check(field.f.str() + "/multiplicativity", bad == 0,
                        "10^4 coprime pairs, seed " + std::to_string(seed)));

    auto cps = geometric_checkpoints(X, kDefaultCheckpoints);
    MomentSeries s1 = partial_sums(table, 1, cps);
    bool cauchy = true;
    double prev = -1;
    for (const auto& [x, s] : s1.points) {
        if (x < 1000000) continue;
        double ratio = double((uint64_t)(s / x)) + double((uint64_t)(s % x)) / double(x);
        if (prev > 0 && std::abs(ratio - prev) / prev > 0.01) cauchy = false;
        prev = ratio;
    }
    out.push_back(check(field.f.str() + "/S1-over-X-cauchy", cauchy,
                        X >= 2000000 ? "checkpoints above 10^6" : "skipped: X < 2e6"));

    MomentSeries s2 = partial_sums(table, 2, cps);
    bool mono = true;
    double last = 0;
    size_t half = s2.points.size() / 2;
    for (size_t i = half; i < s2.points.size(); ++i) {
        auto [x, s] = s2.points[i];
        double val = (double((uint64_t)(s / x)) + double((uint64_t)(s % x)) / double(x)) /
                     std::pow(std::log(double(x)), field.degree - 1);
        if (i > half && val > last) mono = false;
        last = val;
    }
    out.push_back(check(field.f.str() + "/chand-nar-ratio-nonincreasing", mono,
                        "upper half of checkpoints"));
    return out;
}

std::vector<CheckResult> verify_fit_suite(uint64_t seed) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(seed);

    {
        FitSamples s;
        for (int j = 0; j < 64; ++j) {
            double x = 1e4 * std::pow(400.0, j / 63.0);
            s.u.push_back(std::log(x));
            s.y.push_back(3.0 + 2.0 * std::log(x));
        }
        PolyFit fit = fit_log_polynomial(s, 1);
        bool ok = std::abs(fit.coeffs[0] - 3.0) < 3e-9 && std::abs(fit.coeffs[1] - 2.0) < 2e-9;
        out.push_back(check("fit/exact-line-recovery", ok,
                            "c0=" + std::to_string(fit.coeffs[0]) +
                                " c1=" + std::to_string(fit.coeffs[1])));
    }

    // degree recovery with 1e-6 relative noise
    std::uniform_real_distribution<double> coeff(0.5, 3.0);
    std::uniform_real_distribution<double> noise(-1e-6, 1e-6);
    bool recovered = true;
    std::string fail;
    for (int k = 0; k <= 5 && recovered; ++k) {
        std::vector<double> c(k + 1);
        for (auto& v : c) v = coeff(rng);
        FitSamples s;
        for (int j = 0; j < 64; ++j) {
            double x = 1e3 * std::pow(1e4, j / 63.0);
            double u = std::log(x);
            double y = 0;
            for (int i = k; i >= 0; --i) y = y * u + c[i];
            s.u.push_back(u);
            s.y.push_back(y * (1.0 + noise(rng)));
        }
        FitReport rep = select_degree(s, 5);
        if (!rep.conclusive || rep.selected_degree != k) {
            recovered = false;
            fail = "degree " + std::to_string(k) + " selected " +
                   (rep.conclusive ? std::to_string(rep.selected_degree) : "inconclusive");
        }
        bool ladder = true;
        for (size_t i = 1; i < rep.residual_ladder.size(); ++i)
            if (rep.residual_ladder[i] > rep.residual_ladder[i - 1] * (1 + 1e-9)) ladder = false;
        if (!ladder) {
            recovered = false;
            fail = "residual ladder not non-increasing";
        }
    }
    out.push_back(check("fit/synthetic-degree-recovery", recovered, fail));

    {
        // duplicate checkpoints: rank deficiency must be reported
        FitSamples s;
        for (int i = 0; i < 10; ++i) {
            s.u.push_back(std::log(1000.0 + 10 * (i % 3)));
            s.y.push_back(1.0);
        }
        bool threw = false;
        try {
            fit_log_polynomial(s, 5);
        } catch (const std::runtime_error&) {
            threw = true;
        }
        out.push_back(check("fit/rank-deficiency-reported", threw));
    }

    {
        // pure noise must come back inconclusive, not silently picked
        std::uniform_real_distribution<double> wide(-0.5, 0.5);
        FitSamples s;
        for (int j = 0; j < 64; ++j) {
            double x = 1e3 * std::pow(1e4, j / 63.0);
            s.u.push_back(std::log(x));
            s.y.push_back(1.0 + wide(rng));
        }
        FitReport rep = select_degree(s, 5);
        out.push_back(check("fit/noise-is-inconclusive", !rep.conclusive));
    }
    return out;
}

std::string builtin_override_text(const std::string& poly) {
    if (poly == "x^3-2") return "2:1\n3:1\n";
    if (poly == "x^4-2") return "2:1\n";
    if (poly == "x^2+1") return "2:1\n";
    return "";
}

} // namespace zmom
