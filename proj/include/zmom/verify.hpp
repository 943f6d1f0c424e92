#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zmom/group.hpp"
#include "zmom/moment_sieve.hpp"
#include "zmom/splitting.hpp"

namespace zmom {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

bool all_pass(const std::vector<CheckResult>& results);

// Chebotarev: density of each coset cycle type, summed over conjugacy
// classes, as exact rationals |C|/|G| collapsed to double.
std::map<std::vector<int>, double> expected_splitting_densities(const FiniteGroup& G,
                                                                const SubgroupData& gprime);

// Observed frequency of each splitting type over the cached primes.
std::map<std::vector<int>, double> observed_splitting_frequencies(
    const PrimeSplittingCache& cache, bool unramified_only = true);

// Group-side suites over the standard presets (dihedral 3..5, a4,
// galois:cyclic:2..6, symmetric:6 where noted).
std::vector<CheckResult> verify_group_suite(uint64_t seed);
std::vector<CheckResult> verify_chi1_suite(bool include_s6 = true);
std::vector<CheckResult> verify_euler_suite(int l_max = 6);
std::vector<CheckResult> verify_delta_suite(uint64_t seed);

// Field-side suites.
std::vector<CheckResult> verify_divisibility(const FieldPresentation& field,
                                             const PrimeSplittingCache& cache);
std::vector<CheckResult> verify_oracles(const FieldPresentation& field,
                                        const PrimeSplittingCache& cache,
                                        const BadPrimeOverride& overrides, long long oracle_pmax,
                                        uint64_t sieve_bound);
std::vector<CheckResult> verify_chebotarev(const FieldPresentation& field,
                                           const PrimeSplittingCache& cache,
                                           const FiniteGroup& G, const SubgroupData& gprime,
                                           double tolerance = 0.01);
std::vector<CheckResult> verify_sieve_suite(const FieldPresentation& field,
                                            const PrimeSplittingCache& cache, uint64_t X,
                                            uint64_t seed);
std::vector<CheckResult> verify_fit_suite(uint64_t seed);

// Shipped override tables for the standard example fields ("x^3-2", "x^4-2",
// "x^2+1"); empty for fields with no bad primes.
std::string builtin_override_text(const std::string& poly);

} // namespace zmom
