#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace zmom {

// Monic integer polynomial, coefficients constant-first. c.back() == 1.
struct Poly {
    std::vector<long long> c;

    int degree() const { return int(c.size()) - 1; }
    std::string str() const;
};

// Accepts "x^3-2" style strings or comma-separated coefficient lists
// (constant first). Rejects non-monic input.
Poly parse_poly(const std::string& text);

// Exact disc(f) = (-1)^{d(d-1)/2} Res(f, f') for monic f.
mpz_class discriminant(const Poly& f);

// Residue degrees of the primes above p, sorted ascending. For unramified p
// these sum to the field degree; ramification indices are not stored.
struct SplittingType {
    std::vector<int> residue_degrees;
    bool ramified = false;

    bool operator==(const SplittingType& o) const {
        return residue_degrees == o.residue_degrees && ramified == o.ramified;
    }
    bool operator<(const SplittingType& o) const {
        if (residue_degrees != o.residue_degrees) return residue_degrees < o.residue_degrees;
        return ramified < o.ramified;
    }
    std::string str() const;
};

struct FieldPresentation {
    Poly f;
    int degree = 0;
    mpz_class disc;
    std::vector<long long> bad_primes; // primes dividing disc(f), sorted
    std::string irreducibility_certificate;

    bool is_bad(long long p) const;
    uint64_t fingerprint_seed() const; // hash of the coefficient list
};

// Computes the discriminant, factors it, and certifies irreducibility
// (irreducible mod some good prime, or no-rational-root plus degree-specific
// checks for degree <= 4). Throws if certification fails.
FieldPresentation make_field(const Poly& f);

// Degrees of the irreducible factors of f mod p with multiplicities,
// sorted by (degree, multiplicity). Squarefree decomposition plus
// distinct-degree factorization; handles p-th powers at small p.
std::vector<std::pair<int, int>> factor_shape_mod_p(const Poly& f, long long p);

// #{x mod p : f(x) = 0}. Brute scan below 10^5, gcd(x^p - x, f) degree above;
// kept deliberately separate from factor_shape_mod_p.
int root_count_oracle(const Poly& f, long long p);

struct BadPrimeOverride {
    std::map<long long, SplittingType> entries;
};

// Line format "p:f1,f2,...[:R]"; '#' lines ignored. Only primes dividing
// disc(f) may appear; residue degrees must satisfy sum f_i <= d, and the
// ramified flag is inferred from sum f_i < d unless given explicitly.
BadPrimeOverride load_overrides(const std::string& path);
BadPrimeOverride parse_overrides(const std::string& text);
void validate_overrides(const FieldPresentation& field, const BadPrimeOverride& ov);

SplittingType splitting_type(const FieldPresentation& field, long long p,
                             const BadPrimeOverride& overrides);

// Number of ideal multisets above p with norm p^k: #{c_i >= 0 : sum c_i f_i = k}.
long long a_at_prime_power(const SplittingType& st, int k);

struct PrimeSplittingCache {
    std::string fingerprint; // covers field coefficients and overrides
    long long pmax = 0;
    std::vector<long long> primes;
    std::vector<uint16_t> shape_id;
    std::vector<SplittingType> shapes;

    size_t size() const { return primes.size(); }
    const SplittingType& type_at(size_t i) const { return shapes[shape_id[i]]; }
    const SplittingType& lookup(long long p) const; // throws if p not cached
};

std::string cache_fingerprint(const FieldPresentation& field, const BadPrimeOverride& overrides);

// Builds entries for every prime <= pmax; the range is partitioned across
// `workers` threads and merged in prime order, so the result is independent
// of the schedule. Requires overrides for every bad prime <= pmax.
PrimeSplittingCache build_cache(const FieldPresentation& field, long long pmax,
                                const BadPrimeOverride& overrides, int workers = 0);

// Text format: "#field c0,c1,...", "#pmax P", "#fingerprint hex",
// then one "p:f1,f2,...[:R]" line per prime.
void save_cache(const PrimeSplittingCache& cache, const FieldPresentation& field,
                const std::string& path);
PrimeSplittingCache load_cache(const FieldPresentation& field, const BadPrimeOverride& overrides,
                               const std::string& path);

// Primes in [2, limit] via a segmented Eratosthenes sieve.
std::vector<long long> primes_up_to(long long limit);

} // namespace zmom
