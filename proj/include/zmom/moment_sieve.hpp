#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zmom/splitting.hpp"
#include "zmom/wide_int.hpp"

namespace zmom {

// Dense table of a_K(m) for 1 <= m <= X. Values are validated to fit 16 bits
// at sieve time.
struct SieveTable {
    uint64_t X = 0;
    std::vector<uint16_t> a; // index m, entry 0 unused
    uint16_t max_value = 0;

    uint16_t at(uint64_t m) const { return a[m]; }
};

// a(m) by smallest-prime-factor decomposition over the splitting cache:
// a(m) = a(p^v) * a(m/p^v). Requires cache.pmax >= X.
SieveTable sieve_a_values(const PrimeSplittingCache& cache, uint64_t X);

struct MomentSeries {
    int l = 0;
    std::vector<std::pair<uint64_t, u128>> points; // (X_j, S_l(X_j))
};

// Exact S_l at each checkpoint; 128-bit accumulator with explicit per-term
// bound check, overflow aborts with diagnostics. Checkpoints must be sorted
// and <= X.
MomentSeries partial_sums(const SieveTable& table, int l,
                          const std::vector<uint64_t>& checkpoints);

// Geometric grid of `count` points from X/count to X (deduplicated, sorted,
// last point == X).
std::vector<uint64_t> geometric_checkpoints(uint64_t X, int count);

// CSV with header "X,S", exact decimal integers.
void write_moment_csv(const MomentSeries& series, const std::string& path);
MomentSeries read_moment_csv(const std::string& path);

// Binary block: magic, field/override fingerprint, X, then the raw 16-bit
// values. Loading verifies the fingerprint and errors on mismatch.
void save_sieve_table(const SieveTable& table, const std::string& fingerprint,
                      const std::string& path);
SieveTable load_sieve_table(const std::string& fingerprint, const std::string& path);

constexpr int kDefaultCheckpoints = 64;
constexpr int kMaxMomentExponent = 8;

} // namespace zmom
