#include "zmom/moment_sieve.hpp"

#include <algorithm>
#include <cstring>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zmom {

SieveTable sieve_a_values(const PrimeSplittingCache& cache, uint64_t X) {
    if (cache.pmax < (long long)X)
        throw std::invalid_argument("cache bound " + std::to_string(cache.pmax) +
                                    " below sieve bound " + std::to_string(X));
    SieveTable t;
    t.X = X;
    t.a.assign(X + 1, 0);
    if (X == 0) return t;
    t.a[1] = 1;
    t.max_value = 1;

    // smallest prime factor table
    std::vector<uint32_t> spf(X + 1, 0);
    for (uint64_t m = 2; m <= X; ++m) {
        if (spf[m] != 0) continue;
        for (uint64_t j = m; j <= X; j += m)
            if (spf[j] == 0) spf[j] = uint32_t(m);
    }

    // a(p^k) per cached shape, k up to log2(X)
    int kmax = 1;
    while ((u128(1) << (kmax + 1)) <= u128(X)) ++kmax;
    std::vector<std::vector<long long>> shape_pk(cache.shapes.size());
    for (size_t s = 0; s < cache.shapes.size(); ++s) {
        shape_pk[s].resize(kmax + 1);
        for (int k = 0; k <= kmax; ++k) shape_pk[s][k] = a_at_prime_power(cache.shapes[s], k);
    }
    // shape id per prime, re-indexed by prime for O(1) access during the scan
    std::vector<uint16_t> shape_of(X + 1, 0xffff);
    for (size_t i = 0; i < cache.primes.size(); ++i) {
        long long p = cache.primes[i];
        if (p <= (long long)X) shape_of[p] = cache.shape_id[i];
    }

    for (uint64_t m = 2; m <= X; ++m) {
        uint64_t p = spf[m];
        uint64_t rest = m;
        int v = 0;
        while (rest % p == 0) { rest /= p; ++v; }
        if (shape_of[p] == 0xffff)
            throw std::logic_error("prime " + std::to_string(p) + " missing from cache");
        long long apk = shape_pk[shape_of[p]][v];
        long long val = apk * (long long)t.a[rest];
        if (val > 0xffff)
            throw std::overflow_error("a(" + std::to_string(m) + ") = " + std::to_string(val) +
                                      " exceeds the 16-bit sieve cell");
        t.a[m] = uint16_t(val);
        t.max_value = std::max(t.max_value, t.a[m]);
    }
    return t;
}

MomentSeries partial_sums(const SieveTable& table, int l,
                          const std::vector<uint64_t>& checkpoints) {
    if (l < 1 || l > kMaxMomentExponent)
        throw std::invalid_argument("moment exponent l must be in [1, " +
                                    std::to_string(kMaxMomentExponent) + "]");
    for (size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] > table.X)
            throw std::invalid_argument("checkpoint beyond sieve bound");
        if (i && checkpoints[i] <= checkpoints[i - 1])
            throw std::invalid_argument("checkpoints must be strictly increasing");
    }

    // per-term bound: X * max_a^l must stay clear of the 128-bit accumulator
    u128 max_term = 1;
    for (int i = 0; i < l; ++i) {
        u128 next = max_term * table.max_value;
        if (table.max_value != 0 && next / table.max_value != max_term)
            throw std::overflow_error("a^l term exceeds 128 bits; lower l or X");
        max_term = next;
    }
    if (table.X != 0 && max_term > (~u128(0)) / table.X)
        throw std::overflow_error("S_l accumulator could overflow 128 bits; lower l or X");

    MomentSeries series;
    series.l = l;
    u128 acc = 0;
    size_t next_cp = 0;
    for (uint64_t m = 1; m <= table.X && next_cp < checkpoints.size(); ++m) {
        u128 term = 1;
        uint64_t v = table.a[m];
        for (int i = 0; i < l; ++i) term *= v;
        acc += term;
        if (m == checkpoints[next_cp]) {
            series.points.emplace_back(m, acc);
            ++next_cp;
        }
    }
    if (next_cp != checkpoints.size()) throw std::logic_error("checkpoint scan incomplete");
    return series;
}

std::vector<uint64_t> geometric_checkpoints(uint64_t X, int count) {
    if (count < 2) throw std::invalid_argument("need at least 2 checkpoints");
    if (X < uint64_t(count)) throw std::invalid_argument("X too small for the checkpoint count");
    std::vector<uint64_t> cp;
    double lo = double(X) / count;
    for (int j = 0; j < count; ++j) {
        double v = lo * std::pow(double(count), double(j) / (count - 1));
        uint64_t x = uint64_t(std::llround(v));
        if (x < 1) x = 1;
        if (x > X) x = X;
        if (cp.empty() || x > cp.back()) cp.push_back(x);
    }
    if (cp.back() != X) cp.push_back(X);
    return cp;
}

static constexpr char kTableMagic[8] = {'z', 'm', 'o', 'm', 'a', 't', 'b', '1'};

void save_sieve_table(const SieveTable& table, const std::string& fingerprint,
                      const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write sieve table: " + path);
    out.write(kTableMagic, sizeof kTableMagic);
    uint64_t fplen = fingerprint.size();
    out.write(reinterpret_cast<const char*>(&fplen), sizeof fplen);
    out.write(fingerprint.data(), std::streamsize(fplen));
    out.write(reinterpret_cast<const char*>(&table.X), sizeof table.X);
    out.write(reinterpret_cast<const char*>(&table.max_value), sizeof table.max_value);
    out.write(reinterpret_cast<const char*>(table.a.data()),
              std::streamsize(table.a.size() * sizeof(uint16_t)));
    if (!out) throw std::runtime_error("write failure on sieve table: " + path);
}

SieveTable load_sieve_table(const std::string& fingerprint, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open sieve table: " + path);
    char magic[8];
    in.read(magic, sizeof magic);
    if (!in || std::memcmp(magic, kTableMagic, sizeof magic) != 0)
        throw std::runtime_error("not a sieve table file: " + path);
    uint64_t fplen = 0;
    in.read(reinterpret_cast<char*>(&fplen), sizeof fplen);
    if (!in || fplen > 4096) throw std::runtime_error("corrupt sieve table header: " + path);
    std::string fp(fplen, '\0');
    in.read(fp.data(), std::streamsize(fplen));
    if (fp != fingerprint)
        throw std::runtime_error("sieve table fingerprint mismatch (file " + fp + ", expected " +
                                 fingerprint + ")");
    SieveTable t;
    in.read(reinterpret_cast<char*>(&t.X), sizeof t.X);
    in.read(reinterpret_cast<char*>(&t.max_value), sizeof t.max_value);
    if (!in) throw std::runtime_error("corrupt sieve table header: " + path);
    t.a.resize(t.X + 1);
    in.read(reinterpret_cast<char*>(t.a.data()), std::streamsize(t.a.size() * sizeof(uint16_t)));
    if (!in) throw std::runtime_error("truncated sieve table: " + path);
    return t;
}

void write_moment_csv(const MomentSeries& series, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write CSV: " + path);
    out << "X,S\n";
    for (const auto& [x, s] : series.points) out << x << "," << to_string_u128(s) << "\n";
    if (!out) throw std::runtime_error("write failure on CSV: " + path);
}

MomentSeries read_moment_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open CSV: " + path);
    MomentSeries series;
    std::string line;
    if (!std::getline(in, line) || line != "X,S")
        throw std::runtime_error("CSV missing 'X,S' header: " + path);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error("bad CSV line: " + line);
        uint64_t x = std::stoull(line.substr(0, comma));
        u128 s = parse_u128(line.substr(comma + 1));
        series.points.emplace_back(x, s);
    }
    return series;
}

} // namespace zmom
