#include "zmom/splitting.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "zmom/wide_int.hpp"

namespace zmom {

// ---------------------------------------------------------------------------
// Polynomials over Z

std::string Poly::str() const {
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        long long a = c[i];
        if (a == 0) continue;
        if (!s.empty()) s += a > 0 ? "+" : "-";
        else if (a < 0) s += "-";
        long long m = a < 0 ? -a : a;
        if (i == 0) s += std::to_string(m);
        else {
            if (m != 1) s += std::to_string(m);
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

namespace {

Poly poly_from_coeffs(std::vector<long long> c) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    if (c.empty() || (c.size() == 1 && c[0] == 0))
        throw std::invalid_argument("zero polynomial");
    if (c.back() != 1)
        throw std::invalid_argument("polynomial must be monic");
    Poly f;
    f.c = std::move(c);
    return f;
}

Poly parse_poly_expr(const std::string& text) {
    // terms like 3x^2, -x, +7; '*' allowed between coefficient and x
    std::vector<long long> c;
    auto bump = [&](int e, long long v) {
        if (e < 0 || e > 64) throw std::invalid_argument("bad exponent in polynomial");
        if (int(c.size()) <= e) c.resize(e + 1, 0);
        c[e] += v;
    };
    size_t i = 0;
    const std::string s = text;
    while (i < s.size()) {
        if (std::isspace((unsigned char)s[i])) { ++i; continue; }
        long long sign = 1;
        if (s[i] == '+') { ++i; }
        else if (s[i] == '-') { sign = -1; ++i; }
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
        if (i >= s.size()) throw std::invalid_argument("dangling sign in polynomial: " + text);

        long long coeff = 1;
        bool have_digits = false;
        if (std::isdigit((unsigned char)s[i])) {
            coeff = 0;
            while (i < s.size() && std::isdigit((unsigned char)s[i]))
                coeff = coeff * 10 + (s[i++] - '0');
            have_digits = true;
        }
        if (i < s.size() && s[i] == '*') ++i;
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
            ++i;
            int e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
                    throw std::invalid_argument("bad exponent in polynomial: " + text);
                e = 0;
                while (i < s.size() && std::isdigit((unsigned char)s[i]))
                    e = e * 10 + (s[i++] - '0');
            }
            bump(e, sign * coeff);
        } else if (have_digits) {
            bump(0, sign * coeff);
        } else {
            throw std::invalid_argument("cannot parse polynomial: " + text);
        }
    }
    return poly_from_coeffs(std::move(c));
}

} // namespace

Poly parse_poly(const std::string& text) {
    if (text.find(',') != std::string::npos) {
        std::vector<long long> c;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                c.push_back(std::stoll(tok));
            } catch (...) {
                throw std::invalid_argument("bad coefficient '" + tok + "' in " + text);
            }
        }
        return poly_from_coeffs(std::move(c));
    }
    if (text.find('x') == std::string::npos && text.find('X') == std::string::npos)
        throw std::invalid_argument("polynomial must involve x or be a coefficient list: " + text);
    return parse_poly_expr(text);
}

static mpz_class mpz_from_ll(long long v) {
    static_assert(sizeof(long) == sizeof(long long), "LP64 assumed");
    return mpz_class(long(v));
}

// Sylvester matrix resultant by fraction-free Bareiss elimination on exact
// integers; coefficients can blow past 64 bits for modest inputs.
static mpz_class resultant(const std::vector<mpz_class>& f, const std::vector<mpz_class>& g) {
    int df = int(f.size()) - 1, dg = int(g.size()) - 1;
    if (df < 0 || dg < 0) return 0;
    int n = df + dg;
    if (n == 0) return 1;
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
    for (int r = 0; r < dg; ++r)
        for (int j = 0; j <= df; ++j) m[r][r + j] = f[df - j];
    for (int r = 0; r < df; ++r)
        for (int j = 0; j <= dg; ++j) m[dg + r][r + j] = g[dg - j];

    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int swap = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) { swap = r; break; }
            if (swap < 0) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int col = k + 1; col < n; ++col) {
                m[r][col] = (m[k][k] * m[r][col] - m[r][k] * m[k][col]) / prev;
            }
            m[r][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

mpz_class discriminant(const Poly& f) {
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("discriminant needs degree >= 1");
    if (d == 1) return 1; // degree-1 convention
    std::vector<mpz_class> fc(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) fc[i] = mpz_from_ll(f.c[i]);
    std::vector<mpz_class> dc(d);
    for (int i = 1; i <= d; ++i) dc[i - 1] = mpz_from_ll(f.c[i]) * i;
    mpz_class res = resultant(fc, dc);
    // monic: disc = (-1)^{d(d-1)/2} Res(f, f')
    if ((long long)d * (d - 1) / 2 % 2 == 1) res = -res;
    return res;
}

// ---------------------------------------------------------------------------
// F_p polynomial arithmetic (64-bit p, 128-bit intermediates)

namespace {

using FpPoly = std::vector<uint64_t>; // constant-first, no trailing zeros unless zero poly

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) { return (u128)a * b % p; }

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p) { return powmod_u64(a % p, p - 2, p); }

void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const FpPoly& f) { return int(f.size()) - 1; } // -1 for zero

FpPoly reduce_poly(const Poly& f, uint64_t p) {
    FpPoly r(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) {
        long long v = f.c[i] % (long long)p;
        if (v < 0) v += p;
        r[i] = uint64_t(v);
    }
    trim(r);
    return r;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + (u128)a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

// division with remainder; divisor need not be monic
void divmod(const FpPoly& a, const FpPoly& b, uint64_t p, FpPoly& q, FpPoly& r) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    r = a;
    q.assign(a.size(), 0);
    uint64_t lead_inv = invmod(b.back(), p);
    while (deg(r) >= deg(b)) {
        int shift = deg(r) - deg(b);
        uint64_t coef = mulmod(r.back(), lead_inv, p);
        q[shift] = coef;
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t sub = mulmod(coef, b[i], p);
            uint64_t& ri = r[i + shift];
            ri = (ri >= sub) ? ri - sub : ri + p - sub;
        }
        trim(r);
    }
    trim(q);
}

FpPoly mod(const FpPoly& a, const FpPoly& b, uint64_t p) {
    FpPoly q, r;
    divmod(a, b, p, q, r);
    return r;
}

FpPoly make_monic(FpPoly f, uint64_t p) {
    if (f.empty()) return f;
    uint64_t inv = invmod(f.back(), p);
    for (auto& x : f) x = mulmod(x, inv, p);
    return f;
}

FpPoly gcd(FpPoly a, FpPoly b, uint64_t p) {
    while (!b.empty()) {
        FpPoly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a), p);
}

FpPoly derivative(const FpPoly& f, uint64_t p) {
    if (f.size() <= 1) return {};
    FpPoly d(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) d[i - 1] = (u128)f[i] * (i % p) % p;
    trim(d);
    return d;
}

FpPoly mulmod_poly(const FpPoly& a, const FpPoly& b, const FpPoly& m, uint64_t p) {
    return mod(mul(a, b, p), m, p);
}

// x^e mod (m, p) by repeated squaring
FpPoly xpow_mod(uint64_t e, const FpPoly& m, uint64_t p) {
    FpPoly base = mod(FpPoly{0, 1}, m, p);
    FpPoly r = mod(FpPoly{1}, m, p);
    while (e) {
        if (e & 1) r = mulmod_poly(r, base, m, p);
        base = mulmod_poly(base, base, m, p);
        e >>= 1;
    }
    return r;
}

// p-th root of a polynomial whose derivative vanishes: coefficients of x^{jp}
// become coefficients of x^j (Frobenius fixes F_p).
FpPoly pth_root(const FpPoly& f, uint64_t p) {
    FpPoly r;
    for (size_t i = 0; i < f.size(); i += size_t(p)) r.push_back(f[i]);
    trim(r);
    return r;
}

// squarefree decomposition: list of (g, multiplicity), g monic squarefree
void squarefree_decompose(FpPoly f, uint64_t p, int mult,
                          std::vector<std::pair<FpPoly, int>>& out) {
    f = make_monic(std::move(f), p);
    if (deg(f) <= 0) return;
    FpPoly fp = derivative(f, p);
    if (fp.empty()) {
        squarefree_decompose(pth_root(f, p), p, mult * int(p), out);
        return;
    }
    FpPoly t = gcd(f, fp, p);
    FpPoly v, rem;
    divmod(f, t, p, v, rem);
    int i = 1;
    while (deg(v) > 0) {
        FpPoly w = gcd(t, v, p);
        FpPoly z, r2;
        divmod(v, w, p, z, r2);
        if (deg(z) > 0) out.emplace_back(make_monic(z, p), mult * i);
        FpPoly tq, tr;
        divmod(t, w, p, tq, tr);
        t = std::move(tq);
        v = std::move(w);
        ++i;
    }
    if (deg(t) > 0) squarefree_decompose(pth_root(t, p), p, mult * int(p), out);
}

// distinct-degree factorization of a monic squarefree polynomial:
// list of (degree, count of irreducible factors of that degree)
std::vector<std::pair<int, int>> ddf(FpPoly f, uint64_t p) {
    std::vector<std::pair<int, int>> out;
    FpPoly h = mod(FpPoly{0, 1}, f, p); // x mod f
    int k = 0;
    while (deg(f) > 0) {
        ++k;
        if (2 * k > deg(f)) { // remainder is a single irreducible factor
            out.emplace_back(deg(f), 1);
            break;
        }
        // h = x^{p^k} mod f
        FpPoly hp = mod(FpPoly{1}, f, p);
        {
            // raise h to the p-th power mod f
            FpPoly base = h;
            uint64_t e = p;
            while (e) {
                if (e & 1) hp = mulmod_poly(hp, base, f, p);
                base = mulmod_poly(base, base, f, p);
                e >>= 1;
            }
        }
        h = hp;
        FpPoly hx = h;
        // h - x
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = (hx[1] >= 1) ? hx[1] - 1 : p - 1;
        trim(hx);
        FpPoly g = gcd(f, hx, p);
        if (deg(g) > 0) {
            out.emplace_back(k, deg(g) / k);
            FpPoly q, r;
            divmod(f, g, p, q, r);
            f = std::move(q);
            h = mod(h, f, p);
        }
    }
    return out;
}

} // namespace

std::vector<std::pair<int, int>> factor_shape_mod_p(const Poly& f, long long p) {
    if (p < 2) throw std::invalid_argument("p must be a prime >= 2");
    FpPoly fp = reduce_poly(f, uint64_t(p));
    if (deg(fp) != f.degree())
        throw std::logic_error("monic polynomial degenerated mod p"); // impossible for monic
    std::vector<std::pair<FpPoly, int>> sqf;
    squarefree_decompose(fp, uint64_t(p), 1, sqf);
    std::vector<std::pair<int, int>> shape;
    for (auto& [g, mult] : sqf)
        for (auto [d, count] : ddf(g, uint64_t(p)))
            for (int i = 0; i < count; ++i) shape.emplace_back(d, mult);
    std::sort(shape.begin(), shape.end());
    return shape;
}

int root_count_oracle(const Poly& f, long long p) {
    if (p < 100000) {
        // brute scan with Horner evaluation
        int count = 0;
        for (long long x = 0; x < p; ++x) {
            u128 acc = 0;
            for (int i = f.degree(); i >= 0; --i) {
                long long ci = f.c[i] % p;
                if (ci < 0) ci += p;
                acc = (acc * u128(x) + u128(ci)) % u128(p);
            }
            if (acc == 0) ++count;
        }
        return count;
    }
    // deg gcd(x^p - x, f) without touching the DDF implementation
    FpPoly fp = reduce_poly(f, uint64_t(p));
    FpPoly xp = xpow_mod(uint64_t(p), fp, uint64_t(p));
    if (xp.size() < 2) xp.resize(2, 0);
    xp[1] = (xp[1] >= 1) ? xp[1] - 1 : uint64_t(p) - 1;
    trim(xp);
    FpPoly g = gcd(fp, xp, uint64_t(p));
    return deg(g) < 0 ? 0 : deg(g);
}

// ---------------------------------------------------------------------------
// Field presentation

namespace {

std::vector<long long> factor_small(mpz_class n) {
    std::vector<long long> primes;
    if (n < 0) n = -n;
    if (n <= 1) return primes;
    for (long long p = 2; p <= 2000000 && n > 1; p == 2 ? p = 3 : p += 2) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), (unsigned long)p)) {
            primes.push_back(p);
            while (mpz_divisible_ui_p(n.get_mpz_t(), (unsigned long)p))
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), (unsigned long)p);
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40) && n.fits_slong_p()) {
            primes.push_back(n.get_si());
        } else {
            throw std::runtime_error(
                "cannot factor the discriminant with desk-scale trial division: " + n.get_str());
        }
    }
    return primes;
}

bool has_rational_root(const Poly& f) {
    // monic: any rational root is an integer dividing the constant term
    long long a0 = f.c[0];
    if (a0 == 0) return true;
    long long m = a0 < 0 ? -a0 : a0;
    for (long long d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        for (long long r : {d, -d, m / d, -(m / d)}) {
            i128 acc = 0;
            for (int i = f.degree(); i >= 0; --i) acc = acc * r + f.c[i];
            if (acc == 0) return true;
        }
    }
    return false;
}

// degree-4 extra check: no factorization into two monic integer quadratics
bool quartic_splits_into_quadratics(const Poly& f) {
    // (x^2+ax+b)(x^2+cx+d) = x^4 + (a+c)x^3 + (b+d+ac)x^2 + (ad+bc)x + bd
    long long e3 = f.c[3], e2 = f.c[2], e1 = f.c[1], e0 = f.c[0];
    long long m = e0 < 0 ? -e0 : e0;
    if (m == 0) return true;
    std::vector<long long> divs;
    for (long long d = 1; d * d <= m; ++d)
        if (m % d == 0) { divs.push_back(d); divs.push_back(m / d); }
    for (long long b : divs)
        for (long long sb : {b, -b}) {
            if (sb == 0 || e0 % sb != 0) continue;
            long long d = e0 / sb;
            // a + c = e3, ad + bc = e1, b + d + ac = e2
            for (long long a = -64; a <= 64; ++a) { // |a| <= small bound; desk-scale coefficients
                long long c = e3 - a;
                if (sb + d + a * c != e2) continue;
                if (a * d + sb * c != e1) continue;
                return true;
            }
        }
    return false;
}

std::string certify_irreducible(const Poly& f, const std::vector<long long>& bad) {
    int d = f.degree();
    if (d == 1) return "degree 1";
    static const long long small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                             31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
    for (long long p : small_primes) {
        if (std::binary_search(bad.begin(), bad.end(), p)) continue;
        auto shape = factor_shape_mod_p(f, p);
        if (shape.size() == 1 && shape[0] == std::make_pair(d, 1))
            return "irreducible mod " + std::to_string(p);
    }
    if (has_rational_root(f))
        throw std::invalid_argument("polynomial has a rational root: " + f.str());
    if (d <= 3) return "no rational root, degree <= 3";
    if (d == 4) {
        if (quartic_splits_into_quadratics(f))
            throw std::invalid_argument("quartic splits into two integer quadratics: " + f.str());
        return "no rational root and no quadratic factorization";
    }
    throw std::invalid_argument(
        "cannot certify irreducibility of " + f.str() +
        " (no witness prime among the first 20 and degree > 4)");
}

} // namespace

bool FieldPresentation::is_bad(long long p) const {
    return std::binary_search(bad_primes.begin(), bad_primes.end(), p);
}

uint64_t FieldPresentation::fingerprint_seed() const {
    uint64_t h = 1469598103934665603ULL; // FNV-1a
    auto mix = [&](uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    for (long long c : f.c) mix(uint64_t(c));
    return h;
}

FieldPresentation make_field(const Poly& f) {
    FieldPresentation field;
    field.f = f;
    field.degree = f.degree();
    field.disc = discriminant(f);
    if (field.degree >= 2 && field.disc == 0)
        throw std::invalid_argument("polynomial is not squarefree: " + f.str());
    field.bad_primes = factor_small(field.disc);
    std::sort(field.bad_primes.begin(), field.bad_primes.end());
    field.irreducibility_certificate = certify_irreducible(f, field.bad_primes);
    return field;
}

// ---------------------------------------------------------------------------
// Splitting types, overrides, ideal counts

std::string SplittingType::str() const {
    std::string s;
    for (size_t i = 0; i < residue_degrees.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(residue_degrees[i]);
    }
    if (ramified) s += ":R";
    return s;
}

namespace {

SplittingType parse_type_line(const std::string& rhs, long long p) {
    SplittingType st;
    std::string degrees = rhs;
    if (degrees.size() >= 2 && degrees.substr(degrees.size() - 2) == ":R") {
        st.ramified = true;
        degrees = degrees.substr(0, degrees.size() - 2);
    }
    std::stringstream ss(degrees);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int d = 0;
        try {
            d = std::stoi(tok);
        } catch (...) {
            throw std::runtime_error("bad residue degree '" + tok + "' at p=" + std::to_string(p));
        }
        if (d < 1) throw std::runtime_error("residue degree must be >= 1 at p=" + std::to_string(p));
        st.residue_degrees.push_back(d);
    }
    if (st.residue_degrees.empty())
        throw std::runtime_error("empty residue degree list at p=" + std::to_string(p));
    std::sort(st.residue_degrees.begin(), st.residue_degrees.end());
    return st;
}

} // namespace

BadPrimeOverride parse_overrides(const std::string& text) {
    BadPrimeOverride ov;
    std::stringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        while (!line.empty() && std::isspace((unsigned char)line.back())) line.pop_back();
        size_t start = 0;
        while (start < line.size() && std::isspace((unsigned char)line[start])) ++start;
        line = line.substr(start);
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("override line missing ':': " + line);
        long long p = 0;
        try {
            p = std::stoll(line.substr(0, colon));
        } catch (...) {
            throw std::runtime_error("bad prime in override line: " + line);
        }
        ov.entries[p] = parse_type_line(line.substr(colon + 1), p);
    }
    return ov;
}

BadPrimeOverride load_overrides(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open override file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_overrides(ss.str());
}

void validate_overrides(const FieldPresentation& field, const BadPrimeOverride& ov) {
    for (const auto& [p, st] : ov.entries) {
        if (!field.is_bad(p))
            throw std::runtime_error("override for p=" + std::to_string(p) +
                                     " which does not divide disc(f)");
        long long sum = 0;
        for (int d : st.residue_degrees) sum += d;
        if (sum > field.degree)
            throw std::runtime_error("override at p=" + std::to_string(p) +
                                     " has residue degrees summing past the field degree");
    }
}

SplittingType splitting_type(const FieldPresentation& field, long long p,
                             const BadPrimeOverride& overrides) {
    if (field.is_bad(p)) {
        auto it = overrides.entries.find(p);
        if (it == overrides.entries.end())
            throw std::runtime_error("bad prime without override: p=" + std::to_string(p) +
                                     " divides disc(" + field.f.str() + ")");
        SplittingType st = it->second;
        long long sum = 0;
        for (int d : st.residue_degrees) sum += d;
        if (sum < field.degree) st.ramified = true;
        return st;
    }
    SplittingType st;
    for (auto [d, mult] : factor_shape_mod_p(field.f, p)) {
        if (mult != 1)
            throw std::logic_error("repeated factor at a prime not dividing disc: p=" +
                                   std::to_string(p));
        st.residue_degrees.push_back(d);
    }
    std::sort(st.residue_degrees.begin(), st.residue_degrees.end());
    st.ramified = false;
    return st;
}

long long a_at_prime_power(const SplittingType& st, int k) {
    if (k < 0) throw std::invalid_argument("prime power exponent must be >= 0");
    // count solutions of sum c_i f_i = k by DP over the residue degrees
    std::vector<long long> ways(k + 1, 0);
    ways[0] = 1;
    for (int f : st.residue_degrees)
        for (int v = f; v <= k; ++v) ways[v] += ways[v - f];
    return ways[k];
}

// ---------------------------------------------------------------------------
// Prime enumeration and the cache

std::vector<long long> primes_up_to(long long limit) {
    std::vector<long long> primes;
    if (limit < 2) return primes;
    long long root = 1;
    while ((root + 1) * (root + 1) <= limit) ++root;
    std::vector<char> base(root + 1, 1);
    std::vector<long long> base_primes;
    for (long long i = 2; i <= root; ++i) {
        if (!base[i]) continue;
        base_primes.push_back(i);
        for (long long j = i * i; j <= root; j += i) base[j] = 0;
    }
    for (long long p : base_primes)
        if (p <= limit) primes.push_back(p);

    const long long seg_size = 1 << 20;
    std::vector<char> seg;
    for (long long lo = root + 1; lo <= limit; lo += seg_size) {
        long long hi = std::min(limit, lo + seg_size - 1);
        seg.assign(size_t(hi - lo + 1), 1);
        for (long long p : base_primes) {
            long long start = ((lo + p - 1) / p) * p;
            for (long long j = start; j <= hi; j += p) seg[size_t(j - lo)] = 0;
        }
        for (long long j = lo; j <= hi; ++j)
            if (seg[size_t(j - lo)]) primes.push_back(j);
    }
    return primes;
}

std::string cache_fingerprint(const FieldPresentation& field, const BadPrimeOverride& overrides) {
    uint64_t h = field.fingerprint_seed();
    auto mix = [&](uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    for (const auto& [p, st] : overrides.entries) {
        mix(uint64_t(p));
        for (int d : st.residue_degrees) mix(uint64_t(d));
        mix(st.ramified ? 2 : 1);
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return std::string(buf);
}

const SplittingType& PrimeSplittingCache::lookup(long long p) const {
    auto it = std::lower_bound(primes.begin(), primes.end(), p);
    if (it == primes.end() || *it != p)
        throw std::out_of_range("prime " + std::to_string(p) + " not in cache (pmax=" +
                                std::to_string(pmax) + ")");
    return shapes[shape_id[size_t(it - primes.begin())]];
}

PrimeSplittingCache build_cache(const FieldPresentation& field, long long pmax,
                                const BadPrimeOverride& overrides, int workers) {
    validate_overrides(field, overrides);
    for (long long p : field.bad_primes)
        if (p <= pmax && overrides.entries.find(p) == overrides.entries.end())
            throw std::runtime_error("bad prime without override: p=" + std::to_string(p) +
                                     " divides disc(" + field.f.str() + ")");

    PrimeSplittingCache cache;
    cache.pmax = pmax;
    cache.fingerprint = cache_fingerprint(field, overrides);
    cache.primes = primes_up_to(pmax);
    cache.shape_id.assign(cache.primes.size(), 0);

    if (workers <= 0) {
        workers = int(std::thread::hardware_concurrency());
        if (workers <= 0) workers = 1;
    }
    workers = std::min<int>(workers, 64);

    // workers own disjoint index ranges; shape ids are assigned afterwards in
    // prime order so the result does not depend on the schedule
    std::vector<SplittingType> per_prime(cache.primes.size());
    auto run = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i)
            per_prime[i] = splitting_type(field, cache.primes[i], overrides);
    };
    if (workers == 1 || cache.primes.size() < 1024) {
        run(0, cache.primes.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (cache.primes.size() + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            size_t begin = std::min(cache.primes.size(), size_t(w) * chunk);
            size_t end = std::min(cache.primes.size(), begin + chunk);
            if (begin < end) pool.emplace_back(run, begin, end);
        }
        for (auto& t : pool) t.join();
    }

    std::map<SplittingType, uint16_t> ids;
    for (size_t i = 0; i < per_prime.size(); ++i) {
        auto it = ids.find(per_prime[i]);
        if (it == ids.end()) {
            if (cache.shapes.size() >= 0xffff) throw std::runtime_error("too many splitting types");
            it = ids.emplace(per_prime[i], uint16_t(cache.shapes.size())).first;
            cache.shapes.push_back(per_prime[i]);
        }
        cache.shape_id[i] = it->second;
    }
    return cache;
}

void save_cache(const PrimeSplittingCache& cache, const FieldPresentation& field,
                const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write cache file: " + path);
    out << "#field ";
    for (size_t i = 0; i < field.f.c.size(); ++i) out << (i ? "," : "") << field.f.c[i];
    out << "\n#pmax " << cache.pmax << "\n";
    out << "#fingerprint " << cache.fingerprint << "\n";
    for (size_t i = 0; i < cache.primes.size(); ++i)
        out << cache.primes[i] << ":" << cache.type_at(i).str() << "\n";
    if (!out) throw std::runtime_error("write failure on cache file: " + path);
}

PrimeSplittingCache load_cache(const FieldPresentation& field, const BadPrimeOverride& overrides,
                               const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cache file: " + path);
    PrimeSplittingCache cache;
    std::string expected = cache_fingerprint(field, overrides);
    std::string line;
    bool have_fp = false, have_pmax = false;
    std::map<SplittingType, uint16_t> ids;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::stringstream ss(line);
            std::string key;
            ss >> key;
            if (key == "#pmax") {
                ss >> cache.pmax;
                have_pmax = true;
            } else if (key == "#fingerprint") {
                ss >> cache.fingerprint;
                have_fp = true;
                if (cache.fingerprint != expected)
                    throw std::runtime_error("cache fingerprint mismatch (file " + cache.fingerprint +
                                             ", expected " + expected +
                                             "); rebuild the cache for this field/override pair");
            }
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos) throw std::runtime_error("bad cache line: " + line);
        long long p = std::stoll(line.substr(0, colon));
        SplittingType st = parse_type_line(line.substr(colon + 1), p);
        auto it = ids.find(st);
        if (it == ids.end()) {
            it = ids.emplace(st, uint16_t(cache.shapes.size())).first;
            cache.shapes.push_back(st);
        }
        if (!cache.primes.empty() && cache.primes.back() >= p)
            throw std::runtime_error("cache primes out of order at p=" + std::to_string(p));
        cache.primes.push_back(p);
        cache.shape_id.push_back(it->second);
    }
    if (!have_fp) throw std::runtime_error("cache file lacks a #fingerprint header: " + path);
    if (!have_pmax) throw std::runtime_error("cache file lacks a #pmax header: " + path);
    return cache;
}

} // namespace zmom
