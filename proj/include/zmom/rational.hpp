#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "zmom/wide_int.hpp"

namespace zmom {

// Exact rational on int64 with 128-bit intermediates. All character inner
// products and theta/delta arithmetic go through this type; overflow throws
// instead of wrapping.
struct Rational {
    long long num = 0;
    long long den = 1; // > 0, gcd(|num|, den) == 1

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) { assign(n, d); }

    void assign(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > i128(INT64_MAX) || n < i128(INT64_MIN) || d > i128(INT64_MAX))
            throw std::overflow_error("rational exceeds 64-bit range");
        num = (long long)n;
        den = (long long)d;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        r.assign(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        r.assign(i128(a.num) * b.den - i128(b.num) * a.den, i128(a.den) * b.den);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        r.assign(i128(a.num) * b.num, i128(a.den) * b.den);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        Rational r;
        r.assign(i128(a.num) * b.den, i128(a.den) * b.num);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num) * b.den < i128(b.num) * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const { return double(num) / double(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    // Accepts "a", "a/b", optional sign, no whitespace.
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(s));
            long long n = std::stoll(s.substr(0, slash));
            long long d = std::stoll(s.substr(slash + 1));
            return Rational(n, d);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad rational literal: " + s);
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("rational literal out of range: " + s);
        }
    }
};

} // namespace zmom
