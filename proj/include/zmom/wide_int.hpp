#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zmom {

using i128 = __int128_t;
using u128 = __uint128_t;

inline std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s += char('0' + int(v % 10));
        v /= 10;
    }
    return std::string(s.rbegin(), s.rend());
}

inline std::string to_string_i128(i128 v) {
    if (v < 0) return "-" + to_string_u128(u128(-v));
    return to_string_u128(u128(v));
}

inline u128 parse_u128(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    u128 v = 0;
    for (char ch : s) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("bad integer literal: " + s);
        u128 next = v * 10 + u128(ch - '0');
        if (next < v) throw std::overflow_error("integer literal exceeds 128 bits: " + s);
        v = next;
    }
    return v;
}

// Checked i128 helpers; the moment accumulator relies on these never being wrong.
inline i128 mul_checked_i128(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("i128 multiply overflow");
    return r;
}

inline i128 pow_checked_i128(i128 base, int e) {
    i128 r = 1;
    for (int i = 0; i < e; ++i) r = mul_checked_i128(r, base);
    return r;
}

} // namespace zmom
