#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include <boost/rational.hpp>

#include "ellmod/errors.hpp"

namespace ellmod {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

inline Int checked_mul(Int a, Int b) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out)) throw DomainError("integer overflow");
    return out;
}

inline Int checked_add(Int a, Int b) {
    Int out;
    if (__builtin_add_overflow(a, b, &out)) throw DomainError("integer overflow");
    return out;
}

// 3^e, exact; throws once the value leaves the 64-bit range.
inline Int pow3(int e) {
    if (e < 0) throw DomainError("negative exponent");
    Int out = 1;
    for (int i = 0; i < e; ++i) out = checked_mul(out, 3);
    return out;
}

// Least nonnegative residue.
inline Int mod(Int a, Int n) {
    Int r = a % n;
    return r < 0 ? r + n : r;
}

// Inverse of a modulo n, or 0 when gcd(a, n) != 1.
inline Int mod_inverse(Int a, Int n) {
    Int t = 0, new_t = 1;
    Int r = n, new_r = mod(a, n);
    while (new_r != 0) {
        Int q = r / new_r;
        Int tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) return 0;
    return mod(t, n);
}

// Genus of the curve C_g carrying the order-3^c automorphism.
inline Int genus_for(int c) { return (pow3(c) - 1) / 2; }

inline void require_c(int c, int minimum = 2) {
    if (c < minimum) throw DomainError("c must be >= " + std::to_string(minimum));
    if (c > 38) throw DomainError("c too large for 64-bit arithmetic");
}

inline std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace ellmod
