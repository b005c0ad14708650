#pragma once

#include <gmpxx.h>

#include <string>

#include "setpair/error.hpp"

namespace setpair {

// Exact arithmetic carriers.  mpq_class keeps the canonical form we need:
// denominator > 0 and gcd(|num|, den) = 1.
using BigInt = mpz_class;
using BigRatio = mpq_class;

inline BigRatio make_ratio(const BigInt& num, const BigInt& den) {
    if (den == 0) throw RangeError("make_ratio: zero denominator");
    BigRatio r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "7", "-3/4", "12/8" (reduced on the way in).
inline BigRatio parse_ratio(const std::string& s) {
    BigRatio r;
    if (r.set_str(s, 10) != 0)
        throw ParseError("not a rational number: '" + s + "'");
    if (r.get_den() == 0)
        throw ParseError("zero denominator in rational: '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string ratio_str(const BigRatio& r) { return r.get_str(); }

}  // namespace setpair
