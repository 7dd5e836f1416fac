#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace partsign {

// All counts, coefficients and weighted sums are exact integers. Sign
// decisions must never go through floating point.
using BigInt = boost::multiprecision::cpp_int;

inline int sign_of(const BigInt& x) {
    if (x.is_zero()) return 0;
    return x.sign() > 0 ? 1 : -1;
}

// x^k with the 0^0 = 1 convention (so k = 0 is always the identity weight).
inline BigInt int_pow(BigInt base, unsigned long k) {
    BigInt r = 1;
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

} // namespace partsign
