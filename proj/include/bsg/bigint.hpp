#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bsg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// floor(a/b) for b != 0 (rounds toward minus infinity, unlike cpp_int's /).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

/// floor(sqrt(n)) for n >= 0.
inline BigInt isqrt(const BigInt& n) {
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt r = isqrt(n);
    return r * r == n;
}

inline const BigInt& numerator(const BigRat& r) { return boost::multiprecision::numerator(r); }
inline const BigInt& denominator(const BigRat& r) { return boost::multiprecision::denominator(r); }

} // namespace bsg
