#pragma once

#include <string>
#include <variant>

#include "bsg/bigint.hpp"
#include "bsg/errors.hpp"

namespace bsg {

/// Element (a + b*sqrt(d))/c of a real quadratic field.
///
/// Canonical form: c > 0, gcd(a,b,c) = 1, d > 1 squarefree, b != 0.
/// Values with b = 0 (or d reducing to a square) are demoted to the
/// Rational alternative by ExactReal, so equality of quadratics is a
/// plain component comparison.
struct Quad {
    BigInt a, b, c, d;

    bool operator==(const Quad& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

/// An exact rational, an exact quadratic irrational, or a checked float.
///
/// Exact-only operations reject the Float alternative with FloatNotSupported;
/// the Float carrier exists so that estimate-mode entry points can accept
/// approximate input without silently upgrading it to exact status.
class ExactReal {
public:
    struct FloatVal {
        double value = 0.0;
        int declared_precision = 17; // significant decimal digits the caller vouches for
    };

    ExactReal() : v_(BigRat(0)) {}

    static ExactReal integer(const BigInt& n) { return ExactReal(BigRat(n)); }
    static ExactReal rational(const BigInt& p, const BigInt& q);
    static ExactReal rational(const BigRat& r) { return ExactReal(r); }
    /// (a + b*sqrt(d))/c, normalized; demotes to Rational when the surd vanishes.
    static ExactReal quadratic(BigInt a, BigInt b, BigInt c, BigInt d);
    static ExactReal approximate(double value, int declared_precision = 17);

    bool is_rational() const { return std::holds_alternative<BigRat>(v_); }
    bool is_quadratic() const { return std::holds_alternative<Quad>(v_); }
    bool is_float() const { return std::holds_alternative<FloatVal>(v_); }
    bool is_exact() const { return !is_float(); }
    bool is_integer() const;

    const BigRat& rat() const;
    const Quad& quad() const;
    const FloatVal& float_val() const;

    /// Throws FloatNotSupported when this holds a Float (used by exact-only ops).
    void require_exact(const char* op) const;

    ExactReal operator-() const;
    ExactReal operator+(const ExactReal& o) const;
    ExactReal operator-(const ExactReal& o) const;
    ExactReal operator*(const ExactReal& o) const;
    ExactReal operator/(const ExactReal& o) const;
    ExactReal inverse() const;

    /// Exact three-way comparison; exact operands only.
    int cmp(const ExactReal& o) const;
    int sign() const;
    bool operator==(const ExactReal& o) const;
    bool operator!=(const ExactReal& o) const { return !(*this == o); }
    bool operator<(const ExactReal& o) const { return cmp(o) < 0; }
    bool operator<=(const ExactReal& o) const { return cmp(o) <= 0; }
    bool operator>(const ExactReal& o) const { return cmp(o) > 0; }
    bool operator>=(const ExactReal& o) const { return cmp(o) >= 0; }

    BigInt floor() const;
    BigInt ceil() const;
    ExactReal frac() const { return *this - ExactReal::integer(floor()); }

    /// Nearest binary64 (correctly rounded via 128-bit intermediate).
    double to_double() const;

    /// Canonical text form: `p/q`, `(a+b*sqrt(d))/c`, or `float:<decimal>`.
    std::string to_string() const;
    static ExactReal parse(const std::string& text);

private:
    explicit ExactReal(BigRat r) : v_(std::move(r)) {}
    explicit ExactReal(Quad q) : v_(std::move(q)) {}
    explicit ExactReal(FloatVal f) : v_(f) {}

    std::variant<BigRat, Quad, FloatVal> v_;
};

inline ExactReal operator+(const BigRat& r, const ExactReal& x) { return ExactReal::rational(r) + x; }
inline ExactReal operator*(const BigRat& r, const ExactReal& x) { return ExactReal::rational(r) * x; }

} // namespace bsg
