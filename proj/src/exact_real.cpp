#include "bsg/exact_real.hpp"

#include <mpfr.h>

#include <cctype>
#include <cstdio>
#include <sstream>

namespace bsg {

namespace {

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
    using boost::multiprecision::gcd;
    return gcd(gcd(abs(a), abs(b)), abs(c));
}

/// Splits n > 0 as s^2 * f with f squarefree (trial division, then a
/// perfect-square check on the remainder). Remainders with a square prime
/// factor above the trial bound are accepted as-is; canonical form is still
/// deterministic, which is what equality relies on.
void extract_square_part(BigInt& n, BigInt& s) {
    s = 1;
    for (BigInt p = 2; p * p <= n && p < 100000; ++p) {
        BigInt pp = p * p;
        while (n % pp == 0) {
            n /= pp;
            s *= p;
        }
    }
    if (n > 1 && is_perfect_square(n)) {
        s *= isqrt(n);
        n = 1;
    }
}

int sign_of(const BigInt& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

/// sign(a + b*sqrt(d)), d > 1 non-square.
int surd_sign(const BigInt& a, const BigInt& b, const BigInt& d) {
    int sa = sign_of(a), sb = sign_of(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against b^2 d (cannot tie, d non-square)
    BigInt lhs = a * a, rhs = b * b * d;
    if (sa > 0) return lhs > rhs ? 1 : -1;
    return lhs > rhs ? -1 : 1;
}

} // namespace

ExactReal ExactReal::rational(const BigInt& p, const BigInt& q) {
    if (q == 0) throw Error("rational with zero denominator");
    return ExactReal(BigRat(p, q));
}

ExactReal ExactReal::quadratic(BigInt a, BigInt b, BigInt c, BigInt d) {
    if (c == 0) throw Error("quadratic with zero denominator");
    if (d <= 0) throw Error("quadratic requires positive d");
    BigInt s;
    extract_square_part(d, s);
    b *= s;
    if (b == 0 || d == 1) {
        if (d == 1) a += b;
        return ExactReal(BigRat(a, c));
    }
    if (c < 0) { a = -a; b = -b; c = -c; }
    BigInt g = gcd3(a, b, c);
    if (g > 1) { a /= g; b /= g; c /= g; }
    return ExactReal(Quad{std::move(a), std::move(b), std::move(c), std::move(d)});
}

ExactReal ExactReal::approximate(double value, int declared_precision) {
    if (declared_precision < 1) declared_precision = 1;
    return ExactReal(FloatVal{value, declared_precision});
}

bool ExactReal::is_integer() const {
    return is_rational() && denominator(rat()) == 1;
}

const BigRat& ExactReal::rat() const {
    if (!is_rational()) throw Error("not a rational value");
    return std::get<BigRat>(v_);
}

const Quad& ExactReal::quad() const {
    if (!is_quadratic()) throw Error("not a quadratic value");
    return std::get<Quad>(v_);
}

const ExactReal::FloatVal& ExactReal::float_val() const {
    if (!is_float()) throw Error("not a float value");
    return std::get<FloatVal>(v_);
}

void ExactReal::require_exact(const char* op) const {
    if (is_float()) throw FloatNotSupported(std::string(op) + ": Float operand not supported");
}

ExactReal ExactReal::operator-() const {
    require_exact("negate");
    if (is_rational()) return ExactReal(BigRat(-rat()));
    const Quad& q = quad();
    return ExactReal(Quad{-q.a, -q.b, q.c, q.d});
}

ExactReal ExactReal::operator+(const ExactReal& o) const {
    require_exact("add");
    o.require_exact("add");
    if (is_rational() && o.is_rational()) return ExactReal(BigRat(rat() + o.rat()));
    if (is_rational()) return o + *this;
    const Quad& x = quad();
    if (o.is_rational()) {
        const BigInt& p = numerator(o.rat());
        const BigInt& q = denominator(o.rat());
        // (a+b sqrt d)/c + p/q = (aq+pc + bq sqrt d)/(cq)
        return quadratic(x.a * q + p * x.c, x.b * q, x.c * q, x.d);
    }
    const Quad& y = o.quad();
    if (x.d != y.d) throw Error("mixed quadratic fields");
    return quadratic(x.a * y.c + y.a * x.c, x.b * y.c + y.b * x.c, x.c * y.c, x.d);
}

ExactReal ExactReal::operator-(const ExactReal& o) const { return *this + (-o); }

ExactReal ExactReal::operator*(const ExactReal& o) const {
    require_exact("multiply");
    o.require_exact("multiply");
    if (is_rational() && o.is_rational()) return ExactReal(BigRat(rat() * o.rat()));
    if (is_rational()) return o * *this;
    const Quad& x = quad();
    if (o.is_rational()) {
        const BigInt& p = numerator(o.rat());
        const BigInt& q = denominator(o.rat());
        return quadratic(x.a * p, x.b * p, x.c * q, x.d);
    }
    const Quad& y = o.quad();
    if (x.d != y.d) throw Error("mixed quadratic fields");
    return quadratic(x.a * y.a + x.b * y.b * x.d, x.a * y.b + x.b * y.a, x.c * y.c, x.d);
}

ExactReal ExactReal::inverse() const {
    require_exact("invert");
    if (is_rational()) {
        if (rat() == 0) throw Error("division by zero");
        return ExactReal(BigRat(1) / rat());
    }
    const Quad& x = quad();
    // c/(a+b sqrt d) = c(a - b sqrt d)/(a^2 - b^2 d)
    BigInt n = x.a * x.a - x.b * x.b * x.d;
    return quadratic(x.a * x.c, -x.b * x.c, n, x.d);
}

ExactReal ExactReal::operator/(const ExactReal& o) const { return *this * o.inverse(); }

int ExactReal::sign() const {
    require_exact("sign");
    if (is_rational()) return rat() < 0 ? -1 : (rat() > 0 ? 1 : 0);
    const Quad& x = quad();
    return surd_sign(x.a, x.b, x.d);
}

int ExactReal::cmp(const ExactReal& o) const {
    return (*this - o).sign();
}

bool ExactReal::operator==(const ExactReal& o) const {
    if (is_float() || o.is_float()) {
        if (!(is_float() && o.is_float())) return false;
        return float_val().value == o.float_val().value &&
               float_val().declared_precision == o.float_val().declared_precision;
    }
    if (is_rational() != o.is_rational()) return false; // rational vs quadratic never equal
    if (is_rational()) return rat() == o.rat();
    return quad() == o.quad();
}

BigInt ExactReal::floor() const {
    require_exact("floor");
    if (is_rational()) return floor_div(numerator(rat()), denominator(rat()));
    const Quad& x = quad();
    BigInt s2 = isqrt(x.b * x.b * x.d); // |b| sqrt d in [s2, s2+1)
    BigInt num = (x.b > 0) ? x.a + s2 : x.a - s2 - 1;
    BigInt g = floor_div(num, x.c);
    // exact correction (at most a step each way)
    while ((*this - ExactReal::integer(g)).sign() < 0) --g;
    while ((*this - ExactReal::integer(g + 1)).sign() >= 0) ++g;
    return g;
}

BigInt ExactReal::ceil() const {
    BigInt f = floor();
    if (is_rational() && BigRat(f) == rat()) return f;
    return f + 1;
}

double ExactReal::to_double() const {
    if (is_float()) return float_val().value;
    mpfr_t acc, tmp;
    mpfr_init2(acc, 128);
    mpfr_init2(tmp, 128);
    auto set_big = [&](mpfr_t dst, const BigInt& n) {
        mpfr_set_str(dst, n.str().c_str(), 10, MPFR_RNDN);
    };
    if (is_rational()) {
        set_big(acc, numerator(rat()));
        set_big(tmp, denominator(rat()));
        mpfr_div(acc, acc, tmp, MPFR_RNDN);
    } else {
        const Quad& x = quad();
        set_big(acc, x.d);
        mpfr_sqrt(acc, acc, MPFR_RNDN);
        set_big(tmp, x.b);
        mpfr_mul(acc, acc, tmp, MPFR_RNDN);
        set_big(tmp, x.a);
        mpfr_add(acc, acc, tmp, MPFR_RNDN);
        set_big(tmp, x.c);
        mpfr_div(acc, acc, tmp, MPFR_RNDN);
    }
    double out = mpfr_get_d(acc, MPFR_RNDN);
    mpfr_clear(acc);
    mpfr_clear(tmp);
    return out;
}

std::string ExactReal::to_string() const {
    std::ostringstream os;
    if (is_float()) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", float_val().value);
        os << "float:" << buf;
        return os.str();
    }
    if (is_rational()) {
        os << numerator(rat());
        if (denominator(rat()) != 1) os << "/" << denominator(rat());
        return os.str();
    }
    const Quad& x = quad();
    os << "(" << x.a << (x.b < 0 ? "-" : "+") << abs(x.b) << "*sqrt(" << x.d << "))/" << x.c;
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw FormatError("expected '" + std::string(1, c) + "' in number literal");
    }
    BigInt integer() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) throw FormatError("expected integer in number literal");
        return BigInt(s.substr(start, i - start));
    }
};

} // namespace

ExactReal ExactReal::parse(const std::string& text) {
    Cursor c{text};
    c.skip_ws();
    if (text.compare(c.i, 6, "float:") == 0) {
        c.i += 6;
        size_t pos = 0;
        std::string body = text.substr(c.i);
        double v = std::stod(body, &pos);
        int digits = 0;
        for (char ch : body.substr(0, pos))
            if (std::isdigit(static_cast<unsigned char>(ch))) ++digits;
        return approximate(v, digits > 0 ? digits : 17);
    }
    if (c.eat('(')) {
        BigInt a = c.integer();
        c.skip_ws();
        if (c.i >= text.size() || (text[c.i] != '+' && text[c.i] != '-'))
            throw FormatError("expected sign before surd term");
        int sgn = text[c.i] == '-' ? -1 : 1;
        ++c.i;
        BigInt b = c.integer() * sgn;
        c.expect('*');
        c.skip_ws();
        if (text.compare(c.i, 5, "sqrt(") != 0) throw FormatError("expected sqrt( in quadratic literal");
        c.i += 5;
        BigInt d = c.integer();
        c.expect(')');
        c.expect(')');
        c.expect('/');
        BigInt den = c.integer();
        c.skip_ws();
        if (c.i != text.size()) throw FormatError("trailing characters in number literal");
        return quadratic(a, b, den, d);
    }
    BigInt p = c.integer();
    if (c.eat('/')) {
        BigInt q = c.integer();
        c.skip_ws();
        if (c.i != text.size()) throw FormatError("trailing characters in number literal");
        return rational(p, q);
    }
    c.skip_ws();
    if (c.i != text.size()) throw FormatError("trailing characters in number literal");
    return integer(p);
}

} // namespace bsg
