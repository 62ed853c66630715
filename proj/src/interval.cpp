#include "bsg/interval.hpp"

#include <algorithm>
#include <utility>

namespace bsg {

namespace {

void set_big(mpfr_t dst, const BigInt& v, mpfr_rnd_t rnd) {
    mpfr_set_str(dst, v.str().c_str(), 10, rnd);
}

} // namespace

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_long(long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Interval Interval::from_double(double v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_d(r.lo_, v, MPFR_RNDD);
    mpfr_set_d(r.hi_, v, MPFR_RNDU);
    return r;
}

Interval Interval::from_big(const BigInt& v, mpfr_prec_t prec) {
    Interval r(prec);
    set_big(r.lo_, v, MPFR_RNDD);
    set_big(r.hi_, v, MPFR_RNDU);
    return r;
}

Interval Interval::from_rat(const BigRat& v, mpfr_prec_t prec) {
    return from_big(numerator(v), prec) / from_big(denominator(v), prec);
}

Interval Interval::from_exact(const ExactReal& v, mpfr_prec_t prec) {
    v.require_exact("interval evaluation");
    if (v.is_rational()) return from_rat(v.rat(), prec);
    const Quad& q = v.quad();
    Interval surd = from_big(q.d, prec).sqrt() * from_big(q.b, prec);
    return (from_big(q.a, prec) + surd) / from_big(q.c, prec);
}

Interval Interval::pi(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator+(const Interval& o) const {
    Interval r(prec_);
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& o) const {
    Interval r(prec_);
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const {
    Interval r(prec_);
    mpfr_t t;
    mpfr_init2(t, prec_);
    // lo: min of the four directed-down products
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // hi: max of the four directed-up products
    mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Interval Interval::operator/(const Interval& o) const {
    if (o.contains_zero()) throw Error("interval division by an interval straddling zero");
    Interval inv(prec_);
    // sign-definite divisor: 1/[lo,hi] = [1/hi, 1/lo] on either side of zero
    mpfr_ui_div(inv.lo_, 1, o.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, o.lo_, MPFR_RNDU);
    return *this * inv;
}

Interval Interval::tan_principal() const {
    Interval half_pi = pi(prec_);
    mpfr_div_ui(half_pi.lo_, half_pi.lo_, 2, MPFR_RNDD);
    mpfr_div_ui(half_pi.hi_, half_pi.hi_, 2, MPFR_RNDU);
    mpfr_t neg;
    mpfr_init2(neg, prec_);
    mpfr_neg(neg, half_pi.lo_, MPFR_RNDU);
    bool inside = mpfr_cmp(hi_, half_pi.lo_) < 0 && mpfr_cmp(lo_, neg) > 0;
    mpfr_clear(neg);
    if (!inside) throw Error("tan argument not certified inside (-pi/2, pi/2)");
    Interval r(prec_);
    mpfr_tan(r.lo_, lo_, MPFR_RNDD);
    mpfr_tan(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::atan() const {
    Interval r(prec_);
    mpfr_atan(r.lo_, lo_, MPFR_RNDD);
    mpfr_atan(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw Error("interval sqrt of a possibly negative value");
    Interval r(prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::abs() const {
    Interval r(prec_);
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) {
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        return r;
    }
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, hi_, MPFR_RNDU);
    return r;
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid_double() const {
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(m, m, 2, MPFR_RNDN);
    double out = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return out;
}

double Interval::width_double() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double out = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return out;
}

bool Interval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

int Interval::cmp(const Interval& o) const {
    if (mpfr_cmp(hi_, o.lo_) < 0) return -1;
    if (mpfr_cmp(lo_, o.hi_) > 0) return 1;
    return 0;
}

int certified_compare(const std::function<int(mpfr_prec_t)>& eval, const char* what,
                      mpfr_prec_t max_prec) {
    for (mpfr_prec_t prec = 96; prec <= max_prec; prec *= 2) {
        int r = eval(prec);
        if (r != 0) return r;
    }
    throw UncertifiedComparison(std::string("comparison undecided at maximum precision: ") + what);
}

double certified_value(const std::function<Interval(mpfr_prec_t)>& eval) {
    return eval(192).mid_double();
}

} // namespace bsg
