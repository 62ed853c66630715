#pragma once

#include <mpfr.h>

#include <functional>
#include <string>

#include "bsg/exact_real.hpp"

namespace bsg {

/// Directed-rounding interval scalar over MPFR.
///
/// Every operation returns an interval certified to contain the exact result.
/// Comparisons between intervals are three-valued; undecided comparisons are
/// retried by certified_compare at higher precision.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(Interval o);
    ~Interval();

    static Interval from_long(long v, mpfr_prec_t prec);
    static Interval from_double(double v, mpfr_prec_t prec); // doubles are exact
    static Interval from_big(const BigInt& v, mpfr_prec_t prec);
    static Interval from_rat(const BigRat& v, mpfr_prec_t prec);
    /// Rational or quadratic value; Float is rejected (FloatNotSupported).
    static Interval from_exact(const ExactReal& v, mpfr_prec_t prec);
    static Interval pi(mpfr_prec_t prec);

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const; // divisor must not straddle 0

    /// tan on an interval certified inside (-pi/2, pi/2); throws otherwise.
    Interval tan_principal() const;
    Interval atan() const;
    Interval sqrt() const;
    Interval abs() const;

    mpfr_prec_t precision() const { return prec_; }
    double lo_double() const; // rounded down
    double hi_double() const; // rounded up
    double mid_double() const;
    double width_double() const;

    bool contains_zero() const;
    /// -1: certainly less than o; +1: certainly greater; 0: undecided overlap.
    int cmp(const Interval& o) const;

private:
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;

    friend Interval make_interval_raw(mpfr_prec_t);
};

/// Runs `eval(prec)` up the precision ladder until it returns nonzero.
/// `eval` returns -1/0/+1 (0 = undecided at that precision).
int certified_compare(const std::function<int(mpfr_prec_t)>& eval, const char* what,
                      mpfr_prec_t max_prec = 6144);

/// Midpoint evaluation helper at a fixed healthy precision.
double certified_value(const std::function<Interval(mpfr_prec_t)>& eval);

} // namespace bsg
