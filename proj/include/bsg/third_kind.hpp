#pragma once

#include <vector>

#include "bsg/continued_fraction.hpp"

namespace bsg {

enum class Side { Below, Above };

inline const char* side_name(Side s) { return s == Side::Below ? "below" : "above"; }

/// A one-sided approximation p/q of theta together with its exact quality
/// q(q*theta - p) (below) or q(p - q*theta) (above).
struct SideFraction {
    BigInt p;
    BigInt q;
    ExactReal value;
};

/// All best one-sided approximations of the third kind with q <= q_max,
/// in increasing q (their quality values are strictly decreasing).
///
/// Best-below approximations are exactly the below convergents whose quality
/// beats every earlier below fraction; best-above ones additionally admit
/// ceil(theta) as the q = 1 seed. Candidates therefore come from the
/// convergent list; each is kept iff it strictly improves on the running
/// minimum, which is equivalent to the defining competitor condition.
std::vector<SideFraction> best_approx_third_kind(const ExactReal& x, Side side, const BigInt& q_max);

/// Exact quality of the fraction obtained by rounding m*theta to the given
/// side: m(m*theta - floor(m*theta)) or m(ceil(m*theta) - m*theta).
ExactReal side_value(const ExactReal& theta, const BigInt& m, Side side);

/// Walks m = 1, 2, 3, ... maintaining the exact fractional part of m*theta
/// incrementally (no big square roots in the loop).
class FracWalker {
public:
    explicit FracWalker(const ExactReal& theta);

    void advance();
    unsigned long long m() const { return m_; }
    /// m*theta - floor(m*theta), exact, in [0, 1).
    const ExactReal& frac() const { return frac_; }
    /// frac() == 0, i.e. m*theta is an integer (possible only for rational theta).
    bool integer_point() const { return frac_.sign() == 0; }

private:
    ExactReal step_;  // theta - floor(theta)
    ExactReal frac_;
    unsigned long long m_;
};

} // namespace bsg
