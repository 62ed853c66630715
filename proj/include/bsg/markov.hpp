#pragma once

#include <optional>
#include <vector>

#include "bsg/third_kind.hpp"

namespace bsg {

struct UpsilonResult {
    double value = 0.0;
    std::optional<ExactReal> exact_value; // present in exact mode
    bool exact = false;
    double uncertainty = 0.0; // estimate-mode half width (0 when exact)
};

struct OneSidedMarkov {
    UpsilonResult upsilon_theta;
    UpsilonResult upsilon_theta_inv;
    double mu = 0.0;
    std::optional<ExactReal> mu_exact;
    bool exact = false;
};

/// One-sided lower Markov function: the liminf of m(m*theta - floor(m*theta)).
/// Exact mode (quadratic irrationals) evaluates the finitely many limit
/// points of q_n|q_n theta - p_n| over the period residues and returns their
/// minimum on the below-side subsequence. Rational input gives exactly 0.
/// Float input is handled in estimate mode from the certain prefix of the
/// guard-digit expansion.
UpsilonResult upsilon(const ExactReal& x);

OneSidedMarkov markov_constant(const ExactReal& x);

/// GL(2,Z) equivalence via continued-fraction tails: true iff the expansions
/// agree after finite prefixes. Two rationals are always equivalent.
bool equivalent(const ExactReal& x, const ExactReal& y);

/// One-sided approximation profile of an exact positive irrational:
/// exact convergent qualities, their per-residue limit points, and certified
/// bounds on inf_m m*sidefrac(m*theta) used by the gap classifiers.
class ApproxProfile {
public:
    explicit ApproxProfile(const ExactReal& theta);

    const ExactReal& theta() const { return theta_; }
    const ContinuedFraction& cf() const { return cf_; }

    /// One-sided liminf (exact): Below gives upsilon(theta), Above gives
    /// upsilon(theta^{-1}).
    const ExactReal& liminf(Side side) const;

    /// Certified: side_value(theta, m, side) > bound for every m >= 1
    /// (">=" when strictly == false).
    bool all_values_exceed(Side side, const ExactReal& bound, bool strictly) const;

    /// Certified exact lower bound on inf over m > M of side_value(theta, m, side).
    ExactReal tail_lower_bound(Side side, const BigInt& M) const;

    /// Certified exact lower bound on inf over ALL m of side_value.
    const ExactReal& global_lower_bound(Side side) const;

private:
    struct ClassInfo {
        ExactReal limit;       // per-residue limit point of q_n|q_n theta - p_n|
        ExactReal lower_bound; // certified bound for every uncomputed member
        bool from_above;       // uncomputed members certified > limit
        std::size_t parity;    // parity of the convergent indices in this class
    };

    struct SideData {
        ExactReal liminf;
        ExactReal global_lb;
        std::vector<std::size_t> value_idx; // indices into conv_ of this side's parity
    };

    void extend_convergents(const BigInt& q_target) const;
    const SideData& side_data(Side s) const { return s == Side::Below ? below_ : above_; }

    ExactReal theta_;
    ContinuedFraction cf_;
    std::size_t head_len_ = 0, period_len_ = 0, cycle_len_ = 0; // cycle_len = lcm(period, 2)
    std::size_t assured_from_ = 0; // convergent index from which class bounds apply

    mutable std::vector<Convergent> conv_;
    mutable std::vector<ExactReal> conv_value_; // exact q_n |q_n theta - p_n|

    std::vector<ClassInfo> classes_; // one per residue of (n - head) mod cycle_len
    std::optional<ExactReal> ceil_value_;
    BigInt q1_;
    BigInt a1_;
    BigInt max_quotient_;
    SideData below_, above_;
};

} // namespace bsg
