#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bsg/exact_real.hpp"

namespace bsg {

/// Truncation p_n/q_n of a continued fraction (always in lowest terms;
/// index n is zero-based, so p_0/q_0 = a0).
struct Convergent {
    BigInt p;
    BigInt q;
    std::size_t n = 0;
};

/// Canonical simple continued fraction [a0; a1, a2, ...] of a non-negative
/// real, eventually periodic.
///
/// - `period` empty  <=> the number is rational (expansion terminates).
/// - terminating expansions never end in a partial quotient 1 (canonical
///   choice: the last quotient is >= 2 whenever there are >= 2 terms).
/// - the head always keeps at least a0, even for purely periodic numbers.
class ContinuedFraction {
public:
    std::vector<BigInt> head;
    std::vector<BigInt> period;

    bool terminating() const { return period.empty(); }
    std::size_t head_size() const { return head.size(); }
    std::size_t period_size() const { return period.size(); }

    /// a_i with the period unrolled; throws for i past a terminating expansion.
    const BigInt& term(std::size_t i) const;

    /// Number of terms of a terminating expansion (head only).
    std::size_t term_count() const { return head.size(); }

    /// `[a0;a1,...,(p1,...,pk)]` with the parenthesized period last.
    std::string to_string() const;
    static ContinuedFraction parse(const std::string& text);

    bool operator==(const ContinuedFraction& o) const {
        return head == o.head && period == o.period;
    }
};

/// Exact expansion of a non-negative Rational or QuadraticIrrational.
/// The period of a quadratic irrational is detected by exact repetition of
/// the reduced surd state; max_terms bounds the work and triggers
/// PeriodNotFound when exceeded. Float input raises FloatNotSupported.
ContinuedFraction cf_expand(const ExactReal& x, std::size_t max_terms = 4096);

/// Estimate-mode expansion of a Float: emits only the partial quotients that
/// are certain for every real within the declared precision of the value
/// (guard-digit interval expansion). The result is a terminating prefix and
/// makes no round-trip claim.
ContinuedFraction cf_expand_approx(const ExactReal& x, std::size_t max_terms = 64);

/// Exact value of head+period (the inverse of cf_expand for exact inputs).
ExactReal cf_evaluate(const ContinuedFraction& cf);

/// First `count` convergents (fewer when a terminating expansion runs out).
std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t count);

/// Value of the purely periodic tail [a_j; a_{j+1}, ...] starting at term
/// index j >= head_size() (a quadratic irrational in the field of the source).
ExactReal cf_tail_value(const ContinuedFraction& cf, std::size_t j);

} // namespace bsg
