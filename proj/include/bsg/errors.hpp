#pragma once

#include <stdexcept>
#include <string>

namespace bsg {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An exact-only operation received a Float operand.
struct FloatNotSupported : Error {
    explicit FloatNotSupported(const std::string& msg = "operation requires an exact operand")
        : Error(msg) {}
};

/// Continued-fraction period (or termination) not detected within max_terms.
struct PeriodNotFound : Error {
    explicit PeriodNotFound(const std::string& msg) : Error(msg) {}
};

/// A certified floating-point comparison stayed undecided at the maximum
/// precision of the escalation ladder.
struct UncertifiedComparison : Error {
    explicit UncertifiedComparison(const std::string& msg) : Error(msg) {}
};

/// m*theta landed exactly on an integer: the gap-condition expression
/// degenerates (commensurate lengths).
struct DegenerateResonance : Error {
    explicit DegenerateResonance(const std::string& msg) : Error(msg) {}
};

/// The inverted block of the vertex scattering formula is singular at this k.
struct SingularResolvent : Error {
    explicit SingularResolvent(const std::string& msg) : Error(msg) {}
};

/// The realified secular value failed its realness guarantee.
struct BranchTrackingLost : Error {
    explicit BranchTrackingLost(const std::string& msg) : Error(msg) {}
};

/// Ratio-construction parameter t fails the admissibility inequality.
struct ConditionTViolated : Error {
    int suggested_t;
    ConditionTViolated(const std::string& msg, int suggested) : Error(msg), suggested_t(suggested) {}
};

/// The Dirichlet search bound exceeds the configured budget.
struct SearchBudgetExceeded : Error {
    unsigned long long required_budget;
    SearchBudgetExceeded(const std::string& msg, unsigned long long required)
        : Error(msg), required_budget(required) {}
};

/// Malformed text input (numbers, continued fractions, cell files, configs).
struct FormatError : Error {
    explicit FormatError(const std::string& msg) : Error(msg) {}
};

} // namespace bsg
