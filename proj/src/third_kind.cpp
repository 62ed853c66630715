#include "bsg/third_kind.hpp"

namespace bsg {

ExactReal side_value(const ExactReal& theta, const BigInt& m, Side side) {
    theta.require_exact("side_value");
    ExactReal mt = ExactReal::integer(m) * theta;
    if (side == Side::Below) return ExactReal::integer(m) * (mt - ExactReal::integer(mt.floor()));
    return ExactReal::integer(m) * (ExactReal::integer(mt.ceil()) - mt);
}

std::vector<SideFraction> best_approx_third_kind(const ExactReal& x, Side side, const BigInt& q_max) {
    x.require_exact("best_approx_third_kind");
    if (!x.is_quadratic()) throw Error("best_approx_third_kind requires an exact irrational");
    if (q_max < 1) throw Error("q_max must be positive");

    ContinuedFraction cf = cf_expand(x);
    std::vector<SideFraction> out;
    bool have_min = false;
    ExactReal running_min;
    auto offer = [&](BigInt p, BigInt q, ExactReal value) {
        if (q > q_max) return;
        if (have_min && !(value < running_min)) return;
        running_min = value;
        have_min = true;
        out.push_back(SideFraction{std::move(p), std::move(q), std::move(value)});
    };

    if (side == Side::Above) {
        BigInt c = x.ceil();
        offer(c, 1, ExactReal::integer(c) - x);
    }
    // convergents below theta have even index, above theta odd index
    std::size_t parity = (side == Side::Below) ? 0 : 1;
    BigInt p1 = 1, p0 = 0, q1 = 0, q0 = 1;
    for (std::size_t n = 0;; ++n) {
        const BigInt& a = cf.term(n);
        BigInt p = a * p1 + p0, q = a * q1 + q0;
        if (q > q_max) break;
        if (n % 2 == parity) {
            ExactReal v = ExactReal::integer(q) * (ExactReal::integer(q) * x - ExactReal::integer(p));
            if (side == Side::Above) v = -v;
            if (!(out.size() && out.back().p == p && out.back().q == q)) // ceil may equal p1/q1
                offer(p, q, std::move(v));
        }
        p0 = p1; p1 = p;
        q0 = q1; q1 = q;
    }
    return out;
}

FracWalker::FracWalker(const ExactReal& theta) : m_(1) {
    theta.require_exact("FracWalker");
    if (theta.sign() <= 0) throw Error("FracWalker requires theta > 0");
    step_ = theta.frac();
    frac_ = step_;
}

void FracWalker::advance() {
    ++m_;
    frac_ = frac_ + step_;
    if (frac_ >= ExactReal::integer(1)) frac_ = frac_ - ExactReal::integer(1);
}

} // namespace bsg
