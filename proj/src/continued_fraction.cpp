#include "bsg/continued_fraction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

namespace bsg {

const BigInt& ContinuedFraction::term(std::size_t i) const {
    if (i < head.size()) return head[i];
    if (period.empty()) throw Error("term index past the end of a terminating expansion");
    return period[(i - head.size()) % period.size()];
}

std::string ContinuedFraction::to_string() const {
    std::ostringstream os;
    os << "[" << (head.empty() ? BigInt(0) : head[0]);
    bool first = true;
    for (std::size_t i = 1; i < head.size(); ++i) {
        os << (first ? ";" : ",") << head[i];
        first = false;
    }
    if (!period.empty()) {
        os << (first ? ";(" : ",(");
        for (std::size_t i = 0; i < period.size(); ++i) {
            if (i) os << ",";
            os << period[i];
        }
        os << ")";
    }
    os << "]";
    return os.str();
}

ContinuedFraction ContinuedFraction::parse(const std::string& text) {
    ContinuedFraction cf;
    std::size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto integer = [&]() -> BigInt {
        skip();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw FormatError("expected integer in continued fraction");
        return BigInt(text.substr(start, i - start));
    };
    skip();
    if (i >= text.size() || text[i] != '[') throw FormatError("continued fraction must start with '['");
    ++i;
    cf.head.push_back(integer());
    skip();
    bool in_period = false;
    while (i < text.size() && text[i] != ']') {
        char c = text[i];
        if (c == ';' || c == ',') { ++i; skip(); continue; }
        if (c == '(') {
            if (in_period) throw FormatError("nested period in continued fraction");
            in_period = true;
            ++i;
            continue;
        }
        if (c == ')') {
            if (!in_period) throw FormatError("unmatched ')' in continued fraction");
            in_period = false;
            ++i;
            skip();
            break;
        }
        (in_period ? cf.period : cf.head).push_back(integer());
        skip();
    }
    skip();
    if (i >= text.size() || text[i] != ']') throw FormatError("continued fraction must end with ']'");
    return cf;
}

namespace {

void check_canonical_terms(const ContinuedFraction& cf) {
    for (std::size_t i = 1; i < cf.head.size(); ++i)
        if (cf.head[i] < 1) throw Error("partial quotient below 1");
    for (const BigInt& p : cf.period)
        if (p < 1) throw Error("period element below 1");
}

ContinuedFraction expand_rational(BigRat x, std::size_t max_terms) {
    ContinuedFraction cf;
    BigInt p = numerator(x), q = denominator(x);
    while (true) {
        if (cf.head.size() > max_terms)
            throw PeriodNotFound("rational expansion exceeds max_terms (raise max_terms)");
        BigInt a = floor_div(p, q);
        cf.head.push_back(a);
        BigInt r = p - a * q;
        if (r == 0) break;
        p = q;
        q = r;
    }
    if (cf.head.size() >= 2 && cf.head.back() == 1) {
        // never produced by the division algorithm, but keep the invariant airtight
        cf.head.pop_back();
        cf.head.back() += 1;
    }
    return cf;
}

} // namespace

ContinuedFraction cf_expand(const ExactReal& x, std::size_t max_terms) {
    x.require_exact("cf_expand");
    if (x.sign() < 0) throw Error("cf_expand requires a non-negative value");
    if (x.is_rational()) return expand_rational(x.rat(), max_terms);

    ContinuedFraction cf;
    // cycle detection on the canonical surd state (a,b,c); d is constant
    std::map<std::tuple<BigInt, BigInt, BigInt>, std::size_t> seen;
    ExactReal y = x;
    while (true) {
        if (cf.head.size() > max_terms)
            throw PeriodNotFound("period not detected within max_terms (raise max_terms)");
        const Quad& st = y.quad();
        auto key = std::make_tuple(st.a, st.b, st.c);
        auto it = seen.find(key);
        if (it != seen.end()) {
            std::size_t start = it->second;
            cf.period.assign(cf.head.begin() + static_cast<std::ptrdiff_t>(start), cf.head.end());
            cf.head.resize(start);
            break;
        }
        seen.emplace(key, cf.head.size());
        BigInt a = y.floor();
        cf.head.push_back(a);
        y = (y - ExactReal::integer(a)).inverse();
    }
    // minimal head: fold head terms that merely repeat the period's end
    while (cf.head.size() > 1 && cf.head.back() == cf.period.back()) {
        cf.head.pop_back();
        cf.period.insert(cf.period.begin(), cf.period.back());
        cf.period.pop_back();
    }
    if (cf.head.empty()) { // purely periodic: keep a0 visible
        cf.head.push_back(cf.period.front());
        cf.period.push_back(cf.period.front());
        cf.period.erase(cf.period.begin());
    }
    check_canonical_terms(cf);
    return cf;
}

ContinuedFraction cf_expand_approx(const ExactReal& x, std::size_t max_terms) {
    if (!x.is_float()) return cf_expand(x, max_terms);
    const auto& f = x.float_val();
    if (!std::isfinite(f.value)) throw Error("cf_expand_approx requires a finite value");
    if (f.value < 0) throw Error("cf_expand_approx requires a non-negative value");
    double mag = std::abs(f.value);
    double epsd = (mag > 0 ? mag : 1.0) * 5.0 * std::pow(10.0, -f.declared_precision);
    BigRat lo = BigRat(f.value) - BigRat(epsd);
    BigRat hi = BigRat(f.value) + BigRat(epsd);
    if (lo < 0) lo = 0;

    ContinuedFraction cf;
    while (cf.head.size() < max_terms) {
        BigInt alo = floor_div(numerator(lo), denominator(lo));
        BigInt ahi = floor_div(numerator(hi), denominator(hi));
        if (alo != ahi) break; // next quotient uncertain at this precision
        cf.head.push_back(alo);
        BigRat rlo = lo - BigRat(alo), rhi = hi - BigRat(alo);
        if (rlo == 0 || rhi == 0) break;
        BigRat nlo = BigRat(1) / rhi, nhi = BigRat(1) / rlo; // reciprocal swaps the ends
        lo = nlo;
        hi = nhi;
    }
    if (cf.head.empty()) throw Error("declared precision too low for even one certain term");
    if (cf.head.size() >= 2 && cf.head.back() == 1) {
        cf.head.pop_back();
        cf.head.back() += 1;
    }
    return cf;
}

ExactReal cf_evaluate(const ContinuedFraction& cf) {
    if (cf.head.empty()) throw Error("empty continued fraction");
    check_canonical_terms(cf);
    ExactReal y;
    std::size_t fold_from = cf.head.size();
    if (cf.terminating()) {
        y = ExactReal::integer(cf.head.back());
        fold_from = cf.head.size() - 1;
    } else {
        // y = [b1; b2, ..., bL, y]  =>  qL y^2 + (q_{L-1} - pL) y - p_{L-1} = 0
        BigInt p1 = 1, p0 = 0, q1 = 0, q0 = 1; // p_{-1}, p_{-2}, q_{-1}, q_{-2}
        for (const BigInt& b : cf.period) {
            BigInt p = b * p1 + p0, q = b * q1 + q0;
            p0 = p1; p1 = p;
            q0 = q1; q1 = q;
        }
        BigInt B = q0 - p1, A = q1, C = -p0;
        BigInt disc = B * B - 4 * A * C;
        y = ExactReal::quadratic(-B, 1, 2 * A, disc); // positive root: tails are >= 1
    }
    for (std::size_t i = fold_from; i-- > 0;)
        y = ExactReal::integer(cf.head[i]) + y.inverse();
    return y;
}

std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t count) {
    std::vector<Convergent> out;
    if (cf.terminating()) count = std::min(count, cf.term_count());
    BigInt p1 = 1, p0 = 0, q1 = 0, q0 = 1;
    for (std::size_t n = 0; n < count; ++n) {
        const BigInt& a = cf.term(n);
        BigInt p = a * p1 + p0, q = a * q1 + q0;
        out.push_back(Convergent{p, q, n});
        p0 = p1; p1 = p;
        q0 = q1; q1 = q;
    }
    return out;
}

ExactReal cf_tail_value(const ContinuedFraction& cf, std::size_t j) {
    if (cf.terminating()) throw Error("tail value requires a periodic expansion");
    if (j < cf.head.size()) throw Error("tail index must lie in the periodic part");
    std::size_t L = cf.period.size();
    std::size_t r = (j - cf.head.size()) % L;
    ContinuedFraction rot;
    rot.period.assign(cf.period.begin() + static_cast<std::ptrdiff_t>(r), cf.period.end());
    rot.period.insert(rot.period.end(), cf.period.begin(), cf.period.begin() + static_cast<std::ptrdiff_t>(r));
    rot.head.push_back(rot.period.front());
    rot.period.push_back(rot.period.front());
    rot.period.erase(rot.period.begin());
    return cf_evaluate(rot);
}

} // namespace bsg
