#ifndef ZETAPOLY_BRACKET_SOLVE_HPP
#define ZETAPOLY_BRACKET_SOLVE_HPP

#include <tuple>
#include <utility>

#include "hp_real.hpp"

namespace zetapoly {

struct BracketedRoot {
    HPReal x;
    HPReal fx;
    unsigned iterations;
};

/**
 * Hybrid bisection/Newton on a bracket [lo, hi] with a sign change.
 *
 * `value(x)` returns f(x); `value_slope(x)` returns {f(x), f'(x)}. Bisection
 * runs until the bracket is narrower than 2^-(bits/2), then safeguarded Newton
 * runs until |step| <= 2^-(bits-8). A Newton step that leaves the bracket is
 * replaced by a bisection step. More than 10*bits iterations in total throws
 * ConvergenceError with the last bracket.
 */
template <typename Value, typename ValueSlope>
BracketedRoot solve_bracketed(Value&& value, ValueSlope&& value_slope, HPReal lo, HPReal hi, Precision p,
                              const char* who) {
    const long bits = static_cast<long>(p.bits());
    const unsigned cap = 10 * p.bits();
    const int sign_lo = value(lo).sign();
    const int sign_hi = value(hi).sign();
    if (sign_lo == 0)
        return {lo, HPReal(p), 0};
    if (sign_hi == 0)
        return {hi, HPReal(p), 0};
    if (sign_lo == sign_hi)
        throw ConvergenceError(std::string(who) + ": no sign change on the bracket", lo, hi);

    unsigned iterations = 0;
    const HPReal width_goal = pow2(-(bits / 2), p);
    while (hi - lo > width_goal) {
        if (++iterations > cap)
            throw ConvergenceError(std::string(who) + ": bisection cap reached", lo, hi);
        HPReal mid = ldexp(lo + hi, -1);
        const int s = value(mid).sign();
        if (s == 0)
            return {mid, HPReal(p), iterations};
        (s == sign_lo ? lo : hi) = std::move(mid);
    }

    const HPReal step_goal = pow2(-bits + 8, p);
    HPReal x = ldexp(lo + hi, -1);
    auto [f, df] = value_slope(x);
    while (!f.is_zero()) {
        if (++iterations > cap)
            throw ConvergenceError(std::string(who) + ": Newton cap reached", lo, hi);
        (f.sign() == sign_lo ? lo : hi) = x;
        HPReal step = f / df;
        HPReal next = x - step;
        if (next <= lo || next >= hi) {
            next = ldexp(lo + hi, -1);
            step = x - next;
        }
        x = std::move(next);
        std::tie(f, df) = value_slope(x);
        if (abs(step) <= step_goal)
            break;
    }
    return {std::move(x), std::move(f), iterations};
}

} // namespace zetapoly

#endif
