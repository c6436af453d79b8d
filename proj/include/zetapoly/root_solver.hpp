#ifndef ZETAPOLY_ROOT_SOLVER_HPP
#define ZETAPOLY_ROOT_SOLVER_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <mpfr.h>

#include "bracket_solve.hpp"
#include "combinatorics.hpp"
#include "hp_real.hpp"

namespace zetapoly {

// Critical points of p_N(x) = x(x-1)...(x-N). Every zero of p_N' lies in one
// of the gaps (g, g+1), g = 0..N-1, and solves sum_n 1/(x-n) = 0 there.

/// Which zero of p_N' to find: the one in (gap, gap+1).
struct GapQuery {
    unsigned long n;
    unsigned long gap;

    GapQuery(unsigned long n_, unsigned long gap_ = 0) : n(n_), gap(gap_) {
        if (n < 1)
            throw DomainError("GapQuery needs N >= 1");
        if (gap >= n)
            throw DomainError("gap " + std::to_string(gap) + " outside [0, " + std::to_string(n - 1) + "]");
    }
};

struct RootEstimate {
    HPReal value;
    HPReal residual; ///< sum 1/(value - n) at the returned root
    unsigned iterations;
    Precision precision;
};

namespace detail {

inline void check_pole(const HPReal& x, unsigned long n) {
    const HPReal nearest = round_nearest(x);
    if (nearest.sign() < 0 || nearest > static_cast<long>(n))
        return;
    const long bits = static_cast<long>(x.precision().bits());
    if (abs(x - nearest) <= pow2(-bits + 4, x.precision()))
        throw PoleError("logderiv_p: x = " + x.to_string(20) + " is at a zero of p_" + std::to_string(n));
}

/**
 * sum_{n=0..N} 1/(x-n) and, when `slope` is given, -sum 1/(x-n)^2.
 *
 * Terms are taken farthest pole first from both ends, so accumulation runs
 * from the smallest magnitude to the largest.
 */
inline void accumulate_logderiv(const HPReal& x, unsigned long n, HPReal& value, HPReal* slope) {
    const mpfr_prec_t prec = mpfr_get_prec(x.raw());
    mpfr_t t, acc, acc2, sq;
    mpfr_inits2(prec, t, acc, acc2, sq, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(acc, 1);
    mpfr_set_zero(acc2, 1);

    const double xd = x.to_double();
    // integers 0..below-1 lie left of x, below..n lie right of it (x is not one of them)
    mpfr_floor(t, x.raw());
    unsigned long below = 0;
    if (mpfr_sgn(t) >= 0)
        below = mpfr_cmp_ui(t, n) >= 0 ? n + 1 : mpfr_get_ui(t, MPFR_RNDN) + 1;

    long left = 0;
    long right = static_cast<long>(n);
    const long split = static_cast<long>(below);
    auto take = [&](long m) {
        mpfr_sub_si(t, x.raw(), m, MPFR_RNDN);
        if (slope) {
            mpfr_sqr(sq, t, MPFR_RNDN);
            mpfr_ui_div(sq, 1, sq, MPFR_RNDN);
            mpfr_add(acc2, acc2, sq, MPFR_RNDN);
        }
        mpfr_ui_div(t, 1, t, MPFR_RNDN);
        mpfr_add(acc, acc, t, MPFR_RNDN);
    };
    while (left < split || right >= split) {
        const bool left_ok = left < split;
        const bool right_ok = right >= split;
        if (left_ok && (!right_ok || xd - static_cast<double>(left) >= static_cast<double>(right) - xd))
            take(left++);
        else
            take(right--);
    }

    mpfr_set_prec(value.raw(), prec);
    mpfr_set(value.raw(), acc, MPFR_RNDN);
    if (slope) {
        mpfr_set_prec(slope->raw(), prec);
        mpfr_neg(slope->raw(), acc2, MPFR_RNDN);
    }
    mpfr_clears(t, acc, acc2, sq, static_cast<mpfr_ptr>(nullptr));
}

} // namespace detail

/// Logarithmic derivative p_N'(x)/p_N(x) = sum_{n=0..N} 1/(x-n), at x's precision.
inline HPReal logderiv_p(const HPReal& x, unsigned long n) {
    detail::check_pole(x, n);
    HPReal value(x.precision());
    detail::accumulate_logderiv(x, n, value, nullptr);
    value.check_finite("logderiv_p");
    return value;
}

/// Value and derivative of the logarithmic derivative.
inline std::pair<HPReal, HPReal> logderiv_p_with_slope(const HPReal& x, unsigned long n) {
    detail::check_pole(x, n);
    HPReal value(x.precision()), slope(x.precision());
    detail::accumulate_logderiv(x, n, value, &slope);
    return {std::move(value), std::move(slope)};
}

/**
 * Zero of p_N' in (gap, gap+1).
 *
 * Bisection on [gap + 2^-16, gap + 1 - 2^-16] down to width 2^-(bits/2), then
 * Newton on the logarithmic derivative until the step is below 2^-(bits-8).
 * The log-derivative is strictly decreasing on the gap, so the inset bracket
 * holds exactly one sign change; that is checked on every call.
 */
inline RootEstimate find_root(const GapQuery& q, Precision p) {
    const HPReal eps = pow2(-16, p);
    HPReal lo = HPReal(q.gap, p) + eps;
    HPReal hi = HPReal(q.gap + 1, p) - eps;
    if (logderiv_p(lo, q.n).sign() <= 0 || logderiv_p(hi, q.n).sign() >= 0)
        throw ConvergenceError("find_root: no sign change on the inset gap bracket", lo, hi);

    BracketedRoot r = solve_bracketed([&](const HPReal& x) { return logderiv_p(x, q.n); },
                                      [&](const HPReal& x) { return logderiv_p_with_slope(x, q.n); }, lo, hi, p,
                                      "find_root");
    if (abs(r.fx) > pow2(-static_cast<long>(p.bits() / 2), p))
        throw ConvergenceError("find_root: residual above 2^-(bits/2)", r.x, r.x);
    return RootEstimate{std::move(r.x), std::move(r.fx), r.iterations, p};
}

/// Roots of p_N' for every gap, in increasing order.
inline std::vector<RootEstimate> find_all_roots(unsigned long n, Precision p) {
    std::vector<RootEstimate> roots;
    roots.reserve(n);
    for (unsigned long g = 0; g < n; ++g)
        roots.push_back(find_root(GapQuery(n, g), p));
    return roots;
}

/// Largest |n a_n| among the coefficients of p_N' in the monomial basis.
inline ExactRational coefficient_form_scale(unsigned long n) {
    ExactRational scale = 0;
    for (unsigned long k = 1; k <= n + 1; ++k) {
        ExactRational c = abs(stirling1_signed(static_cast<long>(n + 1), static_cast<long>(k)) * static_cast<long>(k));
        if (c > scale)
            scale = c;
    }
    return scale;
}

/**
 * |p_N'(alpha)| with p_N' built from its expanded coefficients
 * a_k = s(N+1, k), alpha = find_root(N, 0). Only meaningful while those
 * coefficients are small, hence N <= 12.
 */
inline HPReal coefficient_form_crosscheck(unsigned long n, Precision p) {
    if (n < 1)
        throw DomainError("coefficient_form_crosscheck needs N >= 1");
    if (n > 12)
        throw CapabilityError("coefficient_form_crosscheck supports N <= 12");
    const RootEstimate root = find_root(GapQuery(n), p);
    HPReal acc(p);
    for (long k = static_cast<long>(n) + 1; k >= 1; --k) {
        acc *= root.value;
        acc += HPReal(stirling1_signed(static_cast<long>(n) + 1, k) * k, p);
    }
    return abs(acc);
}

} // namespace zetapoly

#endif
