#ifndef ZETAPOLY_NUMERICS_HPP
#define ZETAPOLY_NUMERICS_HPP

#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

#include "hp_complex.hpp"
#include "hp_real.hpp"

namespace zetapoly {

namespace detail {

// Long sums run with extra bits and are rounded once at the end.
inline constexpr unsigned sum_guard_bits = 32;

} // namespace detail

/// Largest N for which harmonic() sums exactly over the rationals.
inline constexpr unsigned long harmonic_exact_limit = 10000;

/// Exact H_N = 1 + 1/2 + ... + 1/N.
inline mpq_class harmonic_exact(unsigned long n) {
    if (n == 0)
        throw DomainError("harmonic number needs N >= 1");
    mpz_class lcm = 1;
    for (unsigned long k = 2; k <= n; ++k)
        mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), k);
    mpz_class num = 0;
    mpz_class term;
    for (unsigned long k = 1; k <= n; ++k) {
        mpz_divexact_ui(term.get_mpz_t(), lcm.get_mpz_t(), k);
        num += term;
    }
    mpq_class h(num, lcm);
    h.canonicalize();
    return h;
}

/**
 * N-th harmonic number at precision p.
 *
 * Exact rational summation (then one rounding) up to harmonic_exact_limit,
 * guarded floating summation smallest term first above it.
 */
inline HPReal harmonic(unsigned long n, Precision p) {
    if (n == 0)
        throw DomainError("harmonic number needs N >= 1");
    if (n <= harmonic_exact_limit)
        return HPReal(harmonic_exact(n), p);
    HPReal acc(p.widened(detail::sum_guard_bits));
    HPReal t(acc.precision());
    for (unsigned long k = n; k >= 1; --k) {
        mpfr_set_ui(t.raw(), k, MPFR_RNDN);
        mpfr_ui_div(t.raw(), 1, t.raw(), MPFR_RNDN);
        mpfr_add(acc.raw(), acc.raw(), t.raw(), MPFR_RNDN);
    }
    return acc.rounded(p);
}

/// Partial zeta sum  sum_{n=1..N} n^{-k}, accumulated smallest term first.
inline HPReal zeta_partial(long k, unsigned long n, Precision p) {
    if (k < 2)
        throw DomainError("zeta_partial needs k >= 2 (k = " + std::to_string(k) + " diverges or is only conditionally convergent)");
    if (n == 0)
        throw DomainError("zeta_partial needs N >= 1");
    HPReal acc(p.widened(detail::sum_guard_bits));
    HPReal t(acc.precision());
    for (unsigned long m = n; m >= 1; --m) {
        mpfr_ui_pow_ui(t.raw(), m, static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_ui_div(t.raw(), 1, t.raw(), MPFR_RNDN);
        mpfr_add(acc.raw(), acc.raw(), t.raw(), MPFR_RNDN);
    }
    return acc.rounded(p);
}

/**
 * Bounds on the neglected tail zeta(k) - zeta_partial(k, N):
 * strictly between 1/((k-1)(N+1)^(k-1)) and 1/((k-1)N^(k-1)).
 */
inline std::pair<HPReal, HPReal> zeta_tail_bounds(long k, unsigned long n, Precision p) {
    if (k < 2)
        throw DomainError("zeta tail bound needs k >= 2");
    if (n == 0)
        throw DomainError("zeta tail bound needs N >= 1");
    HPReal lower = 1L / (pow(HPReal(n + 1, p), k - 1) * (k - 1));
    HPReal upper = 1L / (pow(HPReal(n, p), k - 1) * (k - 1));
    return {std::move(lower), std::move(upper)};
}

// Reference digits for pi and Euler's constant, 110 significant figures each
// (mpmath, mp.dps = 110). Capacity is set a few bits under what they carry.
inline constexpr std::string_view pi_digits =
    "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679821480865";
inline constexpr std::string_view euler_gamma_digits =
    "0.57721566490153286060651209008240243104215933593992359880576723488486772677766467093694706329174674951463144725";
inline constexpr unsigned stored_constant_bits = 352;

namespace detail {

inline bool pi_literal_validated() {
    static const bool ok = [] {
        const Precision p(stored_constant_bits);
        const HPReal pi = HPReal::parse(pi_digits, p);
        return abs(sin(pi)) <= pow2(-static_cast<long>(p.bits()) + 8, p);
    }();
    return ok;
}

inline bool gamma_literal_validated() {
    static const bool ok = [] {
        const Precision p(128);
        const unsigned long n = 1000000;
        const HPReal gamma = HPReal::parse(euler_gamma_digits, p);
        HPReal estimate = harmonic(n, p) - log(HPReal(n, p)) - HPReal(1L, p) / (2L * static_cast<long>(n));
        return abs(estimate - gamma) <= HPReal(1e-10, p);
    }();
    return ok;
}

} // namespace detail

/// pi to p bits: stored literal up to its capacity, MPFR's own routine beyond.
inline HPReal pi_const(Precision p) {
    if (p.bits() > stored_constant_bits) {
        HPReal r(p);
        mpfr_const_pi(r.raw(), MPFR_RNDN);
        return r;
    }
    if (!detail::pi_literal_validated())
        throw Error("stored pi literal failed self-validation");
    return HPReal::parse(pi_digits, p);
}

/// Euler's constant to p bits. Throws CapabilityError above the stored capacity.
inline HPReal euler_gamma(Precision p) {
    if (p.bits() > stored_constant_bits)
        throw CapabilityError("euler_gamma: stored literal supports at most " + std::to_string(stored_constant_bits)
                              + " bits, requested " + std::to_string(p.bits()));
    if (!detail::gamma_literal_validated())
        throw Error("stored Euler constant literal failed self-validation");
    return HPReal::parse(euler_gamma_digits, p);
}

/// e(x) = exp(2 pi i x). The argument is reduced mod 1 first.
inline HPComplex e_unit(const HPReal& x, Precision p) {
    const Precision wp = p.widened(16);
    HPReal r = x.rounded(wp);
    r -= round_nearest(r);
    HPReal angle = pi_const(wp) * r * 2L;
    HPReal s(wp), c(wp);
    mpfr_sin_cos(s.raw(), c.raw(), angle.raw(), MPFR_RNDN);
    return {c.rounded(p), s.rounded(p)};
}

} // namespace zetapoly

#endif
