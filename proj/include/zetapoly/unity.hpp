#ifndef ZETAPOLY_UNITY_HPP
#define ZETAPOLY_UNITY_HPP

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "hp_complex.hpp"
#include "numerics.hpp"

namespace zetapoly {

// Identities from q_N(z) = z^N - 1 = prod_{j mod N} (z - e(j/N)), with the
// residues represented by -N/2 < j <= N/2 throughout.

/// Representatives -N/2 < j <= N/2 of the integers mod N.
inline std::vector<long> unity_representatives(unsigned long n) {
    if (n < 1)
        throw DomainError("unity_representatives needs N >= 1");
    std::vector<long> js;
    js.reserve(n);
    const long big_n = static_cast<long>(n);
    // -N/2 < j  <=>  2j > -N
    for (long j = -(big_n / 2); j <= big_n / 2; ++j)
        if (2 * j > -big_n)
            js.push_back(j);
    return js;
}

/// The two sides of  (N^2 - 2N)/4 = -sum_j (1 - e((2j-1)/2N))^(-2).
struct SecondLogDerivSides {
    HPReal lhs;
    HPComplex rhs;
};

/// (1 - e(x))^(-2), evaluated directly.
inline HPComplex inv_one_minus_e_sq(const HPReal& x, Precision p) {
    const HPComplex w = e_unit(x, p);
    HPComplex d(HPReal(1L, p) - w.re, -w.im);
    if (d.norm().is_zero())
        throw PoleError("inv_one_minus_e_sq: e(x) = 1");
    return HPComplex(HPReal(1L, p), HPReal(p)) / (d * d);
}

inline SecondLogDerivSides second_logderiv_sides(unsigned long n, Precision p) {
    if (n < 3)
        throw DomainError("second_logderiv_sides needs N >= 3");
    const long big_n = static_cast<long>(n);
    HPReal lhs = HPReal(big_n * big_n - 2 * big_n, p) / 4L;
    HPComplex rhs(p);
    for (long j : unity_representatives(n)) {
        const HPReal x = HPReal(2 * j - 1, p) / (2 * big_n);
        rhs -= inv_one_minus_e_sq(x, p);
    }
    return {std::move(lhs), std::move(rhs)};
}

/**
 * Partial sums of the Laurent expansion of (1 - e(x))^(-2) about 0:
 *   -1/(4 pi^2 x^2) + i/(2 pi x) + 5/12 - i pi x/6.
 */
inline HPComplex taylor_inv_sq(const HPReal& x, int terms, Precision p) {
    if (terms < 1 || terms > 4)
        throw DomainError("taylor_inv_sq: terms must be in [1, 4]");
    if (x.is_zero() || abs(x) >= 1L)
        throw DomainError("taylor_inv_sq: needs 0 < |x| < 1");
    const HPReal pi = pi_const(p);
    HPComplex s(p);
    s.re -= HPReal(1L, p) / (pi * pi * x * x * 4L);
    if (terms >= 2)
        s.im += HPReal(1L, p) / (pi * x * 2L);
    if (terms >= 3)
        s.re += HPReal(5L, p) / 12L;
    if (terms >= 4)
        s.im -= pi * x / 6L;
    return s;
}

/// sum_{-N/2<j<=N/2} (2j-1)^(-2); tends to pi^2/4 with error O(log N / N).
inline HPReal zeta2_finite(unsigned long n, Precision p) {
    if (n < 4 || n % 2 != 0)
        throw DomainError("zeta2_finite needs an even N >= 4");
    HPReal acc(p.widened(detail::sum_guard_bits));
    HPReal t(acc.precision());
    const long big_n = static_cast<long>(n);
    // farthest terms first: j = -N/2+1 and j = N/2 give |2j-1| = N-1
    for (long odd = big_n - 1; odd >= 1; odd -= 2) {
        mpfr_set_si(t.raw(), odd, MPFR_RNDN);
        mpfr_sqr(t.raw(), t.raw(), MPFR_RNDN);
        mpfr_ui_div(t.raw(), 2, t.raw(), MPFR_RNDN);
        mpfr_add(acc.raw(), acc.raw(), t.raw(), MPFR_RNDN);
    }
    return acc.rounded(p);
}

/// zeta(k) = 2^k/(2^k - 1) zeta_odd(k).
inline HPReal zeta_from_odd(long k, const HPReal& zeta_odd_value) {
    if (k < 2)
        throw DomainError("zeta_from_odd needs k >= 2");
    const Precision p = zeta_odd_value.precision();
    const HPReal two_k = pow2(k, p);
    return two_k / (two_k - 1L) * zeta_odd_value;
}

namespace detail {

inline void check_not_root_of_unity(const HPComplex& z, unsigned long n, Precision p) {
    const HPComplex zn = z.pow(static_cast<long>(n));
    const HPComplex d(zn.re - 1L, zn.im);
    if (d.abs() <= pow2(-static_cast<long>(p.bits()) + 8, p))
        throw PoleError("z is (numerically) an N-th root of unity");
}

} // namespace detail

/// sum_{k=1..m} b_{k,m} sum_{j mod N} z^k (z - e(j/N))^(-k), with a prebuilt b table.
inline HPComplex theta_rhs(const HPComplex& z, unsigned long n, unsigned m, const TriangleTable& b, Precision p) {
    if (m < 1)
        throw DomainError("theta order m must be >= 1");
    if (n < 1)
        throw DomainError("theta needs N >= 1");
    if (b.kind() != TriangleKind::b || b.max_m() < m)
        throw DomainError("theta_rhs: b table too small");
    detail::check_not_root_of_unity(z, n, p);
    const long big_n = static_cast<long>(n);
    HPComplex total(p);
    for (long j : unity_representatives(n)) {
        const HPComplex root = e_unit(HPReal(j, p) / big_n, p);
        const HPComplex ratio = z / (z - root);
        HPComplex power = ratio;
        for (unsigned k = 1; k <= m; ++k) {
            const ExactRational& coeff = b.at(k, m);
            if (coeff != 0)
                total += power * HPReal(coeff, p);
            power *= ratio;
        }
    }
    return total;
}

inline HPComplex theta_rhs(const HPComplex& z, unsigned long n, unsigned m, Precision p) {
    if (m < 1)
        throw DomainError("theta order m must be >= 1");
    return theta_rhs(z, n, m, b_table(m), p);
}

/// N^m sum_{k=1..m} c_{k,m} z^(Nk) / (z^N - 1)^m, with a prebuilt c table.
inline HPComplex theta_lhs(const HPComplex& z, unsigned long n, unsigned m, const TriangleTable& c, Precision p) {
    if (m < 1)
        throw DomainError("theta order m must be >= 1");
    if (n < 1)
        throw DomainError("theta needs N >= 1");
    if (c.kind() != TriangleKind::c || c.max_m() < m)
        throw DomainError("theta_lhs: c table too small");
    detail::check_not_root_of_unity(z, n, p);
    const HPComplex zn = z.pow(static_cast<long>(n));
    HPComplex numerator(p);
    HPComplex power = zn;
    for (unsigned k = 1; k <= m; ++k) {
        const ExactRational coeff = c.at(k, m);
        if (coeff != 0)
            numerator += power * HPReal(coeff, p);
        power *= zn;
    }
    const HPComplex denom = HPComplex(zn.re - 1L, zn.im).pow(static_cast<long>(m));
    return numerator / denom * pow(HPReal(static_cast<long>(n), p), static_cast<long>(m));
}

inline HPComplex theta_lhs(const HPComplex& z, unsigned long n, unsigned m, Precision p) {
    if (m < 1)
        throw DomainError("theta order m must be >= 1");
    return theta_lhs(z, n, m, c_table(m), p);
}

/// Value of theta_lhs at z = e(1/2N) via the c-table alone: N^m/(-2)^m sum_k c_{k,m} (-1)^k.
inline HPReal theta_lhs_at_half_turn(unsigned long n, unsigned m, Precision p) {
    if (m < 1)
        throw DomainError("theta order m must be >= 1");
    const ExactRational s = detail::alternating_row_sum(c_table(m), m);
    ExactRational scale = 1;
    for (unsigned i = 0; i < m; ++i) {
        scale *= static_cast<long>(n);
        scale /= -2L;
    }
    return HPReal(ExactRational(scale * s), p);
}

/// zeta(2n) = (-1)^(n+1) 2^(2n-1) pi^(2n) B_2n / (2n)!; exact rational prefactor, one rounding.
inline HPReal zeta_even_closed(unsigned n, Precision p) {
    if (n < 1)
        throw DomainError("zeta_even_closed needs n >= 1");
    mpz_class two;
    mpz_ui_pow_ui(two.get_mpz_t(), 2, 2 * n - 1);
    ExactRational coeff = ExactRational(two) * bernoulli(2 * n) / factorial(2 * n);
    if (n % 2 == 0)
        coeff = -coeff;
    const Precision wp = p.widened(16);
    return (HPReal(coeff, wp) * pow(pi_const(wp), 2 * static_cast<long>(n))).rounded(p);
}

struct EvenZetaDerivation {
    HPReal exact;        ///< (2^m - 1) B_m / m
    HPReal finite_value; ///< theta_rhs at z = e(1/2N), divided by N^m
    HPReal leading;      ///< b_{m,m} (pi i)^(-m) sum_{-N/2<j<=N/2} (2j-1)^(-m)
    HPReal residual;     ///< exact - leading
};

/**
 * One finite-N step of the zeta(2n) derivation at z = e(1/2N): the theta tower
 * divided by N^m against its leading term. The residual is what the
 * O_m(1/N) + O(N^(1-m) log N) error terms stand for.
 */
inline EvenZetaDerivation even_zeta_derivation(unsigned m, unsigned long n, Precision p) {
    if (m < 2 || m % 2 != 0)
        throw DomainError("even_zeta_derivation needs an even m >= 2");
    if (n < 2)
        throw DomainError("even_zeta_derivation needs N >= 2");
    const Precision wp = p.widened(detail::sum_guard_bits);
    const long big_n = static_cast<long>(n);
    const TriangleTable b = b_table(m);

    mpz_class two_m;
    mpz_ui_pow_ui(two_m.get_mpz_t(), 2, m);
    const ExactRational exact = ExactRational(two_m - 1) * bernoulli(m) / static_cast<long>(m);
    const HPComplex z = e_unit(HPReal(1L, wp) / (2 * big_n), wp);
    const HPReal finite = theta_rhs(z, n, m, b, wp).re / pow(HPReal(big_n, wp), static_cast<long>(m));

    HPReal odd_sum(wp);
    for (long j : unity_representatives(n))
        odd_sum += pow(HPReal(2 * j - 1, wp), -static_cast<long>(m));
    // (pi i)^(-m) = (-1)^(m/2) pi^(-m) for even m
    HPReal leading = HPReal(b.at(m, m), wp) * odd_sum / pow(pi_const(wp), static_cast<long>(m));
    if ((m / 2) % 2 == 1)
        leading = -leading;

    const HPReal exact_value(exact, wp);
    return {exact_value.rounded(p), finite.rounded(p), leading.rounded(p), (exact_value - leading).rounded(p)};
}

/**
 * sum_{|n|<=M} (n+t)^(-k), with each n >= 1 paired with -n before accumulation.
 * For k = 2 it approaches pi^2 / sin^2(pi t).
 */
inline HPReal two_sided_power_sum(const HPReal& t, long k, unsigned long m, Precision p) {
    if (k < 2)
        throw DomainError("two_sided_power_sum needs k >= 2");
    if (m < 10)
        throw DomainError("two_sided_power_sum needs M >= 10");
    if (abs(t - round_nearest(t)) <= pow2(-static_cast<long>(p.bits()) + 8, p))
        throw PoleError("two_sided_power_sum: integral offset t = " + t.to_string(20));
    const Precision wp = p.widened(detail::sum_guard_bits);
    const HPReal tw = t.rounded(wp);
    HPReal acc(wp), a(wp), b(wp);
    for (unsigned long n = m; n >= 1; --n) {
        mpfr_add_ui(a.raw(), tw.raw(), n, MPFR_RNDN);
        mpfr_sub_ui(b.raw(), tw.raw(), n, MPFR_RNDN);
        mpfr_pow_si(a.raw(), a.raw(), -k, MPFR_RNDN);
        mpfr_pow_si(b.raw(), b.raw(), -k, MPFR_RNDN);
        mpfr_add(a.raw(), a.raw(), b.raw(), MPFR_RNDN);
        mpfr_add(acc.raw(), acc.raw(), a.raw(), MPFR_RNDN);
    }
    acc += pow(tw, -k);
    return acc.rounded(p);
}

/// pi^2 / sin^2(pi t), the k = 2 limit of two_sided_power_sum.
inline HPReal cosecant_square_identity(const HPReal& t, Precision p) {
    const HPReal pi = pi_const(p);
    const HPReal s = sin(pi * t);
    return pi * pi / (s * s);
}

/// Dirichlet character as a residue table mod B.
using CharacterTable = std::map<long, HPComplex>;

/**
 * (1/2) sum_{a mod B} chi(a) B^(-k) two_sided_power_sum(a/B, k, M).
 *
 * Equals L(k, chi) when chi(-1) (-1)^k = 1 and vanishes (up to truncation)
 * otherwise. chi must be given on every residue coprime to B and be zero on
 * the rest; absent non-coprime residues are taken as zero.
 */
inline HPComplex dirichlet_L(long modulus, const CharacterTable& chi, long k, unsigned long m, Precision p) {
    if (k < 2)
        throw DomainError("dirichlet_L needs k >= 2");
    if (modulus < 3)
        throw DomainError("dirichlet_L needs modulus >= 3");
    for (const auto& [a, v] : chi)
        if (a < 0 || a >= modulus)
            throw InputError("character residue " + std::to_string(a) + " outside [0, " + std::to_string(modulus) + ")");
    const HPReal tol = pow2(-static_cast<long>(p.bits()) / 2, p);
    for (long a = 0; a < modulus; ++a) {
        auto it = chi.find(a);
        if (std::gcd(a, modulus) == 1) {
            if (it == chi.end())
                throw InputError("character table missing residue " + std::to_string(a));
        } else if (it != chi.end() && it->second.abs() > tol) {
            throw InputError("character must vanish on residue " + std::to_string(a) + " (not coprime to modulus)");
        }
    }
    const HPComplex& at_minus_one = chi.at(modulus - 1);
    if (abs(at_minus_one.im) > tol || abs(abs(at_minus_one.re) - 1L) > tol)
        throw InputError("character value at -1 must be +1 or -1");

    HPComplex total(p);
    for (long a = 1; a < modulus; ++a) {
        if (std::gcd(a, modulus) != 1)
            continue;
        const HPComplex& value = chi.at(a);
        if (value.norm().is_zero())
            continue;
        const HPReal t = HPReal(a, p) / modulus;
        total += value * two_sided_power_sum(t, k, m, p);
    }
    return total * (pow(HPReal(modulus, p), -k) / 2L);
}

} // namespace zetapoly

#endif
