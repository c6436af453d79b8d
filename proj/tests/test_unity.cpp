#include <gtest/gtest.h>

#include <random>
#include <vector>

#include <zetapoly/zetapoly.hpp>

using namespace zetapoly;

namespace {

const Precision p128(128);

using Poly = std::vector<ExactRational>; // ascending powers of w

Poly derivative(const Poly& a) {
    Poly d(a.size() > 1 ? a.size() - 1 : 1, 0);
    for (std::size_t i = 1; i < a.size(); ++i)
        d[i - 1] = a[i] * static_cast<long>(i);
    return d;
}

Poly times_w(const Poly& a) {
    Poly r(a.size() + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i + 1] = a[i];
    return r;
}

Poly combine(const Poly& a, const ExactRational& sa, const Poly& b, const ExactRational& sb) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += sa * a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] += sb * b[i];
    return r;
}

// (w d/dw)^m log(w - 1) = P_m(w) / (w - 1)^m, built by differentiating the
// quotient directly: w d/dw [P/(w-1)^k] = [w P' (w-1) - k w P] / (w-1)^(k+1).
Poly theta_numerator(unsigned m) {
    Poly p{0, 1}; // w / (w - 1)
    for (unsigned k = 1; k < m; ++k) {
        const Poly wdp = times_w(derivative(p));
        const Poly wdp_times_w_minus_1 = combine(times_w(wdp), 1, wdp, -1);
        p = combine(wdp_times_w_minus_1, 1, times_w(p), -static_cast<long>(k));
    }
    return p;
}

HPComplex theta_oracle(const HPComplex& z, unsigned long n, unsigned m) {
    const HPComplex w = z.pow(static_cast<long>(n));
    const Poly num = theta_numerator(m);
    HPComplex acc(p128);
    for (std::size_t i = num.size(); i-- > 0;)
        acc = acc * w + HPComplex(HPReal(num[i], p128));
    const HPComplex denom = HPComplex(w.re - 1L, w.im).pow(static_cast<long>(m));
    return acc / denom * pow(HPReal(static_cast<long>(n), p128), static_cast<long>(m));
}

HPComplex random_point(std::mt19937_64& rng) {
    while (true) {
        const double radius = 0.4 + 1.6 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const double turn = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (radius > 0.9 && radius < 1.1)
            continue;
        const HPReal angle = pi_const(p128) * 2L * HPReal(turn, p128);
        return HPComplex(HPReal(radius, p128) * cos(angle), HPReal(radius, p128) * sin(angle));
    }
}

HPReal relative(const HPComplex& a, const HPComplex& b) { return abs(a - b) / max(abs(a), abs(b)); }

} // namespace

TEST(UnityRepresentatives, HalfOpenWindow) {
    EXPECT_EQ(unity_representatives(4), (std::vector<long>{-1, 0, 1, 2}));
    EXPECT_EQ(unity_representatives(5), (std::vector<long>{-2, -1, 0, 1, 2}));
    EXPECT_EQ(unity_representatives(1), (std::vector<long>{0}));
    EXPECT_THROW(unity_representatives(0), DomainError);
}

TEST(SecondLogDeriv, BothSidesAgree) {
    for (unsigned long n = 3; n <= 16; ++n) {
        const SecondLogDerivSides s = second_logderiv_sides(n, p128);
        const long nn = static_cast<long>(n);
        EXPECT_EQ(s.lhs, HPReal(ExactRational(nn * nn - 2 * nn, 4), p128));
        EXPECT_LE(abs(s.rhs - HPComplex(s.lhs)), HPReal(1e-30, p128) * (nn * nn)) << n;
    }
    EXPECT_THROW(second_logderiv_sides(2, p128), DomainError);
}

TEST(LaurentExpansion, ErrorShrinksWithMoreTerms) {
    const HPReal x = HPReal::parse("0.01", p128);
    const HPComplex exact = inv_one_minus_e_sq(x, p128);
    HPReal previous(1e10, p128);
    for (int terms = 1; terms <= 4; ++terms) {
        const HPReal err = abs(taylor_inv_sq(x, terms, p128) - exact);
        EXPECT_LT(err, previous) << terms;
        previous = err;
    }
    EXPECT_LT(previous, HPReal(1e-3, p128));
    EXPECT_THROW(inv_one_minus_e_sq(HPReal(3L, p128), p128), PoleError);
    EXPECT_THROW(taylor_inv_sq(x, 5, p128), DomainError);
}

TEST(ZetaTwoFinite, SmallCasesExact) {
    EXPECT_LE(abs(zeta2_finite(4, p128) - HPReal(ExactRational(20, 9), p128)), pow2(-120, p128));
    // 2 (1 + 1/9 + 1/25)
    EXPECT_LE(abs(zeta2_finite(6, p128) - HPReal(ExactRational(518, 225), p128)), pow2(-120, p128));
    EXPECT_THROW(zeta2_finite(5, p128), DomainError);
    EXPECT_THROW(zeta2_finite(2, p128), DomainError);
}

TEST(ZetaTwoFinite, ErrorWithinLogOverN) {
    const HPReal pi = pi_const(p128);
    for (unsigned long n : {100UL, 1000UL, 10000UL}) {
        const HPReal err = abs(zeta2_finite(n, p128) - pi * pi / 4L);
        EXPECT_LE(err * static_cast<long>(n) / log(HPReal(n, p128)), HPReal(10L, p128)) << n;
    }
}

TEST(ZetaFromOdd, ScalesBySixOverEight) {
    const HPReal pi = pi_const(p128);
    EXPECT_LE(abs(zeta_from_odd(2, pi * pi / 8L) - pi * pi / 6L), pow2(-120, p128));
    EXPECT_THROW(zeta_from_odd(1, pi), DomainError);
}

TEST(ThetaTower, MatchesQuotientRuleOracle) {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 10; ++trial) {
        const HPComplex z = random_point(rng);
        for (unsigned long n = 1; n <= 6; ++n)
            for (unsigned m = 1; m <= 6; ++m)
                EXPECT_LE(relative(theta_lhs(z, n, m, p128), theta_oracle(z, n, m)), HPReal(1e-25, p128))
                    << trial << " N=" << n << " m=" << m;
    }
}

TEST(ThetaTower, BothSidesAgreeAtSeededPoints) {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        const HPComplex z = random_point(rng);
        for (unsigned long n = 1; n <= 8; ++n)
            for (unsigned m = 1; m <= 6; ++m)
                EXPECT_LE(relative(theta_lhs(z, n, m, p128), theta_rhs(z, n, m, p128)), HPReal(1e-20, p128))
                    << trial << " N=" << n << " m=" << m;
    }
}

TEST(ThetaTower, RootsOfUnityAreRejected) {
    const HPComplex i_unit(HPReal(0L, p128), HPReal(1L, p128));
    EXPECT_THROW(theta_lhs(i_unit, 4, 2, p128), PoleError);
    EXPECT_THROW(theta_rhs(i_unit, 4, 2, p128), PoleError);
    EXPECT_NO_THROW(theta_lhs(i_unit, 3, 2, p128));
    EXPECT_THROW(theta_lhs(i_unit, 3, 0, p128), DomainError);
}

TEST(ThetaTower, HalfTurnValueFromAlternatingSum) {
    for (unsigned long n : {3UL, 5UL})
        for (unsigned m = 1; m <= 6; ++m) {
            const HPComplex z = e_unit(HPReal(1L, p128) / static_cast<long>(2 * n), p128);
            const HPComplex direct = theta_lhs(z, n, m, p128);
            const HPReal closed = theta_lhs_at_half_turn(n, m, p128);
            EXPECT_LE(abs(direct - HPComplex(closed)), HPReal(1e-25, p128) * max(abs(closed), HPReal(1L, p128)))
                << n << "," << m;
        }
}

TEST(ZetaEvenClosed, KnownRationalMultiples) {
    const HPReal pi = pi_const(p128);
    EXPECT_LE(abs(zeta_even_closed(1, p128) - pi * pi / 6L), pow2(-124, p128));
    EXPECT_LE(abs(zeta_even_closed(2, p128) - pow(pi, 4L) / 90L), pow2(-124, p128));
    EXPECT_LE(abs(zeta_even_closed(3, p128) - pow(pi, 6L) / 945L), pow2(-124, p128));
    EXPECT_THROW(zeta_even_closed(0, p128), DomainError);
}

TEST(ZetaEvenClosed, AgreesWithEulerMaclaurinValues) {
    for (unsigned n = 1; n <= 8; ++n)
        EXPECT_LE(abs(zeta_even_closed(n, p128) - zeta_value(2 * static_cast<long>(n), p128)), pow2(-115, p128))
            << n;
}

TEST(TwoSidedSum, CosecantSquareLimit) {
    for (long q : {3L, 4L, 6L}) {
        const HPReal t(ExactRational(1, q), p128);
        const HPReal err = abs(two_sided_power_sum(t, 2, 20000, p128) - cosecant_square_identity(t, p128));
        // tail of the pair sum is about 2/M
        EXPECT_LE(err, HPReal(2.0e-4, p128)) << q;
        EXPECT_GE(err, HPReal(0.5e-4, p128)) << q;
    }
}

TEST(TwoSidedSum, ErrorPathsAndSymmetry) {
    EXPECT_THROW(two_sided_power_sum(HPReal(2L, p128), 2, 100, p128), PoleError);
    EXPECT_THROW(two_sided_power_sum(HPReal(0.5, p128), 1, 100, p128), DomainError);
    EXPECT_THROW(two_sided_power_sum(HPReal(0.5, p128), 2, 5, p128), DomainError);
    const HPReal t(ExactRational(2, 7), p128);
    // odd exponent: the symmetric window makes the sum odd in t
    const HPReal a = two_sided_power_sum(t, 3, 1000, p128);
    const HPReal b = -two_sided_power_sum(-t, 3, 1000, p128);
    EXPECT_LE(abs(a - b), pow2(-110, p128));
}

TEST(Dirichlet, BetaThreeAndParityMismatch) {
    const CharacterTable chi4{{1, HPComplex(HPReal(1L, p128))}, {3, HPComplex(HPReal(-1L, p128))}};
    const HPComplex l3 = dirichlet_L(4, chi4, 3, 10000, p128);
    EXPECT_LE(abs(l3 - HPComplex(pow(pi_const(p128), 3L) / 32L)), HPReal(1e-8, p128));
    EXPECT_LE(abs(dirichlet_L(4, chi4, 2, 10000, p128)), HPReal(1e-8, p128));
}

TEST(Dirichlet, PrincipalCharacterGivesEulerFactor) {
    // chi_0 mod 3: L(2) = (1 - 1/9) zeta(2); for even k the truncation error is O(1/M)
    const CharacterTable chi{{1, HPComplex(HPReal(1L, p128))}, {2, HPComplex(HPReal(1L, p128))}};
    const HPReal pi = pi_const(p128);
    const HPComplex l = dirichlet_L(3, chi, 2, 10000, p128);
    const HPReal err = abs(l - HPComplex(pi * pi / 6L * 8L / 9L));
    EXPECT_LE(err, HPReal(5e-5, p128));
    EXPECT_LE(abs(dirichlet_L(3, chi, 2, 40000, p128) - HPComplex(pi * pi / 6L * 8L / 9L)) * 3L, err);
}

TEST(Dirichlet, ValidatesTheCharacterTable) {
    const HPComplex one(HPReal(1L, p128));
    EXPECT_THROW(dirichlet_L(4, {{1, one}}, 3, 100, p128), InputError);
    EXPECT_THROW(dirichlet_L(4, {{1, one}, {3, one}, {2, one}}, 3, 100, p128), InputError);
    EXPECT_THROW(dirichlet_L(4, {{1, one}, {5, one}}, 3, 100, p128), InputError);
    EXPECT_THROW(dirichlet_L(4, {{1, one}, {3, HPComplex(HPReal(0.5, p128))}}, 3, 100, p128), InputError);
    EXPECT_THROW(dirichlet_L(2, {{1, one}}, 3, 100, p128), DomainError);
}

TEST(EvenZetaDerivation, TowerValueIsExactAndResidualDecays) {
    for (unsigned m : {2u, 4u, 6u}) {
        HPReal previous(1L, p128);
        for (unsigned long n : {10UL, 100UL, 1000UL}) {
            const EvenZetaDerivation step = even_zeta_derivation(m, n, p128);
            EXPECT_LE(abs(step.finite_value - step.exact), HPReal(1e-25, p128)) << m << "," << n;
            const HPReal res = abs(step.residual);
            EXPECT_LT(res, previous);
            // residual is the odd-sum tail, of order N^(1-m)
            EXPECT_LE(res * pow(HPReal(static_cast<long>(n), p128), static_cast<long>(m) - 1), HPReal(1L, p128));
            previous = res;
        }
    }
    // (2^2 - 1) B_2 / 2 = 1/4
    EXPECT_EQ(even_zeta_derivation(2, 10, p128).exact, HPReal(1L, p128) / 4L);
    EXPECT_THROW(even_zeta_derivation(3, 10, p128), DomainError);
    EXPECT_THROW(even_zeta_derivation(2, 1, p128), DomainError);
}

TEST(ZetaFromOdd, ChainMatchesClosedForm) {
    const HPReal pi = pi_const(p128);
    EXPECT_LE(abs(zeta_from_odd(2, pi * pi / 8L) - zeta_even_closed(1, p128)), pow2(-124, p128));
    EXPECT_EQ(zeta_from_odd(4, HPReal(15L, p128)), HPReal(16L, p128));
}

TEST(Dirichlet, OddCharacterModThreeMatchesBruteForce) {
    const CharacterTable chi3{{1, HPComplex(HPReal(1L, p128))}, {2, HPComplex(HPReal(-1L, p128))}};
    const HPComplex l = dirichlet_L(3, chi3, 3, 10000, p128);
    long double brute = 0;
    for (long n = 1000000; n >= 1; --n) {
        const int r = static_cast<int>(n % 3);
        if (r != 0)
            brute += (r == 1 ? 1.0L : -1.0L) / (static_cast<long double>(n) * n * n);
    }
    EXPECT_NEAR(l.re.to_double(), static_cast<double>(brute), 1e-6);
    EXPECT_LE(abs(l.im), HPReal(1e-30, p128));
}
