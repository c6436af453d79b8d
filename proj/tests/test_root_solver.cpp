#include <gtest/gtest.h>

#include <zetapoly/zetapoly.hpp>

using namespace zetapoly;

namespace {
const Precision p128(128);
}

TEST(GapQuery, Validation) {
    EXPECT_THROW(GapQuery(0), DomainError);
    EXPECT_THROW(GapQuery(5, 5), DomainError);
    EXPECT_NO_THROW(GapQuery(5, 4));
}

TEST(FindRoot, NEqualsOneIsTheMidpoint) {
    const RootEstimate r = find_root(GapQuery(1), p128);
    EXPECT_EQ(r.value, HPReal(1L, p128) / 2L);
    EXPECT_LE(abs(r.residual), HPReal(1e-30, p128));
}

TEST(FindRoot, NEqualsTwoQuadraticFormula) {
    // p_2' = 3x^2 - 6x + 2
    const RootEstimate r = find_root(GapQuery(2), p128);
    const HPReal want = HPReal(1L, p128) - HPReal(1L, p128) / sqrt(HPReal(3L, p128));
    EXPECT_LE(abs(r.value - want), pow2(-115, p128));
    const RootEstimate upper = find_root(GapQuery(2, 1), p128);
    EXPECT_LE(abs(upper.value - (HPReal(2L, p128) - want)), pow2(-115, p128));
}

TEST(FindRoot, NEqualsThreeFromBiquadratic) {
    // with y = x - 3/2, p_3 = y^4 - 5y^2/2 + 9/16, so p_3' vanishes at y = 0, +-sqrt(5)/2
    const RootEstimate r = find_root(GapQuery(3), p128);
    const HPReal want = HPReal(3L, p128) / 2L - sqrt(HPReal(5L, p128)) / 2L;
    EXPECT_LE(abs(r.value - want), pow2(-115, p128));
    const RootEstimate middle = find_root(GapQuery(3, 1), p128);
    EXPECT_LE(abs(middle.value - HPReal(3L, p128) / 2L), pow2(-115, p128));
}

TEST(FindRoot, MirrorSymmetryUpToFifty) {
    for (unsigned long n = 1; n <= 50; ++n) {
        const auto roots = find_all_roots(n, p128);
        for (unsigned long i = 0; i < n; ++i)
            EXPECT_LE(abs(roots[i].value + roots[n - 1 - i].value - static_cast<long>(n)), pow2(-64, p128))
                << n << "," << i;
    }
}

TEST(FindRoot, RootsAreDistinctAndFillEveryGap) {
    for (unsigned long n : {2UL, 9UL, 30UL}) {
        const auto roots = find_all_roots(n, p128);
        ASSERT_EQ(roots.size(), n);
        for (unsigned long i = 0; i < n; ++i) {
            EXPECT_GT(roots[i].value, static_cast<long>(i));
            EXPECT_LT(roots[i].value, static_cast<long>(i + 1));
            if (i > 0) {
                EXPECT_LT(roots[i - 1].value, roots[i].value);
            }
        }
    }
}

TEST(FindRoot, RepulsionTowardsTheSparseSide) {
    const unsigned long n = 10;
    const auto roots = find_all_roots(n, p128);
    for (unsigned long i = 0; i < n; ++i) {
        const HPReal mid = HPReal(static_cast<long>(2 * i + 1), p128) / 2L;
        EXPECT_GT(roots[i].value, static_cast<long>(i));
        EXPECT_LT(roots[i].value, static_cast<long>(i + 1));
        if (2 * i + 1 < n) {
            EXPECT_LT(roots[i].value, mid) << i;
        } else if (2 * i + 1 > n) {
            EXPECT_GT(roots[i].value, mid) << i;
        }
    }
}

TEST(FindRoot, FirstRootDecreasesWithN) {
    HPReal previous(1L, p128);
    for (unsigned long n : {2UL, 5UL, 20UL, 100UL, 1000UL}) {
        const HPReal a = find_root(GapQuery(n), p128).value;
        EXPECT_LT(a, previous) << n;
        previous = a;
    }
}

TEST(FindRoot, SandwichFromHarmonicBounds) {
    // 1/alpha = sum_{n=1..N} 1/(n - alpha) lies between H_N and H_N / (1 - alpha)
    for (unsigned long n : {50UL, 500UL}) {
        const HPReal a = find_root(GapQuery(n), p128).value;
        const HPReal h = harmonic(n, p128);
        EXPECT_GT(HPReal(1L, p128) / a, h);
        EXPECT_LT(HPReal(1L, p128) / a, h / (HPReal(1L, p128) - a));
    }
}

TEST(FindRoot, AgreesWithCoefficientForm) {
    for (unsigned long n : {3UL, 5UL, 8UL, 12UL}) {
        EXPECT_LE(abs(coefficient_form_crosscheck(n, p128)), HPReal(1e-25, p128)) << n;
    }
    EXPECT_THROW(coefficient_form_crosscheck(13, p128), CapabilityError);
}

TEST(FindRoot, HigherPrecisionRefinesTheSameRoot) {
    const Precision p256(256);
    const HPReal a = find_root(GapQuery(7), p128).value;
    const HPReal b = find_root(GapQuery(7), p256).value;
    EXPECT_LE(abs(a - b), pow2(-115, p256));
    EXPECT_EQ(b.precision().bits(), 256u);
}

TEST(LogDerivative, PolesAreRejected) {
    EXPECT_THROW(logderiv_p(HPReal(3L, p128), 5), PoleError);
    EXPECT_NO_THROW(logderiv_p(HPReal(7L, p128), 5));
}

TEST(LogDerivative, SlopeMatchesFiniteDifference) {
    const HPReal x = HPReal::parse("2.3", p128);
    const HPReal h = pow2(-40, p128);
    const auto [f, df] = logderiv_p_with_slope(x, 6);
    const HPReal fd = (logderiv_p(x + h, 6) - logderiv_p(x - h, 6)) / (h * 2L);
    EXPECT_LE(abs(df - fd), HPReal(1e-20, p128));
    EXPECT_LE(abs(f - logderiv_p(x, 6)), pow2(-120, p128));
}
