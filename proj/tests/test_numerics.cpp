#include <gtest/gtest.h>

#include <mpfr.h>

#include <zetapoly/zetapoly.hpp>

using namespace zetapoly;

namespace {

HPReal mpfr_reference_pi(Precision p) {
    HPReal r(p);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

HPReal mpfr_reference_gamma(Precision p) {
    HPReal r(p);
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}

} // namespace

TEST(Precision, RejectsBelowSixtyFourBits) {
    EXPECT_THROW(Precision(63), DomainError);
    EXPECT_NO_THROW(Precision(64));
    EXPECT_EQ(default_precision.bits(), 128u);
    EXPECT_EQ(Precision(100).widened(28).bits(), 128u);
}

TEST(HPReal, ParseAndRender) {
    const Precision p(128);
    const HPReal x = HPReal::parse("0.125", p);
    EXPECT_EQ(x, HPReal(1L, p) / 8L);
    EXPECT_THROW(HPReal::parse("abc", p), InputError);
    EXPECT_THROW(HPReal::parse("1.5x", p), InputError);
    EXPECT_EQ(HPReal(1L, p).to_string(5), "1.0000e+00");
}

TEST(HPReal, DivisionByZeroThrows) {
    const Precision p(64);
    EXPECT_THROW(HPReal(1L, p) / HPReal(0L, p), DomainError);
}

TEST(HPReal, ResultTakesWiderPrecision) {
    const HPReal a(1L, Precision(64)), b(3L, Precision(200));
    EXPECT_EQ((a / b).precision().bits(), 200u);
}

TEST(Constants, PiMatchesMpfrAtSeveralPrecisions) {
    for (unsigned bits : {64u, 128u, 256u, 352u}) {
        const Precision p(bits);
        EXPECT_LE(abs(pi_const(p) - mpfr_reference_pi(p)), pow2(-static_cast<long>(bits) + 2, p)) << bits;
    }
}

TEST(Constants, PiAboveStoredCapacityFallsBack) {
    const Precision p(600);
    EXPECT_LE(abs(pi_const(p) - mpfr_reference_pi(p)), pow2(-598, p));
}

TEST(Constants, GammaMatchesMpfrAtSeveralPrecisions) {
    for (unsigned bits : {64u, 128u, 256u, 352u}) {
        const Precision p(bits);
        EXPECT_LE(abs(euler_gamma(p) - mpfr_reference_gamma(p)), pow2(-static_cast<long>(bits) + 2, p)) << bits;
    }
}

TEST(Constants, GammaAboveStoredCapacityIsACapabilityError) {
    EXPECT_THROW(euler_gamma(Precision(400)), CapabilityError);
}

TEST(Harmonic, ExactSmallValues) {
    EXPECT_EQ(harmonic_exact(1), ExactRational(1));
    EXPECT_EQ(harmonic_exact(4), ExactRational(25, 12));
    EXPECT_EQ(harmonic_exact(10), ExactRational(7381, 2520));
}

TEST(Harmonic, GuardedSumMatchesExactAcrossTheSwitch) {
    const Precision p(128);
    // harmonic() switches to the floating sum above the exact limit; both paths
    // should agree with the exact rational to working precision.
    const unsigned long n = harmonic_exact_limit + 1;
    const HPReal exact(harmonic_exact(n), p);
    EXPECT_LE(abs(harmonic(n, p) - exact), pow2(-120, p));
}

TEST(Harmonic, AsymptoticWithGamma) {
    const Precision p(128);
    for (unsigned long n : {1000UL, 100000UL}) {
        const HPReal big_n(n, p);
        const HPReal approx = log(big_n) + euler_gamma(p) + HPReal(1L, p) / (big_n * 2L) -
                              HPReal(1L, p) / (big_n * big_n * 12L);
        EXPECT_LE(abs(harmonic(n, p) - approx), HPReal(1L, p) / (pow(big_n, 4L) * 100L)) << n;
    }
}

TEST(ZetaPartial, RejectsDivergentExponent) {
    EXPECT_THROW(zeta_partial(1, 10, default_precision), DomainError);
    EXPECT_THROW(zeta_partial(0, 10, default_precision), DomainError);
}

TEST(ZetaPartial, MonotoneAndSandwichedByTailBounds) {
    const Precision p(128);
    const HPReal z3 = zeta_value(3, p);
    HPReal previous(p);
    for (unsigned long n : {10UL, 100UL, 1000UL, 10000UL}) {
        const HPReal s = zeta_partial(3, n, p);
        EXPECT_GT(s, previous);
        previous = s;
        const auto [lo, hi] = zeta_tail_bounds(3, n, p);
        EXPECT_LE(s + lo, z3) << n;
        EXPECT_GE(s + hi, z3) << n;
    }
}

TEST(ZetaValue, KnownValues) {
    const Precision p(160);
    const HPReal pi = pi_const(p);
    EXPECT_LE(abs(zeta_value(2, p) - pi * pi / 6L), pow2(-150, p));
    EXPECT_LE(abs(zeta_value(4, p) - pow(pi, 4L) / 90L), pow2(-150, p));
    // Apery's constant to 40 digits
    const HPReal apery = HPReal::parse("1.202056903159594285399738161511449990765", p);
    EXPECT_LE(abs(zeta_value(3, p) - apery), HPReal(1e-39, p));
}

TEST(ZetaValue, RejectsKBelowTwo) { EXPECT_THROW(zeta_value(1, default_precision), DomainError); }

TEST(UnitExponential, PeriodicAndOnTheCircle) {
    const Precision p(128);
    const HPReal x = HPReal::parse("0.3141", p);
    const HPComplex a = e_unit(x, p);
    const HPComplex b = e_unit(x + 7L, p);
    EXPECT_LE(abs(a - b), pow2(-110, p));
    EXPECT_LE(abs(a.norm() - 1L), pow2(-120, p));
    const HPComplex quarter = e_unit(HPReal(1L, p) / 4L, p);
    EXPECT_LE(abs(quarter.re), pow2(-120, p));
    EXPECT_LE(abs(quarter.im - 1L), pow2(-120, p));
}

TEST(Harmonic, StrictlyIncreasing) {
    const Precision p(128);
    HPReal previous = harmonic(1, p);
    for (unsigned long n : {2UL, 3UL, 10UL, 9999UL, 10000UL, 10001UL, 20000UL}) {
        const HPReal h = harmonic(n, p);
        EXPECT_GT(h, previous) << n;
        previous = h;
    }
}

TEST(ZetaPartial, DoublingIncrementWithinTailBound) {
    const Precision p(128);
    for (long k : {2L, 3L, 5L})
        for (unsigned long n : {10UL, 100UL, 1000UL}) {
            const HPReal inc = zeta_partial(k, 2 * n, p) - zeta_partial(k, n, p);
            const HPReal bound = HPReal(1L, p) / (pow(HPReal(n, p), k - 1) * (k - 1));
            EXPECT_GT(inc, 0L);
            EXPECT_LT(inc, bound) << k << "," << n;
        }
}

TEST(Determinism, RepeatedEvaluationIsBitIdentical) {
    const Precision p(192);
    EXPECT_EQ(zeta_partial(3, 5000, p).to_string(), zeta_partial(3, 5000, p).to_string());
    EXPECT_EQ(harmonic(123456, p).to_string(), harmonic(123456, p).to_string());
    EXPECT_EQ(find_root(GapQuery(77, 5), p).value.to_string(), find_root(GapQuery(77, 5), p).value.to_string());
}
