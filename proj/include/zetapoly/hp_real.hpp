#ifndef ZETAPOLY_HP_REAL_HPP
#define ZETAPOLY_HP_REAL_HPP

#include <algorithm>
#include <cmath>
#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

#include "errors.hpp"
#include "precision.hpp"

namespace zetapoly {

/**
 * Finite real number stored with an explicit binary precision.
 *
 * Thin RAII owner of an mpfr_t. Binary operations round to the larger of the
 * two operand precisions; any operation that would produce NaN or an infinity
 * throws DomainError instead.
 */
class HPReal {
public:
    explicit HPReal(Precision p) {
        mpfr_init2(v_, p.bits());
        mpfr_set_zero(v_, 1);
    }
    HPReal(long value, Precision p) {
        mpfr_init2(v_, p.bits());
        mpfr_set_si(v_, value, MPFR_RNDN);
    }
    HPReal(int value, Precision p) : HPReal(static_cast<long>(value), p) {}
    HPReal(unsigned value, Precision p) : HPReal(static_cast<unsigned long>(value), p) {}
    HPReal(unsigned long value, Precision p) {
        mpfr_init2(v_, p.bits());
        mpfr_set_ui(v_, value, MPFR_RNDN);
    }
    HPReal(double value, Precision p) {
        if (!std::isfinite(value))
            throw DomainError("HPReal: non-finite double");
        mpfr_init2(v_, p.bits());
        mpfr_set_d(v_, value, MPFR_RNDN);
    }
    HPReal(const mpq_class& value, Precision p) {
        mpfr_init2(v_, p.bits());
        mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
    }

    /// Parses a decimal literal ("0.25", "-1e-3", "3.14159...").
    static HPReal parse(std::string_view text, Precision p) {
        HPReal r(p);
        std::string s(text);
        if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0 || !mpfr_number_p(r.v_))
            throw InputError("cannot parse real number '" + s + "'");
        return r;
    }

    HPReal(const HPReal& other) {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    HPReal(HPReal&& other) noexcept {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_swap(v_, other.v_);
    }
    HPReal& operator=(const HPReal& other) {
        if (this != &other) {
            mpfr_set_prec(v_, mpfr_get_prec(other.v_));
            mpfr_set(v_, other.v_, MPFR_RNDN);
        }
        return *this;
    }
    HPReal& operator=(HPReal&& other) noexcept {
        mpfr_swap(v_, other.v_);
        return *this;
    }
    ~HPReal() { mpfr_clear(v_); }

    Precision precision() const { return Precision(static_cast<unsigned>(mpfr_get_prec(v_))); }

    /// Same value rounded to a different precision.
    HPReal rounded(Precision p) const {
        HPReal r(p);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    mpfr_ptr raw() noexcept { return v_; }
    mpfr_srcptr raw() const noexcept { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }

    /**
     * Deterministic decimal rendering in scientific notation.
     *
     * `digits` = 0 selects the number of decimal digits the binary precision
     * supports, floor(bits * log10(2)).
     */
    std::string to_string(int digits = 0) const {
        if (digits <= 0)
            digits = std::max(1, static_cast<int>(std::floor(mpfr_get_prec(v_) * 0.30102999566398120)));
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }

    HPReal operator-() const {
        HPReal r(*this);
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    HPReal& operator+=(const HPReal& o) { return apply(o, mpfr_add, "addition"); }
    HPReal& operator-=(const HPReal& o) { return apply(o, mpfr_sub, "subtraction"); }
    HPReal& operator*=(const HPReal& o) { return apply(o, mpfr_mul, "multiplication"); }
    HPReal& operator/=(const HPReal& o) {
        if (o.is_zero())
            throw DomainError("HPReal: division by zero");
        return apply(o, mpfr_div, "division");
    }
    HPReal& operator+=(long o) {
        mpfr_add_si(v_, v_, o, MPFR_RNDN);
        return *this;
    }
    HPReal& operator-=(long o) {
        mpfr_sub_si(v_, v_, o, MPFR_RNDN);
        return *this;
    }
    HPReal& operator*=(long o) {
        mpfr_mul_si(v_, v_, o, MPFR_RNDN);
        return *this;
    }
    HPReal& operator/=(long o) {
        if (o == 0)
            throw DomainError("HPReal: division by zero");
        mpfr_div_si(v_, v_, o, MPFR_RNDN);
        return *this;
    }

    friend HPReal operator+(HPReal a, const HPReal& b) { return a += b; }
    friend HPReal operator-(HPReal a, const HPReal& b) { return a -= b; }
    friend HPReal operator*(HPReal a, const HPReal& b) { return a *= b; }
    friend HPReal operator/(HPReal a, const HPReal& b) { return a /= b; }
    friend HPReal operator+(HPReal a, long b) { return a += b; }
    friend HPReal operator-(HPReal a, long b) { return a -= b; }
    friend HPReal operator*(HPReal a, long b) { return a *= b; }
    friend HPReal operator/(HPReal a, long b) { return a /= b; }
    friend HPReal operator+(long a, HPReal b) { return b += a; }
    friend HPReal operator*(long a, HPReal b) { return b *= a; }
    friend HPReal operator-(long a, const HPReal& b) {
        HPReal r(b.precision());
        mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend HPReal operator/(long a, const HPReal& b) {
        if (b.is_zero())
            throw DomainError("HPReal: division by zero");
        HPReal r(b.precision());
        mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }

    friend bool operator==(const HPReal& a, const HPReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::strong_ordering operator<=>(const HPReal& a, const HPReal& b) {
        const int c = mpfr_cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    friend bool operator==(const HPReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
    friend std::strong_ordering operator<=>(const HPReal& a, long b) {
        const int c = mpfr_cmp_si(a.v_, b);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    friend bool operator<(const HPReal& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
    friend bool operator>(const HPReal& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
    friend bool operator<=(const HPReal& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
    friend bool operator>=(const HPReal& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }

    template <typename F>
    friend HPReal unary(const HPReal& x, F f, const char* what) {
        HPReal r(x.precision());
        f(r.v_, x.v_, MPFR_RNDN);
        r.check_finite(what);
        return r;
    }

    void check_finite(const char* what) const {
        if (!mpfr_number_p(v_))
            throw DomainError(std::string("HPReal: non-finite result in ") + what);
    }

private:
    template <typename Op>
    HPReal& apply(const HPReal& o, Op op, const char* what) {
        if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_))
            mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
        op(v_, v_, o.v_, MPFR_RNDN);
        check_finite(what);
        return *this;
    }

    mpfr_t v_;
};

inline HPReal abs(const HPReal& x) { return unary(x, mpfr_abs, "abs"); }
inline HPReal sqrt(const HPReal& x) {
    if (x.sign() < 0)
        throw DomainError("sqrt of negative number");
    return unary(x, mpfr_sqrt, "sqrt");
}
inline HPReal log(const HPReal& x) {
    if (x.sign() <= 0)
        throw DomainError("log of non-positive number");
    return unary(x, mpfr_log, "log");
}
inline HPReal exp(const HPReal& x) { return unary(x, mpfr_exp, "exp"); }
inline HPReal sin(const HPReal& x) { return unary(x, mpfr_sin, "sin"); }
inline HPReal cos(const HPReal& x) { return unary(x, mpfr_cos, "cos"); }

inline HPReal pow(const HPReal& x, long n) {
    HPReal r(x.precision());
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    r.check_finite("pow");
    return r;
}

/// Nearest integer, ties away from zero.
inline HPReal round_nearest(const HPReal& x) {
    HPReal r(x.precision());
    mpfr_round(r.raw(), x.raw());
    return r;
}

/// x * 2^e, exact.
inline HPReal ldexp(const HPReal& x, long e) {
    HPReal r(x);
    mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
    return r;
}

/// 2^e at precision p.
inline HPReal pow2(long e, Precision p) {
    HPReal r(1L, p);
    mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
    return r;
}

inline HPReal max(const HPReal& a, const HPReal& b) { return a < b ? b : a; }

/**
 * Failed iterative solve. Carries the tightest bracket known when the
 * iteration cap was hit.
 */
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, HPReal lower, HPReal upper)
        : Error(what + " (best bracket [" + lower.to_string(20) + ", " + upper.to_string(20) + "])"),
          lower_(std::move(lower)), upper_(std::move(upper)) {}

    const HPReal& lower() const noexcept { return lower_; }
    const HPReal& upper() const noexcept { return upper_; }

private:
    HPReal lower_;
    HPReal upper_;
};

} // namespace zetapoly

#endif
