#ifndef ZETAPOLY_HP_COMPLEX_HPP
#define ZETAPOLY_HP_COMPLEX_HPP

#include <string>
#include <utility>

#include "hp_real.hpp"

namespace zetapoly {

/// Complex number with HPReal components.
struct HPComplex {
    HPReal re;
    HPReal im;

    explicit HPComplex(Precision p) : re(p), im(p) {}
    HPComplex(HPReal r, HPReal i) : re(std::move(r)), im(std::move(i)) {}
    explicit HPComplex(HPReal r) : re(std::move(r)), im(re.precision()) {}

    Precision precision() const { return re.precision(); }

    HPComplex& operator+=(const HPComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    HPComplex& operator-=(const HPComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    HPComplex& operator*=(const HPComplex& o) {
        HPReal r = re * o.re - im * o.im;
        HPReal i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    HPComplex& operator/=(const HPComplex& o) {
        const HPReal d = o.norm();
        if (d.is_zero())
            throw DomainError("HPComplex: division by zero");
        HPReal r = (re * o.re + im * o.im) / d;
        HPReal i = (im * o.re - re * o.im) / d;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    HPComplex& operator*=(const HPReal& s) {
        re *= s;
        im *= s;
        return *this;
    }
    HPComplex& operator*=(long s) {
        re *= s;
        im *= s;
        return *this;
    }

    HPComplex operator-() const { return {-re, -im}; }

    friend HPComplex operator+(HPComplex a, const HPComplex& b) { return a += b; }
    friend HPComplex operator-(HPComplex a, const HPComplex& b) { return a -= b; }
    friend HPComplex operator*(HPComplex a, const HPComplex& b) { return a *= b; }
    friend HPComplex operator/(HPComplex a, const HPComplex& b) { return a /= b; }
    friend HPComplex operator*(HPComplex a, const HPReal& s) { return a *= s; }
    friend HPComplex operator*(HPComplex a, long s) { return a *= s; }

    /// |z|^2
    HPReal norm() const { return re * re + im * im; }
    HPReal abs() const { return sqrt(norm()); }
    HPComplex conj() const { return {re, -im}; }

    /// z^n for integer n (negative n inverts), by repeated squaring.
    HPComplex pow(long n) const {
        const Precision p = precision();
        HPComplex result(HPReal(1L, p), HPReal(p));
        HPComplex base = *this;
        bool invert = n < 0;
        unsigned long e = invert ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
        while (e != 0) {
            if (e & 1UL)
                result *= base;
            e >>= 1;
            if (e != 0)
                base *= base;
        }
        if (invert)
            return HPComplex(HPReal(1L, p), HPReal(p)) / result;
        return result;
    }

    std::string to_string(int digits = 0) const {
        return re.to_string(digits) + (im.sign() < 0 ? "" : "+") + im.to_string(digits) + "i";
    }
};

inline HPReal abs(const HPComplex& z) { return z.abs(); }

} // namespace zetapoly

#endif
