#ifndef ZETAPOLY_ZETA_VALUE_HPP
#define ZETAPOLY_ZETA_VALUE_HPP

#include <algorithm>
#include <string>

#include "combinatorics.hpp"
#include "numerics.hpp"

namespace zetapoly {

/**
 * zeta(k) for integer k >= 2 to p bits: direct sum up to N-1 plus the
 * Euler-Maclaurin tail
 *   N^(1-k)/(k-1) + N^(-k)/2 + sum_j B_2j/(2j)! * k(k+1)...(k+2j-2) * N^(-k-2j+1).
 * Used to bind the zeta symbols of the asymptotic expansion.
 */
inline HPReal zeta_value(long k, Precision p) {
    if (k < 2)
        throw DomainError("zeta_value needs k >= 2");
    const Precision wp = p.widened(32);
    const unsigned long n = std::max<unsigned long>(32, p.bits());
    const unsigned max_j = p.bits() / 2 + 8;

    HPReal sum = zeta_partial(k, n - 1, wp);
    const HPReal big_n(n, wp);
    sum += pow(big_n, 1 - k) / (k - 1);
    sum += ldexp(pow(big_n, -k), -1);

    const auto bern = bernoulli_numbers(2 * max_j);
    const HPReal threshold = pow2(-static_cast<long>(wp.bits()), wp);
    ExactRational rising = k; // k(k+1)...(k+2j-2)
    for (unsigned j = 1; j <= max_j; ++j) {
        if (j > 1)
            rising *= ExactRational((k + 2 * static_cast<long>(j) - 3) * (k + 2 * static_cast<long>(j) - 2));
        const ExactRational coeff = bern[2 * j] / factorial(2 * j) * rising;
        HPReal term = HPReal(coeff, wp) * pow(big_n, -k - 2 * static_cast<long>(j) + 1);
        sum += term;
        if (abs(term) < threshold)
            break;
    }
    return sum.rounded(p);
}

} // namespace zetapoly

#endif
