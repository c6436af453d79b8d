#ifndef ZETAPOLY_ASYMPTOTICS_HPP
#define ZETAPOLY_ASYMPTOTICS_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "bracket_solve.hpp"
#include "numerics.hpp"
#include "root_solver.hpp"
#include "symbolic.hpp"
#include "zeta_value.hpp"

namespace zetapoly {

// Expansion of the first critical point alpha of p_N in u = 1/log N, in the
// N -> infinity model  1/alpha = 1/u + gamma + sum_{i>=1} zeta(i+1) alpha^i.

/// Power series sum_{d=0..order} a_d u^d with symbolic coefficients, truncated at `order`.
class PowerSeries {
public:
    explicit PowerSeries(unsigned order) : coeffs_(order + 1) {}

    unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
    const SymbolicConstantPoly& operator[](unsigned d) const { return coeffs_.at(d); }
    SymbolicConstantPoly& operator[](unsigned d) { return coeffs_.at(d); }

    PowerSeries& operator+=(const PowerSeries& o) {
        for (unsigned d = 0; d <= std::min(order(), o.order()); ++d)
            coeffs_[d] += o.coeffs_[d];
        return *this;
    }
    PowerSeries& operator-=(const PowerSeries& o) {
        for (unsigned d = 0; d <= std::min(order(), o.order()); ++d)
            coeffs_[d] -= o.coeffs_[d];
        return *this;
    }
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        PowerSeries r(std::min(a.order(), b.order()));
        for (unsigned i = 0; i <= r.order(); ++i) {
            if (a.coeffs_[i].is_zero())
                continue;
            for (unsigned j = 0; i + j <= r.order(); ++j)
                if (!b.coeffs_[j].is_zero())
                    r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }
    friend PowerSeries operator*(const SymbolicConstantPoly& s, PowerSeries a) {
        for (auto& c : a.coeffs_)
            c = s * c;
        return a;
    }

    /// Multiply by u^k, dropping what falls past the truncation order.
    PowerSeries shifted(unsigned k) const {
        PowerSeries r(order());
        for (unsigned d = 0; d + k <= order(); ++d)
            r.coeffs_[d + k] = coeffs_[d];
        return r;
    }

    /// Multiplicative inverse; needs an invertible rational constant term.
    PowerSeries inverse() const {
        const SymbolicConstantPoly& a0 = coeffs_[0];
        if (a0.terms().size() != 1 || a0.terms().begin()->first.degree() != 0)
            throw DomainError("PowerSeries::inverse needs a nonzero rational constant term");
        const ExactRational inv0 = 1 / a0.terms().begin()->second;
        PowerSeries r(order());
        r.coeffs_[0] = SymbolicConstantPoly(inv0);
        for (unsigned d = 1; d <= order(); ++d) {
            SymbolicConstantPoly acc;
            for (unsigned i = 1; i <= d; ++i)
                acc += coeffs_[i] * r.coeffs_[d - i];
            r.coeffs_[d] = SymbolicConstantPoly(ExactRational(-inv0)) * acc;
        }
        return r;
    }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<SymbolicConstantPoly> coeffs_;
};

/// alpha = c_1 u + c_2 u^2 + ... + c_M u^M.
struct FormalSeries {
    unsigned truncation_order;
    std::vector<SymbolicConstantPoly> coeffs; ///< coeffs[j-1] = c_j

    const SymbolicConstantPoly& c(unsigned j) const { return coeffs.at(j - 1); }
};

/**
 * c_1..c_M by formal reversion.
 *
 * Writing alpha = u A(u), the relation becomes
 *   A = 1 - u (gamma A + sum_{i>=1} zeta(i+1) u^i A^(i+1)),
 * a contraction in the u-adic sense: each pass fixes one more coefficient.
 */
inline FormalSeries expansion_coefficients(unsigned m) {
    if (m < 1)
        throw DomainError("expansion_coefficients needs M >= 1");
    const unsigned order = m - 1;
    PowerSeries one(order);
    one[0] = 1;
    PowerSeries a = one;
    for (unsigned pass = 0; pass < m; ++pass) {
        PowerSeries rhs = SymbolicConstantPoly(ConstSymbol::gamma()) * a;
        PowerSeries a_power = a; // A^(i+1)
        for (unsigned i = 1; i + 1 <= order; ++i) {
            a_power = a_power * a;
            rhs += SymbolicConstantPoly(ConstSymbol::zeta(static_cast<int>(i) + 1)) * a_power.shifted(i);
        }
        a = one - rhs.shifted(1);
    }
    FormalSeries out{m, {}};
    out.coeffs.reserve(m);
    for (unsigned d = 0; d <= order; ++d)
        out.coeffs.push_back(a[d]);
    return out;
}

/**
 * Candidate c_4 = zeta3 - gamma*zeta2 + zeta2 - gamma that circulates in
 * print. It is not weight-homogeneous and disagrees with the reversion; it is
 * carried only so reports can show both.
 */
inline SymbolicConstantPoly inhomogeneous_c4_candidate() {
    const SymbolicConstantPoly g(ConstSymbol::gamma()), z2(ConstSymbol::zeta(2)), z3(ConstSymbol::zeta(3));
    return z3 - g * z2 + z2 - g;
}

/// gamma plus zeta(2..max_zeta), bound numerically at precision p.
inline ConstantBinding default_binding(int max_zeta, Precision p) {
    ConstantBinding b;
    b.emplace(ConstSymbol::gamma(), euler_gamma(p));
    for (int k = 2; k <= max_zeta; ++k)
        b.emplace(ConstSymbol::zeta(k), zeta_value(k, p));
    return b;
}

/// Binding that covers every symbol an order-M expansion can mention.
inline ConstantBinding default_binding_for_order(unsigned m, Precision p) {
    return default_binding(std::max(2, static_cast<int>(m)), p);
}

/// sum_{j=1..M} c_j / L^j at a given L = log N.
inline HPReal evaluate_expansion_at_log(const HPReal& log_n, unsigned m, const ConstantBinding& binding, Precision p) {
    const FormalSeries series = expansion_coefficients(m);
    const HPReal u = HPReal(1L, p) / log_n;
    HPReal u_power = u;
    HPReal sum(p);
    for (unsigned j = 1; j <= m; ++j) {
        sum += series.c(j).evaluate(binding, p) * u_power;
        u_power *= u;
    }
    return sum;
}

/// sum_{j=1..M} c_j / log^j N.
inline HPReal evaluate_expansion(unsigned long n, unsigned m, const ConstantBinding& binding, Precision p) {
    if (n < 3)
        throw DomainError("evaluate_expansion needs N >= 3");
    return evaluate_expansion_at_log(log(HPReal(n, p)), m, binding, p);
}

/// r(N) = (1/alpha - log N - gamma) log N with alpha the true first critical point.
inline HPReal inverse_expansion_check(unsigned long n, Precision p) {
    if (n < 10)
        throw DomainError("inverse_expansion_check needs N >= 10");
    const RootEstimate root = find_root(GapQuery(n), p);
    const HPReal log_n = log(HPReal(n, p));
    return (HPReal(1L, p) / root.value - log_n - euler_gamma(p)) * log_n;
}

/// Same quantity from an already computed root.
inline HPReal inverse_expansion_residual(unsigned long n, const HPReal& alpha, Precision p) {
    const HPReal log_n = log(HPReal(n, p));
    return (HPReal(1L, p) / alpha - log_n - euler_gamma(p)) * log_n;
}

/**
 * Root alpha of the truncated scalar relation
 *   1/alpha = L + gamma + zeta2 alpha + zeta3 alpha^2 + zeta4 alpha^3
 * in [1/(2L), 2/L].
 */
inline HPReal truncated_root(const HPReal& log_value, const ConstantBinding& binding, Precision p) {
    if (log_value < 100L)
        throw DomainError("truncated_root needs L >= 100");
    auto bound = [&](ConstSymbol s) -> const HPReal& {
        auto it = binding.find(s);
        if (it == binding.end())
            throw BindingError(s.name());
        return it->second;
    };
    const HPReal& g = bound(ConstSymbol::gamma());
    const HPReal& z2 = bound(ConstSymbol::zeta(2));
    const HPReal& z3 = bound(ConstSymbol::zeta(3));
    const HPReal& z4 = bound(ConstSymbol::zeta(4));
    auto value = [&](const HPReal& a) { return HPReal(1L, p) / a - log_value - g - a * (z2 + a * (z3 + a * z4)); };
    auto value_slope = [&](const HPReal& a) {
        HPReal df = -(HPReal(1L, p) / (a * a)) - (z2 + a * (z3 * 2L + a * z4 * 3L));
        return std::pair<HPReal, HPReal>(value(a), std::move(df));
    };
    const HPReal lo = HPReal(1L, p) / (log_value * 2L);
    const HPReal hi = HPReal(2L, p) / log_value;
    return solve_bracketed(value, value_slope, lo, hi, p, "truncated_root").x;
}

/// Numeric c_j from the truncated root: (alpha - sum_{i<j} c_i/L^i) L^j, accurate to O(1/L).
inline HPReal empirical_coefficient_fit(unsigned j, const HPReal& log_value, Precision p) {
    if (j < 2 || j > 4)
        throw DomainError("empirical_coefficient_fit supports j in [2, 4]");
    const ConstantBinding binding = default_binding(4, p);
    const HPReal alpha = truncated_root(log_value, binding, p);
    const HPReal partial = j > 1 ? evaluate_expansion_at_log(log_value, j - 1, binding, p) : HPReal(p);
    return (alpha - partial) * pow(log_value, static_cast<long>(j));
}

} // namespace zetapoly

#endif
