#ifndef ZETAPOLY_COMBINATORICS_HPP
#define ZETAPOLY_COMBINATORICS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace zetapoly {

/// Exact rational; gmpxx keeps it canonical (reduced, positive denominator).
using ExactRational = mpq_class;

/// Always renders "p/q", including q = 1.
inline std::string to_fraction_string(ExactRational q) {
    q.canonicalize();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "p/q" or an integer "p". Throws InputError on anything else.
inline ExactRational parse_fraction(std::string_view text) {
    const std::string s(text);
    ExactRational q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw InputError("cannot parse rational '" + s + "'");
    if (q.get_den() == 0)
        throw InputError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline ExactRational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return ExactRational(f);
}

enum class TriangleKind { stirling1, stirling2, eulerian, b, c };

inline std::string_view to_string(TriangleKind kind) {
    switch (kind) {
    case TriangleKind::stirling1: return "stirling1";
    case TriangleKind::stirling2: return "stirling2";
    case TriangleKind::eulerian: return "eulerian";
    case TriangleKind::b: return "b";
    case TriangleKind::c: return "c";
    }
    return "?";
}

inline std::optional<TriangleKind> parse_triangle_kind(std::string_view name) {
    for (auto kind : {TriangleKind::stirling1, TriangleKind::stirling2, TriangleKind::eulerian, TriangleKind::b,
                      TriangleKind::c})
        if (to_string(kind) == name)
            return kind;
    return std::nullopt;
}

/**
 * Immutable triangular array of exact rationals indexed (k, m), 1 <= k <= m <= max_m.
 *
 * Reads outside the triangle (k = 0, k > m, m > max_m is an error) return 0,
 * which is the boundary convention every recursion below relies on.
 */
class TriangleTable {
public:
    TriangleTable(TriangleKind kind, unsigned max_m) : kind_(kind), max_m_(max_m), entries_(max_m * (max_m + 1) / 2) {}

    TriangleKind kind() const noexcept { return kind_; }
    unsigned max_m() const noexcept { return max_m_; }

    ExactRational at(long k, long m) const {
        if (m < 1 || m > static_cast<long>(max_m_)) {
            if (m >= 1)
                throw DomainError("triangle row " + std::to_string(m) + " beyond max_m " + std::to_string(max_m_));
            return 0;
        }
        if (k < 1 || k > m)
            return 0;
        return entries_[index(k, m)];
    }

    /// Mutable access for construction only; builders below are the sole users.
    ExactRational& slot(unsigned k, unsigned m) { return entries_[index(k, m)]; }

private:
    static std::size_t index(long k, long m) { return static_cast<std::size_t>(m * (m - 1) / 2 + (k - 1)); }

    TriangleKind kind_;
    unsigned max_m_;
    std::vector<ExactRational> entries_;
};

/// b_{1,1} = 1, b_{k,m+1} = k b_{k,m} - (k-1) b_{k-1,m}.
inline TriangleTable b_table(unsigned max_m) {
    if (max_m < 1)
        throw DomainError("b_table needs max_m >= 1");
    TriangleTable t(TriangleKind::b, max_m);
    t.slot(1, 1) = 1;
    for (unsigned m = 1; m < max_m; ++m)
        for (unsigned k = 1; k <= m + 1; ++k)
            t.slot(k, m + 1) = static_cast<long>(k) * t.at(k, m) - static_cast<long>(k - 1) * t.at(k - 1, m);
    return t;
}

/// c_{1,1} = 1, c_{k,1} = 0 (k > 1), c_{k,m+1} = -(k c_{k,m} + (m+1-k) c_{k-1,m}).
inline TriangleTable c_table(unsigned max_m) {
    if (max_m < 1)
        throw DomainError("c_table needs max_m >= 1");
    TriangleTable t(TriangleKind::c, max_m);
    t.slot(1, 1) = 1;
    for (unsigned m = 1; m < max_m; ++m)
        for (unsigned k = 1; k <= m + 1; ++k)
            t.slot(k, m + 1) =
                -(static_cast<long>(k) * t.at(k, m) + static_cast<long>(m + 1 - k) * t.at(k - 1, m));
    return t;
}

/// Stirling numbers of the second kind, S(m,k) = S(m-1,k-1) + k S(m-1,k).
inline TriangleTable stirling2_table(unsigned max_m) {
    if (max_m < 1)
        throw DomainError("stirling2_table needs max_m >= 1");
    TriangleTable t(TriangleKind::stirling2, max_m);
    t.slot(1, 1) = 1;
    for (unsigned m = 2; m <= max_m; ++m)
        for (unsigned k = 1; k <= m; ++k)
            t.slot(k, m) = t.at(k - 1, m - 1) + static_cast<long>(k) * t.at(k, m - 1);
    return t;
}

/// Eulerian numbers, e_{k,m} = (m-k+1) e_{k-1,m-1} + k e_{k,m-1}.
inline TriangleTable eulerian_table(unsigned max_m) {
    if (max_m < 1)
        throw DomainError("eulerian_table needs max_m >= 1");
    TriangleTable t(TriangleKind::eulerian, max_m);
    t.slot(1, 1) = 1;
    for (unsigned m = 2; m <= max_m; ++m)
        for (unsigned k = 1; k <= m; ++k)
            t.slot(k, m) = static_cast<long>(m - k + 1) * t.at(k - 1, m - 1) + static_cast<long>(k) * t.at(k, m - 1);
    return t;
}

/**
 * Signed Stirling numbers of the first kind restricted to 1 <= k <= n:
 * s(n,k) is the coefficient of x^k in x(x-1)...(x-n+1).
 * Recursion s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k).
 */
inline TriangleTable stirling1_table(unsigned max_m) {
    if (max_m < 1)
        throw DomainError("stirling1_table needs max_m >= 1");
    TriangleTable t(TriangleKind::stirling1, max_m);
    t.slot(1, 1) = 1;
    for (unsigned n = 2; n <= max_m; ++n)
        for (unsigned k = 1; k <= n; ++k)
            t.slot(k, n) = t.at(k - 1, n - 1) - static_cast<long>(n - 1) * t.at(k, n - 1);
    return t;
}

inline TriangleTable make_table(TriangleKind kind, unsigned max_m) {
    switch (kind) {
    case TriangleKind::stirling1: return stirling1_table(max_m);
    case TriangleKind::stirling2: return stirling2_table(max_m);
    case TriangleKind::eulerian: return eulerian_table(max_m);
    case TriangleKind::b: return b_table(max_m);
    case TriangleKind::c: return c_table(max_m);
    }
    throw DomainError("unknown triangle kind");
}

/// S(m,k); 0 outside 1 <= k <= m.
inline ExactRational stirling2(long m, long k) {
    if (m < 1 || k < 1 || k > m)
        return 0;
    return stirling2_table(static_cast<unsigned>(m)).at(k, m);
}

/// s(n,k) for 0 <= k <= n; s(0,0) = 1, s(n,0) = 0 for n >= 1, 0 for k > n.
inline ExactRational stirling1_signed(long n, long k) {
    if (n < 0 || k < 0 || k > n)
        return 0;
    if (k == 0)
        return n == 0 ? 1 : 0;
    return stirling1_table(static_cast<unsigned>(n)).at(k, n);
}

/// e_{k,m}; 0 outside the triangle.
inline ExactRational eulerian(long k, long m) {
    if (m < 1 || k < 1 || k > m)
        return 0;
    return eulerian_table(static_cast<unsigned>(m)).at(k, m);
}

/**
 * Bernoulli numbers B_0..B_max for z/(e^z - 1) (so B_1 = -1/2), from
 * sum_{j=0..n} C(n+1, j) B_j = 0.
 */
inline std::vector<ExactRational> bernoulli_numbers(unsigned max_n) {
    std::vector<ExactRational> b(max_n + 1);
    b[0] = 1;
    mpz_class binom;
    for (unsigned n = 1; n <= max_n; ++n) {
        ExactRational acc = 0;
        for (unsigned j = 0; j < n; ++j) {
            mpz_bin_uiui(binom.get_mpz_t(), n + 1, j);
            acc += ExactRational(binom) * b[j];
        }
        b[n] = -acc / (n + 1);
    }
    return b;
}

inline ExactRational bernoulli(unsigned n) { return bernoulli_numbers(n)[n]; }

namespace detail {

inline ExactRational alternating_row_sum(const TriangleTable& t, long n) {
    ExactRational sum = 0;
    for (long k = 1; k <= n; ++k)
        sum += (k % 2 == 0 ? 1 : -1) * t.at(k, n);
    return sum;
}

} // namespace detail

/// sum_{k=1..n} (-1)^k c_{k,n}; for n >= 2 this equals (-1)^n 2^n (2^n - 1) B_n / n.
inline ExactRational alternating_c_sum(long n) {
    if (n < 2)
        throw DomainError("alternating_c_sum needs n >= 2 (the Bernoulli identity fails at n = 1 with B_1 = -1/2)");
    return detail::alternating_row_sum(c_table(static_cast<unsigned>(n)), n);
}

/// Closed side of the alternating-sum identity: (-1)^n 2^n (2^n - 1) B_n / n.
inline ExactRational alternating_c_sum_closed(long n) {
    if (n < 1)
        throw DomainError("alternating_c_sum_closed needs n >= 1");
    mpz_class two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
    ExactRational r = ExactRational(two_n * (two_n - 1)) * bernoulli(static_cast<unsigned>(n)) / n;
    return n % 2 == 0 ? r : ExactRational(-r);
}

} // namespace zetapoly

#endif
