#ifndef ZETAPOLY_ACCEPTANCE_HPP
#define ZETAPOLY_ACCEPTANCE_HPP

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "asymptotics.hpp"
#include "combinatorics.hpp"
#include "numerics.hpp"
#include "root_solver.hpp"
#include "unity.hpp"

namespace zetapoly {

struct CheckResult {
    int id;
    std::string title;
    bool passed;
    std::string detail;
};

/**
 * The thirteen end-to-end acceptance checks. Roots of p_N' are cached on the
 * suite object, so running several checks in one process solves each N once.
 */
class AcceptanceSuite {
public:
    static constexpr int count = 13;

    explicit AcceptanceSuite(Precision p = default_precision) : p_(p) {}

    Precision precision() const { return p_; }

    CheckResult run(int id) {
        switch (id) {
        case 1: return small_roots();
        case 2: return log_growth();
        case 3: return second_order_rate();
        case 4: return symbolic_coefficients();
        case 5: return c4_adjudication();
        case 6: return combinatorial_identities();
        case 7: return second_logderiv();
        case 8: return basel_finite();
        case 9: return even_zeta_closed_form();
        case 10: return theta_tower();
        case 11: return cosecant();
        case 12: return dirichlet();
        case 13: return repulsion_symmetry();
        default: throw DomainError("acceptance check id must be in [1, 13]");
        }
    }

    std::vector<CheckResult> run_all() {
        std::vector<CheckResult> out;
        for (int id = 1; id <= count; ++id)
            out.push_back(run(id));
        return out;
    }

    static const std::vector<unsigned long>& growth_grid() {
        static const std::vector<unsigned long> grid{1000, 10000, 100000, 1000000};
        return grid;
    }

private:
    const RootEstimate& root(unsigned long n) {
        auto it = roots_.find(n);
        if (it == roots_.end())
            it = roots_.emplace(n, find_root(GapQuery(n), p_)).first;
        return it->second;
    }

    static std::string sci(const HPReal& x) { return x.to_string(6); }

    HPReal tol(double v) const { return HPReal(v, p_); }

    CheckResult small_roots() {
        const RootEstimate r1 = find_root(GapQuery(1), p_);
        const RootEstimate r2 = find_root(GapQuery(2), p_);
        const HPReal want1 = HPReal(1L, p_) / 2L;
        const HPReal want2 = HPReal(1L, p_) - HPReal(1L, p_) / sqrt(HPReal(3L, p_));
        const HPReal e1 = abs(r1.value - want1), e2 = abs(r2.value - want2);
        const bool ok = e1 <= tol(1e-12) && e2 <= tol(1e-12) && abs(r1.residual) <= tol(1e-30) &&
                        abs(r2.residual) <= tol(1e-30);
        std::ostringstream d;
        d << "alpha(1)=" << r1.value.to_string(20) << " err=" << sci(e1) << " res=" << sci(abs(r1.residual))
          << "; alpha(2)=" << r2.value.to_string(20) << " err=" << sci(e2) << " res=" << sci(abs(r2.residual));
        return {1, "exact small-N roots", ok, d.str()};
    }

    CheckResult log_growth() {
        const auto start = std::chrono::steady_clock::now();
        bool ok = true;
        std::ostringstream d;
        for (unsigned long n : growth_grid()) {
            const HPReal gap = abs(HPReal(1L, p_) / root(n).value - log(HPReal(n, p_)));
            ok = ok && gap <= 2L;
            d << "N=" << n << " |1/alpha-logN|=" << gap.to_string(8) << "; ";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        ok = ok && secs <= 30.0;
        d << "runtime " << std::fixed << std::setprecision(2) << secs << " s";
        return {2, "1/alpha = log N + O(1)", ok, d.str()};
    }

    CheckResult second_order_rate() {
        const HPReal pi = pi_const(p_);
        const HPReal z2 = pi * pi / 6L;
        bool ok = true;
        std::ostringstream d;
        std::optional<HPReal> previous;
        for (unsigned long n : growth_grid()) {
            const HPReal signed_dev = inverse_expansion_residual(n, root(n).value, p_) - z2;
            const HPReal dev = abs(signed_dev);
            const HPReal scaled = dev * log(HPReal(n, p_));
            ok = ok && scaled <= 10L;
            if (previous)
                ok = ok && dev < *previous;
            previous = dev;
            d << "N=" << n << " r-zeta2=" << signed_dev.to_string(8) << " |r-zeta2| logN=" << scaled.to_string(8)
              << "; ";
        }
        return {3, "r(N) -> zeta(2) at rate 1/log N", ok, d.str()};
    }

    CheckResult symbolic_coefficients() {
        const FormalSeries s = expansion_coefficients(3);
        const SymbolicConstantPoly g(ConstSymbol::gamma()), z2(ConstSymbol::zeta(2));
        const SymbolicConstantPoly want2 = SymbolicConstantPoly(-1L) * g;
        const SymbolicConstantPoly want3 = g * g - z2;
        const bool ok = s.c(1) == SymbolicConstantPoly(1L) && s.c(2) == want2 && s.c(3) == want3;
        std::ostringstream d;
        d << "c1 = " << s.c(1).to_string() << "; c2 = " << s.c(2).to_string() << "; c3 = " << s.c(3).to_string();
        return {4, "symbolic c2, c3", ok, d.str()};
    }

    CheckResult c4_adjudication() {
        const HPReal big_l(1000L, p_);
        const ConstantBinding binding = default_binding(4, p_);
        const HPReal alpha = truncated_root(big_l, binding, p_);
        const FormalSeries s = expansion_coefficients(4);
        const HPReal u4 = pow(big_l, -4L);
        const HPReal expansion = evaluate_expansion_at_log(big_l, 4, binding, p_);
        const HPReal c4 = s.c(4).evaluate(binding, p_);
        const HPReal c4_alt = inhomogeneous_c4_candidate().evaluate(binding, p_);
        const HPReal expansion_alt = expansion + (c4_alt - c4) * u4;
        const HPReal bound = pow(big_l, -5L) * 10L;
        const HPReal err = abs(alpha - expansion);
        const HPReal err_alt = abs(alpha - expansion_alt);
        const bool ok = err <= bound && err_alt >= bound * 10L;
        std::ostringstream d;
        d << "bound=" << sci(bound) << "; c4 = " << s.c(4).to_string() << " = " << c4.to_string(10)
          << " err=" << sci(err) << "; c4' = " << inhomogeneous_c4_candidate().to_string() << " = "
          << c4_alt.to_string(10) << " err=" << sci(err_alt) << " (" << (err_alt / bound).to_string(4)
          << " x bound)";
        return {5, "c4 adjudication at L = 1000", ok, d.str()};
    }

    CheckResult combinatorial_identities() {
        std::vector<std::string> failures;
        const TriangleTable b30 = b_table(30);
        for (long m = 1; m <= 30; ++m) {
            const ExactRational want = (m % 2 == 1 ? 1 : -1) * factorial(static_cast<unsigned>(m - 1));
            if (b30.at(m, m) != want)
                failures.push_back("b_{m,m} m=" + std::to_string(m));
        }
        const TriangleTable s20 = stirling2_table(20);
        for (long m = 1; m <= 20; ++m)
            for (long k = 1; k <= m; ++k) {
                const ExactRational want =
                    (k % 2 == 1 ? 1 : -1) * factorial(static_cast<unsigned>(k - 1)) * s20.at(k, m);
                if (b30.at(k, m) != want)
                    failures.push_back("b/S k=" + std::to_string(k) + " m=" + std::to_string(m));
            }
        const TriangleTable c12 = c_table(12);
        const TriangleTable e11 = eulerian_table(11);
        for (long m = 2; m <= 12; ++m)
            for (long k = 1; k <= m; ++k)
                if (c12.at(k, m) != (m % 2 == 1 ? 1 : -1) * e11.at(k, m - 1))
                    failures.push_back("c/e k=" + std::to_string(k) + " m=" + std::to_string(m));
        for (long n = 2; n <= 30; ++n)
            if (alternating_c_sum(n) != alternating_c_sum_closed(n))
                failures.push_back("alternating sum n=" + std::to_string(n));
        const TriangleTable e8 = eulerian_table(8);
        for (long m = 1; m <= 8; ++m) {
            ExactRational row = 0;
            for (long k = 1; k <= m; ++k)
                row += e8.at(k, m);
            if (row != factorial(static_cast<unsigned>(m)))
                failures.push_back("eulerian row m=" + std::to_string(m));
        }
        std::string d = failures.empty() ? "all exact identities hold" : "failed:";
        for (const auto& f : failures)
            d += " " + f + ";";
        return {6, "exact triangle identities", failures.empty(), d};
    }

    CheckResult second_logderiv() {
        bool ok = true;
        HPReal worst(p_);
        for (unsigned long n = 3; n <= 12; ++n) {
            const SecondLogDerivSides s = second_logderiv_sides(n, p_);
            const long nn = static_cast<long>(n);
            const HPReal exact(ExactRational(nn * nn - 2 * nn, 4), p_);
            const HPReal diff = abs(s.rhs - HPComplex(s.lhs));
            const HPReal scaled = diff / (nn * nn);
            ok = ok && s.lhs == exact && diff <= tol(1e-10) * (nn * nn);
            worst = max(worst, scaled);
        }
        return {7, "second log-derivative identity, 3 <= N <= 12", ok,
                "max |lhs-rhs|/N^2 = " + sci(worst) + "; lhs exactly (N^2-2N)/4"};
    }

    CheckResult basel_finite() {
        const unsigned long n = 10000;
        const HPReal pi = pi_const(p_);
        const HPReal s = zeta2_finite(n, p_);
        const HPReal err = abs(s - pi * pi / 4L);
        const HPReal bound = log(HPReal(n, p_)) * 10L / static_cast<long>(n);
        const HPReal chained = zeta_from_odd(2, s / 2L);
        const HPReal chained_err = abs(chained - pi * pi / 6L);
        const bool ok = err <= bound && chained_err <= tol(1e-2);
        return {8, "finite Basel sum", ok,
                "S=" + s.to_string(15) + " err=" + sci(err) + " bound=" + sci(bound) + "; chained=" +
                    chained.to_string(15) + " err=" + sci(chained_err)};
    }

    CheckResult even_zeta_closed_form() {
        bool ok = true;
        std::ostringstream d;
        for (unsigned n = 1; n <= 5; ++n) {
            const HPReal diff = abs(zeta_even_closed(n, p_) - zeta_partial(2 * static_cast<long>(n), 1000000, p_));
            ok = ok && diff <= tol(n == 1 ? 2e-6 : 1e-12);
            d << "n=" << n << " diff=" << sci(diff) << "; ";
        }
        return {9, "zeta(2n) closed form vs direct sum", ok, d.str()};
    }

    CheckResult theta_tower() {
        std::mt19937_64 rng(0x7a657461ULL);
        auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
        std::vector<HPComplex> zs;
        const HPReal two_pi = pi_const(p_) * 2L;
        while (zs.size() < 20) {
            const double radius = 0.5 + 1.5 * unit();
            const double turn = unit();
            if (radius > 0.95 && radius < 1.05)
                continue;
            const HPReal r(radius, p_);
            const HPReal angle = two_pi * HPReal(turn, p_);
            zs.emplace_back(r * cos(angle), r * sin(angle));
        }
        HPReal worst(p_);
        for (unsigned m = 1; m <= 6; ++m) {
            const TriangleTable b = b_table(m), c = c_table(m);
            for (unsigned long n = 1; n <= 8; ++n)
                for (const HPComplex& z : zs) {
                    const HPComplex lhs = theta_lhs(z, n, m, c, p_);
                    const HPComplex rhs = theta_rhs(z, n, m, b, p_);
                    const HPReal scale = max(max(abs(lhs), abs(rhs)), HPReal(1e-300, p_));
                    worst = max(worst, abs(lhs - rhs) / scale);
                }
        }
        return {10, "theta-tower identity, N <= 8, m <= 6, 20 seeded z", worst <= tol(1e-9),
                "max relative difference " + sci(worst)};
    }

    CheckResult cosecant() {
        bool ok = true;
        std::ostringstream d;
        for (long q : {4L, 3L, 2L}) {
            const HPReal t(ExactRational(1, q), p_);
            const HPReal diff = abs(two_sided_power_sum(t, 2, 100000, p_) - cosecant_square_identity(t, p_));
            ok = ok && diff <= tol(4e-5);
            d << "t=1/" << q << " diff=" << sci(diff) << "; ";
        }
        return {11, "two-sided sum vs pi^2/sin^2(pi t)", ok, d.str()};
    }

    CheckResult dirichlet() {
        const CharacterTable chi4{{0, HPComplex(HPReal(0L, p_))},
                                  {1, HPComplex(HPReal(1L, p_))},
                                  {2, HPComplex(HPReal(0L, p_))},
                                  {3, HPComplex(HPReal(-1L, p_))}};
        const HPComplex l3 = dirichlet_L(4, chi4, 3, 10000, p_);
        const HPReal want = pow(pi_const(p_), 3L) / 32L;
        const HPReal err = abs(l3 - HPComplex(want));
        const HPReal mismatch = abs(dirichlet_L(4, chi4, 2, 10000, p_));
        const bool ok = err <= tol(1e-8) && mismatch <= tol(1e-8);
        return {12, "Dirichlet L(3, chi_4) = pi^3/32", ok,
                "L=" + l3.re.to_string(18) + " err=" + sci(err) + "; parity-mismatched |sum|=" + sci(mismatch)};
    }

    CheckResult repulsion_symmetry() {
        const std::vector<RootEstimate> roots = find_all_roots(10, p_);
        bool ok = true;
        HPReal worst(p_);
        for (unsigned long i = 0; i < 10; ++i) {
            if (2 * i < 9)
                ok = ok && roots[i].value < HPReal(static_cast<long>(2 * i + 1), p_) / 2L;
            const HPReal asym = abs(roots[i].value + roots[9 - i].value - 10L);
            ok = ok && asym <= tol(1e-12);
            worst = max(worst, asym);
        }
        return {13, "repulsion and mirror symmetry at N = 10", ok,
                "alpha_0=" + roots[0].value.to_string(15) + " max|root_i+root_{9-i}-10|=" + sci(worst)};
    }

    Precision p_;
    std::map<unsigned long, RootEstimate> roots_;
};

} // namespace zetapoly

#endif
