#ifndef ZETAPOLY_REPORT_HPP
#define ZETAPOLY_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asymptotics.hpp"
#include "numerics.hpp"
#include "root_solver.hpp"
#include "unity.hpp"

namespace zetapoly {

using Fields = std::vector<std::pair<std::string, std::string>>;

/// One output record. Numbers are pre-rendered decimal strings.
struct ReportRow {
    Fields inputs;
    std::string value;
    std::optional<std::string> reference;
    std::optional<std::string> abs_error;
    Fields extras; ///< additional named outputs, serialized after the fixed fields
};

struct Report {
    std::string tool_version;
    Fields config;
    std::vector<ReportRow> rows;
};

inline constexpr std::string_view tool_version = "0.1.0";

enum class ConvergenceKind { theorem1, theorem2, zeta2finite, evenzeta };

inline std::optional<ConvergenceKind> parse_convergence_kind(std::string_view s) {
    if (s == "theorem1")
        return ConvergenceKind::theorem1;
    if (s == "theorem2")
        return ConvergenceKind::theorem2;
    if (s == "zeta2finite")
        return ConvergenceKind::zeta2finite;
    if (s == "evenzeta")
        return ConvergenceKind::evenzeta;
    return std::nullopt;
}

inline std::string_view to_string(ConvergenceKind k) {
    switch (k) {
    case ConvergenceKind::theorem1: return "theorem1";
    case ConvergenceKind::theorem2: return "theorem2";
    case ConvergenceKind::zeta2finite: return "zeta2finite";
    case ConvergenceKind::evenzeta: return "evenzeta";
    }
    return "?";
}

/**
 * Measured residual against the predicted asymptotic, one row per N.
 *
 *  theorem1:    value 1/alpha, reference log N,                     normalized = |err|
 *  theorem2:    value 1/alpha, reference log N + gamma + zeta2/log N, normalized = |err| log^2 N
 *  zeta2finite: value sum (2j-1)^-2, reference pi^2/4,              normalized = |err| N / log N
 *  evenzeta:    value leading term of the order-m tower at z = e(1/2N), reference (2^m-1) B_m / m,
 *               normalized = |err| N / log N (the O(1/N) + O(N^(1-m) log N) scale, kept for every m)
 *
 * From the second row on, observed_exponent is the slope of log|err| against log N.
 */
inline std::vector<ReportRow> convergence_table(ConvergenceKind kind, const std::vector<unsigned long>& ns, Precision p,
                                                unsigned m = 2) {
    if (ns.empty())
        throw DomainError("convergence_table needs at least one N");
    for (std::size_t i = 1; i < ns.size(); ++i)
        if (ns[i] <= ns[i - 1])
            throw DomainError("convergence_table needs ascending N");

    std::vector<ReportRow> rows;
    std::optional<std::pair<HPReal, HPReal>> previous; // (log N, log|err|)
    for (unsigned long n : ns) {
        ReportRow row;
        row.inputs = {{"kind", std::string(to_string(kind))}, {"N", std::to_string(n)}};
        const HPReal log_n = log(HPReal(n, p));
        HPReal value(p), reference(p), factor(1L, p);
        if (kind == ConvergenceKind::evenzeta) {
            row.inputs.emplace_back("m", std::to_string(m));
            const EvenZetaDerivation step = even_zeta_derivation(m, n, p);
            value = step.leading;
            reference = step.exact;
            factor = HPReal(n, p) / log_n;
            row.extras.emplace_back("tower_value", step.finite_value.to_string());
        } else if (kind == ConvergenceKind::zeta2finite) {
            value = zeta2_finite(n, p);
            const HPReal pi = pi_const(p);
            reference = pi * pi / 4L;
            factor = HPReal(n, p) / log_n;
        } else {
            const RootEstimate root = find_root(GapQuery(n), p);
            value = HPReal(1L, p) / root.value;
            reference = log_n;
            if (kind == ConvergenceKind::theorem2) {
                const HPReal pi = pi_const(p);
                reference += euler_gamma(p) + pi * pi / 6L / log_n;
                factor = log_n * log_n;
            }
            row.extras.emplace_back("alpha", root.value.to_string());
        }
        const HPReal err = abs(value - reference);
        row.value = value.to_string();
        row.reference = reference.to_string();
        row.abs_error = err.to_string();
        row.extras.emplace_back("normalized_error", (err * factor).to_string());
        if (!err.is_zero()) {
            const HPReal log_err = log(err);
            if (previous)
                row.extras.emplace_back("observed_exponent",
                                        ((log_err - previous->second) / (log_n - previous->first)).to_string(6));
            previous.emplace(log_n, log_err);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace zetapoly

#endif
