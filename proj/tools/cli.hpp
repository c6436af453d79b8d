#ifndef ZETAPOLY_TOOLS_CLI_HPP
#define ZETAPOLY_TOOLS_CLI_HPP

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <zetapoly/zetapoly.hpp>

namespace zetapoly::cli {

enum ExitCode : int { ok = 0, failed_checks = 1, domain_error = 2, convergence_error = 3, usage_error = 64 };

inline std::string render_json(const Report& report) {
    nlohmann::ordered_json doc;
    doc["tool_version"] = report.tool_version;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.config)
        config[k] = v;
    doc["config"] = config;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const ReportRow& row : report.rows) {
        nlohmann::ordered_json r;
        nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
        for (const auto& [k, v] : row.inputs)
            inputs[k] = v;
        r["inputs"] = inputs;
        r["value"] = row.value;
        if (row.reference)
            r["reference"] = *row.reference;
        if (row.abs_error)
            r["abs_error"] = *row.abs_error;
        for (const auto& [k, v] : row.extras)
            r[k] = v;
        rows.push_back(std::move(r));
    }
    doc["rows"] = rows;
    return doc.dump(2) + "\n";
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

inline void add_key(std::vector<std::string>& keys, const std::string& k) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end())
        keys.push_back(k);
}

inline std::string lookup(const Fields& fields, const std::string& key) {
    for (const auto& [k, v] : fields)
        if (k == key)
            return v;
    return "";
}

} // namespace detail

/// Columns: input keys, value, reference, abs_error, extra keys; each key set in first-seen order.
inline std::string render_csv(const Report& report) {
    std::vector<std::string> input_keys, extra_keys;
    for (const ReportRow& row : report.rows) {
        for (const auto& kv : row.inputs)
            detail::add_key(input_keys, kv.first);
        for (const auto& kv : row.extras)
            detail::add_key(extra_keys, kv.first);
    }
    std::ostringstream out;
    std::vector<std::string> header = input_keys;
    header.insert(header.end(), {"value", "reference", "abs_error"});
    header.insert(header.end(), extra_keys.begin(), extra_keys.end());
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << detail::csv_field(header[i]);
    out << "\n";
    for (const ReportRow& row : report.rows) {
        std::vector<std::string> cells;
        for (const auto& k : input_keys)
            cells.push_back(detail::lookup(row.inputs, k));
        cells.push_back(row.value);
        cells.push_back(row.reference.value_or(""));
        cells.push_back(row.abs_error.value_or(""));
        for (const auto& k : extra_keys)
            cells.push_back(detail::lookup(row.extras, k));
        for (std::size_t i = 0; i < cells.size(); ++i)
            out << (i ? "," : "") << detail::csv_field(cells[i]);
        out << "\n";
    }
    return out.str();
}

/// "re,im" or "re" into a complex number.
inline HPComplex parse_complex(const std::string& text, Precision p) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        return HPComplex(HPReal::parse(text, p));
    return HPComplex(HPReal::parse(text.substr(0, comma), p), HPReal::parse(text.substr(comma + 1), p));
}

/// "a:re[:im],..." into a residue table.
inline CharacterTable parse_character(const std::string& text, Precision p) {
    CharacterTable chi;
    std::stringstream entries(text);
    std::string entry;
    while (std::getline(entries, entry, ',')) {
        std::vector<std::string> parts;
        std::stringstream fields(entry);
        std::string f;
        while (std::getline(fields, f, ':'))
            parts.push_back(f);
        if (parts.size() < 2 || parts.size() > 3)
            throw InputError("character entry '" + entry + "' is not a:re or a:re:im");
        long residue = 0;
        try {
            std::size_t used = 0;
            residue = std::stol(parts[0], &used);
            if (used != parts[0].size())
                throw std::invalid_argument(parts[0]);
        } catch (const std::logic_error&) {
            throw InputError("bad residue in character entry '" + entry + "'");
        }
        HPComplex v(HPReal::parse(parts[1], p), parts.size() == 3 ? HPReal::parse(parts[2], p) : HPReal(p));
        if (!chi.emplace(residue, std::move(v)).second)
            throw InputError("residue " + parts[0] + " listed twice");
    }
    if (chi.empty())
        throw InputError("empty character table");
    return chi;
}

struct Options {
    unsigned precision_bits = 128;
    std::string format = "json";
    std::string output;

    unsigned long alpha_n = 0, alpha_gap = 0;

    unsigned expansion_order = 4;
    bool expansion_fit = false;
    unsigned fit_j = 4;
    std::string fit_l = "1000";

    std::string table_name;
    unsigned table_max_m = 0;

    unsigned zeta_even_n = 0;
    long zeta_k = 0;
    bool zeta_finite = false;
    unsigned long zeta_finite_n = 0;

    unsigned long theta_n = 0;
    unsigned theta_m = 0;
    std::string theta_z;

    std::string prog_t;
    long prog_k = 2;
    unsigned long prog_m = 100000;

    long lf_modulus = 0;
    std::string lf_chi;
    long lf_k = 0;
    unsigned long lf_m = 10000;

    std::string conv_kind;
    std::vector<unsigned long> conv_ns;
    unsigned conv_m = 2;

    int verify_criterion = 0;
};

namespace detail {

inline ReportRow alpha_row(const Options& o, Precision p) {
    const RootEstimate r = find_root(GapQuery(o.alpha_n, o.alpha_gap), p);
    ReportRow row;
    row.inputs = {{"N", std::to_string(o.alpha_n)}, {"gap", std::to_string(o.alpha_gap)}};
    row.value = r.value.to_string();
    row.extras = {{"residual", r.residual.to_string()}, {"iterations", std::to_string(r.iterations)}};
    return row;
}

inline std::vector<ReportRow> expansion_rows(const Options& o, Precision p) {
    std::vector<ReportRow> rows;
    if (o.expansion_fit) {
        const HPReal big_l = HPReal::parse(o.fit_l, p);
        const HPReal fit = empirical_coefficient_fit(o.fit_j, big_l, p);
        const ConstantBinding binding = default_binding(4, p);
        auto fit_row = [&](const std::string& variant, const SymbolicConstantPoly& c) {
            const HPReal ref = c.evaluate(binding, p);
            ReportRow row;
            row.inputs = {{"j", std::to_string(o.fit_j)}, {"L", o.fit_l}, {"variant", variant}};
            row.value = fit.to_string();
            row.reference = ref.to_string();
            row.abs_error = abs(fit - ref).to_string();
            row.extras = {{"polynomial", c.to_string()}};
            rows.push_back(std::move(row));
        };
        fit_row("reversion", expansion_coefficients(o.fit_j).c(o.fit_j));
        if (o.fit_j == 4)
            fit_row("inhomogeneous", inhomogeneous_c4_candidate());
        return rows;
    }
    const FormalSeries s = expansion_coefficients(o.expansion_order);
    const ConstantBinding binding = default_binding_for_order(o.expansion_order, p);
    auto add = [&](unsigned j, const std::string& variant, const SymbolicConstantPoly& c) {
        int weight = 0;
        ReportRow row;
        row.inputs = {{"j", std::to_string(j)}, {"variant", variant}};
        row.value = "c" + std::to_string(j) + " = " + c.to_string();
        row.extras = {{"polynomial", c.to_string()},
                      {"numeric", c.evaluate(binding, p).to_string()},
                      {"weight", c.is_weight_homogeneous(&weight) ? std::to_string(weight) : "inhomogeneous"}};
        rows.push_back(std::move(row));
    };
    for (unsigned j = 1; j <= o.expansion_order; ++j)
        add(j, "reversion", s.c(j));
    if (o.expansion_order >= 4)
        add(4, "inhomogeneous", inhomogeneous_c4_candidate());
    return rows;
}

inline std::vector<ReportRow> table_rows(const Options& o) {
    const auto kind = parse_triangle_kind(o.table_name);
    if (!kind)
        throw InputError("unknown table '" + o.table_name + "'");
    if (o.table_max_m < 1)
        throw DomainError("--max-m must be >= 1");
    const TriangleTable t = make_table(*kind, o.table_max_m);
    std::vector<ReportRow> rows;
    for (long m = 1; m <= static_cast<long>(o.table_max_m); ++m)
        for (long k = 1; k <= m; ++k) {
            ReportRow row;
            row.inputs = {{"name", o.table_name}, {"m", std::to_string(m)}, {"k", std::to_string(k)}};
            row.value = to_fraction_string(t.at(k, m));
            rows.push_back(std::move(row));
        }
    return rows;
}

inline ReportRow zeta_row(const Options& o, Precision p) {
    ReportRow row;
    if (o.zeta_finite) {
        const HPReal s = zeta2_finite(o.zeta_finite_n, p);
        const HPReal pi = pi_const(p);
        const HPReal ref = pi * pi / 4L;
        row.inputs = {{"mode", "finite"}, {"N", std::to_string(o.zeta_finite_n)}};
        row.value = s.to_string();
        row.reference = ref.to_string();
        row.abs_error = abs(s - ref).to_string();
        row.extras = {{"chained_zeta2", zeta_from_odd(2, s / 2L).to_string()}};
    } else if (o.zeta_even_n > 0) {
        const HPReal closed = zeta_even_closed(o.zeta_even_n, p);
        const HPReal summed = zeta_value(2 * static_cast<long>(o.zeta_even_n), p);
        row.inputs = {{"mode", "even"}, {"n", std::to_string(o.zeta_even_n)}};
        row.value = closed.to_string();
        row.reference = summed.to_string();
        row.abs_error = abs(closed - summed).to_string();
    } else {
        row.inputs = {{"mode", "value"}, {"k", std::to_string(o.zeta_k)}};
        row.value = zeta_value(o.zeta_k, p).to_string();
    }
    return row;
}

inline ReportRow theta_row(const Options& o, Precision p) {
    const HPComplex z = parse_complex(o.theta_z, p);
    const HPComplex lhs = theta_lhs(z, o.theta_n, o.theta_m, p);
    const HPComplex rhs = theta_rhs(z, o.theta_n, o.theta_m, p);
    ReportRow row;
    row.inputs = {{"N", std::to_string(o.theta_n)}, {"m", std::to_string(o.theta_m)}, {"z", o.theta_z}};
    row.value = lhs.to_string();
    row.reference = rhs.to_string();
    row.abs_error = abs(lhs - rhs).to_string();
    return row;
}

inline ReportRow progression_row(const Options& o, Precision p) {
    const HPReal t(parse_fraction(o.prog_t), p);
    const HPReal s = two_sided_power_sum(t, o.prog_k, o.prog_m, p);
    ReportRow row;
    row.inputs = {{"t", o.prog_t}, {"k", std::to_string(o.prog_k)}, {"M", std::to_string(o.prog_m)}};
    row.value = s.to_string();
    if (o.prog_k == 2) {
        const HPReal ref = cosecant_square_identity(t, p);
        row.reference = ref.to_string();
        row.abs_error = abs(s - ref).to_string();
    }
    return row;
}

inline ReportRow lfunction_row(const Options& o, Precision p) {
    const CharacterTable chi = parse_character(o.lf_chi, p);
    const HPComplex l = dirichlet_L(o.lf_modulus, chi, o.lf_k, o.lf_m, p);
    ReportRow row;
    row.inputs = {{"modulus", std::to_string(o.lf_modulus)},
                  {"chi", o.lf_chi},
                  {"k", std::to_string(o.lf_k)},
                  {"M", std::to_string(o.lf_m)}};
    row.value = l.to_string();
    row.extras = {{"abs", abs(l).to_string()}};
    return row;
}

inline std::vector<ReportRow> verify_rows(const Options& o, Precision p, bool& all_passed) {
    AcceptanceSuite suite(p);
    std::vector<CheckResult> results;
    if (o.verify_criterion != 0)
        results.push_back(suite.run(o.verify_criterion));
    else
        results = suite.run_all();
    all_passed = true;
    std::vector<ReportRow> rows;
    for (const CheckResult& r : results) {
        all_passed = all_passed && r.passed;
        ReportRow row;
        row.inputs = {{"criterion", std::to_string(r.id)}, {"check", r.title}};
        row.value = r.passed ? "PASS" : "FAIL";
        row.extras = {{"detail", r.detail}};
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace detail

/// Parses argv, runs one subcommand, writes the report. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Critical points of x(x-1)...(x-N), zeta values and roots-of-unity identities", "zetapoly"};
    app.fallthrough();
    app.require_subcommand(1);
    Options o;
    app.add_option("--precision-bits", o.precision_bits, "working precision in bits")
        ->check(CLI::Range(64u, 1u << 20));
    app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", o.output, "write the report to this file instead of stdout");

    auto* alpha = app.add_subcommand("alpha", "critical point of p_N in a gap");
    alpha->add_option("--n", o.alpha_n, "N")->required()->check(CLI::PositiveNumber);
    alpha->add_option("--gap", o.alpha_gap, "gap index g, root lies in (g, g+1)");

    auto* expansion = app.add_subcommand("expansion", "symbolic coefficients of alpha in 1/log N");
    expansion->add_option("--order", o.expansion_order, "number of coefficients")->check(CLI::Range(1u, 12u));
    auto* fit = expansion->add_flag("--fit", o.expansion_fit, "numeric fit of c_j from the truncated relation");
    expansion->add_option("--j", o.fit_j, "coefficient index for --fit")->needs(fit)->check(CLI::Range(2u, 4u));
    expansion->add_option("--L", o.fit_l, "synthetic log N for --fit")->needs(fit);

    auto* table = app.add_subcommand("table", "exact triangle of numbers");
    table->add_option("--name", o.table_name, "stirling1|stirling2|eulerian|b|c")->required();
    table->add_option("--max-m", o.table_max_m, "last row")->required();

    auto* zeta = app.add_subcommand("zeta", "zeta values");
    auto* even = zeta->add_option("--even-n", o.zeta_even_n, "zeta(2n) in closed form")->check(CLI::PositiveNumber);
    auto* finite = zeta->add_flag("--finite", o.zeta_finite, "finite roots-of-unity sum for pi^2/4");
    auto* finite_n = zeta->add_option("--N", o.zeta_finite_n, "N for --finite")->needs(finite);
    finite->needs(finite_n);
    auto* kval = zeta->add_option("--k", o.zeta_k, "zeta(k) for integer k >= 2");
    even->excludes(finite)->excludes(kval);
    finite->excludes(kval);
    zeta->require_option(1, 2);

    auto* theta = app.add_subcommand("theta", "theta-operator tower identity at a point");
    theta->add_option("--N", o.theta_n, "N")->required();
    theta->add_option("--m", o.theta_m, "order")->required();
    theta->add_option("--z", o.theta_z, "point as re,im")->required();

    auto* progression = app.add_subcommand("progression", "two-sided power sum over an arithmetic progression");
    progression->add_option("--t", o.prog_t, "offset as p/q")->required();
    progression->add_option("--k", o.prog_k, "exponent");
    progression->add_option("--M", o.prog_m, "truncation");

    auto* lfunction = app.add_subcommand("lfunction", "Dirichlet L-value from progression sums");
    lfunction->add_option("--modulus", o.lf_modulus, "modulus B")->required();
    lfunction->add_option("--chi", o.lf_chi, "character as a:re[:im],...")->required();
    lfunction->add_option("--k", o.lf_k, "exponent")->required();
    lfunction->add_option("--M", o.lf_m, "truncation");

    auto* convergence = app.add_subcommand("convergence", "residual table along a list of N");
    convergence->add_option("--kind", o.conv_kind, "theorem1|theorem2|zeta2finite|evenzeta")
        ->required()
        ->check(CLI::IsMember({"theorem1", "theorem2", "zeta2finite", "evenzeta"}));
    convergence->add_option("--m", o.conv_m, "tower order for evenzeta (even, >= 2)");
    convergence->add_option("--Ns", o.conv_ns, "comma-separated ascending N")->required()->delimiter(',');

    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    verify->add_option("--criterion", o.verify_criterion, "run a single check 1..13")
        ->check(CLI::Range(1, AcceptanceSuite::count));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    const Precision p(o.precision_bits);
    Report report{std::string(tool_version), {}, {}};
    const std::string sub = app.get_subcommands().front()->get_name();
    report.config = {{"subcommand", sub}, {"precision_bits", std::to_string(o.precision_bits)}, {"format", o.format}};
    if (!o.output.empty())
        report.config.emplace_back("output_path", o.output);

    int status = ok;
    try {
        if (sub == "alpha") {
            report.rows.push_back(detail::alpha_row(o, p));
        } else if (sub == "expansion") {
            report.rows = detail::expansion_rows(o, p);
        } else if (sub == "table") {
            report.rows = detail::table_rows(o);
        } else if (sub == "zeta") {
            report.rows.push_back(detail::zeta_row(o, p));
        } else if (sub == "theta") {
            report.rows.push_back(detail::theta_row(o, p));
        } else if (sub == "progression") {
            report.rows.push_back(detail::progression_row(o, p));
        } else if (sub == "lfunction") {
            report.rows.push_back(detail::lfunction_row(o, p));
        } else if (sub == "convergence") {
            report.rows = convergence_table(*parse_convergence_kind(o.conv_kind), o.conv_ns, p, o.conv_m);
        } else if (sub == "verify") {
            bool all_passed = false;
            report.rows = detail::verify_rows(o, p, all_passed);
            status = all_passed ? ok : failed_checks;
        }
    } catch (const ConvergenceError& e) {
        err << "convergence error: " << e.what() << "\n";
        return convergence_error;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return domain_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return domain_error;
    }

    const std::string text = o.format == "csv" ? render_csv(report) : render_json(report);
    if (o.output.empty()) {
        out << text;
    } else {
        std::ofstream file(o.output, std::ios::binary);
        if (!(file << text)) {
            err << "cannot write " << o.output << "\n";
            return domain_error;
        }
    }
    return status;
}

} // namespace zetapoly::cli

#endif
