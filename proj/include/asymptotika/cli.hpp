#pragma once

// Command-line driver: expand, compare, sweep and convergence subcommands.
// Needs CLI11.hpp and json.hpp on the include path.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "registry.hpp"

namespace asymptotika::cli {

enum ExitCode : int { ok = 0, usage = 1, numerical = 2, partial = 3 };

using json = nlohmann::ordered_json;

/// 17 significant digits, lowercase scientific notation.
inline std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

inline json cjson(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

inline json params_json(const Params& p) {
    json j = json::object();
    for (const auto& [k, v] : p.items()) {
        try {
            j[k] = p.num(k);
        } catch (const usage_error&) {
            j[k] = v;
        }
    }
    return j;
}

inline json terms_json(const EvalReport& r) {
    json a = json::array();
    for (std::size_t k = 0; k < r.size(); ++k) {
        json t;
        t["index"] = k;
        if (k < r.coefficients.size()) t["coefficient"] = cjson(r.coefficients[k]);
        if (k < r.scales.size()) t["scale"] = cjson(r.scales[k]);
        t["term"] = cjson(r.terms[k]);
        t["magnitude"] = r.term_mags[k];
        t["partial_sum"] = cjson(r.partial_sums[k]);
        a.push_back(std::move(t));
    }
    return a;
}

inline json outcome_json(const std::string& method, const Params& p, int n_terms, const Outcome& o) {
    json j;
    j["method"] = method;
    j["params"] = params_json(p);
    j["n_terms"] = n_terms;
    j["value"] = cjson(o.value);
    if (o.has_oracle) {
        j["oracle"] = {{"re", o.oracle.value.real()}, {"im", o.oracle.value.imag()}, {"est_error", o.oracle.est_error}};
        j["error"] = {{"abs", o.abs_err()}, {"rel", o.rel_err()}};
    } else {
        j["oracle"] = nullptr;
        j["error"] = nullptr;
    }
    j["terms"] = terms_json(o.report);
    j["smallest_term_index"] = o.report.smallest_term_index;
    j["terms_used"] = o.report.truncation_index;
    return j;
}

/// Truncate after the smallest nonzero term. Exact zeros (terminating
/// series) never stop the sum early.
inline void truncate_at_smallest(Outcome& o) {
    EvalReport& r = o.report;
    std::size_t best = r.size();
    for (std::size_t k = 0; k < r.size(); ++k)
        if (r.term_mags[k] > 0.0 && (best == r.size() || r.term_mags[k] < r.term_mags[best])) best = k;
    if (best == r.size()) return;
    std::size_t end = best + 1;
    while (end < r.size() && r.term_mags[end] == 0.0) ++end;
    r.truncation_index = end;
    o.value = r.value();
}

/// index, coefficient, scale, magnitude, running sum; then the smallest-term row.
inline std::string term_table(const EvalReport& r) {
    std::ostringstream os;
    os << "index,coefficient_re,coefficient_im,scale_re,scale_im,magnitude,sum_re,sum_im\n";
    for (std::size_t k = 0; k < r.size(); ++k) {
        const cplx c = k < r.coefficients.size() ? r.coefficients[k] : cplx(std::nan(""), std::nan(""));
        const cplx s = k < r.scales.size() ? r.scales[k] : cplx(std::nan(""), std::nan(""));
        os << k << ',' << fmt(c.real()) << ',' << fmt(c.imag()) << ',' << fmt(s.real()) << ',' << fmt(s.imag()) << ','
           << fmt(r.term_mags[k]) << ',' << fmt(r.partial_sums[k].real()) << ',' << fmt(r.partial_sums[k].imag()) << '\n';
    }
    if (r.size() > 0) {
        os << "smallest_term_index," << r.smallest_term_index << '\n';
        os << "terms_used," << r.truncation_index << '\n';
        os << "value," << fmt(r.value().real()) << ',' << fmt(r.value().imag()) << '\n';
        if (r.outside_sector) os << "warning,evaluation point outside the validity sector\n";
    }
    return os.str();
}

inline std::string compare_text(const std::string& method, const Outcome& o) {
    std::ostringstream os;
    os << "method," << method << '\n'
       << "terms_used," << o.report.truncation_index << '\n'
       << "value," << fmt(o.value.real()) << ',' << fmt(o.value.imag()) << '\n'
       << "oracle," << fmt(o.oracle.value.real()) << ',' << fmt(o.oracle.value.imag()) << '\n'
       << "abs_err," << fmt(o.abs_err()) << '\n'
       << "rel_err," << fmt(o.rel_err()) << '\n'
       << "oracle_est_err," << fmt(o.oracle.est_error) << '\n';
    return os.str();
}

inline std::string csv_cell(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    return s;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "axis,value_re,value_im,oracle_re,oracle_im,abs_err,rel_err,oracle_est_err,error\n";
    const double nan = std::nan("");
    for (const auto& r : rows) {
        os << fmt(r.axis);
        if (r.ok) {
            const Outcome& o = r.outcome;
            os << ',' << fmt(o.value.real()) << ',' << fmt(o.value.imag()) << ',' << fmt(o.oracle.value.real()) << ','
               << fmt(o.oracle.value.imag()) << ',' << fmt(o.abs_err()) << ',' << fmt(o.rel_err()) << ','
               << fmt(o.oracle.est_error) << ",\n";
        } else {
            for (int k = 0; k < 7; ++k) os << ',' << fmt(nan);
            os << ',' << csv_cell(r.error) << '\n';
        }
    }
    return os.str();
}

inline std::string fit_text(const std::string& method, const std::string& axis, const ConvergenceFit& f) {
    std::ostringstream os;
    os << "method," << method << '\n'
       << "axis," << axis << '\n'
       << "predicted," << fmt(f.predicted) << '\n'
       << "slope," << fmt(f.slope) << '\n'
       << "intercept," << fmt(f.intercept) << '\n'
       << "r_squared," << fmt(f.r_squared) << '\n'
       << "status," << to_string(f.status) << '\n';
    if (!f.note.empty()) os << "note," << csv_cell(f.note) << '\n';
    os << "axis_value,error,used\n";
    for (const auto& [x, e] : f.points) os << fmt(x) << ',' << fmt(e) << ",1\n";
    for (const auto& [x, e] : f.floor_points) os << fmt(x) << ',' << fmt(e) << ",0\n";
    return os.str();
}

inline json fit_json(const std::string& method, const Params& p, int n_terms, const std::string& axis,
                     const ConvergenceFit& f) {
    json j;
    j["method"] = method;
    j["params"] = params_json(p);
    j["n_terms"] = n_terms;
    j["axis"] = axis;
    j["predicted"] = f.predicted;
    j["slope"] = f.slope;
    j["intercept"] = f.intercept;
    j["r_squared"] = f.r_squared;
    j["status"] = to_string(f.status);
    j["note"] = f.note;
    json pts = json::array(), fl = json::array();
    for (const auto& [x, e] : f.points) pts.push_back({{"axis", x}, {"error", e}});
    for (const auto& [x, e] : f.floor_points) fl.push_back({{"axis", x}, {"error", e}});
    j["points"] = std::move(pts);
    j["floor_points"] = std::move(fl);
    return j;
}

struct Options {
    std::string method;
    std::vector<std::string> params;
    int n_terms = 3;
    double tol = 1e-13;
    std::string grid;
    std::string axis;
    double lock = 0.0;
    std::string out;
    bool json = false;
    bool all_terms = false;
};

inline Params parse_params(const std::vector<std::string>& kv) {
    Params p;
    for (const auto& s : kv) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0) throw usage_error("--param expects k=v, got '" + s + "'");
        p.set(s.substr(0, eq), s.substr(eq + 1));
    }
    return p;
}

inline void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        out.flush();
        return;
    }
    std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
    if (!f) throw usage_error("cannot open output file '" + o.out + "'");
    f << text;
    if (!f) throw numerical_error("write to '" + o.out + "' failed");
}

inline int cmd_expand(const Options& o, std::ostream& out) {
    const MethodDef& m = find_method(o.method);
    const Params p = resolve_params(m, parse_params(o.params));
    Outcome r = m.run(p, o.n_terms, o.tol, false);
    if (!o.all_terms) truncate_at_smallest(r);
    emit(o, o.json ? outcome_json(m.name, p, o.n_terms, r).dump(2) + "\n" : term_table(r.report), out);
    return ok;
}

inline int cmd_compare(const Options& o, std::ostream& out) {
    const MethodDef& m = find_method(o.method);
    const Params p = resolve_params(m, parse_params(o.params));
    Outcome r = m.run(p, o.n_terms, o.tol, true);
    if (!o.all_terms) truncate_at_smallest(r);
    emit(o, o.json ? outcome_json(m.name, p, o.n_terms, r).dump(2) + "\n" : compare_text(m.name, r), out);
    return ok;
}

inline SweepSpec sweep_spec(const Options& o) {
    SweepSpec s;
    s.method = o.method;
    s.fixed = parse_params(o.params);
    s.axis = o.axis;
    s.grid = parse_grid(o.grid);
    s.n_terms = o.n_terms;
    s.tol = o.tol;
    s.lock = o.lock;
    return s;
}

inline int cmd_sweep(const Options& o, std::ostream& out) {
    const std::vector<SweepRow> rows = run_sweep(sweep_spec(o));
    emit(o, sweep_csv(rows), out);
    for (const auto& r : rows)
        if (!r.ok) return partial;
    return ok;
}

inline int cmd_convergence(const Options& o, std::ostream& out) {
    const SweepSpec s = sweep_spec(o);
    if (!s.grid.log) throw usage_error("convergence needs a log grid");
    if (s.grid.n < 4) throw usage_error("convergence needs at least 4 grid points");
    const MethodDef& m = find_method(s.method);
    const std::string axis = s.axis.empty() ? m.axis : s.axis;
    if (axis != m.axis) throw usage_error("convergence axis must be the large parameter '" + m.axis + "'");
    const ConvergenceFit f = fit_convergence(run_sweep(s));
    const Params p = resolve_params(m, s.fixed);
    emit(o, o.json ? fit_json(m.name, p, s.n_terms, axis, f).dump(2) + "\n" : fit_text(m.name, axis, f), out);
    return ok;
}

inline std::string method_list() {
    std::ostringstream os;
    for (const auto& m : registry()) {
        os << m.name << "  (" << m.axis << ")  " << m.summary << "\n   ";
        for (const auto& [k, v] : m.defaults) os << ' ' << k << '=' << v;
        os << '\n';
    }
    return os.str();
}

/// Full driver; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Asymptotic expansions of integrals checked against numerical oracles"};
    app.require_subcommand(1);
    Options o;

    auto common = [&o](CLI::App* c, bool grid) {
        c->add_option("--method", o.method, "method identifier (see 'methods')")->required();
        c->add_option("--param", o.params, "parameter k=v (repeatable)")->allow_extra_args(false);
        c->add_option("--terms", o.n_terms, "number of expansion terms")->check(CLI::NonNegativeNumber);
        c->add_option("--tol", o.tol, "oracle relative tolerance")->check(CLI::PositiveNumber);
        c->add_option("--out", o.out, "write output to this file");
        c->add_flag("--json", o.json, "JSON output");
        if (grid) {
            c->add_option("--grid", o.grid, "lin:a:b:n or log:a:b:n")->required();
            c->add_option("--axis", o.axis, "parameter to sweep (default: the large parameter)");
            c->add_option("--lock", o.lock, "snap grid points to multiples of this period")->check(CLI::NonNegativeNumber);
        }
    };
    CLI::App* expand = app.add_subcommand("expand", "print the term table of an expansion");
    CLI::App* compare = app.add_subcommand("compare", "expansion against the oracle");
    CLI::App* sweep = app.add_subcommand("sweep", "CSV of expansion and oracle over a parameter grid");
    CLI::App* conv = app.add_subcommand("convergence", "fit log error against log of the large parameter");
    CLI::App* methods = app.add_subcommand("methods", "list methods and their default parameters");
    common(expand, false);
    common(compare, false);
    for (CLI::App* c : {expand, compare})
        c->add_flag("--all-terms", o.all_terms, "sum every term instead of stopping at the smallest one");
    common(sweep, true);
    common(conv, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    try {
        if (methods->parsed()) {
            out << method_list();
            return ok;
        }
        if (expand->parsed()) return cmd_expand(o, out);
        if (compare->parsed()) return cmd_compare(o, out);
        if (sweep->parsed()) return cmd_sweep(o, out);
        if (conv->parsed()) return cmd_convergence(o, out);
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const domain_error& e) {
        err << "invalid parameters: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return numerical;
    }
    return usage;
}

}  // namespace asymptotika::cli
