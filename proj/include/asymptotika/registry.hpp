#pragma once

// Named methods with default parameters, evaluated against their oracles;
// parameter grids, sweeps and log-log remainder fits built on top.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "classical.hpp"
#include "error.hpp"
#include "expr.hpp"
#include "oracle.hpp"
#include "oscillatory.hpp"
#include "quadrature.hpp"
#include "types.hpp"
#include "uniform.hpp"

namespace asymptotika {

/// Bad method name, parameter or grid; maps to the usage exit code.
class usage_error : public error {
public:
    using error::error;
};

/// name -> textual value; numbers may be constant expressions such as 1/3 or pi/4.
class Params {
public:
    Params() = default;
    explicit Params(std::map<std::string, std::string> kv) : kv_(std::move(kv)) {}

    void set(const std::string& k, const std::string& v) { kv_[k] = v; }
    void set(const std::string& k, double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        kv_[k] = buf;
    }
    bool has(const std::string& k) const { return kv_.count(k) != 0; }
    const std::map<std::string, std::string>& items() const { return kv_; }

    const std::string& str(const std::string& k) const {
        auto it = kv_.find(k);
        if (it == kv_.end()) throw usage_error("missing parameter '" + k + "'");
        return it->second;
    }

    double num(const std::string& k) const {
        const std::string& s = str(k);
        cplx v;
        try {
            const Expr e = Expr::parse(s);
            if (e.depends_on_t()) throw usage_error("");
            v = e(cplx{});
        } catch (const error&) {
            throw usage_error("parameter '" + k + "' = '" + s + "' is not a real constant");
        }
        if (v.imag() != 0.0 || !std::isfinite(v.real()))
            throw usage_error("parameter '" + k + "' = '" + s + "' is not a real constant");
        return v.real();
    }

    int integer(const std::string& k) const {
        const double v = num(k);
        if (v != std::round(v) || std::abs(v) > 2e9) throw usage_error("parameter '" + k + "' must be an integer");
        return static_cast<int>(v);
    }

    JetProgram program(const std::string& k) const {
        try {
            return parse_program(str(k));
        } catch (const domain_error& e) {
            throw usage_error(std::string("parameter '") + k + "': " + e.what());
        }
    }

private:
    std::map<std::string, std::string> kv_;
};

/// One evaluation of a method at a parameter point.
struct Outcome {
    EvalReport report;
    cplx value{};
    bool has_oracle = false;
    OracleValue oracle{};
    /// Exponent of the first neglected order in the large parameter; NaN when not predicted.
    double predicted_order = std::numeric_limits<double>::quiet_NaN();
    /// Errors should be measured relative to the value.
    bool relative = false;

    double abs_err() const { return has_oracle ? std::abs(value - oracle.value) : std::numeric_limits<double>::quiet_NaN(); }
    double rel_err() const {
        if (!has_oracle) return std::numeric_limits<double>::quiet_NaN();
        const double m = std::abs(oracle.value);
        return m == 0.0 ? abs_err() : abs_err() / m;
    }
};

using MethodRunner = std::function<Outcome(const Params&, int n_terms, double tol, bool with_oracle)>;

struct MethodDef {
    std::string name;
    std::string summary;
    /// Default large parameter (sweep and convergence axis).
    std::string axis;
    std::vector<std::pair<std::string, std::string>> defaults;
    MethodRunner run;
    /// Parameters that only take integer values; sweep points on them are rounded.
    std::vector<std::string> integer_params = {};
};

namespace detail {

inline Outcome from_expansion(const Expansion& e, cplx x) {
    Outcome o;
    o.report = e.evaluate(x);
    o.value = o.report.value();
    o.predicted_order = e.remainder_order;
    o.relative = e.relative_order;
    return o;
}

inline void attach(Outcome& o, const OracleValue& v) {
    o.has_oracle = true;
    o.oracle = v;
}

inline PhaseAmplitudePair phase_pair(const Params& p) {
    return {p.program("phi"), p.program("psi"), p.num("a"), p.num("b")};
}

inline EndpointSingularityProblem endpoint_problem(const Params& p) {
    return {p.program("f"), p.num("alpha"), p.num("beta"), p.num("lambda"), p.num("mu")};
}

inline PoleProblem pole_problem(const Params& p) {
    return {p.program("f"), cplx(p.num("alpha"), p.num("alpha_im")), p.num("omega"), p.num("strip")};
}

inline PoleConvention pole_convention(const Params& p) {
    const std::string& c = p.str("convention");
    if (c == "continuation") return PoleConvention::continuation;
    if (c == "real_line") return PoleConvention::real_line;
    throw usage_error("convention must be continuation or real_line");
}

inline std::vector<MethodDef> build_registry() {
    std::vector<MethodDef> r;

    r.push_back({"expint", "e^z E1(z) = int_0^inf e^(-zt)/(1+t) dt by Watson's lemma", "z", {{"z", "10"}},
                 [](const Params& p, int n, double tol, bool with_oracle) {
                     const double z = p.num("z");
                     Outcome o = from_expansion(expint_expand(n, z), z);
                     if (with_oracle) {
                         IntegrandSpec s;
                         // t = s/z keeps the peak at unit width for every z.
                         s.integrand = [z](double t, double, double) { return cplx(std::exp(-t) / (z + t)); };
                         attach(o, quad_laplace(s, {0.0, inf}, tol));
                     }
                     return o;
                 }});

    r.push_back({"kv", "K_nu(z) from the Watson expansion of its Laplace-type integral", "z", {{"nu", "0.5"}, {"z", "3"}},
                 [](const Params& p, int n, double tol, bool with_oracle) {
                     const double nu = p.num("nu"), z = p.num("z");
                     Outcome o = from_expansion(kv_expand(nu, n, z), z);
                     if (with_oracle) attach(o, bessel_k_ref(nu, z, tol));
                     return o;
                 }});

    r.push_back({"legendre", "P_n(cos theta) for large n", "n", {{"n", "200"}, {"theta", "1"}},
                 [](const Params& p, int n, double, bool with_oracle) {
                     const int deg = p.integer("n");
                     const double theta = p.num("theta");
                     Outcome o = from_expansion(legendre_expand(theta, n, deg), static_cast<double>(deg));
                     if (with_oracle) attach(o, legendre_ref(deg, std::cos(theta)));
                     return o;
                 },
                 {"n"}});

    r.push_back({"laplace", "int_R e^(-z t^2) f(t) dt by Laplace's method", "z", {{"f", "cos(t)"}, {"z", "10"}},
                 [](const Params& p, int n, double tol, bool with_oracle) {
                     const double z = p.num("z");
                     const JetProgram f = p.program("f");
                     Outcome o = from_expansion(laplace_expand(jet_of(f, 0.0, 2 * n + 2), n), z);
                     if (with_oracle) {
                         IntegrandSpec s;
                         s.integrand = [f, z](double t, double, double) {
                             const double g = z * t * t;
                             return g > 745.0 ? cplx{} : std::exp(-g) * value_of(f, t);
                         };
                         attach(o, quad_laplace(s, {-inf, inf}, tol));
                     }
                     return o;
                 }});

    r.push_back({"ibp", "int_a^b e^(i omega phi) psi dt by integration by parts", "omega",
                 {{"phi", "t"}, {"psi", "exp(-t)"}, {"a", "0"}, {"b", "1"}, {"omega", "50"}},
                 [](const Params& p, int n, double tol, bool with_oracle) {
                     const double w = p.num("omega");
                     const PhaseAmplitudePair pp = phase_pair(p);
                     Outcome o = from_expansion(ibp_expand(pp, w, n), w);
                     if (with_oracle) attach(o, ibp_oracle(pp, w, tol));
                     return o;
                 }});

    r.push_back({"bleistein-stationary", "int_a^b e^(i omega t^2) f dt, stationary point at 0, uniform in the endpoints",
                 "omega", {{"f", "exp(t)"}, {"a", "-1"}, {"b", "2"}, {"omega", "40"}},
                 [](const Params& p, int n, double tol, bool with_oracle) {
                     const double w = p.num("omega"), a = p.num("a"), b = p.num("b");
                     const JetProgram f = p.program("f");
                     Outcome o = from_expansion(bleistein_stationary(f, a, b, w, n), w);
                     if (with_oracle) attach(o, stationary_oracle(f, a, b, w, tol));
                     return o;
                 }});

    const std::vector<std::pair<std::string, std::string>> endpoint_defaults = {
        {"f", "exp(-t)"}, {"alpha", "0"}, {"beta", "2"}, {"lambda", "1/2"}, {"mu", "1/3"}, {"omega", "50"}};

    r.push_back({"erdelyi", "algebraic endpoint singularities, separate endpoint expansions", "omega", endpoint_defaults,
                 [](const Params& p, int n, double tol, bool with_oracle) {
                     const double w = p.num("omega");
                     const EndpointSingularityProblem ep = endpoint_problem(p);
                     Outcome o = from_expansion(erdelyi_endpoint(ep, w, n), w);
                     if (with_oracle) attach(o, endpoint_oracle(ep, w, tol));
                     return o;
                 }});

    r.push_back({"bleistein-endpoint", "algebraic endpoint singularities, uniform with 1F1 prefactors", "omega",
                 endpoint_defaults, [](const Params& p, int n, double tol, bool with_oracle) {
                     const double w = p.num("omega");
                     const EndpointSingularityProblem ep = endpoint_problem(p);
                     Outcome o = from_expansion(bleistein_endpoint(ep, w, n), w);
                     if (with_oracle) attach(o, endpoint_oracle(ep, w, tol));
                     return o;
                 }});

    r.push_back({"vdw", "pole near a saddle point, erfc lead term", "omega",
                 {{"f", "1"}, {"alpha", "1"}, {"alpha_im", "0"}, {"omega", "1"}, {"strip", "2"}, {"convention", "continuation"}},
                 [](const Params& p, int n, double tol, bool with_oracle) {
                     const PoleProblem pp = pole_problem(p);
                     const PoleConvention c = pole_convention(p);
                     Outcome o = from_expansion(vdw_expand(pp, n, c), pp.omega);
                     if (with_oracle) attach(o, vdw_oracle(pp, c, tol));
                     return o;
                 }});

    r.push_back({"debruijn", "poles at +-i omega^(-alpha_exp/2) approaching the saddle", "omega",
                 {{"f", "exp(t)"}, {"alpha_exp", "1"}, {"omega", "30"}},
                 [](const Params& p, int n, double tol, bool with_oracle) {
                     const double w = p.num("omega"), ae = p.num("alpha_exp");
                     const JetProgram f = p.program("f");
                     Outcome o = from_expansion(debruijn_expand(f, ae, w, n), w);
                     if (with_oracle) attach(o, debruijn_oracle(f, ae, w, tol));
                     return o;
                 }});

    r.push_back({"airy-bessel", "J_nu(nu z) uniformly through the turning point, n_terms <= 2", "nu", {{"nu", "50"}, {"z", "1"}},
                 [](const Params& p, int n, double, bool with_oracle) {
                     const double nu = p.num("nu"), z = p.num("z");
                     Outcome o;
                     o.report = airy_bessel_j(nu, z, n);
                     o.value = o.report.value();
                     o.relative = true;
                     if (with_oracle) attach(o, bessel_j_ref(nu, nu * z));
                     return o;
                 }});

    r.push_back({"sn", "S_n(z) = sum_{k=1}^n z^k/k, uniform for z up to 1", "n", {{"n", "50"}, {"z", "0.9"}},
                 [](const Params& p, int n, double, bool with_oracle) {
                     const int m = p.integer("n");
                     const double z = p.num("z");
                     Outcome o;
                     o.report = sn_uniform(m, z, n);
                     o.value = o.report.value();
                     if (with_oracle) {
                         const double s = sn_direct(m, z);
                         attach(o, OracleValue{s, 4.0 * eps * std::abs(s) + std::numeric_limits<double>::min(),
                                               static_cast<std::size_t>(m), 0, true});
                     }
                     return o;
                 },
                 {"n"}});

    r.push_back({"lorentzian", "int_R e^(i omega t)/(1+t^2) dt against pi e^(-omega)", "omega", {{"omega", "4"}},
                 [](const Params& p, int n, double tol, bool with_oracle) {
                     const double w = p.num("omega");
                     Outcome o;
                     o.report = summarize(n > 0 ? std::vector<cplx>{pi * std::exp(-w)} : std::vector<cplx>{});
                     o.value = o.report.value();
                     if (with_oracle) {
                         IntegrandSpec s;
                         s.kind = IntegrandKind::oscillatory_halfline;
                         s.phase_slope = 1.0;
                         s.analytic = [w](cplx t) { return std::exp(cplx(0.0, w) * t) / (1.0 + t * t); };
                         s.singularities = {cplx(0.0, 1.0), cplx(0.0, -1.0)};
                         attach(o, quad_oscillatory(s, {-inf, inf}, w, tol));
                     }
                     return o;
                 }});
    return r;
}

}  // namespace detail

inline const std::vector<MethodDef>& registry() {
    static const std::vector<MethodDef> r = detail::build_registry();
    return r;
}

inline const MethodDef& find_method(const std::string& name) {
    for (const auto& m : registry())
        if (m.name == name) return m;
    throw usage_error("unknown method '" + name + "'");
}

/// Defaults of `m` overridden by `given`; unknown names are rejected.
inline Params resolve_params(const MethodDef& m, const Params& given) {
    Params p;
    for (const auto& [k, v] : m.defaults) p.set(k, v);
    for (const auto& [k, v] : given.items()) {
        if (!p.has(k)) throw usage_error("method '" + m.name + "' has no parameter '" + k + "'");
        p.set(k, v);
    }
    return p;
}

// --- grids, sweeps and fits --------------------------------------------------

struct Grid {
    bool log = false;
    double a = 0.0, b = 0.0;
    int n = 0;

    std::vector<double> points() const {
        std::vector<double> x;
        x.reserve(static_cast<std::size_t>(std::max(n, 0)));
        for (int k = 0; k < n; ++k) {
            const double s = n == 1 ? 0.0 : static_cast<double>(k) / (n - 1);
            x.push_back(log ? a * std::pow(b / a, s) : a + (b - a) * s);
        }
        if (n > 0) x.back() = b;
        if (n > 0) x.front() = a;
        return x;
    }
};

/// Parses lin:a:b:n or log:a:b:n.
inline Grid parse_grid(const std::string& text) {
    Grid g;
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t c = text.find(':', start);
        parts.push_back(text.substr(start, c == std::string::npos ? std::string::npos : c - start));
        if (c == std::string::npos) break;
        start = c + 1;
    }
    if (parts.size() != 4 || (parts[0] != "lin" && parts[0] != "log"))
        throw usage_error("grid must look like lin:a:b:n or log:a:b:n, got '" + text + "'");
    g.log = parts[0] == "log";
    Params tmp({{"a", parts[1]}, {"b", parts[2]}, {"n", parts[3]}});
    g.a = tmp.num("a");
    g.b = tmp.num("b");
    g.n = tmp.integer("n");
    if (g.n < 0) throw usage_error("grid size must be nonnegative");
    if (g.n > 1 && g.a == g.b) throw usage_error("grid must be strictly monotone");
    if (g.log && g.n > 0 && !(g.a > 0.0 && g.b > 0.0)) throw usage_error("log grid needs positive end points");
    return g;
}

struct SweepSpec {
    std::string method;
    Params fixed;
    std::string axis;  ///< empty: the method's large parameter
    Grid grid;
    int n_terms = 3;
    double tol = 1e-13;
    /// When positive, every grid point is moved to the nearest positive multiple of `lock`.
    double lock = 0.0;
};

struct SweepRow {
    double axis = 0.0;
    bool ok = false;
    std::string error;
    Outcome outcome;
};

inline std::vector<double> sweep_points(const SweepSpec& s) {
    std::vector<double> x = s.grid.points();
    if (s.lock > 0.0)
        for (double& v : x) v = s.lock * std::max(1.0, std::round(v / s.lock));
    for (std::size_t k = 1; k < x.size(); ++k)
        if ((x[k] - x[k - 1]) * (x[1] - x[0]) <= 0.0) throw usage_error("axis grid is not strictly monotone");
    return x;
}

/// Worker count: hardware concurrency capped by ASYMPTOTIKA_THREADS.
inline unsigned worker_count(std::size_t jobs) {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("ASYMPTOTIKA_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

/// Rows in grid order; per-point failures are recorded, not thrown.
inline std::vector<SweepRow> run_sweep(const SweepSpec& s) {
    const MethodDef& m = find_method(s.method);
    const std::string axis = s.axis.empty() ? m.axis : s.axis;
    Params base = resolve_params(m, s.fixed);
    if (!base.has(axis)) throw usage_error("method '" + m.name + "' has no parameter '" + axis + "' to sweep");
    std::vector<double> x = sweep_points(s);
    if (std::find(m.integer_params.begin(), m.integer_params.end(), axis) != m.integer_params.end())
        for (double& v : x) v = std::round(v);
    std::vector<SweepRow> rows(x.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (std::size_t k = next++; k < x.size(); k = next++) {
            SweepRow& row = rows[k];
            row.axis = x[k];
            try {
                Params p = base;
                p.set(axis, x[k]);
                row.outcome = m.run(p, s.n_terms, s.tol, true);
                row.ok = true;
            } catch (const std::exception& e) {
                row.error = e.what();
            }
        }
    };
    const unsigned nw = worker_count(x.size());
    if (nw <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nw; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return rows;
}

enum class FitStatus { pass, fail, inconclusive };

inline const char* to_string(FitStatus s) {
    switch (s) {
        case FitStatus::pass: return "pass";
        case FitStatus::fail: return "fail";
        case FitStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

struct ConvergenceFit {
    double slope = std::numeric_limits<double>::quiet_NaN();
    double intercept = std::numeric_limits<double>::quiet_NaN();
    double r_squared = std::numeric_limits<double>::quiet_NaN();
    double predicted = std::numeric_limits<double>::quiet_NaN();
    /// (large parameter, error) pairs used in the fit.
    std::vector<std::pair<double, double>> points;
    /// Points dropped because their error sits at the oracle noise floor.
    std::vector<std::pair<double, double>> floor_points;
    FitStatus status = FitStatus::inconclusive;
    std::string note;
};

inline constexpr double slope_tolerance = 0.2;

/// Least-squares line through (log x, log err).
inline void fit_line(ConvergenceFit& f) {
    const double n = static_cast<double>(f.points.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (const auto& [x, e] : f.points) {
        const double lx = std::log(x), ly = std::log(e);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        syy += ly * ly;
    }
    const double vx = sxx - sx * sx / n, vy = syy - sy * sy / n, cxy = sxy - sx * sy / n;
    f.slope = cxy / vx;
    f.intercept = (sy - f.slope * sx) / n;
    f.r_squared = vy > 0.0 ? std::clamp(cxy * cxy / (vx * vy), 0.0, 1.0) : 1.0;
}

/// Fits log|error| against log(axis); axis must be the method's large parameter.
inline ConvergenceFit fit_convergence(const std::vector<SweepRow>& rows) {
    ConvergenceFit f;
    for (const auto& r : rows) {
        if (!r.ok) throw numerical_error("convergence: evaluation failed at " + std::to_string(r.axis) + ": " + r.error);
        if (!r.outcome.has_oracle) throw usage_error("convergence: method has no oracle");
        if (!(r.axis > 0.0)) throw usage_error("convergence: axis values must be positive");
        if (std::isnan(f.predicted)) f.predicted = r.outcome.predicted_order;
        const double err = r.outcome.relative ? r.outcome.rel_err() : r.outcome.abs_err();
        // Below this the measured error is oracle noise rather than truncation error.
        const double abs_floor = std::max(10.0 * r.outcome.oracle.est_error,
                                          64.0 * eps * std::max(std::abs(r.outcome.value), std::abs(r.outcome.oracle.value)));
        const double floor = r.outcome.relative ? abs_floor / std::max(std::abs(r.outcome.oracle.value), 1e-300) : abs_floor;
        if (!(err > floor)) f.floor_points.emplace_back(r.axis, err);
        else f.points.emplace_back(r.axis, err);
    }
    if (f.points.size() < 4) {
        f.status = FitStatus::inconclusive;
        f.note = "fewer than 4 points above the oracle noise floor";
        return f;
    }
    fit_line(f);
    if (std::isnan(f.predicted)) {
        f.status = FitStatus::inconclusive;
        f.note = "method has no predicted order";
    } else {
        f.status = std::abs(f.slope - f.predicted) <= slope_tolerance ? FitStatus::pass : FitStatus::fail;
    }
    return f;
}

}  // namespace asymptotika
