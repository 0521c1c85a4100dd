#pragma once

// Stationary-phase type expansions of int e^(i omega phi(t)) psi(t) dt:
// integration by parts, Bleistein's method at an interior stationary point,
// Erdelyi's endpoint-singularity expansion and its uniform 1F1 variant.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "error.hpp"
#include "expansion.hpp"
#include "jet.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"
#include "types.hpp"

namespace asymptotika {

/// int_a^b e^(i omega phi(t)) psi(t) dt with phi real on [a, b].
struct PhaseAmplitudePair {
    JetProgram phi;
    JetProgram psi;
    double a = 0.0;
    double b = 1.0;
};

/// int_alpha^beta e^(i omega t) (t-alpha)^(lambda-1) (beta-t)^(mu-1) f(t) dt.
struct EndpointSingularityProblem {
    JetProgram f;
    double alpha = 0.0;
    double beta = 1.0;
    cplx lambda = 1.0;
    cplx mu = 1.0;
};

/// Number of sample intervals used to look for sign changes of phi'.
inline int stationary_grid = 256;

namespace detail {

inline double phase_slope_at(const JetProgram& phi, double t) { return phi(Jet::variable(t, 1))[1].real(); }

inline void check_no_stationary_point(const PhaseAmplitudePair& p, int grid) {
    double prev = phase_slope_at(p.phi, p.a);
    for (int k = 0; k <= grid; ++k) {
        const double t = k == grid ? p.b : p.a + (p.b - p.a) * k / grid;
        const double d = phase_slope_at(p.phi, t);
        if (d == 0.0 || (k > 0 && (d > 0.0) != (prev > 0.0))) {
            char buf[200];
            std::snprintf(buf, sizeof buf,
                          "ibp_expand: phi' vanishes or changes sign near t = %.6g; use bleistein_stationary", t);
            throw stationary_point_error(buf);
        }
        prev = d;
    }
}

inline void check_endpoint_problem(const EndpointSingularityProblem& p, const char* who) {
    if (!(p.alpha < p.beta)) throw domain_error(std::string(who) + ": need alpha < beta");
    if (p.lambda.real() <= 0.0 || p.mu.real() <= 0.0)
        throw domain_error(std::string(who) + ": need Re lambda > 0 and Re mu > 0");
}

}  // namespace detail

/// Endpoint series of int_a^b e^(i omega phi) psi dt when phi' has no zero on [a, b].
inline Expansion ibp_expand(const PhaseAmplitudePair& p, double omega, int n_terms) {
    if (!(p.a < p.b)) throw domain_error("ibp_expand: need a < b");
    if (n_terms < 0) throw domain_error("ibp_expand: negative term count");
    detail::check_no_stationary_point(p, stationary_grid);
    const int K = n_terms + 2;
    Expansion e;
    e.name = "ibp";
    e.large_parameter = "omega";
    e.param = omega;
    e.n_terms = n_terms;
    e.remainder_order = -(n_terms + 1.0);
    auto endpoint = [&](double c, double sign, const char* label) {
        const Jet t = Jet::variable(c, K);
        const Jet dphi = differentiate(p.phi(t));
        Jet psi = p.psi(t).truncated(K - 1);
        Stream s;
        s.label = label;
        s.prefactor_tag = "exp(i omega phi)/phi'";
        const cplx phic = p.phi(Jet::variable(c, 0))[0];
        const cplx d0 = dphi[0];
        s.bindings = {{"t", c}, {"phi", phic}, {"phi'", d0}};
        s.prefactor = [phic, d0, sign](cplx w) { return sign * std::exp(cplx(0.0, 1.0) * w * phic) / d0; };
        for (int n = 0; n < n_terms; ++n) {
            s.coeffs.push_back(psi[0]);
            if (n + 1 < n_terms) psi = -differentiate(psi / dphi.truncated(psi.order()));
        }
        s.scale = [](int n, cplx w) { return std::pow(cplx(0.0, 1.0) * w, -(n + 1)); };
        e.streams.push_back(std::move(s));
    };
    endpoint(p.b, 1.0, "b");
    endpoint(p.a, -1.0, "a");
    return e;
}

namespace detail {

/// Jet of f_n at 0 for the stationary-point recursion f_{n+1} = -(d/dt)(f_n(t) - f_n(0))/t.
inline Jet stationary_step_at_zero(const Jet& fn) { return -differentiate(remove_zero(fn)); }

/// The same recursion at an anchor c != 0 given f_n(0).
inline Jet stationary_step_at(const Jet& fn, cplx fn0) {
    const Jet t = Jet::variable(fn.anchor(), fn.order());
    return -differentiate((fn - fn0) / t);
}

}  // namespace detail

/// Endpoints closer to the stationary point than this are handled from the jet at 0.
inline constexpr double stationary_near = 0.25;

/// int_a^b e^(i omega t^2) f(t) dt with a < 0 < b, keeping Phi_{a,b}(omega) unexpanded.
inline Expansion bleistein_stationary(const JetProgram& f, double a, double b, double omega, int n_terms) {
    if (!(a < 0.0 && 0.0 < b))
        throw domain_error("bleistein_stationary: need a < 0 < b (no interior stationary point: use ibp_expand)");
    if (n_terms < 0) throw domain_error("bleistein_stationary: negative term count");
    const bool near_a = -a < stationary_near, near_b = b < stationary_near;
    const int K0 = 2 * n_terms + 2 + (near_a || near_b ? 40 : 4);
    const int Ke = n_terms + 2;

    std::vector<cplx> f0s, Ca, Cb;
    Jet j0 = f(Jet::variable(0.0, K0));
    Jet ja = near_a ? Jet() : f(Jet::variable(a, Ke));
    Jet jb = near_b ? Jet() : f(Jet::variable(b, Ke));
    for (int n = 0; n < n_terms; ++n) {
        const cplx fn0 = j0[0];
        f0s.push_back(fn0);
        const Jet q0 = remove_zero(j0);
        auto C = [&](double c, bool near, Jet& jc) -> cplx {
            if (near) return q0.evaluate(c);
            return (jc[0] - fn0) / c;
        };
        Ca.push_back(C(a, near_a, ja));
        Cb.push_back(C(b, near_b, jb));
        if (n + 1 < n_terms) {
            if (!near_a) ja = detail::stationary_step_at(ja, fn0);
            if (!near_b) jb = detail::stationary_step_at(jb, fn0);
            j0 = -differentiate(q0);
        }
    }

    Expansion e;
    e.name = "bleistein-stationary";
    e.large_parameter = "omega";
    e.param = omega;
    e.n_terms = n_terms;
    e.remainder_order = -(n_terms + 0.5);
    const cplx I(0.0, 1.0);
    auto endpoint_scale = [I](int n, cplx w) { return std::pow(2.0 * I * w, -(n + 1)); };
    Stream sb{"b", "exp(i omega b^2)", {{"b", b}}, [b, I](cplx w) { return std::exp(I * w * (b * b)); }, Cb, endpoint_scale};
    Stream sa{"a", "-exp(i omega a^2)", {{"a", a}}, [a, I](cplx w) { return -std::exp(I * w * (a * a)); }, Ca, endpoint_scale};
    Stream s0{"0", "fresnel_phi(a,b,omega)", {{"a", a}, {"b", b}},
              [a, b](cplx w) { return fresnel_phi(a, b, w.real()).value; }, f0s,
              [I](int n, cplx w) { return std::pow(2.0 * I * w, -n); }};
    e.streams = {std::move(s0), std::move(sb), std::move(sa)};
    return e;
}

/// Erdelyi's expansion A_N + B_N from the two singular endpoints.
inline Expansion erdelyi_endpoint(const EndpointSingularityProblem& p, double omega, int n_terms) {
    detail::check_endpoint_problem(p, "erdelyi_endpoint");
    if (n_terms < 0) throw domain_error("erdelyi_endpoint: negative term count");
    const int K = n_terms + 1;
    const cplx I(0.0, 1.0);
    const double al = p.alpha, be = p.beta;
    const cplx lam = p.lambda, mu = p.mu;
    // d^n/dt^n [(beta-t)^(mu-1) f] / n! at alpha, and [(t-alpha)^(lambda-1) f] at beta.
    const Jet ta = Jet::variable(al, K);
    const Jet ga = pow(be - ta, mu - 1.0) * p.f(ta);
    const Jet tb = Jet::variable(be, K);
    const Jet gb = pow(tb - al, lam - 1.0) * p.f(tb);

    Stream A, B;
    A.label = "alpha";
    A.prefactor_tag = "exp(i alpha omega)";
    A.bindings = {{"alpha", al}, {"lambda", lam}};
    A.prefactor = [al, I](cplx w) { return std::exp(I * al * w); };
    B.label = "beta";
    B.prefactor_tag = "exp(i beta omega)";
    B.bindings = {{"beta", be}, {"mu", mu}};
    B.prefactor = [be, I](cplx w) { return std::exp(I * be * w); };
    for (int n = 0; n < n_terms; ++n) {
        const double dn = n;
        A.coeffs.push_back(gamma(dn + lam) * std::exp(I * (0.5 * pi) * (dn + lam)) * ga[n]);
        B.coeffs.push_back(gamma(dn + mu) * std::exp(I * (0.5 * pi) * (dn - mu)) * gb[n]);
    }
    A.scale = [lam](int n, cplx w) { return cpow(w, -(static_cast<double>(n) + lam)); };
    B.scale = [mu](int n, cplx w) { return cpow(w, -(static_cast<double>(n) + mu)); };

    Expansion e;
    e.name = "erdelyi";
    e.large_parameter = "omega";
    e.param = omega;
    e.n_terms = n_terms;
    e.remainder_order = -(n_terms + std::min(lam.real(), mu.real()));
    e.streams = {std::move(A), std::move(B)};
    return e;
}

/// Coefficients a_n = f_n(alpha), b_n = (f_n(beta) - f_n(alpha))/(beta - alpha)
/// of the uniform endpoint expansion.
struct EndpointCoefficients {
    std::vector<cplx> a, b;
};

inline EndpointCoefficients bleistein_endpoint_coefficients(const EndpointSingularityProblem& p, int n_terms) {
    detail::check_endpoint_problem(p, "bleistein_endpoint");
    const double al = p.alpha, be = p.beta, L = be - al;
    const bool close = L < 0.25;
    const SplitMethod method = close ? SplitMethod::series : SplitMethod::division;
    const int K = 2 * n_terms + 2 + (close ? 40 : 2);
    Jet fa = p.f(Jet::variable(al, K));
    Jet fb = p.f(Jet::variable(be, K));
    EndpointCoefficients c;
    for (int n = 0; n < n_terms; ++n) {
        const TwoPointSplit sp = two_point_split(fa, fb, al, be, method);
        c.a.push_back(sp.a0);
        c.b.push_back(sp.b0);
        if (n + 1 == n_terms) break;
        // f_{n+1} = -[lambda(beta-t) - mu(t-alpha)] g_n - (t-alpha)(beta-t) g_n'
        auto next = [&](const Jet& g) {
            const int k = g.order() - 1;
            const Jet t = Jet::variable(g.anchor(), k);
            const Jet gt = g.truncated(k);
            return -((p.lambda * (be - t) - p.mu * (t - al)) * gt) - (t - al) * (be - t) * differentiate(g);
        };
        fa = next(sp.g_alpha);
        fb = next(sp.g_beta);
    }
    return c;
}

/// Phi and Psi prefactors (Kummer-function forms) at omega.
inline std::pair<SpecialValue, SpecialValue> bleistein_endpoint_prefactors(const EndpointSingularityProblem& p,
                                                                           double omega) {
    const double L = p.beta - p.alpha;
    const cplx lam = p.lambda, mu = p.mu, I(0.0, 1.0);
    const cplx z = I * (L * omega);
    const cplx ea = std::exp(I * (omega * p.alpha));
    const SpecialValue m0 = kummer_1f1(lam, lam + mu, z);
    const SpecialValue m1 = kummer_1f1(lam + 1.0, lam + mu + 1.0, z);
    const cplx c0 = cpow(L, lam + mu - 1.0) * ea * std::exp(lgamma(lam) + lgamma(mu) - lgamma(lam + mu));
    const cplx c1 = cpow(L, lam + mu) * ea * std::exp(lgamma(lam + 1.0) + lgamma(mu) - lgamma(lam + mu + 1.0));
    return {{c0 * m0.value, m0.method, std::abs(c0) * m0.est_error}, {c1 * m1.value, m1.method, std::abs(c1) * m1.est_error}};
}

/// Phi sum a_n (i omega)^(-n) + Psi sum b_n (i omega)^(-n); Phi and Psi are not expanded.
inline Expansion bleistein_endpoint(const EndpointSingularityProblem& p, double omega, int n_terms) {
    if (n_terms < 0) throw domain_error("bleistein_endpoint: negative term count");
    const EndpointCoefficients c = bleistein_endpoint_coefficients(p, n_terms);
    const cplx I(0.0, 1.0);
    auto scale = [I](int n, cplx w) { return std::pow(I * w, -n); };
    Stream sp{"Phi", "Phi(1F1(lambda;lambda+mu;i(beta-alpha)omega))",
              {{"alpha", p.alpha}, {"beta", p.beta}, {"lambda", p.lambda}, {"mu", p.mu}},
              [p](cplx w) { return bleistein_endpoint_prefactors(p, w.real()).first.value; }, c.a, scale};
    Stream sq{"Psi", "Psi(1F1(lambda+1;lambda+mu+1;i(beta-alpha)omega))",
              {{"alpha", p.alpha}, {"beta", p.beta}, {"lambda", p.lambda}, {"mu", p.mu}},
              [p](cplx w) { return bleistein_endpoint_prefactors(p, w.real()).second.value; }, c.b, scale};
    Expansion e;
    e.name = "bleistein-endpoint";
    e.large_parameter = "omega";
    e.param = omega;
    e.n_terms = n_terms;
    e.remainder_order = -(n_terms + std::min(p.lambda.real(), p.mu.real()));
    e.streams = {std::move(sp), std::move(sq)};
    return e;
}

// --- oracles for the defining integrals ---------------------------------------

inline OracleValue ibp_oracle(const PhaseAmplitudePair& p, double omega, double tol = 1e-13) {
    IntegrandSpec s;
    s.kind = IntegrandKind::oscillatory_finite;
    double slope = 0.0;
    for (int k = 0; k <= 64; ++k) slope = std::max(slope, std::abs(detail::phase_slope_at(p.phi, p.a + (p.b - p.a) * k / 64)));
    s.phase_slope = std::max(slope, 1e-3);
    s.integrand = [p, omega](double t, double, double) {
        return std::exp(cplx(0.0, omega) * value_of(p.phi, t)) * value_of(p.psi, t);
    };
    return quad_oscillatory(s, {p.a, p.b}, omega, tol);
}

inline OracleValue stationary_oracle(const JetProgram& f, double a, double b, double omega, double tol = 1e-13) {
    IntegrandSpec s;
    s.kind = IntegrandKind::oscillatory_finite;
    s.phase_slope = 2.0 * std::max(std::abs(a), std::abs(b));
    s.integrand = [f, omega](double t, double, double) { return std::exp(cplx(0.0, omega * t * t)) * value_of(f, t); };
    return quad_oscillatory(s, {a, b}, omega, tol);
}

inline OracleValue endpoint_oracle(const EndpointSingularityProblem& p, double omega, double tol = 1e-13) {
    IntegrandSpec s;
    s.kind = IntegrandKind::oscillatory_finite;
    s.lambda = p.lambda;
    s.mu = p.mu;
    s.integrand = [p, omega](double t, double, double) { return std::exp(cplx(0.0, omega * t)) * value_of(p.f, t); };
    return quad_oscillatory(s, {p.alpha, p.beta}, omega, tol);
}

}  // namespace asymptotika
