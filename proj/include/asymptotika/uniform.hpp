#pragma once

// Uniform expansions: a pole near a saddle point (error-function leading
// terms), two coalescing saddle points (Airy leading terms) and the partial
// sums S_n(z) of the logarithm series.

#include <array>
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

// --- pole near a saddle point -------------------------------------------------

/// (1/(2 pi i)) int_R e^(-omega t^2) f(t)/(t - i alpha) dt with f analytic in |Im t| <= strip.
struct PoleProblem {
    JetProgram f;
    cplx alpha = 1.0;
    double omega = 1.0;
    double strip = 2.0;
};

enum class PoleConvention {
    continuation,  ///< analytic continuation from Re alpha > 0 (contour passes below the pole)
    real_line,     ///< integral along the real line; principal value when the pole lies on it
};

/// Maclaurin coefficients c_0..c_K of g(t) = (f(t) - f(i alpha))/(t - i alpha).
inline std::vector<cplx> vdw_coefficients(const JetProgram& f, cplx alpha, int K) {
    const cplx ia = cplx(0.0, 1.0) * alpha;
    std::vector<cplx> c(static_cast<std::size_t>(K) + 1);
    if (std::abs(alpha) < 0.5) {
        // c_m = sum_{j>m} f_j (i alpha)^(j-1-m)
        const int M = K + 60;
        const Jet fj = f(Jet::variable(0.0, M));
        for (int m = 0; m <= K; ++m) {
            cplx s = 0.0;
            for (int j = M; j > m; --j) s = s * ia + fj[j];
            c[static_cast<std::size_t>(m)] = s;
        }
        return c;
    }
    const Jet t = Jet::variable(0.0, K);
    const Jet g = (f(t) - value_of(f, ia)) / (t - ia);
    for (int m = 0; m <= K; ++m) c[static_cast<std::size_t>(m)] = g[m];
    return c;
}

/// 1/2 f(i alpha) e^(omega alpha^2) erfc(alpha sqrt(omega)) + (2i sqrt(pi omega))^(-1) sum (1/2)_n c_2n omega^(-n).
inline Expansion vdw_expand(const PoleProblem& p, int n_terms, PoleConvention conv = PoleConvention::continuation) {
    if (!(std::abs(p.alpha) < p.strip)) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "vdw_expand: pole i*alpha with |alpha| = %.6g outside the strip |Im t| < %.6g",
                      std::abs(p.alpha), p.strip);
        throw domain_error(buf);
    }
    if (n_terms < 0) throw domain_error("vdw_expand: negative term count");
    const cplx I(0.0, 1.0);
    const cplx alpha = p.alpha;
    const cplx fia = value_of(p.f, I * alpha);
    const std::vector<cplx> c = vdw_coefficients(p.f, alpha, 2 * std::max(n_terms, 1));

    Expansion e;
    e.name = "vdw";
    e.large_parameter = "omega";
    e.param = p.omega;
    e.n_terms = n_terms;
    e.remainder_order = -(n_terms + 0.5);

    // Leading erfc term carried as the n = 0 part of its own stream.
    double residue_weight = 0.0;
    if (conv == PoleConvention::real_line) {
        if (alpha.real() < 0.0) residue_weight = 1.0;
        else if (alpha.real() == 0.0) residue_weight = 0.5;
    }
    Stream lead;
    lead.label = "pole";
    lead.prefactor_tag = "1/2 f(i alpha) erfcx(alpha sqrt(omega))";
    lead.bindings = {{"alpha", alpha}, {"f(i alpha)", fia}};
    lead.prefactor = [alpha, fia, residue_weight](cplx w) {
        cplx v = 0.5 * fia * erfcx(alpha * std::sqrt(w)).value;
        if (residue_weight != 0.0) v -= residue_weight * std::exp(w * alpha * alpha) * fia;
        return v;
    };
    lead.coeffs = {1.0};
    lead.scale = [](int, cplx) { return cplx(1.0); };

    Stream series;
    series.label = "saddle";
    series.prefactor_tag = "1/(2i sqrt(pi omega))";
    series.prefactor = [I](cplx w) { return 1.0 / (2.0 * I * std::sqrt(pi * w)); };
    for (int k = 0; k < n_terms; ++k)
        series.coeffs.push_back(pochhammer(0.5, static_cast<unsigned>(k)) * c[static_cast<std::size_t>(2 * k)]);
    series.scale = [](int k, cplx w) { return std::pow(w, -k); };
    e.streams = {std::move(lead), std::move(series)};
    return e;
}

/// Reference value of the pole integral in the given convention.
inline OracleValue vdw_oracle(const PoleProblem& p, PoleConvention conv = PoleConvention::continuation,
                              double tol = 1e-13) {
    const cplx I(0.0, 1.0);
    const cplx ia = I * p.alpha;
    const double w = p.omega;
    // Continuation: integrate along Im t = -c with the pole kept above the path.
    double c = 0.0;
    if (conv == PoleConvention::continuation && p.alpha.real() < 0.3) {
        c = std::min(0.3 - p.alpha.real(), 0.5 * p.strip);
        c = std::min(c, std::sqrt(4.0 / w));
        if (p.alpha.real() + c <= 0.0) throw domain_error("vdw_oracle: pole too far below the real axis for the shifted path");
    }
    if (conv == PoleConvention::real_line && p.alpha.real() == 0.0)
        throw domain_error("vdw_oracle: principal value on the real line is not supported by the oracle");
    auto integrand = [&](double x) -> cplx {
        const cplx t(x, -c);
        const cplx gauss = std::exp(-w * t * t);
        if (gauss == cplx{}) return cplx{};
        return gauss * value_of(p.f, t) / (t - ia);
    };
    QuadOptions o;
    o.rel_tol = tol;
    OracleValue r = quad(std::function<cplx(double)>(integrand), -inf, inf, o);
    r.value /= 2.0 * pi * I;
    r.est_error /= 2.0 * pi;
    return r;
}

/// De Bruijn's coefficients g_k(beta) of g in f(t) = a0 + b0 t + (beta^2 + t^2) g(t).
inline std::vector<cplx> debruijn_g(const JetProgram& f, double beta, int K) {
    std::vector<cplx> g(static_cast<std::size_t>(K) + 1);
    const double mb2 = -beta * beta;
    if (beta < 0.5) {
        const int M = K + 80;
        const Jet fj = f(Jet::variable(0.0, M));
        for (int k = 0; k <= K; ++k) {
            // g_k = sum_{j>=1} f_{k+2j} (-beta^2)^(j-1)
            cplx s = 0.0;
            for (int j = (M - k) / 2; j >= 1; --j) s = s * mb2 + fj[k + 2 * j];
            g[static_cast<std::size_t>(k)] = s;
        }
        return g;
    }
    const cplx I(0.0, 1.0);
    const cplx fp = value_of(f, I * beta), fm = value_of(f, -I * beta);
    const cplx a0 = 0.5 * (fp + fm), b0 = (fp - fm) / (2.0 * I * beta);
    const Jet t = Jet::variable(0.0, K);
    const Jet q = (f(t) - a0 - b0 * t) / (beta * beta + t * t);
    for (int k = 0; k <= K; ++k) g[static_cast<std::size_t>(k)] = q[k];
    return g;
}

/// c_k(beta) = g_2k(beta) (1/2)_k.
inline std::vector<cplx> debruijn_coefficients(const JetProgram& f, double beta, int n) {
    const std::vector<cplx> g = debruijn_g(f, beta, 2 * std::max(n, 1));
    std::vector<cplx> c;
    for (int k = 0; k < n; ++k) c.push_back(g[static_cast<std::size_t>(2 * k)] * pochhammer(0.5, static_cast<unsigned>(k)));
    return c;
}

/// beta^2 int_R e^(-omega t^2) f(t)/(beta^2 + t^2) dt with beta = omega^(-alpha_exp/2).
inline Expansion debruijn_expand(const JetProgram& f, double alpha_exp, double omega, int n_terms) {
    if (!(alpha_exp > 0.0)) throw domain_error("debruijn_expand: alpha_exp must be positive");
    if (!(omega > 0.0)) throw domain_error("debruijn_expand: omega must be positive");
    if (n_terms < 0) throw domain_error("debruijn_expand: negative term count");
    const double beta = std::pow(omega, -0.5 * alpha_exp);
    const cplx I(0.0, 1.0);
    const cplx a0 = 0.5 * (value_of(f, I * beta) + value_of(f, -I * beta));

    Expansion e;
    e.name = "debruijn";
    e.large_parameter = "omega";
    e.param = omega;
    e.n_terms = n_terms;
    e.remainder_order = -(n_terms + 0.5);
    Stream lead;
    lead.label = "pole";
    lead.prefactor_tag = "a0 beta pi erfcx(beta sqrt(omega))";
    lead.bindings = {{"beta", beta}, {"a0", a0}};
    // beta is tied to omega at construction; the prefactor is evaluated at that beta.
    lead.prefactor = [a0, beta](cplx w) { return a0 * beta * pi * erfcx(beta * std::sqrt(w)).value; };
    lead.coeffs = {1.0};
    lead.scale = [](int, cplx) { return cplx(1.0); };
    Stream series;
    series.label = "saddle";
    series.prefactor_tag = "beta^2 sqrt(pi/omega)";
    series.bindings = {{"beta", beta}};
    series.prefactor = [beta](cplx w) { return beta * beta * std::sqrt(pi / w); };
    series.coeffs = debruijn_coefficients(f, beta, n_terms);
    series.scale = [](int k, cplx w) { return std::pow(w, -k); };
    e.streams = {std::move(lead), std::move(series)};
    return e;
}

inline OracleValue debruijn_oracle(const JetProgram& f, double alpha_exp, double omega, double tol = 1e-13) {
    const double beta = std::pow(omega, -0.5 * alpha_exp);
    auto integrand = [&](double t) -> cplx {
        const double gauss = std::exp(-omega * t * t);
        if (gauss == 0.0) return cplx{};
        return beta * beta * gauss * value_of(f, t) / (beta * beta + t * t);
    };
    QuadOptions o;
    o.rel_tol = tol;
    return quad(std::function<cplx(double)>(integrand), -inf, inf, o);
}

// --- Airy-type expansion of J_nu(nu z) ---------------------------------------------

struct AiryMap {
    double z = 1.0;
    double zeta = 0.0;
    double g_at_saddle = 0.0;
    /// Coefficients z_n of z = sum z_n eta^n, eta = 2^(-1/3) zeta.
    std::vector<double> eta_series;
};

/// Half-width of the band around z = 1 where the series form is used.
inline constexpr double airy_map_band = 0.05;

namespace detail {

/// zeta as a jet in u = 1 - z^2: zeta = 2^(-2/3) u (3 H(u))^(2/3),
/// H(u) = (artanh(sqrt u) - sqrt u)/u^(3/2) = sum u^k/(2k+3).
inline Jet airy_zeta_of_u(int K) {
    std::vector<cplx> h(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) h[static_cast<std::size_t>(k)] = 3.0 / (2.0 * k + 3.0);
    const Jet H3(0.0, std::move(h));
    const Jet u = Jet::variable(0.0, K);
    return std::pow(2.0, -2.0 / 3.0) * u * pow(H3, 2.0 / 3.0);
}

/// zeta as a jet in w = 1 - z.
inline Jet airy_zeta_of_w(int K) {
    const Jet w = Jet::variable(0.0, K);
    return compose(airy_zeta_of_u(K), w * (2.0 - w));
}

/// g(sqrt zeta)^4 = 4 zeta/(1 - z^2) as a jet in u.
inline Jet airy_g4_of_u(int K) {
    std::vector<cplx> h(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) h[static_cast<std::size_t>(k)] = 3.0 / (2.0 * k + 3.0);
    return 4.0 * std::pow(2.0, -2.0 / 3.0) * pow(Jet(0.0, std::move(h)), 2.0 / 3.0);
}

inline double airy_zeta_direct(double z) {
    if (z <= 1.0) {
        const double s = std::sqrt((1.0 - z) * (1.0 + z));
        const double F = std::log((1.0 + s) / z) - s;
        return std::pow(1.5 * F, 2.0 / 3.0);
    }
    const double D = std::sqrt((z - 1.0) * (z + 1.0)) - std::acos(1.0 / z);
    return -std::pow(1.5 * D, 2.0 / 3.0);
}

}  // namespace detail

/// Coefficients z_n of z(eta), eta = 2^(-1/3) zeta, by reverting zeta(1 - z).
inline std::vector<double> airy_eta_series(int K) {
    const Jet eta = detail::airy_zeta_of_w(K) * std::pow(2.0, -1.0 / 3.0);
    const Jet w = reversion(eta);  // w(eta)
    std::vector<double> out(static_cast<std::size_t>(K) + 1);
    for (int n = 0; n <= K; ++n) out[static_cast<std::size_t>(n)] = (n == 0 ? 1.0 : 0.0) - w[n].real();
    return out;
}

inline AiryMap airy_map(double z) {
    if (!(z > 0.0)) throw domain_error("airy_map: z must be positive");
    AiryMap m;
    m.z = z;
    m.eta_series = airy_eta_series(8);
    if (std::abs(z - 1.0) <= airy_map_band) {
        const int K = 40;
        m.zeta = detail::airy_zeta_of_w(K).evaluate(1.0 - z).real();
        m.g_at_saddle = std::pow(detail::airy_g4_of_u(K).evaluate((1.0 - z) * (1.0 + z)).real(), 0.25);
    } else {
        m.zeta = detail::airy_zeta_direct(z);
        m.g_at_saddle = std::pow(4.0 * m.zeta / ((1.0 - z) * (1.0 + z)), 0.25);
    }
    return m;
}

/// Coefficients of the two-point decomposition of the Airy amplitude:
/// g = alpha0 + beta0 t + (t^2 - zeta) h, h' = alpha1 + beta1 t + ...
struct AiryAmplitudeSplit {
    double zeta = 0.0;
    cplx alpha0, beta0, alpha1, beta1;
};

/// |zeta| up to which g is expanded at t = 0 by a Cauchy integral.
inline constexpr double airy_cauchy_zone = 0.5;

namespace detail {

inline cplx airy_phi(double z, cplx s) { return z * std::sinh(s) - s; }

/// Real solution s of z sinh s - s = target on the increasing branch.
inline double airy_real_root(double z, double target) {
    double lo = z < 1.0 ? std::acosh(1.0 / z) : 0.0;
    double hi = lo + 1.0;
    while (airy_phi(z, hi).real() < target) hi = lo + 2.0 * (hi - lo);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (airy_phi(z, mid).real() < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Maclaurin coefficients of g(t) = ds/dt by a trapezoidal Cauchy integral on |t| = r.
inline std::vector<cplx> airy_g_maclaurin(double z, double zeta, int K, double r = 1.2, int M = 128) {
    const int sub = 16;
    const cplx I(0.0, 1.0);
    auto target = [zeta](cplx t) { return t * t * t / 3.0 - zeta * t; };
    cplx s = airy_real_root(z, target(cplx(r)).real());
    auto newton = [&](cplx t) {
        for (int it = 0; it < 60; ++it) {
            const cplx d = (airy_phi(z, s) - target(t)) / (z * std::cosh(s) - 1.0);
            s -= d;
            if (std::abs(d) < 1e-15 * (1.0 + std::abs(s))) break;
        }
    };
    std::vector<cplx> gs(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j) {
        // March along the circle from the previous node so s stays on one branch.
        for (int q = j == 0 ? sub : 1; q <= sub; ++q) newton(r * std::exp(I * (2.0 * pi * (j - 1.0 + double(q) / sub) / M)));
        const cplx t = r * std::exp(I * (2.0 * pi * j / M));
        gs[static_cast<std::size_t>(j)] = (t * t - zeta) / (z * std::cosh(s) - 1.0);
    }
    std::vector<cplx> c(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        cplx acc = 0.0;
        for (int j = 0; j < M; ++j) acc += gs[static_cast<std::size_t>(j)] * std::exp(-I * (2.0 * pi * j * k / M));
        c[static_cast<std::size_t>(k)] = acc / static_cast<double>(M) * std::pow(r, -k);
    }
    return c;
}

/// Jet of g(t) = ds/dt at the saddle t0 = +-sqrt(zeta), s0 the matching saddle of phi.
inline Jet airy_g_at_saddle(double z, cplx t0, cplx s0, int K) {
    // phi(s0 + sigma) - phi(s0) = sigma^2 Q(sigma); t-side: tau^2 (t0 + tau/3).
    const Jet sv = Jet::variable(s0, K + 2);
    const Jet ph = z * sinh(sv) - sv;
    std::vector<cplx> q(ph.coeffs().begin() + 2, ph.coeffs().end());
    const Jet Q(0.0, std::move(q));
    const cplx Q0 = Q[0];
    cplx k = std::sqrt(t0 / Q0);
    if (k.real() < 0.0) k = -k;
    const Jet sigma = Jet::variable(0.0, K);
    const Jet R = sigma * sqrt(Q / Q0);
    const Jet tau = Jet::variable(0.0, K);
    const Jet W = k * tau * sqrt(1.0 + tau / (3.0 * t0));
    const Jet sig_of_tau = compose(reversion(R), W);
    return differentiate(sig_of_tau).reanchored(t0);
}

}  // namespace detail

inline AiryAmplitudeSplit airy_amplitude_split(double z, double zeta) {
    AiryAmplitudeSplit out;
    out.zeta = zeta;
    if (std::abs(zeta) <= airy_cauchy_zone) {
        const int K = 40;
        const std::vector<cplx> g = detail::airy_g_maclaurin(z, zeta, K);
        auto even_odd = [zeta](const std::vector<cplx>& c, int K2, cplx& ev, cplx& od) {
            ev = 0.0;
            od = 0.0;
            for (int m = K2 / 2; m >= 0; --m) {
                if (2 * m <= K2) ev = ev * zeta + c[static_cast<std::size_t>(2 * m)];
                if (2 * m + 1 <= K2) od = od * zeta + c[static_cast<std::size_t>(2 * m + 1)];
            }
        };
        even_odd(g, K, out.alpha0, out.beta0);
        // h_k = sum_{j>=1} g_{k+2j} zeta^(j-1); g1 = h'
        std::vector<cplx> h(static_cast<std::size_t>(K) + 1, 0.0);
        for (int k = 0; k <= K; ++k) {
            cplx s = 0.0;
            for (int j = (K - k) / 2; j >= 1; --j) s = s * zeta + g[static_cast<std::size_t>(k + 2 * j)];
            h[static_cast<std::size_t>(k)] = s;
        }
        std::vector<cplx> g1(static_cast<std::size_t>(K), 0.0);
        for (int k = 0; k < K; ++k) g1[static_cast<std::size_t>(k)] = static_cast<double>(k + 1) * h[static_cast<std::size_t>(k + 1)];
        even_odd(g1, K - 1, out.alpha1, out.beta1);
        return out;
    }
    const int K = 10;
    const cplx rz = std::sqrt(cplx(zeta));
    const cplx sp = z < 1.0 ? cplx(std::acosh(1.0 / z)) : cplx(0.0, std::acos(1.0 / z));
    const Jet ga = detail::airy_g_at_saddle(z, rz, sp, K);
    const Jet gb = detail::airy_g_at_saddle(z, -rz, -sp, K);
    // g = a0 + b0 (t - a) + (t - a)(b - t) G with a = sqrt(zeta), b = -sqrt(zeta); h = -G.
    const TwoPointSplit s0 = two_point_split(ga, gb, rz, -rz, SplitMethod::division);
    out.beta0 = s0.b0;
    out.alpha0 = s0.a0 - s0.b0 * rz;
    const Jet g1a = -differentiate(s0.g_alpha), g1b = -differentiate(s0.g_beta);
    out.beta1 = (g1b[0] - g1a[0]) / (-2.0 * rz);
    out.alpha1 = g1a[0] - out.beta1 * rz;
    return out;
}

/// J_nu(nu z) ~ g(sqrt zeta) [Ai(zeta nu^(2/3)) nu^(-1/3) A_0 + Ai'(zeta nu^(2/3)) nu^(-5/3) B_0].
/// Term 0 is the Ai term, term 1 the Ai' term.
inline EvalReport airy_bessel_j(double nu, double z, int n_terms) {
    if (n_terms < 0 || n_terms > 2) throw domain_error("airy_bessel_j: n_terms must be 0, 1 or 2");
    if (!(nu > 0.0)) throw domain_error("airy_bessel_j: nu must be positive");
    const AiryMap m = airy_map(z);
    const double x = m.zeta * std::pow(nu, 2.0 / 3.0);
    std::vector<cplx> terms;
    const AiryAmplitudeSplit sp = n_terms > 0 ? airy_amplitude_split(z, m.zeta) : AiryAmplitudeSplit{};
    if (n_terms >= 1) terms.push_back(m.g_at_saddle * airy_ai(x).value * std::pow(nu, -1.0 / 3.0));
    if (n_terms >= 2) terms.push_back(sp.beta1.real() * airy_ai_prime(x).value * std::pow(nu, -5.0 / 3.0));
    EvalReport r = summarize(std::move(terms));
    if (n_terms >= 1) {
        r.coefficients.push_back(1.0);
        r.scales.push_back(m.g_at_saddle * std::pow(nu, -1.0 / 3.0));
    }
    if (n_terms >= 2) {
        r.coefficients.push_back(sp.beta1.real() / m.g_at_saddle);
        r.scales.push_back(m.g_at_saddle * std::pow(nu, -5.0 / 3.0));
    }
    r.outside_sector = nu < 5.0;
    return r;
}

// --- partial sums of the logarithm series ----------------------------------------

namespace detail {

/// Jet of B(u) = 1/(e^u - 1) - 1/u at u = c.
inline Jet log_series_kernel(double c, int K) {
    if (c <= 1.0) {
        const int M = K + 40;
        const Jet u = Jet::variable(0.0, M);
        const Jet E = remove_zero(exp(u) - 1.0, 0.0);  // (e^u - 1)/u
        const Jet B = -(remove_zero(E, 1.0) / E.truncated(M - 1));
        return taylor_shift(B, c).truncated(K);
    }
    const Jet u = Jet::variable(c, K);
    return 1.0 / (exp(u) - 1.0) - 1.0 / u;
}

}  // namespace detail

/// S_n(z) = sum_{k=1}^n z^k/k for 0 < z <= 1 from the pole-split representation:
/// -ln(1-z) - E1(nc) - z^(n+1) sum_k h_k k!/n^(k+1), c = -ln z, h(s) = B(s + c)/z.
inline EvalReport sn_uniform(int n, double z, int n_terms = 4) {
    if (!(z > 0.0 && z <= 1.0)) throw domain_error("sn_uniform: z must lie in (0, 1]");
    if (n < 10) throw domain_error("sn_uniform: n must be at least 10");
    if (n_terms < 0) throw domain_error("sn_uniform: negative term count");
    if (n_terms == 0) return summarize({});
    const double c = -std::log(z);
    const double nd = n;
    const double nc = nd * c;
    cplx lead;
    if (nc <= 2.0) {
        const double ratio = c == 0.0 ? 1.0 : -std::expm1(-c) / c;
        lead = euler_gamma + std::log(nd) - std::log(ratio) - exp_integral_ein(nc).value;
    } else {
        lead = -std::log1p(-z) - exp_integral_e1(nc).value;
    }
    const Jet B = detail::log_series_kernel(c, n_terms);
    std::vector<cplx> terms{lead};
    const double zn1 = std::exp((nd + 1.0) * std::log(z));
    double fact = 1.0;
    for (int k = 0; k + 1 < n_terms; ++k) {
        if (k > 0) fact *= k;
        terms.push_back(-zn1 * (B[k] / z) * fact / std::pow(nd, k + 1));
    }
    return summarize(std::move(terms));
}

/// Direct compensated summation of S_n(z).
inline double sn_direct(long n, double z) {
    double s = 0.0, comp = 0.0, zk = 1.0;
    for (long k = 1; k <= n; ++k) {
        zk *= z;
        const double t = zk / static_cast<double>(k);
        const double y = s + t;
        comp += std::abs(s) >= std::abs(t) ? (s - y) + t : (t - y) + s;
        s = y;
    }
    return s + comp;
}

/// Quadrature of int_0^inf e^(-n s)/(e^s - z) ds.
inline OracleValue sn_integral_oracle(int n, double z, double tol = 1e-13) {
    auto integrand = [n, z](double s) -> cplx { return std::exp(-n * s) / (std::exp(s) - z); };
    QuadOptions o;
    o.rel_tol = tol;
    return quad(std::function<cplx(double)>(integrand), 0.0, inf, o);
}

}  // namespace asymptotika
