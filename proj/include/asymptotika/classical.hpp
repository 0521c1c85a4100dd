#pragma once

// Watson's lemma and Laplace's method, with the exponential integral,
// modified Bessel K and Legendre polynomial instances.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "error.hpp"
#include "expansion.hpp"
#include "jet.hpp"
#include "specfun.hpp"
#include "types.hpp"

namespace asymptotika {

/// Sector alpha < ph t < beta in which the amplitude is analytic
/// (alpha <= 0 <= beta).
struct AnalyticSector {
    double alpha = 0.0;
    double beta = 0.0;
};

/// Expansion of int_0^inf t^(lambda-1) f(t) e^(-z t) dt from the Maclaurin jet of f:
/// terms a_n Gamma(n + lambda) / z^(n + lambda).
inline Expansion watson_expand(const Jet& f, cplx lambda, int n_terms, AnalyticSector d = {}, double delta = 0.0) {
    if (lambda.real() <= 0.0) throw domain_error("watson_expand: Re lambda must be positive");
    if (f.anchor() != cplx{}) throw domain_error("watson_expand: jet must be anchored at 0");
    if (n_terms < 0) throw domain_error("watson_expand: negative term count");
    if (n_terms > 0 && f.order() < n_terms - 1) throw domain_error("watson_expand: jet order too small for the requested terms");
    Expansion e;
    e.name = "watson";
    e.n_terms = n_terms;
    e.validity = {-d.beta - 0.5 * pi + delta, -d.alpha + 0.5 * pi - delta};
    e.remainder_order = -(n_terms + lambda.real());
    Stream s;
    s.label = "watson";
    s.prefactor_tag = "1";
    s.bindings = {{"lambda", lambda}};
    s.prefactor = [](cplx) { return cplx(1.0); };
    for (int n = 0; n < n_terms; ++n) s.coeffs.push_back(f[n] * gamma(static_cast<double>(n) + lambda));
    s.scale = [lambda](int n, cplx z) { return cpow(z, -(static_cast<double>(n) + lambda)); };
    e.streams.push_back(std::move(s));
    return e;
}

/// e^z E1(z) = int_0^inf e^(-z t)/(1 + t) dt; terms (-1)^n n!/z^(n+1).
inline Expansion expint_expand(int n_terms, double z = 0.0) {
    const int K = std::max(n_terms, 1);
    const Jet t = Jet::variable(0.0, K);
    Expansion e = watson_expand(1.0 / (1.0 + t), 1.0, n_terms, {-pi, pi});
    e.name = "expint";
    e.param = z;
    return e;
}

/// c_n(nu) = (4nu^2 - 1)(4nu^2 - 9)...(4nu^2 - (2n-1)^2), c_0 = 1.
inline cplx kv_coefficients(cplx nu, int n) {
    cplx c = 1.0;
    const cplx m = 4.0 * nu * nu;
    for (int k = 1; k <= n; ++k) {
        const double o = 2.0 * k - 1.0;
        c *= m - o * o;
    }
    return c;
}

/// K_nu(z) ~ sqrt(pi/(2z)) e^(-z) sum d_n z^(-n), with d_n = a_n (nu+1/2)_n / 2^n and
/// a_n the jet coefficients of (1+t)^(nu-1/2).
inline Expansion kv_expand(cplx nu, int n_terms, double z = 0.0) {
    if ((nu + 0.5).real() <= 0.0) throw domain_error("kv_expand: Re nu must exceed -1/2");
    const int K = std::max(n_terms, 1);
    const Jet f = pow(1.0 + Jet::variable(0.0, K), nu - 0.5);
    Expansion e;
    e.name = "kv";
    e.param = z;
    e.n_terms = n_terms;
    e.validity = {-1.5 * pi, 1.5 * pi};
    e.remainder_order = -static_cast<double>(n_terms);
    e.relative_order = true;
    Stream s;
    s.label = "kv";
    s.prefactor_tag = "sqrt(pi/(2z))exp(-z)";
    s.bindings = {{"nu", nu}};
    s.prefactor = [](cplx x) { return std::sqrt(pi / (2.0 * x)) * std::exp(-x); };
    cplx poch = 1.0;
    double two = 1.0;
    for (int n = 0; n < n_terms; ++n) {
        s.coeffs.push_back(f[n] * poch / two);
        poch *= nu + 0.5 + static_cast<double>(n);
        two *= 2.0;
    }
    s.scale = [](int n, cplx x) { return std::pow(x, -n); };
    e.streams.push_back(std::move(s));
    return e;
}

/// int_{-inf}^{inf} e^(-z t^2) f(t) dt ~ sqrt(pi/z) sum (1/2)_k c_{2k} z^(-k).
inline Expansion laplace_expand(const Jet& f, int n_terms, AnalyticSector d = {}, double delta = 0.0) {
    if (f.anchor() != cplx{}) throw domain_error("laplace_expand: jet must be anchored at 0");
    if (n_terms < 0) throw domain_error("laplace_expand: negative term count");
    if (n_terms > 0 && f.order() < 2 * (n_terms - 1))
        throw domain_error("laplace_expand: jet order too small for the requested terms");
    Expansion e;
    e.name = "laplace";
    e.n_terms = n_terms;
    e.validity = {-2.0 * d.beta - 0.5 * pi + delta, 0.5 * pi - 2.0 * d.alpha - delta};
    e.remainder_order = -static_cast<double>(n_terms);
    e.relative_order = true;
    Stream s;
    s.label = "laplace";
    s.prefactor_tag = "sqrt(pi/z)";
    s.prefactor = [](cplx z) { return std::sqrt(pi / z); };
    for (int k = 0; k < n_terms; ++k) s.coeffs.push_back(pochhammer(0.5, static_cast<unsigned>(k)) * f[2 * k]);
    s.scale = [](int k, cplx z) { return std::pow(z, -k); };
    e.streams.push_back(std::move(s));
    return e;
}

/// Smallest admissible angle for the Legendre expansion.
inline constexpr double legendre_theta_min = 0.05;

/// Jet at s = 0 of f+(s) = sqrt(s/(e^s - 1) (1 - e^(-2i theta))/(e^s - e^(-2i theta))).
inline Jet legendre_fplus(double theta, int order) {
    const Jet s = Jet::variable(0.0, order + 1);
    const Jet es = exp(s);
    const cplx w = std::exp(cplx(0.0, -2.0 * theta));
    const Jet ratio = 1.0 / remove_zero(es - 1.0, 0.0);
    const Jet frac = (1.0 - w) / (es - w);
    return sqrt(ratio.truncated(order) * frac.truncated(order));
}

/// P_n(cos theta) = 2 Re P_n^+, with P_n^+ the Watson expansion in n of the
/// loop integral around w = e^(i theta).
inline Expansion legendre_expand(double theta, int n_terms, double degree = 0.0) {
    if (!(theta >= legendre_theta_min && theta <= 0.5 * pi)) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "legendre_expand: theta = %.6g outside [%.2g, pi/2]", theta, legendre_theta_min);
        throw domain_error(buf);
    }
    const int K = std::max(n_terms, 1);
    const Jet fp = legendre_fplus(theta, K);
    Expansion e = watson_expand(fp, 0.5, n_terms);
    e.name = "legendre";
    e.large_parameter = "n";
    e.param = degree;
    e.combine = Combine::twice_real_part;
    e.relative_order = false;
    Stream& s = e.streams.front();
    s.label = "legendre+";
    s.prefactor_tag = "exp(-(n+1/2)i theta + i pi/4)/(pi sqrt(2 sin theta))";
    s.bindings = {{"theta", theta}};
    s.prefactor = [theta](cplx n) {
        return std::exp(cplx(0.0, -1.0) * (n + 0.5) * theta + cplx(0.0, 0.25 * pi)) / (pi * std::sqrt(2.0 * std::sin(theta)));
    };
    return e;
}

}  // namespace asymptotika
