#pragma once

// Reference values that share no code with the expansion engines: power
// series in extended precision, recurrences and contour quadratures.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <cstdio>
#include <limits>

#include "error.hpp"
#include "quadrature.hpp"
#include "types.hpp"

namespace asymptotika {

namespace detail {

using mp_ref = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<240>>;

}  // namespace detail

/// J_nu(x) from its power series in 240-digit arithmetic.
inline OracleValue bessel_j_ref(double nu, double x) {
    using detail::mp_ref;
    if (!(x >= 0.0)) throw domain_error("bessel_j_ref: x must be nonnegative");
    if (nu < 0.0 && nu == std::floor(nu)) throw domain_error("bessel_j_ref: negative integer order not supported");
    if (nu * x > 1e5 || x > 700.0) throw overflow_error("bessel_j_ref: argument beyond the series budget");
    if (x == 0.0) return {nu == 0.0 ? 1.0 : 0.0, std::numeric_limits<double>::min(), 1, 0, true};
    const mp_ref h = mp_ref(x) / 2;
    const mp_ref h2 = h * h;
    mp_ref term = pow(h, mp_ref(nu)) / boost::multiprecision::tgamma(mp_ref(nu) + 1);
    mp_ref sum = term, biggest = abs(term);
    int k = 1;
    for (; k < 100000; ++k) {
        term *= -h2 / (mp_ref(k) * (mp_ref(nu) + k));
        sum += term;
        if (abs(term) > biggest) biggest = abs(term);
        if (k > x && abs(term) < abs(sum) * mp_ref(1e-40)) break;
    }
    const double value = static_cast<double>(sum);
    // Rounding in 240 digits against the largest term, plus conversion to double.
    const double est = static_cast<double>(biggest * mp_ref(1e-230)) + std::abs(value) * eps;
    return {value, std::max(est, std::numeric_limits<double>::min()), static_cast<std::size_t>(k), 0, true};
}

/// J_nu(x) for x > 0 by quadrature along the loop from inf - i pi to inf + i pi:
/// (1/pi) int_0^pi cos(nu theta - x sin theta) d theta - (sin nu pi/pi) int_0^inf e^(-x sinh t - nu t) dt.
inline OracleValue bessel_j_contour(double nu, double x, double tol = 1e-13) {
    if (!(x > 0.0)) throw domain_error("bessel_j_contour: x must be positive");
    IntegrandSpec arc;
    arc.kind = IntegrandKind::oscillatory_finite;
    arc.phase_slope = std::abs(nu) + x;
    arc.integrand = [nu, x](double th, double, double) { return cplx(std::cos(nu * th - x * std::sin(th)) / pi); };
    OracleValue r = quad_oscillatory(arc, {0.0, pi}, 1.0, tol);
    const double s = std::sin(nu * pi);
    if (s != 0.0) {
        IntegrandSpec tail;
        tail.integrand = [nu, x](double t, double, double) {
            const double e = -x * std::sinh(t) - nu * t;
            return cplx(e < -745.0 ? 0.0 : std::exp(e));
        };
        const OracleValue q = quad_laplace(tail, {0.0, inf}, tol);
        r.value -= s / pi * q.value;
        r.est_error += std::abs(s) / pi * q.est_error;
        r.evaluations += q.evaluations;
        r.subdivisions += q.subdivisions;
        r.met_tolerance = r.met_tolerance && q.met_tolerance;
    }
    return r;
}

/// K_nu(x) = int_0^inf e^(-x cosh t) cosh(nu t) dt.
inline OracleValue bessel_k_ref(double nu, double x, double tol = 1e-13) {
    if (!(x > 0.0)) throw domain_error("bessel_k_ref: x must be positive");
    IntegrandSpec s;
    s.kind = IntegrandKind::laplace_real_axis;
    s.parameters = {{"nu", nu}, {"x", x}};
    s.integrand = [nu, x](double t, double, double) {
        // e^(-x cosh t) cosh(nu t) in one exponent each to avoid inf * 0.
        const double e = -x * std::cosh(t);
        const double a = e + std::abs(nu) * t;
        if (a < -745.0) return cplx(0.0);
        return cplx(0.5 * (std::exp(a) + std::exp(e - std::abs(nu) * t)));
    };
    return quad_laplace(s, {0.0, inf}, tol);
}

/// P_n(x) by the three-term recurrence.
inline OracleValue legendre_ref(int n, double x) {
    if (n < 0) throw domain_error("legendre_ref: negative degree");
    if (!(std::abs(x) <= 1.0)) throw domain_error("legendre_ref: need |x| <= 1");
    if (n == 0) return {1.0, eps, 1, 0, true};
    double p0 = 1.0, p1 = x;
    for (int k = 1; k < n; ++k) {
        const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    // Forward recurrence is stable on [-1, 1]; rounding grows about linearly in n.
    return {p1, 2.0 * eps * (n + 1.0), static_cast<std::size_t>(n), 0, true};
}

/// Ai(x) = (1/(2 pi i)) int e^(t^3/3 - x t) dt along the rays ph t = -pi/3 (in) and pi/3 (out).
inline OracleValue airy_ai_contour(double x, double tol = 1e-13) {
    QuadOptions o;
    o.rel_tol = tol;
    auto f = [x](cplx t) { return std::exp(t * t * t / 3.0 - x * t); };
    const OracleValue up = quad_ray(f, 0.0, pi / 3.0, inf, o);
    const OracleValue down = quad_ray(f, 0.0, -pi / 3.0, inf, o);
    OracleValue r = up;
    r.value = (up.value - down.value) / cplx(0.0, 2.0 * pi);
    r.est_error = (up.est_error + down.est_error) / (2.0 * pi);
    r.evaluations += down.evaluations;
    r.subdivisions += down.subdivisions;
    r.met_tolerance = up.met_tolerance && down.met_tolerance;
    return r;
}

/// erfc(z) = (2/sqrt pi) int_z^inf e^(-t^2) dt along the horizontal ray from z.
inline OracleValue erfc_ref(cplx z, double tol = 1e-13) {
    QuadOptions o;
    o.rel_tol = tol;
    OracleValue r = quad_ray([](cplx t) { return std::exp(-t * t); }, z, 0.0, inf, o);
    const double c = 2.0 / std::sqrt(pi);
    r.value *= c;
    r.est_error *= c;
    return r;
}

/// E1(z) = int_z^inf e^(-t)/t dt along the horizontal ray from z (z off the negative axis).
inline OracleValue exp_integral_e1_ref(cplx z, double tol = 1e-13) {
    if (z.imag() == 0.0 && z.real() <= 0.0) throw branch_error("exp_integral_e1_ref: z on the branch cut");
    QuadOptions o;
    o.rel_tol = tol;
    return quad_ray([](cplx t) { return std::exp(-t) / t; }, z, 0.0, inf, o);
}

}  // namespace asymptotika
