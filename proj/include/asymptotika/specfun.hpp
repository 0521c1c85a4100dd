#pragma once

// Special functions used as expansion prefactors: gamma, Pochhammer,
// erf/erfc/erfcx for complex argument, E1, real Airy Ai and Ai', the
// Fresnel-type integral over [a, b] and the Kummer function 1F1.

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <utility>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "error.hpp"
#include "quadrature.hpp"
#include "types.hpp"

namespace asymptotika {

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double sqrt_pi = 1.77245385090551602729816748334114518;

// ---------------------------------------------------------------------------
// Gamma family

namespace detail {

inline constexpr std::array<double, 9> lanczos_p = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

inline bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

}  // namespace detail

/// log Gamma(z) for complex z (value modulo 2 pi i; intended for exp()).
inline cplx lgamma(cplx z) {
    if (detail::is_nonpositive_integer(z)) throw domain_error("lgamma: pole at a nonpositive integer");
    if (z.real() < 0.5) return std::log(pi) - std::log(std::sin(pi * z)) - lgamma(1.0 - z);
    z -= 1.0;
    cplx x = detail::lanczos_p[0];
    for (int i = 1; i < 9; ++i) x += detail::lanczos_p[i] / (z + static_cast<double>(i));
    const cplx t = z + 7.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

/// Gamma(z) for complex z.
inline cplx gamma(cplx z) {
    if (detail::is_nonpositive_integer(z)) throw domain_error("gamma: pole at a nonpositive integer");
    if (z.imag() == 0.0) return std::tgamma(z.real());
    if (z.real() < 0.5) return pi / (std::sin(pi * z) * gamma(1.0 - z));
    z -= 1.0;
    cplx x = detail::lanczos_p[0];
    for (int i = 1; i < 9; ++i) x += detail::lanczos_p[i] / (z + static_cast<double>(i));
    const cplx t = z + 7.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

/// 1/Gamma(z); zero at the poles of Gamma.
inline cplx rgamma(cplx z) {
    if (detail::is_nonpositive_integer(z)) return 0.0;
    return 1.0 / gamma(z);
}

/// Pochhammer symbol (lambda)_n = lambda (lambda+1) ... (lambda+n-1).
inline cplx pochhammer(cplx lambda, unsigned n) {
    cplx p = 1.0;
    for (unsigned k = 0; k < n; ++k) p *= lambda + static_cast<double>(k);
    return p;
}

inline double pochhammer(double lambda, unsigned n) {
    double p = 1.0;
    for (unsigned k = 0; k < n; ++k) p *= lambda + static_cast<double>(k);
    return p;
}

// ---------------------------------------------------------------------------
// Error functions

namespace detail {

struct ErfcParts {
    cplx value;  // erfc(z) or erfcx(z)
    Method method;
    double est;  // absolute error bound on value
};

/// Maclaurin series of erf(z).
inline cplx erf_series(cplx z, double& abs_sum) {
    const cplx z2 = z * z;
    cplx term = z;
    cplx sum = z;
    abs_sum = std::abs(z);
    for (int n = 1; n < 2000; ++n) {
        term *= -z2 / static_cast<double>(n);
        const cplx t = term / static_cast<double>(2 * n + 1);
        sum += t;
        abs_sum += std::abs(t);
        if (std::abs(t) <= 1e-17 * std::abs(sum) && n > std::norm(z)) break;
    }
    abs_sum *= 2.0 / sqrt_pi;
    return sum * (2.0 / sqrt_pi);
}

/// Continued fraction for erfcx(z), Re z > 0 (modified Lentz).
/// Returns false when it fails to settle within the iteration budget.
inline bool erfcx_cf(cplx z, cplx& out, double& rel_err) {
    const double tiny = 1e-300;
    cplx f = z;
    cplx C = f, D = 0.0;
    double delta_mag = 1.0;
    for (int k = 1; k < 4000; ++k) {
        const double ak = 0.5 * k;
        D = z + ak * D;
        if (std::abs(D) < tiny) D = tiny;
        C = z + ak / C;
        if (std::abs(C) < tiny) C = tiny;
        D = 1.0 / D;
        const cplx delta = C * D;
        f *= delta;
        delta_mag = std::abs(delta - 1.0);
        if (delta_mag < 1e-16) {
            out = 1.0 / (sqrt_pi * f);
            rel_err = 4.0 * eps * std::sqrt(static_cast<double>(k));
            return true;
        }
    }
    rel_err = delta_mag;
    return false;
}

/// erfc (scaled = false) or erfcx (scaled = true) for Re z >= 0.
inline ErfcParts erfc_right(cplx z, bool scaled) {
    const double az = std::abs(z);
    // The Maclaurin series is well conditioned when Re z is small; the
    // continued fraction converges quickly away from the imaginary axis.
    const bool prefer_series = az < 2.0 || (z.real() < 0.6 && az < 6.0);
    if (!prefer_series) {
        cplx v;
        double rel;
        if (erfcx_cf(z, v, rel)) {
            if (scaled) return {v, Method::continued_fraction, rel * std::abs(v)};
            const cplx e = std::exp(-z * z);
            return {v * e, Method::continued_fraction, rel * std::abs(v * e)};
        }
    }
    double abs_sum = 0.0;
    const cplx erf = erf_series(z, abs_sum);
    cplx v = 1.0 - erf;
    double est = 4.0 * eps * (abs_sum + 1.0);
    if (scaled) {
        const cplx e = std::exp(z * z);
        v *= e;
        est *= std::abs(e);
    }
    return {v, Method::series, est};
}

inline SpecialValue finish(const ErfcParts& p, const char* name) {
    if (!is_finite(p.value)) throw overflow_error(std::string(name) + ": result not representable");
    return {p.value, p.method, std::max(p.est, eps * std::abs(p.value))};
}

}  // namespace detail

/// Complementary error function erfc(z) for complex z.
inline SpecialValue erfc(cplx z) {
    if (z.real() >= 0.0) return detail::finish(detail::erfc_right(z, false), "erfc");
    auto p = detail::erfc_right(-z, false);
    p.value = 2.0 - p.value;
    return detail::finish(p, "erfc");
}

/// Scaled complementary error function erfcx(z) = exp(z^2) erfc(z).
inline SpecialValue erfcx(cplx z) {
    if (z.real() >= 0.0) return detail::finish(detail::erfc_right(z, true), "erfcx");
    auto p = detail::erfc_right(-z, true);
    const cplx e = 2.0 * std::exp(z * z);
    p.value = e - p.value;
    p.est += 2.0 * eps * std::abs(e);
    return detail::finish(p, "erfcx");
}

/// erf(z) = 1 - erfc(z), summed directly near the origin.
inline SpecialValue erf(cplx z) {
    if (std::abs(z) < 2.0) {
        double abs_sum;
        const cplx v = detail::erf_series(z, abs_sum);
        return {v, Method::series, 4.0 * eps * abs_sum};
    }
    SpecialValue c = erfc(z);
    return {1.0 - c.value, c.method, c.est_error + eps};
}

/// Bracket coefficient k of the large-z expansion of erfc:
/// (-1)^k (2k-1)!! / 2^k, i.e. 1, -1/2, 3/4, -15/8, ...
inline double erfc_asymptotic_coefficient(unsigned k) {
    double c = 1.0;
    for (unsigned j = 1; j <= k; ++j) c *= -(2.0 * j - 1.0) / 2.0;
    return c;
}

/// Partial sums of erfc(z) ~ e^{-z^2}/(z sqrt(pi)) sum_k c_k z^{-2k}.
inline EvalReport erfc_asymptotic(cplx z, unsigned n_terms) {
    const cplx lead = std::exp(-z * z) / (z * sqrt_pi);
    const cplx w = 1.0 / (z * z);
    std::vector<cplx> terms;
    std::vector<cplx> coeffs, scales;
    cplx wk = 1.0;
    for (unsigned k = 0; k < n_terms; ++k) {
        const double c = erfc_asymptotic_coefficient(k);
        terms.push_back(lead * c * wk);
        coeffs.push_back(c);
        scales.push_back(lead * wk);
        wk *= w;
    }
    EvalReport r = summarize(std::move(terms));
    r.coefficients = std::move(coeffs);
    r.scales = std::move(scales);
    return r;
}

// ---------------------------------------------------------------------------
// Exponential integrals

/// Ein(z) = sum_{k>=1} (-1)^{k+1} z^k / (k k!), entire.
inline SpecialValue exp_integral_ein(cplx z) {
    cplx term = 1.0, sum = 0.0;
    double abs_sum = 0.0;
    for (int k = 1; k < 5000; ++k) {
        term *= -z / static_cast<double>(k);
        const cplx t = -term / static_cast<double>(k);
        sum += t;
        abs_sum += std::abs(t);
        if (std::abs(t) <= 1e-17 * std::abs(sum) && k > std::abs(z)) break;
    }
    if (!is_finite(sum)) throw overflow_error("exp_integral_ein: result not representable");
    return {sum, Method::series, 4.0 * eps * abs_sum + std::numeric_limits<double>::min()};
}

/// Exponential integral E1(z) = int_z^inf e^{-t}/t dt, |ph z| < pi.
inline SpecialValue exp_integral_e1(cplx z) {
    if (z == cplx{}) throw domain_error("exp_integral_e1: z = 0 is a singular point");
    if (z.imag() == 0.0 && z.real() < 0.0) throw branch_error("exp_integral_e1: z on the negative real axis");
    const double az = std::abs(z);
    const bool use_series = az <= 2.0 || (z.real() < 0.0 && std::abs(z.imag()) < 1.0 && az < 20.0);
    if (!use_series) {
        // Modified Lentz on e^{-z}/(z+1- 1/(z+3- 4/(z+5- ...))).
        const double tiny = 1e-300;
        cplx b = z + 1.0;
        cplx c = 1.0 / tiny;
        cplx d = 1.0 / b;
        cplx h = d;
        for (int i = 1; i < 20000; ++i) {
            const double an = -static_cast<double>(i) * i;
            b += 2.0;
            d = 1.0 / (an * d + b);
            c = b + an / c;
            const cplx del = c * d;
            h *= del;
            if (std::abs(del - 1.0) < 1e-16) {
                const cplx v = h * std::exp(-z);
                if (!is_finite(v)) throw overflow_error("exp_integral_e1: result not representable");
                return {v, Method::continued_fraction, 8.0 * eps * std::sqrt(static_cast<double>(i)) * std::abs(v)};
            }
        }
    }
    const SpecialValue ein = exp_integral_ein(z);
    const cplx v = ein.value - euler_gamma - std::log(z);
    return {v, Method::series, ein.est_error + 4.0 * eps * (std::abs(std::log(z)) + 1.0)};
}

// ---------------------------------------------------------------------------
// Airy functions on the real line

namespace detail {

inline constexpr double airy_ai0 = 0.355028053887817239260063186004183176;
inline constexpr double airy_aip0 = -0.258819403792806798405183560189203963;

/// Maclaurin series; returns {Ai, Ai', sum of |terms|}.
inline std::array<double, 3> airy_series(double x) {
    // a_n = a_{n-3} / (n (n-1)), a_0 = Ai(0), a_1 = Ai'(0), a_2 = 0.
    double a[3] = {airy_ai0, airy_aip0, 0.0};
    double ai = airy_ai0 + airy_aip0 * x;
    double aip = airy_aip0;
    double mag = std::abs(airy_ai0) + std::abs(airy_aip0 * x);
    double xn = x;  // x^{n-1}
    for (int n = 2; n < 90; ++n) {
        const double an = n >= 3 ? a[n % 3] / (static_cast<double>(n) * (n - 1)) : 0.0;
        a[n % 3] = an;
        const double dterm = n * an * xn;
        xn *= x;
        const double term = an * xn;
        ai += term;
        aip += dterm;
        mag += std::abs(term) + std::abs(dterm);
    }
    return {ai, aip, mag};
}

/// K_nu(xi) e^{xi} by the trapezoidal rule in u = 2 sqrt(xi) sinh(t/2).
inline double bessel_k_scaled(double nu, double xi) {
    const double h = 0.125;
    const double s = std::sqrt(xi);
    double sum = 0.5;  // F(0) = 1
    for (int k = 1; k * h <= 12.0; ++k) {
        const double u = k * h;
        const double t = 2.0 * std::asinh(u / (2.0 * s));
        sum += std::exp(-0.5 * u * u) * std::cosh(nu * t) / std::sqrt(1.0 + u * u / (4.0 * xi));
    }
    return h * sum / s;
}

/// Taylor stepping of w'' = x w from (x0, y, yp) to x1.
inline void airy_ode_step(double x0, double x1, double& y, double& yp) {
    const double hmax = 0.25;
    const int steps = static_cast<int>(std::ceil(std::abs(x1 - x0) / hmax));
    const double h = (x1 - x0) / steps;
    double x = x0;
    for (int s = 0; s < steps; ++s) {
        // c_{n+2} = (x c_n + c_{n-1}) / ((n+2)(n+1))
        double c[40] = {};
        c[0] = y;
        c[1] = yp;
        double ynew = c[0] + c[1] * h;
        double ypnew = c[1];
        double hp = h;  // h^{n+1}
        for (int n = 0; n + 2 < 40; ++n) {
            c[n + 2] = (x * c[n] + (n >= 1 ? c[n - 1] : 0.0)) / ((n + 2.0) * (n + 1.0));
            ypnew += (n + 2.0) * c[n + 2] * hp;
            hp *= h;
            ynew += c[n + 2] * hp;
        }
        y = ynew;
        yp = ypnew;
        x += h;
    }
}

/// Modulus/phase asymptotics for Ai(-x), Ai'(-x), x large.
inline std::array<double, 3> airy_negative_asymptotic(double x) {
    const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    const double c = std::cos(zeta - 0.25 * pi), s = std::sin(zeta - 0.25 * pi);
    // u_k and v_k from the standard recurrences; alternate signs by pairs.
    double pu = 0, qu = 0, pv = 0, qv = 0;
    double uk = 1.0, zk = 1.0;
    double last = inf, err = 0.0;
    for (int k = 0; k < 200; ++k) {
        if (k > 0) uk *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
        const double vk = k == 0 ? 1.0 : -(6.0 * k + 1.0) / (6.0 * k - 1.0) * uk;
        const double tu = uk / zk, tv = vk / zk;
        const double mag = std::max(std::abs(tu), std::abs(tv));
        if (mag > last) break;
        last = mag;
        err = mag;
        const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 0) {
            pu += sign * tu;
            pv += sign * tv;
        } else {
            qu += sign * tu;
            qv += sign * tv;
        }
        zk *= zeta;
        if (mag < 1e-17) break;
    }
    const double x14 = std::pow(x, 0.25);
    const double ai = (c * pu + s * qu) / (sqrt_pi * x14);
    const double aip = x14 / sqrt_pi * (s * pv - c * qv);
    return {ai, aip, err * x14 / sqrt_pi};
}

/// {Ai(x), Ai'(x), error bound, method}.
struct AiryPair {
    SpecialValue ai, aip;
};

inline AiryPair airy_real(double x) {
    if (!std::isfinite(x)) throw domain_error("airy: argument must be finite");
    if (std::abs(x) <= 2.0) {
        const auto r = airy_series(x);
        const double e = 8.0 * eps * r[2];
        return {{r[0], Method::series, e}, {r[1], Method::series, e}};
    }
    if (x > 2.0) {
        const double xi = 2.0 / 3.0 * x * std::sqrt(x);
        const double ex = std::exp(-xi);
        const double k13 = bessel_k_scaled(1.0 / 3.0, xi) * ex;
        const double k23 = bessel_k_scaled(2.0 / 3.0, xi) * ex;
        const double ai = std::sqrt(x / 3.0) * k13 / pi;
        const double aip = -x / (pi * std::sqrt(3.0)) * k23;
        return {{ai, Method::quadrature, 1e-15 * std::abs(ai)}, {aip, Method::quadrature, 1e-15 * std::abs(aip)}};
    }
    if (x >= -10.0) {
        double y = airy_ai0, yp = airy_aip0;
        airy_ode_step(0.0, x, y, yp);
        const double e = 1e-14 * (1.0 + std::abs(x));
        return {{y, Method::series, e}, {yp, Method::series, e * std::sqrt(std::abs(x))}};
    }
    const auto r = airy_negative_asymptotic(-x);
    return {{r[0], Method::asymptotic, r[2] + 4.0 * eps}, {r[1], Method::asymptotic, r[2] * std::sqrt(-x) + 4.0 * eps}};
}

}  // namespace detail

/// Airy function Ai(x) on the real line.
inline SpecialValue airy_ai(double x) { return detail::airy_real(x).ai; }

/// Derivative Ai'(x) on the real line.
inline SpecialValue airy_ai_prime(double x) { return detail::airy_real(x).aip; }

// ---------------------------------------------------------------------------
// Fresnel-type integral

/// Phi_{a,b}(omega) = int_a^b exp(i omega t^2) dt; a or b may be infinite.
inline SpecialValue fresnel_phi(double a, double b, double omega) {
    if (!(omega > 0.0)) throw domain_error("fresnel_phi: omega must be positive");
    if (!(a <= b)) throw domain_error("fresnel_phi: requires a <= b");
    if (a == b) return {0.0, Method::series, 0.0};
    const cplx e14 = std::polar(1.0, 0.25 * pi);
    const double sw = std::sqrt(omega);
    const cplx full = std::sqrt(pi / omega) * e14;
    // T(x) = int_x^inf exp(i omega t^2) dt for x >= 0.
    double est = 0.0;
    auto T = [&](double x) -> cplx {
        if (std::isinf(x)) return 0.0;
        const SpecialValue c = erfc(std::conj(e14) * sw * x);
        const cplx pref = 0.5 * sqrt_pi * e14 / sw;
        est += std::abs(pref) * c.est_error;
        return pref * c.value;
    };
    cplx v;
    if (a >= 0.0)
        v = T(a) - T(b);
    else if (b <= 0.0)
        v = T(-b) - T(-a);
    else
        v = full - T(-a) - T(b);
    return {v, Method::series, est + 4.0 * eps * std::abs(full)};
}

// ---------------------------------------------------------------------------
// Kummer function 1F1

namespace detail {

using mp_float = boost::multiprecision::cpp_bin_float_100;

struct mp_complex {
    mp_float re, im;
    mp_complex operator*(const mp_complex& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    mp_complex operator+(const mp_complex& o) const { return {re + o.re, im + o.im}; }
    mp_complex operator/(const mp_complex& o) const {
        const mp_float d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    mp_float norm() const { return re * re + im * im; }
    cplx to_double() const { return {static_cast<double>(re), static_cast<double>(im)}; }
};

inline mp_complex to_mp(cplx z) { return {mp_float(z.real()), mp_float(z.imag())}; }

/// 1F1 series in 100-digit arithmetic.
inline cplx kummer_series_mp(cplx a, cplx b, cplx z) {
    const mp_complex A = to_mp(a), B = to_mp(b), Z = to_mp(z);
    mp_complex term{1, 0}, sum{1, 0};
    const mp_float tiny("1e-70");
    for (int k = 0; k < 100000; ++k) {
        const mp_complex kk{mp_float(k), 0};
        const mp_complex k1{mp_float(k + 1), 0};
        term = term * (A + kk) * Z / ((B + kk) * k1);
        sum = sum + term;
        if (k > std::abs(z) && term.norm() < tiny * tiny * sum.norm()) break;
        if (term.norm() == 0) break;
    }
    return sum.to_double();
}

/// Large-|z| expansion; returns false if the series do not reach full accuracy.
inline bool kummer_asymptotic(cplx a, cplx b, cplx z, cplx& out, double& est) {
    const double sgn = z.imag() >= 0.0 ? 1.0 : -1.0;
    // Two series: sum (a)_s (a-b+1)_s / s! (-z)^{-s} and sum (1-a)_s (b-a)_s / s! z^{-s}.
    auto series = [&](cplx p, cplx q, cplx w, double& tail) {
        cplx t = 1.0, s = 1.0;
        double last = 1.0;
        for (int k = 0; k < 500; ++k) {
            t *= (p + static_cast<double>(k)) * (q + static_cast<double>(k)) / (static_cast<double>(k + 1)) * w;
            const double m = std::abs(t);
            if (m > last) {
                tail = last;
                return s;
            }
            s += t;
            last = m;
            if (m < 1e-17 * std::abs(s)) {
                tail = m;
                return s;
            }
        }
        tail = last;
        return s;
    };
    double tail1 = 0, tail2 = 0;
    const cplx s1 = series(a, a - b + 1.0, -1.0 / z, tail1);
    const cplx s2 = series(1.0 - a, b - a, 1.0 / z, tail2);
    // Gamma(b) e^{i sgn pi a} z^{-a} / Gamma(b-a) and Gamma(b) e^z z^{a-b} / Gamma(a), in log form.
    cplx t1 = 0.0, t2 = 0.0;
    const cplx lgb = lgamma(b);
    if (!is_nonpositive_integer(b - a))
        t1 = std::exp(lgb - lgamma(b - a) + cplx(0, sgn * pi) * a - a * std::log(z)) * s1;
    if (!is_nonpositive_integer(a)) t2 = std::exp(lgb - lgamma(a) + z + (a - b) * std::log(z)) * s2;
    out = t1 + t2;
    // Rounding of z itself enters through e^z and z^{-a}.
    const double arg_noise = 2.0 * eps * (std::abs(z) + std::abs(a) * std::abs(std::log(z)) + 1.0);
    est = std::abs(t1) * (tail1 + arg_noise) + std::abs(t2) * (tail2 + arg_noise);
    return is_finite(out) && std::abs(t1) * tail1 + std::abs(t2) * tail2 <= 1e-14 * std::abs(out);
}

}  // namespace detail

/// Confluent hypergeometric function 1F1(a; b; z).
inline SpecialValue kummer_1f1(cplx a, cplx b, cplx z) {
    if (detail::is_nonpositive_integer(b)) throw domain_error("kummer_1f1: b is a nonpositive integer (pole)");
    if (z == cplx{}) return {1.0, Method::series, 0.0};
    if (a == b) return {std::exp(z), Method::series, eps * std::abs(std::exp(z))};

    // Double-precision series; accepted when the terms do not cancel badly.
    {
        cplx term = 1.0, sum = 1.0;
        double abs_sum = 1.0;
        int small = 0;
        bool ok = false;
        for (int k = 0; k < 5000; ++k) {
            term *= (a + static_cast<double>(k)) * z / ((b + static_cast<double>(k)) * static_cast<double>(k + 1));
            sum += term;
            abs_sum += std::abs(term);
            if (term == cplx{}) {
                ok = true;
                break;
            }
            // Stop after three consecutive terms below 1e-16 relative, past the peak.
            if (k > std::abs(z) && std::abs(term) < 1e-16 * std::abs(sum)) {
                if (++small >= 3) {
                    ok = true;
                    break;
                }
            } else {
                small = 0;
            }
        }
        if (ok && is_finite(sum) && abs_sum <= 100.0 * std::abs(sum))
            return {sum, Method::series, 4.0 * eps * abs_sum};
    }
    if (std::abs(z) >= 40.0) {
        cplx v;
        double est;
        if (detail::kummer_asymptotic(a, b, z, v, est)) return {v, Method::asymptotic, est};
    }
    const cplx v = detail::kummer_series_mp(a, b, z);
    if (!is_finite(v)) throw overflow_error("kummer_1f1: result not representable");
    return {v, Method::series, 4.0 * eps * std::abs(v)};
}

/// 1F1(a; b; z) from its integral representation over [0, 1]
/// (requires Re a > 0 and Re(b - a) > 0). Used as an independent check.
inline SpecialValue kummer_1f1_quad(cplx a, cplx b, cplx z, double tol = 1e-13) {
    if (!(a.real() > 0.0) || !((b - a).real() > 0.0))
        throw domain_error("kummer_1f1_quad: needs Re a > 0 and Re(b-a) > 0");
    IntegrandSpec spec;
    spec.kind = IntegrandKind::oscillatory_finite;
    spec.integrand = [z](double t, double, double) { return std::exp(z * t); };
    spec.lambda = a;
    spec.mu = b - a;
    spec.phase_slope = 1.0;
    const OracleValue r = quad_oscillatory(spec, {0.0, 1.0}, std::max(std::abs(z.imag()), 1.0), tol);
    const cplx pref = std::exp(lgamma(b) - lgamma(a) - lgamma(b - a));
    return {pref * r.value, Method::quadrature, std::abs(pref) * r.est_error};
}

}  // namespace asymptotika
