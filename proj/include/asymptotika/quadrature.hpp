#pragma once

// Reference quadrature. Two independent rules (adaptive Gauss-Kronrod 10/21
// and the double-exponential family) are run on every integral and must agree
// within their combined error estimates.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <queue>
#include <string>
#include <vector>

#include "error.hpp"
#include "types.hpp"

namespace asymptotika {

/// Integrand evaluated at t together with the distances t - a and b - t to the
/// interval ends. The distances are exact even when t itself rounds to an end,
/// so algebraic endpoint factors can be formed without cancellation.
using Integrand = std::function<cplx(double t, double dist_left, double dist_right)>;

struct OracleValue {
    cplx value;
    double est_error = 0.0;
    std::size_t evaluations = 0;
    std::size_t subdivisions = 0;
    bool met_tolerance = true;
    /// Estimate of the integral of |f|; sets the rounding floor of value.
    double l1_norm = 0.0;
};

struct QuadOptions {
    double rel_tol = 1e-13;
    double abs_tol = 0.0;
    std::size_t max_subdivisions = 4000;
    int max_level = 11;  ///< double-exponential halvings
};

namespace detail {

/// Compensated (Neumaier) sum of complex values.
class CompensatedSum {
public:
    void add(cplx v) {
        add_part(re_, cre_, v.real());
        add_part(im_, cim_, v.imag());
    }
    cplx value() const { return {re_ + cre_, im_ + cim_}; }

private:
    static void add_part(double& s, double& c, double x) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double re_ = 0, im_ = 0, cre_ = 0, cim_ = 0;
};

// QUADPACK qk21 abscissae and weights.
inline constexpr double xgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr double wg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};
inline constexpr double wgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

inline void check_finite(cplx v, double t) {
    if (!is_finite(v)) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "integrand is not finite at t = %.17g", t);
        throw numerical_error(buf);
    }
}

struct Segment {
    double lo, hi;  // offsets from the left end of the whole interval
    cplx result;
    double err;
    double resabs;
    bool operator<(const Segment& o) const { return err < o.err; }
};

/// One 21-point Kronrod panel on [A + lo, A + hi] of an interval of length L.
inline Segment qk21(const Integrand& f, double A, double B, double lo, double hi, double L,
                    std::size_t& evals) {
    const double half = 0.5 * (hi - lo);
    // Distances are built from the nearer segment end so they stay exact when
    // the segment is tiny and touches an interval end.
    const double left_gap = lo, right_gap = L - hi;
    auto eval = [&](double x) {
        const double dl = left_gap + half * (1.0 + x);
        const double dr = right_gap + half * (1.0 - x);
        const double t = dl <= dr ? A + dl : B - dr;
        const cplx v = f(t, dl, dr);
        check_finite(v, t);
        return v;
    };
    const cplx fc = eval(0.0);
    cplx resg{};
    cplx resk = fc * wgk[10];
    double resabs = std::abs(resk);
    cplx fv1[10], fv2[10];
    for (int j = 0; j < 10; ++j) {
        fv1[j] = eval(-xgk[j]);
        fv2[j] = eval(xgk[j]);
        const cplx s = fv1[j] + fv2[j];
        resk += wgk[j] * s;
        resabs += wgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
        if (j % 2 == 1) resg += wg[j / 2] * s;
    }
    evals += 21;
    const cplx reskh = resk * 0.5;
    double resasc = wgk[10] * std::abs(fc - reskh);
    for (int j = 0; j < 10; ++j)
        resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    const double ah = std::abs(half);
    cplx result = resk * half;
    resabs *= ah;
    resasc *= ah;
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
        err = std::max(50.0 * eps * resabs, err);
    return {lo, hi, result, err, resabs};
}

/// Maps a half-line onto [0, 1): t = a + u/(1-u).
inline Integrand halfline_map(const Integrand& f, double a, bool to_right) {
    return [f, a, to_right](double, double u, double one_minus_u) -> cplx {
        if (one_minus_u <= 0.0) return 0.0;
        const double s = u / one_minus_u;
        // Far tail: the integrand is assumed to have decayed long before this.
        if (s > 1e100) return 0.0;
        const double t = to_right ? a + s : a - s;
        const cplx v = f(t, s, inf);
        const double jac = 1.0 / (one_minus_u * one_minus_u);
        if (v == cplx{}) return 0.0;
        return v * jac;
    };
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod 10/21 quadrature. Infinite ends are mapped
/// onto a finite interval.
inline OracleValue gauss_kronrod(const Integrand& f, double a, double b, const QuadOptions& opt = {}) {
    if (a == b) return {0.0, std::numeric_limits<double>::min(), 0, 0, true};
    if (a > b) {
        auto r = gauss_kronrod([&](double t, double dl, double dr) { return f(t, dr, dl); }, b, a, opt);
        r.value = -r.value;
        return r;
    }
    if (std::isinf(a) && std::isinf(b)) {
        auto r1 = gauss_kronrod(f, -inf, 0.0, opt);
        auto r2 = gauss_kronrod(f, 0.0, inf, opt);
        return {r1.value + r2.value, r1.est_error + r2.est_error, r1.evaluations + r2.evaluations,
                r1.subdivisions + r2.subdivisions, r1.met_tolerance && r2.met_tolerance, r1.l1_norm + r2.l1_norm};
    }
    if (std::isinf(b)) return gauss_kronrod(detail::halfline_map(f, a, true), 0.0, 1.0, opt);
    if (std::isinf(a)) {
        auto g = detail::halfline_map([&](double t, double dl, double dr) { return f(t, dr, dl); }, b, false);
        return gauss_kronrod(g, 0.0, 1.0, opt);
    }

    const double L = b - a;
    std::size_t evals = 0;
    std::priority_queue<detail::Segment> heap;
    std::vector<detail::Segment> done;
    heap.push(detail::qk21(f, a, b, 0.0, L, L, evals));
    cplx total = heap.top().result;
    double total_err = heap.top().err;
    double total_abs = heap.top().resabs;
    std::size_t subdiv = 0;
    auto target = [&] { return std::max({opt.abs_tol, opt.rel_tol * std::abs(total), 100.0 * eps * total_abs}); };
    while (!heap.empty() && total_err > target() && subdiv < opt.max_subdivisions) {
        detail::Segment s = heap.top();
        heap.pop();
        const double mid = 0.5 * (s.lo + s.hi);
        if (!(mid > s.lo && mid < s.hi) || s.hi - s.lo < 1e-250 * L) {
            done.push_back(s);
            continue;
        }
        auto left = detail::qk21(f, a, b, s.lo, mid, L, evals);
        auto right = detail::qk21(f, a, b, mid, s.hi, L, evals);
        total += left.result + right.result - s.result;
        total_err += left.err + right.err - s.err;
        total_abs += left.resabs + right.resabs - s.resabs;
        heap.push(left);
        heap.push(right);
        ++subdiv;
    }
    // Re-sum from the pieces to remove drift in the running totals.
    while (!heap.empty()) {
        done.push_back(heap.top());
        heap.pop();
    }
    std::sort(done.begin(), done.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
    detail::CompensatedSum sum;
    double err = 0.0, resabs = 0.0;
    for (const auto& s : done) {
        sum.add(s.result);
        err += s.err;
        resabs += s.resabs;
    }
    OracleValue r;
    r.value = sum.value();
    r.est_error = std::max(err, std::numeric_limits<double>::min());
    r.evaluations = evals;
    r.subdivisions = subdiv;
    r.met_tolerance = err <= std::max({opt.abs_tol, opt.rel_tol * std::abs(r.value), 100.0 * eps * resabs});
    r.l1_norm = resabs;
    return r;
}

/// Double-exponential quadrature: tanh-sinh on finite intervals, exp-sinh on
/// half-lines and sinh-sinh on the whole line.
inline OracleValue double_exponential(const Integrand& f, double a, double b, const QuadOptions& opt = {}) {
    if (a == b) return {0.0, std::numeric_limits<double>::min(), 0, 0, true};
    if (a > b) {
        auto r = double_exponential([&](double t, double dl, double dr) { return f(t, dr, dl); }, b, a, opt);
        r.value = -r.value;
        return r;
    }
    enum class Kind { finite, right, left, line } kind;
    if (std::isinf(a) && std::isinf(b))
        kind = Kind::line;
    else if (std::isinf(b))
        kind = Kind::right;
    else if (std::isinf(a))
        kind = Kind::left;
    else
        kind = Kind::finite;
    const double L = b - a;
    const double hpi = 0.5 * pi;
    std::size_t evals = 0;

    // Weighted integrand value at the transformed abscissa tau.
    auto point = [&](double tau) -> cplx {
        const double u = hpi * std::sinh(tau);
        double w = 0.0, t = 0.0, dl = 0.0, dr = 0.0;
        switch (kind) {
            case Kind::finite: {
                if (std::abs(u) > 340.0) return 0.0;
                const double e = std::exp(-2.0 * std::abs(u));
                const double small = L * e / (1.0 + e);
                const double large = L / (1.0 + e);
                dl = u >= 0 ? large : small;
                dr = u >= 0 ? small : large;
                if (dl <= 0.0 || dr <= 0.0) return 0.0;
                t = dl <= dr ? a + dl : b - dr;
                const double ch = std::cosh(u);
                w = L * 0.25 * pi * std::cosh(tau) / (ch * ch);
                break;
            }
            case Kind::right:
            case Kind::left: {
                if (u > 700.0 || u < -700.0) return 0.0;
                const double s = std::exp(u);
                w = hpi * std::cosh(tau) * s;
                if (kind == Kind::right) {
                    t = a + s;
                    dl = s;
                    dr = inf;
                } else {
                    t = b - s;
                    dl = inf;
                    dr = s;
                }
                break;
            }
            case Kind::line: {
                if (std::abs(u) > 700.0) return 0.0;
                t = std::sinh(u);
                dl = inf;
                dr = inf;
                w = hpi * std::cosh(tau) * std::cosh(u);
                break;
            }
        }
        if (!std::isfinite(t)) return 0.0;
        const cplx v = f(t, dl, dr);
        ++evals;
        if (v == cplx{}) return 0.0;
        detail::check_finite(v, t);
        return v * w;
    };

    const double tau_max = kind == Kind::finite ? 4.2 : 6.2;
    double h = 1.0;
    detail::CompensatedSum sum;
    double abs_sum = 0.0;
    auto sweep = [&](double start, double step) {
        // Walks outwards from start in both directions until the terms are negligible.
        for (int dir : {1, -1}) {
            int small_run = 0;
            for (double tau = (dir > 0 ? start : -start); std::abs(tau) <= tau_max; tau += dir * step) {
                if (dir < 0 && tau == 0.0) continue;
                const cplx v = point(tau);
                sum.add(v);
                abs_sum += std::abs(v);
                const double scale = std::abs(sum.value()) + abs_sum * 1e-3;
                if (std::abs(v) <= 1e-20 * scale)
                    ++small_run;
                else
                    small_run = 0;
                if (small_run >= 4 && std::abs(tau) > 1.0) break;
            }
        }
    };
    sweep(0.0, h);
    cplx prev = sum.value() * h;
    double est = inf;
    int level = 0;
    bool met = false;
    for (level = 1; level <= opt.max_level; ++level) {
        h *= 0.5;
        sweep(h, 2.0 * h);
        const cplx cur = sum.value() * h;
        est = std::abs(cur - prev);
        prev = cur;
        const double floor = 8.0 * eps * abs_sum * h;
        est = std::max(est, floor);
        if (level >= 3 && est <= std::max({opt.abs_tol, opt.rel_tol * std::abs(cur), 2.0 * floor})) {
            met = true;
            break;
        }
    }
    OracleValue r;
    r.value = prev;
    r.est_error = std::max(est, std::numeric_limits<double>::min());
    r.evaluations = evals;
    r.subdivisions = static_cast<std::size_t>(std::min(level, opt.max_level));
    r.met_tolerance = met;
    r.l1_norm = abs_sum * h;
    return r;
}

/// Runs both rules and insists that they agree within their combined error.
inline OracleValue quad(const Integrand& f, double a, double b, const QuadOptions& opt = {}) {
    OracleValue gk = gauss_kronrod(f, a, b, opt);
    OracleValue de = double_exponential(f, a, b, opt);
    const double diff = std::abs(gk.value - de.value);
    const double scale = std::max({std::abs(gk.value), std::abs(de.value), gk.l1_norm, de.l1_norm});
    // Both rules claim the requested tolerance, so a discrepancy within it
    // (measured against the integral of |f|) is accepted. Integrands with large
    // phases carry rounding noise well above eps.
    const double allowed =
        gk.est_error + de.est_error + std::max({32.0 * eps * scale, 10.0 * opt.rel_tol * scale, opt.abs_tol});
    if (!gk.met_tolerance && !de.met_tolerance) {
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "quadrature on [%.6g, %.6g] missed tolerance in both rules (est %.3e, %.3e)", a, b,
                      gk.est_error, de.est_error);
        throw numerical_error(buf);
    }
    if (diff > allowed) {
        char buf[240];
        std::snprintf(buf, sizeof buf,
                      "quadrature rules disagree on [%.6g, %.6g]: |gk - de| = %.3e exceeds %.3e", a, b, diff,
                      allowed);
        throw numerical_error(buf);
    }
    const OracleValue& best = (gk.met_tolerance && (gk.est_error <= de.est_error || !de.met_tolerance)) ? gk : de;
    OracleValue r = best;
    // When both rules met the tolerance the discrepancy is part of the error.
    // Otherwise the weaker rule only confirms the other within its own bound.
    r.est_error = gk.met_tolerance && de.met_tolerance ? std::max(best.est_error, diff) : best.est_error;
    r.evaluations = gk.evaluations + de.evaluations;
    r.subdivisions = gk.subdivisions + de.subdivisions;
    r.met_tolerance = gk.met_tolerance || de.met_tolerance;
    r.l1_norm = std::max(gk.l1_norm, de.l1_norm);
    return r;
}

inline OracleValue quad(const std::function<cplx(double)>& f, double a, double b, const QuadOptions& opt = {}) {
    return quad([&](double t, double, double) { return f(t); }, a, b, opt);
}

/// Integral of an analytic function along the ray z0 + e^{i angle} s, s in [0, s_max].
inline OracleValue quad_ray(const std::function<cplx(cplx)>& f, cplx z0, double angle, double s_max = inf,
                            const QuadOptions& opt = {}) {
    const cplx dir = std::polar(1.0, angle);
    auto r = quad([&](double s, double, double) { return f(z0 + dir * s); }, 0.0, s_max, opt);
    r.value *= dir;
    r.est_error = std::max(r.est_error, std::numeric_limits<double>::min());
    return r;
}

// ---------------------------------------------------------------------------
// Problem-level oracles.

enum class IntegrandKind { laplace_real_axis, oscillatory_finite, oscillatory_halfline, complex_line };

/// A defining integral handed to the oracle.
///
/// For real-axis kinds `integrand` is evaluated on the real interval and the
/// oracle multiplies by (t-a)^{lambda-1} (b-t)^{mu-1}. For rotated kinds
/// `analytic` is evaluated on complex rays and `singularities` lists the points
/// the rotation must not sweep across.
struct IntegrandSpec {
    IntegrandKind kind = IntegrandKind::laplace_real_axis;
    Integrand integrand;
    std::function<cplx(cplx)> analytic;
    cplx lambda{1.0};
    cplx mu{1.0};
    /// Bound on |phi'| over the interval (oscillatory-finite subdivision scale).
    double phase_slope = 1.0;
    /// Ray angles used for infinite ends of oscillatory-halfline integrals.
    double right_angle = 0.25 * pi;
    double left_angle = 0.75 * pi;
    std::vector<cplx> singularities;
    std::map<std::string, cplx> parameters;
};

struct Interval {
    double a, b;
};

namespace detail {

inline Integrand with_endpoint_factors(const IntegrandSpec& s) {
    const bool plain = s.lambda == cplx{1.0} && s.mu == cplx{1.0};
    if (plain) return s.integrand;
    return [f = s.integrand, lam = s.lambda, mu = s.mu](double t, double dl, double dr) -> cplx {
        cplx v = f(t, dl, dr);
        if (lam != cplx{1.0}) v *= std::pow(cplx{dl}, lam - 1.0);
        if (mu != cplx{1.0}) v *= std::pow(cplx{dr}, mu - 1.0);
        return v;
    };
}

inline QuadOptions opts_for(double tol) {
    QuadOptions o;
    o.rel_tol = tol;
    return o;
}

/// True when p lies strictly inside the sector swept rotating a ray at c from
/// angle from to angle to.
inline bool in_swept_sector(cplx p, double c, double from, double to) {
    const cplx d = p - c;
    if (std::abs(d) == 0.0) return true;
    double lo = std::min(from, to), hi = std::max(from, to);
    double ang = std::arg(d);
    for (double shift : {-2.0 * pi, 0.0, 2.0 * pi})
        if (ang + shift > lo && ang + shift < hi) return true;
    return false;
}

}  // namespace detail

/// Laplace-type integrals on a real interval (ends may be infinite).
inline OracleValue quad_laplace(const IntegrandSpec& spec, Interval iv, double tol = 1e-13) {
    return quad(detail::with_endpoint_factors(spec), iv.a, iv.b, detail::opts_for(tol));
}

/// Oscillatory integrals. Finite intervals are cut into pieces of length
/// pi/(omega max|phi'|); infinite ends are handled by rotating the ray.
inline OracleValue quad_oscillatory(const IntegrandSpec& spec, Interval iv, double omega, double tol = 1e-13) {
    if (!(omega >= 0.0)) throw domain_error("quad_oscillatory: omega must be nonnegative");
    if (iv.a > iv.b) throw domain_error("quad_oscillatory: interval must satisfy a <= b");
    const QuadOptions opt = detail::opts_for(tol);
    if (spec.kind == IntegrandKind::oscillatory_halfline || std::isinf(iv.a) || std::isinf(iv.b)) {
        if (!spec.analytic) throw domain_error("quad_oscillatory: half-line integrals need an analytic integrand");
        // Split at a finite point; the finite part is done on the real axis.
        OracleValue total{0.0, 0.0, 0, 0, true};
        auto add = [&](const OracleValue& r) {
            total.value += r.value;
            total.est_error += r.est_error;
            total.evaluations += r.evaluations;
            total.subdivisions += r.subdivisions;
            total.met_tolerance = total.met_tolerance && r.met_tolerance;
            total.l1_norm += r.l1_norm;
        };
        const double cl = std::isinf(iv.a) ? (std::isinf(iv.b) ? 0.0 : iv.b) : iv.a;
        const double cr = std::isinf(iv.b) ? (std::isinf(iv.a) ? 0.0 : iv.a) : iv.b;
        if (std::isinf(iv.a)) {
            for (const cplx& p : spec.singularities)
                if (detail::in_swept_sector(p, cl, spec.left_angle, pi))
                    throw domain_error("quad_oscillatory: singularity inside the rotated sector (left ray)");
            add(quad_ray(spec.analytic, cl, spec.left_angle, inf, opt));
            total.value = -total.value;  // ray runs away from cl, integral runs towards it
        }
        if (std::isinf(iv.b)) {
            for (const cplx& p : spec.singularities)
                if (detail::in_swept_sector(p, cr, 0.0, spec.right_angle))
                    throw domain_error("quad_oscillatory: singularity inside the rotated sector (right ray)");
            add(quad_ray(spec.analytic, cr, spec.right_angle, inf, opt));
        }
        if (cr > cl) {
            IntegrandSpec finite = spec;
            finite.kind = IntegrandKind::oscillatory_finite;
            if (!finite.integrand) finite.integrand = [g = spec.analytic](double t, double, double) { return g(t); };
            add(quad_oscillatory(finite, {cl, cr}, omega, tol));
        }
        total.est_error = std::max(total.est_error, std::numeric_limits<double>::min());
        return total;
    }

    const Integrand f = detail::with_endpoint_factors(spec);
    const double a = iv.a, b = iv.b, L = b - a;
    if (L == 0.0) return {0.0, std::numeric_limits<double>::min(), 0, 0, true};
    const double width = omega * spec.phase_slope > 0.0 ? pi / (omega * spec.phase_slope) : L;
    const std::size_t pieces = static_cast<std::size_t>(std::clamp(std::ceil(L / width), 1.0, 2.0e5));
    detail::CompensatedSum sum;
    OracleValue total{0.0, 0.0, 0, 0, true};
    for (std::size_t k = 0; k < pieces; ++k) {
        const double lo_off = L * static_cast<double>(k) / static_cast<double>(pieces);
        const double hi_off = k + 1 == pieces ? L : L * static_cast<double>(k + 1) / static_cast<double>(pieces);
        const double x0 = a + lo_off, x1 = k + 1 == pieces ? b : a + hi_off;
        auto piece = [&](double t, double dl, double dr) {
            return f(t, lo_off + dl, (L - hi_off) + dr);
        };
        QuadOptions po = opt;
        // Pieces are compared against the size of the whole integrand, not their own sum.
        po.abs_tol = 0.0;
        OracleValue r = quad(piece, x0, x1, po);
        sum.add(r.value);
        total.est_error += r.est_error;
        total.evaluations += r.evaluations;
        total.subdivisions += r.subdivisions + 1;
        total.met_tolerance = total.met_tolerance && r.met_tolerance;
        total.l1_norm += r.l1_norm;
    }
    total.value = sum.value();
    total.est_error = std::max(total.est_error, std::numeric_limits<double>::min());
    return total;
}

/// Integral of an analytic function along a straight path from z0 in direction angle.
inline OracleValue quad_complex_line(const std::function<cplx(cplx)>& f, cplx z0, double angle, double length,
                                     double tol = 1e-13) {
    return quad_ray(f, z0, angle, length, detail::opts_for(tol));
}

}  // namespace asymptotika
