#pragma once

// Truncated Taylor series ("jets") at a single anchor point. All coefficient
// recursions of the expansion engines run on these instead of symbolic or
// numerical differentiation.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "error.hpp"
#include "types.hpp"

namespace asymptotika {

/// Taylor coefficients c_0..c_K of a function at `anchor`.
class Jet {
public:
    Jet() : coeffs_{0.0} {}
    Jet(cplx anchor, std::vector<cplx> coeffs) : anchor_(anchor), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(0.0);
    }

    static Jet constant(cplx c, cplx anchor, int order) {
        std::vector<cplx> v(static_cast<std::size_t>(order) + 1, 0.0);
        v[0] = c;
        return {anchor, std::move(v)};
    }

    /// The identity function t at the anchor.
    static Jet variable(cplx anchor, int order) {
        std::vector<cplx> v(static_cast<std::size_t>(order) + 1, 0.0);
        v[0] = anchor;
        if (order >= 1) v[1] = 1.0;
        return {anchor, std::move(v)};
    }

    cplx anchor() const { return anchor_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    cplx operator[](int k) const { return k >= 0 && k <= order() ? coeffs_[static_cast<std::size_t>(k)] : 0.0; }
    cplx& at(int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
    cplx value() const { return coeffs_[0]; }

    /// Horner evaluation of the truncated series at t.
    cplx evaluate(cplx t) const {
        const cplx s = t - anchor_;
        cplx r = 0.0;
        for (int k = order(); k >= 0; --k) r = r * s + coeffs_[static_cast<std::size_t>(k)];
        return r;
    }

    Jet truncated(int order) const {
        if (order < 0) throw domain_error("Jet::truncated: negative order");
        std::vector<cplx> v(static_cast<std::size_t>(order) + 1, 0.0);
        for (int k = 0; k <= std::min(order, this->order()); ++k) v[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)];
        return {anchor_, std::move(v)};
    }

    /// Same coefficients, reinterpreted at another anchor (used when the
    /// series variable is shifted, e.g. sigma -> s0 + sigma).
    Jet reanchored(cplx anchor) const { return {anchor, coeffs_}; }

private:
    cplx anchor_ = 0.0;
    std::vector<cplx> coeffs_;
};

namespace detail {

inline void require_same_anchor(const Jet& a, const Jet& b, const char* op) {
    if (a.anchor() != b.anchor()) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "jet %s: anchors differ (%.6g%+.6gi vs %.6g%+.6gi)", op, a.anchor().real(),
                      a.anchor().imag(), b.anchor().real(), b.anchor().imag());
        throw domain_error(buf);
    }
}

inline void require_nonzero(cplx c0, const char* op) {
    if (c0 == cplx{}) throw domain_error(std::string("jet ") + op + ": zero constant term");
}

}  // namespace detail

// --- ring operations --------------------------------------------------------

inline Jet operator+(const Jet& a, const Jet& b) {
    detail::require_same_anchor(a, b, "addition");
    const int K = std::min(a.order(), b.order());
    std::vector<cplx> v(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) v[static_cast<std::size_t>(k)] = a[k] + b[k];
    return {a.anchor(), std::move(v)};
}

inline Jet operator-(const Jet& a) {
    std::vector<cplx> v(a.coeffs());
    for (auto& c : v) c = -c;
    return {a.anchor(), std::move(v)};
}

inline Jet operator-(const Jet& a, const Jet& b) {
    detail::require_same_anchor(a, b, "subtraction");
    return a + (-b);
}

inline Jet operator*(const Jet& a, const Jet& b) {
    detail::require_same_anchor(a, b, "multiplication");
    const int K = std::min(a.order(), b.order());
    std::vector<cplx> v(static_cast<std::size_t>(K) + 1, 0.0);
    for (int n = 0; n <= K; ++n) {
        cplx s = 0.0;
        for (int k = 0; k <= n; ++k) s += a[k] * b[n - k];
        v[static_cast<std::size_t>(n)] = s;
    }
    return {a.anchor(), std::move(v)};
}

inline Jet operator/(const Jet& a, const Jet& b) {
    detail::require_same_anchor(a, b, "division");
    detail::require_nonzero(b[0], "division");
    const int K = std::min(a.order(), b.order());
    std::vector<cplx> q(static_cast<std::size_t>(K) + 1, 0.0);
    for (int n = 0; n <= K; ++n) {
        cplx s = a[n];
        for (int k = 1; k <= n; ++k) s -= b[k] * q[static_cast<std::size_t>(n - k)];
        q[static_cast<std::size_t>(n)] = s / b[0];
    }
    return {a.anchor(), std::move(q)};
}

inline Jet operator+(const Jet& a, cplx c) {
    Jet r = a;
    r.at(0) += c;
    return r;
}
inline Jet operator+(cplx c, const Jet& a) { return a + c; }
inline Jet operator-(const Jet& a, cplx c) { return a + (-c); }
inline Jet operator-(cplx c, const Jet& a) { return (-a) + c; }
inline Jet operator*(const Jet& a, cplx c) {
    std::vector<cplx> v(a.coeffs());
    for (auto& x : v) x *= c;
    return {a.anchor(), std::move(v)};
}
inline Jet operator*(cplx c, const Jet& a) { return a * c; }
inline Jet operator/(const Jet& a, cplx c) {
    detail::require_nonzero(c, "division by scalar");
    return a * (1.0 / c);
}
inline Jet operator/(cplx c, const Jet& a) { return Jet::constant(c, a.anchor(), a.order()) / a; }

// --- elementary functions -------------------------------------------------

inline Jet exp(const Jet& a) {
    const int K = a.order();
    std::vector<cplx> w(static_cast<std::size_t>(K) + 1, 0.0);
    w[0] = std::exp(a[0]);
    for (int n = 1; n <= K; ++n) {
        cplx s = 0.0;
        for (int k = 1; k <= n; ++k) s += static_cast<double>(k) * a[k] * w[static_cast<std::size_t>(n - k)];
        w[static_cast<std::size_t>(n)] = s / static_cast<double>(n);
    }
    return {a.anchor(), std::move(w)};
}

/// Logarithm on sheet `sheet` (principal value plus 2 pi i sheet).
inline Jet log(const Jet& a, int sheet = 0) {
    detail::require_nonzero(a[0], "log");
    const int K = a.order();
    std::vector<cplx> w(static_cast<std::size_t>(K) + 1, 0.0);
    w[0] = std::log(a[0]) + cplx(0.0, 2.0 * pi * sheet);
    for (int n = 1; n <= K; ++n) {
        cplx s = a[n];
        for (int k = 1; k < n; ++k) s -= static_cast<double>(k) / n * w[static_cast<std::size_t>(k)] * a[n - k];
        w[static_cast<std::size_t>(n)] = s / a[0];
    }
    return {a.anchor(), std::move(w)};
}

/// a^p with the constant term taken on sheet `sheet` of the logarithm.
inline Jet pow(const Jet& a, cplx p, int sheet = 0) {
    detail::require_nonzero(a[0], "pow");
    const int K = a.order();
    std::vector<cplx> w(static_cast<std::size_t>(K) + 1, 0.0);
    w[0] = std::exp(p * (std::log(a[0]) + cplx(0.0, 2.0 * pi * sheet)));
    // n a_0 w_n = sum_{k=1}^n ((p+1) k - n) a_k w_{n-k}
    for (int n = 1; n <= K; ++n) {
        cplx s = 0.0;
        for (int k = 1; k <= n; ++k)
            s += ((p + 1.0) * static_cast<double>(k) - static_cast<double>(n)) * a[k] * w[static_cast<std::size_t>(n - k)];
        w[static_cast<std::size_t>(n)] = s / (static_cast<double>(n) * a[0]);
    }
    return {a.anchor(), std::move(w)};
}

inline Jet pow(const Jet& a, double p, int sheet = 0) { return pow(a, cplx(p), sheet); }

/// Square root; sheet 0 is the principal branch at the constant term, sheet 1 its negative.
inline Jet sqrt(const Jet& a, int sheet = 0) { return pow(a, 0.5, sheet); }

/// Integer power by repeated squaring (no branch choice involved).
inline Jet pow(const Jet& a, int n) {
    if (n < 0) return 1.0 / pow(a, -n);
    Jet result = Jet::constant(1.0, a.anchor(), a.order());
    Jet base = a;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

namespace detail {

/// sin and cos of a jet together.
inline std::pair<Jet, Jet> sincos(const Jet& a) {
    const int K = a.order();
    std::vector<cplx> s(static_cast<std::size_t>(K) + 1, 0.0), c(static_cast<std::size_t>(K) + 1, 0.0);
    s[0] = std::sin(a[0]);
    c[0] = std::cos(a[0]);
    for (int n = 1; n <= K; ++n) {
        cplx ss = 0.0, cc = 0.0;
        for (int k = 1; k <= n; ++k) {
            ss += static_cast<double>(k) * a[k] * c[static_cast<std::size_t>(n - k)];
            cc -= static_cast<double>(k) * a[k] * s[static_cast<std::size_t>(n - k)];
        }
        s[static_cast<std::size_t>(n)] = ss / static_cast<double>(n);
        c[static_cast<std::size_t>(n)] = cc / static_cast<double>(n);
    }
    return {Jet(a.anchor(), std::move(s)), Jet(a.anchor(), std::move(c))};
}

}  // namespace detail

inline Jet sin(const Jet& a) { return detail::sincos(a).first; }
inline Jet cos(const Jet& a) { return detail::sincos(a).second; }
inline Jet sinh(const Jet& a) { return (exp(a) - exp(-a)) * 0.5; }
inline Jet cosh(const Jet& a) { return (exp(a) + exp(-a)) * 0.5; }

// --- calculus -----------------------------------------------------------------

inline Jet differentiate(const Jet& a) {
    if (a.order() < 1) throw domain_error("differentiate: jet of order 0 has no derivative information");
    std::vector<cplx> v(static_cast<std::size_t>(a.order()));
    for (int k = 0; k < a.order(); ++k) v[static_cast<std::size_t>(k)] = static_cast<double>(k + 1) * a[k + 1];
    return {a.anchor(), std::move(v)};
}

/// Antiderivative vanishing at the anchor; order grows by one.
inline Jet integrate(const Jet& a) {
    std::vector<cplx> v(static_cast<std::size_t>(a.order()) + 2, 0.0);
    for (int k = 0; k <= a.order(); ++k) v[static_cast<std::size_t>(k) + 1] = a[k] / static_cast<double>(k + 1);
    return {a.anchor(), std::move(v)};
}

/// Jet of (f(t) - f0)/(t - anchor). f0 must equal the constant term of f.
inline Jet remove_zero(const Jet& f, cplx f0) {
    const double tol = 1e-10 * std::max(1.0, std::abs(f0));
    if (std::abs(f[0] - f0) > tol) throw domain_error("remove_zero: f0 does not match the value of f at the anchor");
    if (f.order() < 1) throw domain_error("remove_zero: jet of order 0");
    std::vector<cplx> v(f.coeffs().begin() + 1, f.coeffs().end());
    return {f.anchor(), std::move(v)};
}

inline Jet remove_zero(const Jet& f) { return remove_zero(f, f[0]); }

/// outer(inner(t)); outer must be anchored at inner's constant term.
inline Jet compose(const Jet& outer, const Jet& inner) {
    const cplx A = outer.anchor();
    if (std::abs(inner[0] - A) > 1e-12 * std::max(1.0, std::abs(A)))
        throw domain_error("compose: outer jet is not anchored at the value of the inner jet");
    const int K = std::min(inner.order(), outer.order());
    Jet d = inner.truncated(K);
    d.at(0) = 0.0;  // inner - A, exactly zero constant term
    Jet r = Jet::constant(outer[outer.order()], inner.anchor(), K);
    for (int k = outer.order() - 1; k >= 0; --k) r = r * d + outer[k];
    return r;
}

/// Re-expands the jet around a new anchor b: the Taylor shift of the
/// truncated polynomial. Accurate when |b - anchor| is well inside the radius.
inline Jet taylor_shift(const Jet& f, cplx b) {
    const int K = f.order();
    Jet d = Jet::variable(b, K) - f.anchor();  // t - old anchor, at b
    Jet r = Jet::constant(f[K], b, K);
    for (int k = K - 1; k >= 0; --k) r = r * d + f[k];
    return r;
}

/// Compositional inverse: g with f(g(y)) = y near y = f(anchor), g(f(anchor)) = anchor.
inline Jet reversion(const Jet& f) {
    if (f.order() < 1 || f[1] == cplx{}) throw domain_error("reversion: first-order coefficient is zero");
    const int K = f.order();
    const cplx y0 = f[0];
    // Work with the zero-anchored series F(x) = f(anchor + x) - y0.
    Jet F(0.0, f.coeffs());
    F.at(0) = 0.0;
    const Jet dF = differentiate(F);
    // Newton iteration h <- h - (F(h) - y)/F'(h) on series in y.
    const Jet y = Jet::variable(0.0, K);
    Jet h = y / f[1];
    for (int it = 0; it < 64; ++it) {
        const Jet Fh = compose(F, h);
        const Jet dFh = compose(dF.truncated(K), h);
        Jet step = (Fh - y) / dFh;
        h = h - step;
        double m = 0.0;
        for (int k = 0; k <= K; ++k) m = std::max(m, std::abs(step[k]));
        double hm = 0.0;
        for (int k = 0; k <= K; ++k) hm = std::max(hm, std::abs(h[k]));
        if (m <= 4.0 * eps * hm) break;
        // Newton doubles the number of correct coefficients each step.
        if (it > 2 * static_cast<int>(std::log2(K + 2.0)) + 6) break;
    }
    std::vector<cplx> v(h.coeffs());
    v[0] = f.anchor();
    return {y0, std::move(v)};
}

// --- two-point splitting ----------------------------------------------------------

/// f(t) = a0 + b0 (t - alpha) + (t - alpha)(beta - t) g(t).
struct TwoPointSplit {
    cplx a0, b0;
    Jet g_alpha, g_beta;
};

enum class SplitMethod {
    automatic,  ///< series when the anchors are close, division otherwise
    division,   ///< divide the numerator jets by (t-alpha)(beta-t)
    series,     ///< sum the Taylor tail in powers of (beta-alpha)
};

namespace detail {

/// g coefficients at an anchor from that anchor's jet of f, with D the
/// offset to the other anchor: g_i = -sum_{k>=i+2} f_k D^{k-2-i}.
inline Jet split_series(const Jet& f, cplx D, int out_order) {
    const int K = f.order();
    std::vector<cplx> g(static_cast<std::size_t>(out_order) + 1, 0.0);
    for (int i = 0; i <= out_order; ++i) {
        // Horner in D over k = K .. i+2.
        cplx s = 0.0;
        for (int k = K; k >= i + 2; --k) s = s * D + f[k];
        g[static_cast<std::size_t>(i)] = -s;
    }
    return {f.anchor(), std::move(g)};
}

}  // namespace detail

inline TwoPointSplit two_point_split(const Jet& fa, const Jet& fb, cplx alpha, cplx beta,
                                     SplitMethod method = SplitMethod::automatic) {
    if (alpha == beta) throw domain_error("two_point_split: alpha equals beta (use the one-point variant)");
    if (fa.anchor() != alpha || fb.anchor() != beta)
        throw domain_error("two_point_split: jets must be anchored at alpha and beta");
    const int K = std::min(fa.order(), fb.order());
    if (K < 1) throw domain_error("two_point_split: jets need order >= 1");
    const cplx L = beta - alpha;
    const cplx a0 = fa[0];
    const cplx b0 = (fb[0] - fa[0]) / L;
    if (method == SplitMethod::automatic) method = std::abs(L) < 0.5 ? SplitMethod::series : SplitMethod::division;
    TwoPointSplit out{a0, b0, {}, {}};
    if (method == SplitMethod::series) {
        // b0 from the alpha jet is more accurate than the divided difference
        // when the anchors are close.
        cplx s = 0.0;
        for (int k = fa.order(); k >= 1; --k) s = s * L + fa[k];
        out.b0 = s;
        out.g_alpha = detail::split_series(fa, L, K - 1);
        out.g_beta = detail::split_series(fb, -L, K - 1);
        return out;
    }
    // Numerator N(t) = f - a0 - b0 (t - alpha) vanishes at both anchors.
    {
        Jet n = fa.truncated(K) - a0;
        n.at(1) -= b0;
        Jet q = remove_zero(n, 0.0);  // N/(t - alpha)
        Jet bt = Jet::constant(L, alpha, K - 1);
        bt.at(1) = -1.0;  // beta - t at alpha
        out.g_alpha = q / bt;
    }
    {
        Jet n = fb.truncated(K) - a0;
        n.at(0) -= b0 * L;
        n.at(1) -= b0;
        Jet q = remove_zero(n, 0.0);  // N/(t - beta)
        Jet ta = Jet::constant(L, beta, K - 1);
        ta.at(1) = 1.0;  // t - alpha at beta
        out.g_beta = -(q / ta);
    }
    return out;
}

// --- jet programs -----------------------------------------------------------

/// A function given as a program over jet arithmetic.
using JetProgram = std::function<Jet(const Jet&)>;

inline Jet jet_of(const JetProgram& f, cplx anchor, int order) { return f(Jet::variable(anchor, order)); }

inline cplx value_of(const JetProgram& f, cplx t) { return f(Jet::variable(t, 0))[0]; }

/// Default working order for N requested terms.
inline int default_jet_order(int n_terms) { return 2 * n_terms + 4; }

}  // namespace asymptotika
