#pragma once

// Structured asymptotic expansions: special-function prefactors times
// coefficient sequences times a scale rule for term n.

#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "types.hpp"

namespace asymptotika {

/// Phase interval [lo, hi] for the large parameter. An unbounded sector
/// carries lo = -inf, hi = inf.
struct Sector {
    double lo = -inf;
    double hi = inf;

    bool contains(cplx x) const {
        const double ph = std::arg(x);
        return ph >= lo && ph <= hi;
    }
};

/// One coefficient stream: prefactor(x) * coeffs[n] * scale(n, x).
struct Stream {
    std::string label;
    std::string prefactor_tag;
    std::map<std::string, cplx> bindings;
    std::function<cplx(cplx)> prefactor;
    std::vector<cplx> coeffs;
    std::function<cplx(int, cplx)> scale;

    cplx coefficient(int n) const {
        return n >= 0 && n < static_cast<int>(coeffs.size()) ? coeffs[static_cast<std::size_t>(n)] : cplx{};
    }
    cplx term(int n, cplx x) const {
        const cplx c = coefficient(n);
        if (c == cplx{}) return 0.0;
        return prefactor(x) * c * scale(n, x);
    }
};

enum class Combine {
    sum,             ///< sum of all streams
    twice_real_part  ///< 2 Re of the stream sum (conjugate contour contributions)
};

struct Expansion {
    std::string name;
    std::string large_parameter = "z";
    /// Value of the large parameter the expansion was built for.
    cplx param = 0.0;
    int n_terms = 0;
    std::vector<Stream> streams;
    Sector validity;
    Combine combine = Combine::sum;
    /// Exponent of the first neglected order, e.g. -(N + lambda).
    double remainder_order = 0.0;
    /// remainder_order is relative to the leading scale rather than absolute.
    bool relative_order = false;

    cplx term(int n, cplx x) const {
        cplx s = 0.0;
        for (const auto& st : streams) s += st.term(n, x);
        return combine == Combine::twice_real_part ? cplx(2.0 * s.real(), 0.0) : s;
    }
    cplx term(int n) const { return term(n, param); }

    EvalReport evaluate(cplx x, Truncation policy = Truncation::all) const {
        std::vector<cplx> terms;
        terms.reserve(static_cast<std::size_t>(n_terms));
        for (int n = 0; n < n_terms; ++n) terms.push_back(term(n, x));
        EvalReport r = summarize(std::move(terms), policy);
        if (!streams.empty()) {
            const Stream& lead = streams.front();
            for (int n = 0; n < n_terms; ++n) {
                r.coefficients.push_back(lead.coefficient(n));
                r.scales.push_back(lead.scale(n, x));
            }
        }
        r.outside_sector = !validity.contains(x);
        return r;
    }
    EvalReport evaluate(Truncation policy = Truncation::all) const { return evaluate(param, policy); }
};

/// x^p on the principal branch.
inline cplx cpow(cplx x, cplx p) { return p == cplx{} ? cplx(1.0) : std::exp(p * std::log(x)); }

}  // namespace asymptotika
