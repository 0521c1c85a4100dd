#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

namespace asymptotika {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double eps = std::numeric_limits<double>::epsilon();
inline constexpr double inf = std::numeric_limits<double>::infinity();

inline bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// How a special-function value was produced.
enum class Method { series, asymptotic, continued_fraction, quadrature };

inline const char* to_string(Method m) {
    switch (m) {
        case Method::series: return "series";
        case Method::asymptotic: return "asymptotic";
        case Method::continued_fraction: return "continued-fraction";
        case Method::quadrature: return "quadrature";
    }
    return "?";
}

/// A special-function value with the absolute error bound its routine commits to.
struct SpecialValue {
    cplx value;
    Method method = Method::series;
    double est_error = 0.0;
};

enum class Truncation {
    all,            ///< sum every computed term
    smallest_term,  ///< stop after the term of smallest magnitude
};

/// Partial sums of an asymptotic expansion at one parameter point.
struct EvalReport {
    std::vector<cplx> terms;
    std::vector<cplx> partial_sums;
    std::vector<double> term_mags;
    /// Coefficient and scale factor of the leading stream for each term (table output).
    std::vector<cplx> coefficients;
    std::vector<cplx> scales;
    /// Number of terms that make up value().
    std::size_t truncation_index = 0;
    std::size_t smallest_term_index = 0;
    /// Term magnitudes stopped decreasing before the last term.
    bool terms_non_decreasing = false;
    /// The evaluation point lies outside the recorded validity sector.
    bool outside_sector = false;

    std::size_t size() const { return terms.size(); }
    cplx value() const { return truncation_index == 0 ? cplx{} : partial_sums[truncation_index - 1]; }
    /// Magnitude of the first term left out of value(); zero when every term was used.
    double first_omitted() const {
        return truncation_index < term_mags.size() ? term_mags[truncation_index] : 0.0;
    }
};

/// Builds partial sums and the smallest-term diagnostics from a list of terms.
inline EvalReport summarize(std::vector<cplx> terms, Truncation policy = Truncation::all) {
    EvalReport r;
    r.terms = std::move(terms);
    const std::size_t n = r.terms.size();
    r.partial_sums.reserve(n);
    r.term_mags.reserve(n);
    cplx sum{};
    for (const auto& t : r.terms) {
        sum += t;
        r.partial_sums.push_back(sum);
        r.term_mags.push_back(std::abs(t));
    }
    for (std::size_t k = 1; k < n; ++k)
        if (r.term_mags[k] < r.term_mags[r.smallest_term_index]) r.smallest_term_index = k;
    r.terms_non_decreasing = n > 0 && r.smallest_term_index + 1 < n &&
                             r.term_mags[r.smallest_term_index] > 0.0;
    r.truncation_index = policy == Truncation::all || n == 0 ? n : r.smallest_term_index + 1;
    return r;
}

}  // namespace asymptotika
