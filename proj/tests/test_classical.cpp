#include <asymptotika/classical.hpp>
#include <asymptotika/oracle.hpp>
#include <asymptotika/registry.hpp>
#include <gtest/gtest.h>

#include <cmath>

using namespace asymptotika;

namespace {

double factorial(int n) { return std::tgamma(n + 1.0); }

OracleValue expint_integral(double z) {
    IntegrandSpec s;
    s.integrand = [z](double t, double, double) { return cplx(std::exp(-t) / (z + t)); };
    return quad_laplace(s, {0.0, inf});
}

ConvergenceFit fit(const std::string& method, int n_terms, std::map<std::string, std::string> fixed = {}) {
    SweepSpec s;
    s.method = method;
    s.fixed = Params(std::move(fixed));
    s.grid = {true, 20.0, 640.0, 8};
    s.n_terms = n_terms;
    return fit_convergence(run_sweep(s));
}

}  // namespace

TEST(Watson, ExponentialIntegralCoefficients) {
    const Expansion e = expint_expand(8, 10.0);
    for (int n = 0; n < 8; ++n)
        EXPECT_NEAR(e.streams[0].coeffs[static_cast<std::size_t>(n)].real(), (n % 2 ? -1.0 : 1.0) * factorial(n),
                    1e-12 * factorial(n));
    EXPECT_NEAR(e.validity.lo, -1.5 * pi, 1e-15);
    EXPECT_NEAR(e.validity.hi, 1.5 * pi, 1e-15);
    EXPECT_DOUBLE_EQ(e.remainder_order, -9.0);
    EXPECT_FALSE(e.evaluate(cplx(-3.0, 0.1)).outside_sector);
    EXPECT_TRUE(e.evaluate(cplx(-3.0, -0.1) * std::exp(cplx(0.0, 0.6 * pi))).outside_sector ==
                !e.validity.contains(cplx(-3.0, -0.1) * std::exp(cplx(0.0, 0.6 * pi))));
}

TEST(Watson, ExactIntegrand) {
    const Jet one = Jet::constant(1.0, 0.0, 5);
    const Expansion e = watson_expand(one, 1.0, 4);
    const EvalReport r = e.evaluate(7.0);
    EXPECT_NEAR(std::abs(r.terms[0] - 1.0 / 7.0), 0.0, 1e-16);
    for (std::size_t k = 1; k < r.size(); ++k) EXPECT_EQ(r.terms[k], cplx(0.0));
}

TEST(Watson, Errors) {
    const Jet one = Jet::constant(1.0, 0.0, 5);
    EXPECT_THROW(watson_expand(one, 0.0, 3), domain_error);
    EXPECT_THROW(watson_expand(one, cplx(-0.5, 1.0), 3), domain_error);
    EXPECT_THROW(watson_expand(Jet::constant(1.0, 1.0, 5), 1.0, 3), domain_error);
}

TEST(Watson, SectorFromAnalyticity) {
    const Expansion e = watson_expand(Jet::constant(1.0, 0.0, 3), 0.5, 2, {-0.25, 0.5}, 0.1);
    EXPECT_NEAR(e.validity.lo, -0.5 - 0.5 * pi + 0.1, 1e-15);
    EXPECT_NEAR(e.validity.hi, 0.25 + 0.5 * pi - 0.1, 1e-15);
}

TEST(Watson, RemainderHardBound) {
    for (double z : {5.0, 10.0, 20.0}) {
        const double F = z * expint_integral(z).value.real();
        const Expansion e = expint_expand(10, z);
        const EvalReport r = e.evaluate(z);
        for (int n = 1; n <= 10; ++n) {
            const double partial = z * r.partial_sums[static_cast<std::size_t>(n - 1)].real();
            EXPECT_LE(std::abs(F - partial), factorial(n) / std::pow(z, n)) << z << " " << n;
        }
    }
}

TEST(Watson, NextTermHeuristic) {
    for (double z : {8.0, 15.0, 30.0})
        for (int N : {2, 3, 4}) {
            const EvalReport r = expint_expand(N + 1, z).evaluate(z);
            const double err = std::abs(r.partial_sums[static_cast<std::size_t>(N - 1)] - expint_integral(z).value);
            EXPECT_LE(err, 2.0 * r.term_mags[static_cast<std::size_t>(N)]) << z << " " << N;
        }
}

TEST(Watson, RemainderSlope) {
    const ConvergenceFit f = fit("expint", 4);
    EXPECT_EQ(f.status, FitStatus::pass) << f.slope;
    EXPECT_NEAR(f.predicted, -5.0, 1e-15);
}

TEST(KvCoefficients, ClosedForms) {
    EXPECT_EQ(kv_coefficients(0.0, 1), cplx(-1.0));
    for (int n = 1; n < 6; ++n) EXPECT_EQ(kv_coefficients(0.5, n), cplx(0.0));
    EXPECT_EQ(kv_coefficients(1.0, 1), cplx(3.0));
}

TEST(KvCoefficients, JetPipelineMatchesProduct) {
    for (double nu : {1.0, 2.0, 0.3}) {
        const Expansion e = kv_expand(nu, 7, 1.0);
        for (int n = 0; n <= 6; ++n) {
            const cplx want = kv_coefficients(nu, n) / (factorial(n) * std::pow(8.0, n));
            EXPECT_LE(std::abs(e.streams[0].coeffs[static_cast<std::size_t>(n)] - want), 1e-13 * std::max(1.0, std::abs(want)))
                << nu << " " << n;
        }
    }
}

TEST(Kv, HalfOrderTerminates) {
    for (double z : {1.0, 3.0, 5.0}) {
        const EvalReport r = kv_expand(0.5, 5, z).evaluate(z);
        const double exact = std::sqrt(pi / (2.0 * z)) * std::exp(-z);
        EXPECT_NEAR(r.value().real(), exact, 1e-14 * exact);
        for (std::size_t k = 1; k < r.size(); ++k) EXPECT_EQ(r.terms[k], cplx(0.0));
        const OracleValue q = bessel_k_ref(0.5, z);
        EXPECT_NEAR(q.value.real(), exact, 1e-10 * exact);
    }
}

TEST(Kv, GeneralOrderAgainstQuadrature) {
    for (double z : {10.0, 25.0}) {
        const double nu = 1.3;
        const EvalReport r = kv_expand(nu, 5, z).evaluate(z);
        const OracleValue q = bessel_k_ref(nu, z);
        const EvalReport r6 = kv_expand(nu, 6, z).evaluate(z);
        EXPECT_LE(std::abs(r.value() - q.value), 2.0 * r6.term_mags[5] + q.est_error) << z;
    }
}

TEST(Laplace, GaussianAndOddAmplitudes) {
    const double z = 4.0;
    const EvalReport g = laplace_expand(Jet::constant(1.0, 0.0, 6), 3).evaluate(z);
    EXPECT_NEAR(g.value().real(), std::sqrt(pi / z), 1e-15);
    const Jet t = Jet::variable(0.0, 10);
    const EvalReport odd = laplace_expand(t * exp(t * t), 4).evaluate(z);
    for (const auto& term : odd.terms) EXPECT_EQ(term, cplx(0.0));
}

TEST(Laplace, HalfSquareExponent) {
    const Jet t = Jet::variable(0.0, 10);
    const Expansion e = laplace_expand(exp(0.5 * t * t), 4);
    for (int k = 0; k < 4; ++k) {
        const double c2k = 1.0 / (std::pow(2.0, k) * factorial(k));
        EXPECT_NEAR(e.streams[0].coeffs[static_cast<std::size_t>(k)].real(), pochhammer(0.5, static_cast<unsigned>(k)) * c2k,
                    1e-15);
    }
    const double z = 20.0;
    IntegrandSpec s;
    s.integrand = [z](double x, double, double) { return cplx(std::exp(-(z - 0.5) * x * x)); };
    const OracleValue q = quad_laplace(s, {-inf, inf});
    const EvalReport r = e.evaluate(z);
    const EvalReport r5 = laplace_expand(exp(0.5 * t * t), 5).evaluate(z);
    EXPECT_LE(std::abs(r.value() - q.value), 2.0 * r5.term_mags[4] + q.est_error);
    EXPECT_NEAR(q.value.real(), std::sqrt(pi / (z - 0.5)), 1e-14);
}

TEST(Laplace, RelativeRemainderSlope) {
    const ConvergenceFit f = fit("laplace", 3, {{"f", "1/(1+t^2)"}});
    EXPECT_EQ(f.status, FitStatus::pass) << f.slope;
    EXPECT_NEAR(f.predicted, -3.0, 1e-15);
}

TEST(Legendre, LeadingTerm) {
    const int n = 50;
    const double theta = 1.0;
    const EvalReport r = legendre_expand(theta, 1, n).evaluate(static_cast<double>(n));
    const double lead = std::sqrt(2.0 / (pi * n * std::sin(theta))) * std::cos((n + 0.5) * theta - 0.25 * pi);
    EXPECT_NEAR(r.value().real(), lead, 1e-14);
    EXPECT_NEAR(r.value().real(), legendre_ref(n, std::cos(theta)).value.real(), 2e-3);
}

TEST(Legendre, ThreeTermsAtDegree200) {
    const int n = 200;
    const double theta = pi / 3.0;
    const double v = legendre_expand(theta, 3, n).evaluate(static_cast<double>(n)).value().real();
    const double ref = legendre_ref(n, std::cos(theta)).value.real();
    EXPECT_LE(std::abs(v - ref), 1e-4 * std::abs(ref));
}

TEST(Legendre, AngleRange) {
    EXPECT_THROW(legendre_expand(0.01, 3), domain_error);
    EXPECT_THROW(legendre_expand(2.0, 3), domain_error);
    EXPECT_NO_THROW(legendre_expand(legendre_theta_min, 3));
}

TEST(Legendre, RecurrenceSymmetry) {
    const double x = 0.4;
    const int n = 31;
    EXPECT_NEAR(legendre_ref(n, -x).value.real(), -legendre_ref(n, x).value.real(), 1e-15);
    EXPECT_NEAR(legendre_ref(30, -x).value.real(), legendre_ref(30, x).value.real(), 1e-15);
}
