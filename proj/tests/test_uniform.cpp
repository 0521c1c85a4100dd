#include <asymptotika/expr.hpp>
#include <asymptotika/oracle.hpp>
#include <asymptotika/uniform.hpp>
#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>

using namespace asymptotika;

namespace {

using mp = boost::multiprecision::cpp_bin_float_50;

JetProgram prog(const char* text) { return parse_program(text); }

double airy_rhs(double z) {
    const double s = std::sqrt(1.0 - z * z);
    return std::log((1.0 + s) / z) - s;
}

}  // namespace

TEST(Vdw, ConstantAmplitudeIdentity) {
    for (double alpha : {1.0, 0.3, 0.0, -0.4})
        for (double w : {1.0, 9.0}) {
            const PoleProblem p{prog("1"), alpha, w, 2.0};
            const Expansion e = vdw_expand(p, 4);
            const EvalReport r = e.evaluate(w);
            const cplx want = 0.5 * std::exp(w * alpha * alpha) * erfc(cplx(alpha * std::sqrt(w))).value;
            EXPECT_LE(std::abs(r.value() - want), 1e-14 * std::abs(want)) << alpha << " " << w;
            for (int k = 0; k < 4; ++k) EXPECT_EQ(e.streams[1].coefficient(k), cplx(0.0));
        }
}

TEST(Vdw, UnitPoleAgainstQuadrature) {
    const PoleProblem p{prog("1"), 1.0, 1.0, 2.0};
    const OracleValue q = vdw_oracle(p);
    const double want = 0.5 * std::exp(1.0) * erfc(cplx(1.0)).value.real();
    EXPECT_NEAR(q.value.real(), want, 1e-12);
    EXPECT_NEAR(q.value.imag(), 0.0, 1e-12);
    EXPECT_NEAR(vdw_expand(p, 3).evaluate(1.0).value().real(), want, 1e-15);
}

TEST(Vdw, ExponentialAmplitude) {
    for (double alpha : {0.8, 0.2, -0.1}) {
        const double w = 25.0;
        const PoleProblem p{prog("exp(t)"), alpha, w, 2.0};
        const EvalReport r = vdw_expand(p, 4).evaluate(w);
        const EvalReport r5 = vdw_expand(p, 5).evaluate(w);
        const OracleValue q = vdw_oracle(p);
        EXPECT_LE(std::abs(r.value() - q.value), 2.0 * r5.term_mags[4] + q.est_error) << alpha;
    }
}

TEST(Vdw, RealLineConvention) {
    const double w = 16.0;
    const PoleProblem p{prog("exp(t)"), -0.3, w, 2.0};
    const cplx v = vdw_expand(p, 5, PoleConvention::real_line).evaluate(w).value();
    const OracleValue q = vdw_oracle(p, PoleConvention::real_line);
    EXPECT_LE(std::abs(v - q.value), 1e-6);
    const cplx c = vdw_expand(p, 5).evaluate(w).value();
    const cplx residue = std::exp(w * 0.09) * std::exp(cplx(0.0, -0.3));
    EXPECT_LE(std::abs(c - v - residue), 1e-12 * std::abs(residue));
}

TEST(Vdw, ContinuousThroughZero) {
    const double w = 20.0;
    auto value = [w](double a) { return vdw_expand({prog("exp(t)"), a, w, 2.0}, 3).evaluate(w).value(); };
    const cplx v0 = value(0.0);
    double prev = inf;
    for (double h : {1e-2, 1e-3, 1e-4, 1e-5}) {
        const double gap = std::max(std::abs(value(h) - v0), std::abs(value(-h) - v0));
        EXPECT_LT(gap, prev);
        EXPECT_LE(gap, 2.0 * std::sqrt(w / pi) * h + 1e-14) << h;
        prev = gap;
    }
}

TEST(Vdw, StripViolation) {
    EXPECT_THROW(vdw_expand({prog("1"), 3.0, 1.0, 2.0}, 2), domain_error);
    EXPECT_THROW(vdw_expand({prog("1"), cplx(1.5, 1.5), 1.0, 2.0}, 2), domain_error);
}

TEST(Vdw, CoefficientsConvergeAtConfluence) {
    const std::vector<cplx> c0 = vdw_coefficients(prog("exp(t)"), 0.0, 6);
    for (int k = 0; k <= 6; ++k) EXPECT_NEAR(c0[static_cast<std::size_t>(k)].real(), 1.0 / std::tgamma(k + 2.0), 1e-16);
    double prev = inf;
    for (double a : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5}) {
        const std::vector<cplx> c = vdw_coefficients(prog("exp(t)"), a, 6);
        double d = 0.0;
        for (int k = 0; k <= 6; ++k) d = std::max(d, std::abs(c[static_cast<std::size_t>(k)] - c0[static_cast<std::size_t>(k)]));
        EXPECT_LT(d, prev);
        prev = d;
    }
    EXPECT_LT(prev, 1e-5);
    // The series and division forms agree across their switch.
    const std::vector<cplx> lo = vdw_coefficients(prog("exp(t)"), 0.5 - 1e-9, 6);
    const std::vector<cplx> hi = vdw_coefficients(prog("exp(t)"), 0.5 + 1e-9, 6);
    for (int k = 0; k <= 6; ++k) EXPECT_LE(std::abs(lo[static_cast<std::size_t>(k)] - hi[static_cast<std::size_t>(k)]), 1e-8);
}

TEST(DeBruijn, ClosedFormCoefficients) {
    for (double beta : {0.01, 0.1, 0.5, 1.0}) {
        const mp b = beta, cb = cos(b), b2 = b * b;
        const double c0 = static_cast<double>((1 - cb) / b2);
        const double c1 = static_cast<double>((b2 - 2 + 2 * cb) / (4 * b2 * b2));
        const double c2 = static_cast<double>((b2 * b2 - 12 * b2 + 24 - 24 * cb) / (32 * b2 * b2 * b2));
        const std::vector<cplx> c = debruijn_coefficients(prog("exp(t)"), beta, 3);
        EXPECT_NEAR(c[0].real(), c0, 1e-12) << beta;
        EXPECT_NEAR(c[1].real(), c1, 1e-12) << beta;
        EXPECT_NEAR(c[2].real(), c2, 1e-12) << beta;
    }
}

TEST(DeBruijn, SmallBetaLimit) {
    double prev = inf;
    for (double beta : {1e-1, 1e-2, 1e-3, 1e-4}) {
        const double d = std::abs(debruijn_coefficients(prog("exp(t)"), beta, 1)[0].real() - 0.5);
        EXPECT_LT(d, prev);
        prev = d;
    }
    EXPECT_LT(prev, 1e-8);
}

TEST(DeBruijn, AgainstQuadrature) {
    const double w = 30.0;
    const EvalReport r = debruijn_expand(prog("exp(t)"), 1.0, w, 3).evaluate(w);
    const OracleValue q = debruijn_oracle(prog("exp(t)"), 1.0, w);
    EXPECT_LE(std::abs(r.value() - q.value), 1e-4 * std::abs(q.value));
}

TEST(DeBruijn, LeadingTermAtUnitBeta) {
    // omega = 1 with alpha_exp = 1 puts beta = 1: the pole part is beta cos(beta) pi e erfc(1).
    const Expansion e = debruijn_expand(prog("exp(t)"), 1.0, 1.0, 1);
    const cplx lead = e.streams[0].term(0, 1.0);
    EXPECT_NEAR(lead.real(), std::cos(1.0) * pi * std::exp(1.0) * erfc(cplx(1.0)).value.real(), 1e-14);
}

TEST(DeBruijn, Errors) {
    EXPECT_THROW(debruijn_expand(prog("1"), 0.0, 10.0, 2), domain_error);
    EXPECT_THROW(debruijn_expand(prog("1"), 1.0, -1.0, 2), domain_error);
}

TEST(AiryMap, EtaSeries) {
    const std::vector<double> z = airy_eta_series(4);
    const double want[5] = {1.0, -1.0, 3.0 / 10.0, 1.0 / 350.0, -479.0 / 63000.0};
    for (int n = 0; n < 5; ++n) EXPECT_NEAR(z[static_cast<std::size_t>(n)], want[n], 1e-14) << n;
}

TEST(AiryMap, TurningPoint) {
    const AiryMap m = airy_map(1.0);
    EXPECT_EQ(m.zeta, 0.0);
    EXPECT_NEAR(m.g_at_saddle, std::cbrt(2.0), 1e-15);
    EXPECT_THROW(airy_map(0.0), domain_error);
}

TEST(AiryMap, SeamConsistency) {
    for (double z : {0.94, 0.96, 1.04, 1.06}) {
        const double series = detail::airy_zeta_of_w(40).evaluate(1.0 - z).real();
        EXPECT_NEAR(series, detail::airy_zeta_direct(z), 1e-10) << z;
    }
}

TEST(AiryMap, MonotoneAndIdentity) {
    double prev = inf;
    for (double z = 0.02; z < 4.0; z += 0.01) {
        const AiryMap m = airy_map(z);
        EXPECT_LT(m.zeta, prev) << z;
        EXPECT_EQ(m.zeta > 0.0, z < 1.0) << z;
        prev = m.zeta;
        if (z <= 1.0) {
            EXPECT_NEAR(2.0 / 3.0 * std::pow(m.zeta, 1.5), airy_rhs(z), 1e-12) << z;
        }
    }
}

TEST(AiryBessel, TurningPointValue) {
    const double nu = 50.0;
    const EvalReport r = airy_bessel_j(nu, 1.0, 1);
    const double lead = std::cbrt(2.0) * airy_ai(0.0).value.real() / std::cbrt(nu);
    EXPECT_NEAR(r.value().real(), lead, 1e-15);
    const double ref = bessel_j_ref(nu, nu).value.real();
    EXPECT_LE(std::abs(airy_bessel_j(nu, 1.0, 2).value().real() - ref), 10.0 / (nu * nu) * std::abs(ref));
}

TEST(AiryBessel, UniformOnGrid) {
    const double nu = 50.0;
    for (double z : {0.6, 0.9, 1.0, 1.1, 1.5}) {
        const double ref = bessel_j_ref(nu, nu * z).value.real();
        EXPECT_LE(std::abs(airy_bessel_j(nu, z, 2).value().real() - ref), 5e-3 * std::abs(ref)) << z;
    }
}

TEST(AiryBessel, ZerosTrackOracle) {
    const double nu = 30.0, h = 0.01;
    std::vector<double> za, zb;
    double pa = airy_bessel_j(nu, 1.0, 1).value().real(), pb = bessel_j_ref(nu, nu).value.real();
    for (double z = 1.0 + h; z <= 2.0; z += h) {
        const double a = airy_bessel_j(nu, z, 1).value().real(), b = bessel_j_ref(nu, nu * z).value.real();
        if ((a > 0) != (pa > 0)) za.push_back(z);
        if ((b > 0) != (pb > 0)) zb.push_back(z);
        pa = a;
        pb = b;
    }
    ASSERT_GE(zb.size(), 4u);
    ASSERT_EQ(za.size(), zb.size());
    for (std::size_t k = 0; k < za.size(); ++k) EXPECT_NEAR(za[k], zb[k], 1.01 * h) << k;
}

TEST(AiryBessel, Errors) {
    EXPECT_THROW(airy_bessel_j(50.0, 1.0, 3), domain_error);
    EXPECT_THROW(airy_bessel_j(-1.0, 1.0, 1), domain_error);
    EXPECT_TRUE(airy_bessel_j(3.0, 1.0, 1).outside_sector);
}

TEST(LogSeries, IntegralIdentity) {
    const int n = 50;
    const double z = 0.9;
    const OracleValue q = sn_integral_oracle(n, z);
    const double rhs = -std::log1p(-z) - std::pow(z, n + 1) * q.value.real();
    EXPECT_NEAR(sn_direct(n, z), rhs, 1e-10);
}

TEST(LogSeries, UniformAgainstDirectSum) {
    for (int n : {10, 20, 50, 400})
        for (double z : {0.3, 0.9, 0.97, 0.999, 1.0}) {
            const double v = sn_uniform(n, z, 6).value().real();
            const double d = sn_direct(n, z);
            EXPECT_LE(std::abs(v - d), 1e-6 * std::abs(d)) << n << " " << z;
        }
}

TEST(LogSeries, HarmonicGrowth) {
    double prev = inf;
    for (long n : {1000L, 1000000L}) {
        const double s = sn_uniform(static_cast<int>(n), 1.0, 4).value().real();
        const double ln = std::log(static_cast<double>(n));
        EXPECT_NEAR(s - ln, euler_gamma, 1.0 / n);
        EXPECT_NEAR(s, sn_direct(n, 1.0), 1e-10 * s);
        EXPECT_LT(std::abs(s / ln - 1.0), prev);
        prev = std::abs(s / ln - 1.0);
    }
}

TEST(LogSeries, FixedArgumentLimit) {
    const double z = 0.5;
    double prev = inf;
    for (int n : {10, 20, 40, 80}) {
        const double d = std::abs(sn_uniform(n, z).value().real() + std::log1p(-z));
        EXPECT_LT(d, prev);
        prev = d;
    }
    EXPECT_LT(prev, 1e-20);
}

TEST(LogSeries, DomainErrors) {
    EXPECT_THROW(sn_uniform(50, 0.0), domain_error);
    EXPECT_THROW(sn_uniform(50, 1.1), domain_error);
    EXPECT_THROW(sn_uniform(5, 0.5), domain_error);
    EXPECT_EQ(sn_uniform(50, 0.5, 0).size(), 0u);
}
