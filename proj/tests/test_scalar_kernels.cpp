#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/special_functions/jacobi_elliptic.hpp>
#include <gtest/gtest.h>

#include <lame3trf/scalar_kernels.hpp>

using namespace lame3trf;

namespace
{

// Explicit finite sum in long double; the extra bits absorb its cancellation.
long double jacobi_explicit(int n, long double a, long double b, long double x)
{
    const auto poch = [](long double v, int k) {
        long double r = 1.0L;
        for (int j = 0; j < k; ++j) {
            r *= v + j;
        }
        return r;
    };
    const long double y = (x - 1.0L) / 2.0L;
    long double sum = 0.0L, ym = 1.0L, binom = 1.0L, fact = 1.0L;
    for (int m = 0; m <= n; ++m) {
        sum += binom * poch(m + a + 1.0L, n - m) * poch(n + a + b + 1.0L, m) * ym;
        binom = binom * (n - m) / (m + 1);
        ym *= y;
    }
    for (int k = 2; k <= n; ++k) {
        fact *= k;
    }
    return sum / fact;
}

} // namespace

TEST(Pochhammer, GammaRatio)
{
    for (double x : {0.3, 1.0, 2.75}) {
        for (int n = 0; n < 8; ++n) {
            EXPECT_NEAR(pochhammer(x, n), std::tgamma(x + n) / std::tgamma(x), 1e-12 * std::tgamma(x + n));
        }
    }
    EXPECT_EQ(pochhammer(-3.0, 4), 0.0);
}

TEST(Gauss2F1, LogarithmSpecialCase)
{
    for (double x : {-0.6, -0.1, 0.2, 0.5}) {
        const auto v = gauss_2f1(1.0, 1.0, 2.0, x, ToleranceConfig{1e-15, 1e-15, 200});
        EXPECT_NEAR(v.real(), -std::log1p(-x) / x, 1e-10);
    }
}

TEST(Gauss2F1, BinomialSpecialCase)
{
    for (double x : {-0.5, 0.3}) {
        const auto v = gauss_2f1(0.7, 1.9, 1.9, x);
        EXPECT_NEAR(v.real(), std::pow(1.0 - x, -0.7), 1e-10);
    }
}

TEST(Gauss2F1, TerminatesOutsideUnitDisc)
{
    // 2F1(-2, b; c; x) = 1 - 2 b x / c + b (b + 1) x^2 / (c (c + 1))
    const double b = 1.5;
    const double c = 0.75;
    const double x = 3.0;
    const double ref = 1.0 - 2.0 * b * x / c + b * (b + 1.0) * x * x / (c * (c + 1.0));
    EXPECT_NEAR(gauss_2f1(-2.0, b, c, x).real(), ref, 1e-12);
}

TEST(Gauss2F1, Errors)
{
    EXPECT_THROW((void)gauss_2f1(0.5, 0.5, 1.0, 1.2), non_convergence);
    EXPECT_THROW((void)gauss_2f1(-3.0, 1.0, -1.0, 0.5), invalid_parameter);
    ToleranceConfig bad;
    bad.max_terms = 0;
    EXPECT_THROW((void)gauss_2f1(0.5, 0.5, 1.0, 0.5, bad), invalid_parameter);
}

TEST(JacobiPolynomial, MatchesExplicitSum)
{
    for (int n = 0; n <= 12; ++n) {
        for (double x : {-0.9, -0.2, 0.4, 1.0}) {
            const double ref = static_cast<double>(jacobi_explicit(n, 0.3L, -0.45L, x));
            EXPECT_NEAR(jacobi_polynomial(n, 0.3, -0.45, x).real(), ref, 1e-11 * std::max(1.0, std::abs(ref)));
        }
    }
}

TEST(JacobiPolynomial, ReferenceValues)
{
    // high-precision values
    EXPECT_NEAR(jacobi_polynomial(12, 0.3, -0.45, -0.9).real(), 0.12813704399011977, 1e-15);
    EXPECT_NEAR(jacobi_polynomial(9, 0.3, -0.45, -0.2).real(), -0.22420957688496135, 1e-15);
    EXPECT_NEAR(jacobi_polynomial(5, 0.3, -0.45, 1.0).real(), 1.8739077499999999, 1e-14);
    EXPECT_THROW((void)jacobi_polynomial(-1, 0.0, 0.0, 0.5), invalid_parameter);
}

TEST(JacobiPolynomial, GeneratingFunction)
{
    const double a = 0.4;
    const double b = 1.1;
    for (double x : {-0.5, 0.3}) {
        for (double w : {-0.25, 0.2}) {
            complex_t sum = 0.0;
            for (int n = 0; n <= 80; ++n) {
                sum += static_cast<double>(jacobi_explicit(n, a, b, x)) * std::pow(w, n);
            }
            EXPECT_NEAR(std::abs(sum - jacobi_gf_closed<complex_t>(a, b, x, w)), 0.0, 1e-12);
        }
    }
}

TEST(Lemma1, RandomBoxInsideConvergence)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dg(0.6, 1.5), dA(0.1, 0.9), dw(-0.15, 0.15), dx(-0.2, 0.3);
    for (int k = 0; k < 50; ++k) {
        const double g = dg(rng), A = dA(rng), w = dw(rng), x = dx(rng);
        const auto r = lemma1_identity(g, A, w, x, 80);
        EXPECT_LT(r.gap, 1e-9) << g << " " << A << " " << w << " " << x;
    }
}

TEST(Lemma1, WZeroGivesOne)
{
    EXPECT_NEAR(std::abs(lemma1_closed_form<complex_t>(0.9, 0.4, 0.0, 0.2) - 1.0), 0.0, 1e-15);
    EXPECT_THROW((void)lemma1_identity(0.9, 0.4, 1.0, 0.2, 10), invalid_parameter);
}

TEST(Elliptic, AgreesWithBoost)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dz(-3.0, 3.0), dr(0.05, 0.95);
    for (int k = 0; k < 200; ++k) {
        const double z = dz(rng);
        const double rho = dr(rng);
        double cn = 0.0, dn = 0.0;
        const double sn = boost::math::jacobi_elliptic(rho, z, &cn, &dn);
        const auto e = jacobi_sncndn(z, rho);
        EXPECT_NEAR(e.sn, sn, 1e-13);
        EXPECT_NEAR(e.cn, cn, 1e-13);
        EXPECT_NEAR(e.dn, dn, 1e-13);
    }
}

TEST(Elliptic, Identities)
{
    for (double rho : {0.0, 0.3, 0.8}) {
        for (double z : {-1.7, 0.2, 2.4}) {
            const auto e = jacobi_sncndn(z, rho);
            EXPECT_NEAR(e.sn * e.sn + e.cn * e.cn, 1.0, 1e-14);
            EXPECT_NEAR(e.dn * e.dn + rho * rho * e.sn * e.sn, 1.0, 1e-14);
        }
    }
    EXPECT_NEAR(jacobi_sn(0.9, 0.0), std::sin(0.9), 1e-15);
}

TEST(Elliptic, SquaredInverseRoundTrip)
{
    for (double rho : {0.2, 0.5, 0.9}) {
        for (double xi : {0.0, 0.05, 0.4, 0.99}) {
            const double z = jacobi_sn2_inverse(xi, rho);
            const double sn = jacobi_sn(z, rho);
            EXPECT_NEAR(sn * sn, xi, 1e-12);
        }
    }
    EXPECT_THROW((void)jacobi_sn2_inverse(1.5, 0.5), invalid_parameter);
}
