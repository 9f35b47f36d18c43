#include <cmath>

#include <gtest/gtest.h>

#include <lame3trf/power_series.hpp>

using namespace lame3trf;

namespace
{

TaylorSeries geometric(std::size_t d)
{
    // 1 / (1 - x) = 1 + x + x^2 + ...
    return TaylorSeries(std::vector<complex_t>(d + 1, 1.0));
}

} // namespace

TEST(TaylorSeries, ConstantAndVariable)
{
    const auto c = TaylorSeries::constant(2.5, 4);
    EXPECT_EQ(c.degree(), 4u);
    EXPECT_EQ(c[0], complex_t(2.5));
    EXPECT_EQ(c[3], complex_t(0.0));
    const auto x = TaylorSeries::variable(0.3, 4);
    EXPECT_EQ(x[0], complex_t(0.3));
    EXPECT_EQ(x[1], complex_t(1.0));
}

TEST(TaylorSeries, DivisionInvertsMultiplication)
{
    const std::size_t d = 12;
    const auto one_minus_x = TaylorSeries::constant(1.0, d) - TaylorSeries::variable(0.0, d);
    const auto g = TaylorSeries::constant(1.0, d) / one_minus_x;
    const auto ref = geometric(d);
    for (std::size_t k = 0; k <= d; ++k) {
        EXPECT_NEAR(std::abs(g[k] - ref[k]), 0.0, 1e-15);
    }
    const auto back = g * one_minus_x;
    EXPECT_NEAR(std::abs(back[0] - 1.0), 0.0, 1e-15);
    for (std::size_t k = 1; k <= d; ++k) {
        EXPECT_NEAR(std::abs(back[k]), 0.0, 1e-14);
    }
}

TEST(TaylorSeries, PowMatchesBinomialSeries)
{
    const std::size_t d = 10;
    const double e = -0.37;
    const auto f = TaylorSeries::constant(1.0, d) + TaylorSeries::variable(0.0, d);
    const auto p = pow(f, e);
    double binom = 1.0;
    for (std::size_t k = 0; k <= d; ++k) {
        EXPECT_NEAR(std::abs(p[k] - binom), 0.0, 1e-14) << "k=" << k;
        binom *= (e - static_cast<double>(k)) / (k + 1.0);
    }
}

TEST(TaylorSeries, SqrtSquaresBack)
{
    const std::size_t d = 8;
    const TaylorSeries f({2.0, -0.5, 0.25, 0.1, 0.0, 0.3, 0.0, 0.0, 1.0});
    const auto r = sqrt(f);
    const auto sq = r * r;
    for (std::size_t k = 0; k <= d; ++k) {
        EXPECT_NEAR(std::abs(sq[k] - f[k]), 0.0, 1e-14);
    }
}

TEST(TaylorSeries, EvaluateAndDerivative)
{
    const TaylorSeries f({1.0, 2.0, 3.0});
    EXPECT_NEAR(std::abs(f.evaluate(0.5) - complex_t(1.0 + 1.0 + 0.75)), 0.0, 1e-15);
    const auto df = f.derivative();
    EXPECT_NEAR(std::abs(df[0] - 2.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(df[1] - 6.0), 0.0, 1e-15);
}

TEST(TaylorSeries, ComposeWithGeometric)
{
    // 1/(1 - y) with y = x/2 gives 2^-k
    const std::size_t d = 9;
    const auto inner = TaylorSeries::variable(0.0, d) * complex_t(0.5);
    const auto c = compose(geometric(d), inner);
    for (std::size_t k = 0; k <= d; ++k) {
        EXPECT_NEAR(std::abs(c[k] - std::pow(0.5, k)), 0.0, 1e-15);
    }
}

TEST(TaylorSeries, Errors)
{
    const auto x = TaylorSeries::variable(0.0, 4);
    EXPECT_THROW((void)(TaylorSeries::constant(1.0, 4) / x), pole_error);
    EXPECT_THROW((void)sqrt(x), singular_point);
    EXPECT_THROW((void)pow(x, 0.5), singular_point);
    EXPECT_THROW((void)compose(geometric(4), TaylorSeries::variable(0.1, 4)), error);
}
