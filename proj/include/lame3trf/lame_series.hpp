#ifndef LAME3TRF_LAME_SERIES_HPP
#define LAME3TRF_LAME_SERIES_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "scalar_kernels.hpp"

namespace lame3trf
{

struct LameParams {
    double rho = 0.5;
    double alpha = 0.0;
    double h = 0.0;

    void validate() const
    {
        if (!(rho > 0.0 && rho < 1.0)) {
            throw invalid_parameter("LameParams: rho must lie in (0, 1)");
        }
        if (!std::isfinite(alpha) || !std::isfinite(h)) {
            throw invalid_parameter("LameParams: alpha and h must be finite");
        }
    }

    // rho^{-2}
    double a() const { return 1.0 / (rho * rho); }
};

enum class SolutionKind { first, second };

struct IndicialExponent {
    double lambda = 0.0;

    static IndicialExponent first() { return {0.0}; }
    static IndicialExponent second() { return {0.5}; }

    static IndicialExponent from_value(double lambda)
    {
        if (lambda == 0.0) {
            return first();
        }
        if (lambda == 0.5) {
            return second();
        }
        throw invalid_parameter("IndicialExponent: lambda must be 0 or 1/2");
    }

    SolutionKind kind() const { return lambda == 0.0 ? SolutionKind::first : SolutionKind::second; }

    friend bool operator==(const IndicialExponent &, const IndicialExponent &) = default;
};

// Roots of lambda (lambda - 1) + lambda / 2 = 0.
inline std::vector<IndicialExponent> indicial_exponents(const LameParams &params)
{
    params.validate();
    return {IndicialExponent::first(), IndicialExponent::second()};
}

struct RecurrenceCoeffs {
    double A;
    double B;
    // alpha (alpha + 1) - 2 (n - 1 + lambda)(2 (n + lambda) - 1), before division by D
    double B_numerator;
    double D;
};

// c_{n+1} = A_n c_n + B_n c_{n-1}, obtained by substituting sum c_n xi^{n+lambda} into the algebraic form.
inline RecurrenceCoeffs recurrence_coeffs(const LameParams &params, IndicialExponent lambda, int n)
{
    if (n < 0) {
        throw index_error("recurrence_coeffs: negative index");
    }
    const double a = params.a();
    const double l = lambda.lambda;
    const double nl = n + l;
    const double D = 2.0 * a * (nl + 1.0) * (2.0 * nl + 1.0);
    const double A = (4.0 * (1.0 + a) * nl * nl - params.h * a) / D;
    double Bnum = 0.0;
    if (n > 0) {
        Bnum = params.alpha * (params.alpha + 1.0) - 2.0 * (nl - 1.0) * (2.0 * nl - 1.0);
    }
    return {A, Bnum / D, Bnum, D};
}

struct FrobeniusSeries {
    IndicialExponent lambda;
    std::vector<double> c;

    int N() const { return static_cast<int>(c.size()) - 1; }
};

inline FrobeniusSeries series_coefficients(const LameParams &params, IndicialExponent lambda, double c0, int N)
{
    params.validate();
    if (c0 == 0.0) {
        throw invalid_parameter("series_coefficients: c0 must be nonzero");
    }
    if (N < 0) {
        throw invalid_parameter("series_coefficients: N must be >= 0");
    }
    FrobeniusSeries s{lambda, std::vector<double>(static_cast<std::size_t>(N) + 1)};
    s.c[0] = c0;
    if (N >= 1) {
        s.c[1] = recurrence_coeffs(params, lambda, 0).A * c0;
    }
    for (int n = 1; n < N; ++n) {
        const auto rc = recurrence_coeffs(params, lambda, n);
        s.c[n + 1] = rc.A * s.c[n] + rc.B * s.c[n - 1];
    }
    return s;
}

struct EvaluationPoint {
    double xi = 0.0;
    double mu = 0.0;
    double eta = 0.0;
    std::optional<double> z;

    static EvaluationPoint from_xi(double xi, double rho) { return {xi, -rho * rho * xi, -rho * rho * xi * xi, std::nullopt}; }

    static EvaluationPoint from_z(double z, double rho)
    {
        const double sn = jacobi_sn(z, rho);
        EvaluationPoint pt = from_xi(sn * sn, rho);
        pt.z = z;
        return pt;
    }
};

using WarningHandler = std::function<void(const std::string &)>;

inline void stderr_warning(const std::string &msg) { std::cerr << "warning: " << msg << '\n'; }

// y, dy/dxi, d2y/dxi2 at one point.
struct SeriesJet {
    double y = 0.0;
    double dy = 0.0;
    double d2y = 0.0;
};

inline SeriesJet series_jet(const FrobeniusSeries &series, double xi)
{
    const double l = series.lambda.lambda;
    if (l != 0.0 && xi < 0.0) {
        throw invalid_parameter("series evaluation: xi < 0 with lambda = 1/2 is off the real branch");
    }
    // p(xi) = sum c_n xi^n and its first two derivatives by Horner
    double p = 0.0;
    double dp = 0.0;
    double d2p = 0.0;
    for (int n = series.N(); n >= 0; --n) {
        d2p = d2p * xi + 2.0 * dp;
        dp = dp * xi + p;
        p = p * xi + series.c[n];
    }
    if (l == 0.0) {
        return {p, dp, d2p};
    }
    if (xi == 0.0) {
        throw singular_point("series derivatives: xi^{1/2} is not differentiable at 0");
    }
    const double r = std::sqrt(xi);
    return {r * p, r * (dp + 0.5 * p / xi), r * (d2p + dp / xi - 0.25 * p / (xi * xi))};
}

inline double eval_series(const FrobeniusSeries &series, const EvaluationPoint &pt,
                          const WarningHandler &warn = stderr_warning)
{
    if (std::abs(pt.xi) > 0.5 && warn) {
        warn("eval_series: |xi| > 0.5, truncated series may be inaccurate");
    }
    const double l = series.lambda.lambda;
    if (l != 0.0 && pt.xi < 0.0) {
        throw invalid_parameter("eval_series: xi < 0 with lambda = 1/2 is off the real branch");
    }
    double p = 0.0;
    for (int n = series.N(); n >= 0; --n) {
        p = p * pt.xi + series.c[n];
    }
    return l == 0.0 ? p : std::sqrt(pt.xi) * p;
}

enum class OdeForm { algebraic, weierstrass };

struct Residual {
    double value;
    // sum of the magnitudes of the individual terms
    double scale;

    double relative() const { return scale == 0.0 ? 0.0 : std::abs(value) / scale; }
    // relative for large terms, absolute once every term is below one
    double mixed() const { return std::abs(value) / std::max(scale, 1.0); }
};

inline Residual ode_residual_from_jet(const LameParams &params, const SeriesJet &jet, const EvaluationPoint &pt,
                                      OdeForm form)
{
    const double xi = pt.xi;
    const double a = params.a();
    const double aa = params.alpha * (params.alpha + 1.0);
    if (form == OdeForm::algebraic) {
        if (xi == 0.0 || xi == 1.0 || xi == a) {
            throw singular_point("ode_residual: xi is a singular point of the algebraic form");
        }
        const double P = 0.5 * (1.0 / xi + 1.0 / (xi - 1.0) + 1.0 / (xi - a));
        const double Q = (-aa * xi + params.h * a) / (4.0 * xi * (xi - 1.0) * (xi - a));
        const double t1 = jet.d2y;
        const double t2 = P * jet.dy;
        const double t3 = Q * jet.y;
        return {t1 + t2 + t3, std::abs(t1) + std::abs(t2) + std::abs(t3)};
    }
    if (!pt.z) {
        throw invalid_parameter("ode_residual: the Weierstrass form needs the point's z coordinate");
    }
    const auto e = jacobi_sncndn(*pt.z, params.rho);
    const double r2 = params.rho * params.rho;
    const double xi_z = 2.0 * e.sn * e.cn * e.dn;
    const double xi_zz =
        2.0 * (e.cn * e.cn * e.dn * e.dn - e.sn * e.sn * e.dn * e.dn - r2 * e.sn * e.sn * e.cn * e.cn);
    const double y_zz = jet.d2y * xi_z * xi_z + jet.dy * xi_zz;
    const double V = aa * r2 * e.sn * e.sn - params.h;
    const double rhs = V * jet.y;
    return {y_zz - rhs, std::abs(y_zz) + std::abs(rhs)};
}

inline Residual ode_residual(const LameParams &params, const FrobeniusSeries &series, const EvaluationPoint &pt,
                             OdeForm form)
{
    params.validate();
    return ode_residual_from_jet(params, series_jet(series, pt.xi), pt, form);
}

inline double wronskian(const FrobeniusSeries &y1, const FrobeniusSeries &y2, double xi)
{
    const auto j1 = series_jet(y1, xi);
    const auto j2 = series_jet(y2, xi);
    return j1.y * j2.dy - j1.dy * j2.y;
}

enum class Branch { plus, minus };

struct TerminationFamily {
    int i = 0;
    int alpha_i = 0;
    Branch branch = Branch::plus;
};

inline double termination_alpha(const TerminationFamily &fam, IndicialExponent lambda)
{
    if (fam.i < 0 || fam.alpha_i < 0) {
        throw invalid_parameter("termination_alpha: i and alpha_i must be nonnegative");
    }
    const double base = 2.0 * (2.0 * fam.alpha_i + fam.i + lambda.lambda);
    return fam.branch == Branch::plus ? base : -base - 1.0;
}

// Index at which B_n vanishes for termination_alpha(fam, lambda).
inline int termination_index(const TerminationFamily &fam) { return 2 * fam.alpha_i + fam.i + 1; }

struct HeunParams {
    double gamma;
    double delta;
    double epsilon;
    double a;
    double alpha_h;
    double beta_h;
    double q;
};

inline HeunParams heun_correspondence(const LameParams &params)
{
    params.validate();
    return {0.5, 0.5, 0.5, params.a(), 0.5 * (params.alpha + 1.0), -0.5 * params.alpha, -0.25 * params.h * params.a()};
}

// Left side of Heun's equation for a given jet at x.
inline Residual heun_residual(const HeunParams &hp, const SeriesJet &jet, double x)
{
    if (x == 0.0 || x == 1.0 || x == hp.a) {
        throw singular_point("heun_residual: x is a singular point");
    }
    const double P = hp.gamma / x + hp.delta / (x - 1.0) + hp.epsilon / (x - hp.a);
    const double Q = (hp.alpha_h * hp.beta_h * x - hp.q) / (x * (x - 1.0) * (x - hp.a));
    const double t1 = jet.d2y;
    const double t2 = P * jet.dy;
    const double t3 = Q * jet.y;
    return {t1 + t2 + t3, std::abs(t1) + std::abs(t2) + std::abs(t3)};
}

} // namespace lame3trf

#endif
