#ifndef LAME3TRF_QUADRATURE_HPP
#define LAME3TRF_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Eigenvalues>

#include "error.hpp"
#include "power_series.hpp"

namespace lame3trf
{

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// n-point Gauss rule for the integral over (0, 1) of f(t) t^e, e > -1 (Golub-Welsch on the Jacobi matrix).
inline GaussRule gauss_jacobi_unit(int n, double e)
{
    if (n < 1) {
        throw invalid_parameter("gauss_jacobi_unit: need at least one node");
    }
    if (!(e > -1.0)) {
        throw invalid_parameter("gauss_jacobi_unit: exponent must exceed -1");
    }
    // Jacobi weight (1-x)^al (1+x)^be on (-1, 1) with al = 0, be = e; t = (1 + x) / 2
    const double al = 0.0;
    const double be = e;
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(n > 1 ? n - 1 : 1);
    diag(0) = (be - al) / (al + be + 2.0);
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + al + be;
        diag(k) = (be * be - al * al) / (s * (s + 2.0));
        sub(k - 1) = std::sqrt(4.0 * k * (k + al) * (k + be) * (k + al + be) / (s * s * (s + 1.0) * (s - 1.0)));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success) {
        throw non_convergence("gauss_jacobi_unit: eigenvalue iteration failed");
    }
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    // the weight integrates to 1 / (1 + e) on (0, 1)
    const double mass = 1.0 / (1.0 + e);
    for (int k = 0; k < n; ++k) {
        const double v0 = es.eigenvectors()(0, k);
        r.nodes[k] = 0.5 * (1.0 + es.eigenvalues()(k));
        r.weights[k] = v0 * v0 * mass;
    }
    return r;
}

struct LevelRule {
    double t_exponent;
    double u_exponent;
    GaussRule t;
    GaussRule u;
};

// Nested-integral exponents at nesting level L (1-based) for indicial exponent lambda.
inline double level_t_exponent(int L, double lambda) { return 0.5 * (L - 2.5 + lambda); }
inline double level_u_exponent(int L, double lambda) { return 0.5 * (L - 2.0 + lambda); }

struct QuadratureGrid {
    double lambda = 0.0;
    int nq = 0;
    int M = 0;
    // levels[L-1] is nesting level L
    std::vector<LevelRule> levels;
    // unit-circle nodes exp(2 pi i (k + 1/2) / M)
    std::vector<complex_t> contour_nodes;

    static QuadratureGrid make(double lambda, int levels, int nq = 32, int M = 256)
    {
        if (nq < 16) {
            throw invalid_parameter("QuadratureGrid: node count must be >= 16");
        }
        if (M < 128) {
            throw invalid_parameter("QuadratureGrid: contour node count must be >= 128");
        }
        if (levels < 0) {
            throw invalid_parameter("QuadratureGrid: negative level count");
        }
        QuadratureGrid g;
        g.lambda = lambda;
        g.nq = nq;
        g.M = M;
        for (int L = 1; L <= levels; ++L) {
            const double et = level_t_exponent(L, lambda);
            const double eu = level_u_exponent(L, lambda);
            g.levels.push_back({et, eu, gauss_jacobi_unit(nq, et), gauss_jacobi_unit(nq, eu)});
        }
        g.contour_nodes = unit_circle_nodes(M);
        return g;
    }

    static std::vector<complex_t> unit_circle_nodes(int M)
    {
        std::vector<complex_t> v(M);
        for (int k = 0; k < M; ++k) {
            v[k] = std::polar(1.0, 2.0 * std::numbers::pi * (k + 0.5) / M);
        }
        return v;
    }

    const LevelRule &level(int L) const
    {
        if (L < 1 || L > static_cast<int>(levels.size())) {
            throw index_error("QuadratureGrid: level out of range");
        }
        return levels[L - 1];
    }
};

// (1 / 2 pi i) times the contour integral of f over |v| = radius, trapezoidal rule on M nodes.
template <typename F>
complex_t contour_integral(F &&f, int M, double radius = 1.0)
{
    if (M < 1) {
        throw invalid_parameter("contour_integral: need at least one node");
    }
    complex_t acc = 0.0;
    for (int k = 0; k < M; ++k) {
        const complex_t v = std::polar(radius, 2.0 * std::numbers::pi * (k + 0.5) / M);
        const complex_t fv = f(v);
        if (!std::isfinite(fv.real()) || !std::isfinite(fv.imag())) {
            throw pole_error("contour_integral: non-finite sample");
        }
        acc += fv * v;
    }
    return acc / static_cast<double>(M);
}

// Picks a radius among 1, 0.9, 1.1 that keeps every listed pole at least 1e-6 away from the
// circle while enclosing the same poles as the unit circle does.
inline double contour_radius(std::span<const complex_t> poles)
{
    constexpr double clearance = 1e-6;
    const auto ok = [&](double r) {
        for (const auto &p : poles) {
            if (std::abs(std::abs(p) - r) < clearance) {
                return false;
            }
        }
        return true;
    };
    if (ok(1.0)) {
        return 1.0;
    }
    const auto same_enclosure = [&](double r) {
        for (const auto &p : poles) {
            const double m = std::abs(p);
            // poles on or inside the unit circle count as enclosed
            const bool in_unit = m <= 1.0;
            if ((m < r) != in_unit) {
                return false;
            }
        }
        return true;
    };
    for (double r : {0.9, 1.1}) {
        if (ok(r) && same_enclosure(r)) {
            return r;
        }
    }
    throw pole_error("contour_integral: no admissible radius keeps the poles off the contour");
}

template <typename F>
complex_t contour_integral(F &&f, int M, std::span<const complex_t> poles)
{
    return contour_integral(std::forward<F>(f), M, contour_radius(poles));
}

} // namespace lame3trf

#endif
