#ifndef LAME3TRF_GENERATING_FUNCTIONS_HPP
#define LAME3TRF_GENERATING_FUNCTIONS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "error.hpp"
#include "integral_forms.hpp"
#include "lame_series.hpp"
#include "power_series.hpp"
#include "quadrature.hpp"
#include "scalar_kernels.hpp"

namespace lame3trf
{

struct GFWeights {
    double gamma = 0.75;
    SParameters s{{0.0}};
    int A_max = 60;

    void validate() const
    {
        s.validate();
        if (A_max < 1) {
            throw invalid_parameter("GFWeights: A_max must be >= 1");
        }
    }

    int K() const { return s.K(); }
};

namespace detail
{

// (gamma)_k / k! x^k for k = 0 .. A
inline std::vector<double> binomial_weights(double gamma, double x, int A)
{
    std::vector<double> w(static_cast<std::size_t>(A) + 1);
    double term = 1.0;
    for (int k = 0; k <= A; ++k) {
        w[k] = term;
        term *= (gamma + k) / (k + 1.0) * x;
    }
    return w;
}

// prod_{k=first}^{K} 1 / (1 - s_{k,K})
inline double chain_prefactor(const SParameters &s, int first)
{
    double p = 1.0;
    for (int k = first; k <= s.K(); ++k) {
        p /= 1.0 - s_partial_product(s, k, s.K());
    }
    return p;
}

inline void check_order(const GFWeights &weights, int order_n)
{
    if (order_n < 0 || order_n > weights.K()) {
        throw invalid_parameter("generating function: order must lie in 0 .. K");
    }
}

} // namespace detail

// Coefficients of x^i in upsilon(lambda; s_eff; x).
inline std::vector<complex_t> upsilon_coefficients(double lambda, double gamma, double s_eff, double c0, double xi,
                                                   int A_max)
{
    const double pref = c0 * xi_power(xi, lambda);
    const auto w = detail::binomial_weights(gamma, s_eff, A_max);
    std::vector<complex_t> u(static_cast<std::size_t>(A_max) + 1, 0.0);
    for (int a0 = 0; a0 <= A_max; ++a0) {
        const auto c = y0_coefficients(a0, lambda);
        for (int i = 0; i <= a0; ++i) {
            u[i] += pref * w[a0] * c[i];
        }
    }
    return u;
}

inline complex_t upsilon(IndicialExponent lambda, double gamma, double s_eff, complex_t x, const EvaluationPoint &pt,
                         int A_max, double c0 = 1.0)
{
    if (!(std::abs(s_eff) < 1.0)) {
        throw invalid_parameter("upsilon: |s_eff| must be < 1");
    }
    return eval_polynomial(upsilon_coefficients(lambda.lambda, gamma, s_eff, c0, pt.xi, A_max), x);
}

template <typename T>
T kernel_A(double s, const T &x)
{
    using std::pow;
    using std::sqrt;
    const T R = sqrt(s * s - 2.0 * (1.0 - 2.0 * x) * s + 1.0);
    if (std::abs(value_of(R)) == 0.0) {
        throw singular_point("kernel_A: vanishing radicand");
    }
    return pow(1.0 - s + R, 0.25) * pow(1.0 + s + R, 0.5) / R;
}

template <typename T>
T kernel_B(double s, const T &x)
{
    using std::pow;
    using std::sqrt;
    const T R = sqrt(s * s - 2.0 * (1.0 - 2.0 * x) * s + 1.0);
    if (std::abs(value_of(R)) == 0.0) {
        throw singular_point("kernel_B: vanishing radicand");
    }
    return pow(1.0 - s + R, -0.25) * pow(1.0 + s + R, 0.5) / R;
}

// Level kernels of the two solution kinds. Level n of order n carries exponent n - 3/4 (+1/2 for
// the second kind); inner level n - k carries n - k - 3/4.
inline double kernel_exponent(SolutionKind kind, int level_n, int k_offset)
{
    if (level_n < 1 || k_offset < 0 || k_offset >= level_n) {
        throw invalid_parameter("kernel exponent: need level_n >= 1 and 0 <= k_offset < level_n");
    }
    return residue_exponent(level_n - k_offset, kind == SolutionKind::first ? 0.0 : 0.5);
}

template <typename T>
T kernel_gamma(int level_n, int k_offset, double s_eff, double t, double u, const T &x)
{
    return level_kernel(s_eff, t, u, x, kernel_exponent(SolutionKind::first, level_n, k_offset));
}

template <typename T>
T kernel_psi(int level_n, int k_offset, double s_eff, double t, double u, const T &x)
{
    return level_kernel(s_eff, t, u, x, kernel_exponent(SolutionKind::second, level_n, k_offset));
}

// Summation operator applied to y_n, with the alpha sums truncated at A_max. Trailing sums over
// alpha_{n+1} .. alpha_K are truncated too unless chain_free, which sums them in closed form.
inline complex_t gf_lhs_order(const LameParams &params, IndicialExponent lambda, const GFWeights &weights,
                              const EvaluationPoint &pt, int order_n, bool chain_free, const QuadratureGrid &grid,
                              int op_power = 2, double c0 = 1.0)
{
    params.validate();
    weights.validate();
    detail::check_order(weights, order_n);
    const int A = weights.A_max;
    const int K = weights.K();
    const auto &s = weights.s;
    const double l = lambda.lambda;

    // trailing weights T(alpha_n)
    std::vector<double> tail(static_cast<std::size_t>(A) + 1, 1.0);
    if (chain_free) {
        if (order_n < K) {
            const double r = s_partial_product(s, order_n + 1, K);
            const double pre = detail::chain_prefactor(s, order_n + 1);
            for (int a = 0; a <= A; ++a) {
                tail[a] = pre * std::pow(r, a);
            }
        }
    } else {
        for (int m = K; m > order_n; --m) {
            std::vector<double> next(tail.size(), 0.0);
            double acc = 0.0;
            for (int a = A; a >= 0; --a) {
                acc += std::pow(s[m], a) * tail[a];
                next[a] = acc;
            }
            tail = std::move(next);
        }
    }

    // H[alpha] holds the chain-summed coefficient vector for the current level
    const auto w0 = detail::binomial_weights(weights.gamma, s[0], A);
    std::vector<std::vector<complex_t>> H(static_cast<std::size_t>(A) + 1);
    for (int a0 = 0; a0 <= A; ++a0) {
        const auto c = y0_coefficients(a0, l);
        H[a0].assign(c.begin(), c.end());
        for (auto &x : H[a0]) {
            x *= w0[a0];
        }
    }

    if (order_n > 0) {
        if (grid.lambda != l) {
            throw invalid_parameter("gf_lhs_order: grid built for a different lambda");
        }
        const LevelPropagator prop(grid, order_n, A);
        for (int L = 1; L <= order_n; ++L) {
            const auto mult = diag_operator_multipliers(params, operator_shift(L, l), op_power, A);
            std::vector<std::vector<complex_t>> next(H.size());
            std::vector<complex_t> prefix;
            for (int a = 0; a <= A; ++a) {
                const auto &h = H[a];
                if (prefix.size() < h.size()) {
                    prefix.resize(h.size(), 0.0);
                }
                for (std::size_t i = 0; i < h.size(); ++i) {
                    prefix[i] += h[i];
                }
                std::vector<complex_t> g = prefix;
                apply_multipliers(g, mult);
                next[a] = prop.apply(L, a, g);
                const double sa = std::pow(s[L], a);
                for (auto &x : next[a]) {
                    x *= sa;
                }
            }
            H = std::move(next);
        }
    }

    complex_t sum = 0.0;
    for (int a = 0; a <= A; ++a) {
        sum += tail[a] * eval_polynomial(H[a], pt.eta);
    }
    return sum * (c0 * xi_power(pt.xi, l) * std::pow(pt.mu, order_n));
}

namespace detail
{

// Degree of the inner Taylor expansions in the generic assembly.
inline constexpr std::size_t inner_degree = 24;

inline TaylorSeries apply_series_multipliers(TaylorSeries f, const std::vector<double> &m)
{
    for (std::size_t i = 0; i <= f.degree(); ++i) {
        f[i] *= m.at(i);
    }
    return f;
}

} // namespace detail

// Residue-form assembly of one order of the generating function.
inline complex_t gf_rhs_order(const LameParams &params, IndicialExponent lambda, const GFWeights &weights,
                              const EvaluationPoint &pt, int order_n, const QuadratureGrid &grid, int op_power = 2,
                              double c0 = 1.0)
{
    params.validate();
    weights.validate();
    detail::check_order(weights, order_n);
    const auto &s = weights.s;
    const int K = weights.K();
    const double l = lambda.lambda;
    const int A = weights.A_max;

    if (order_n == 0) {
        return detail::chain_prefactor(s, 1) *
               upsilon(lambda, weights.gamma, s_partial_product(s, 0, K), pt.eta, pt, A, c0);
    }
    if (grid.lambda != l) {
        throw invalid_parameter("gf_rhs_order: grid built for a different lambda");
    }
    if (static_cast<int>(grid.levels.size()) < order_n) {
        throw invalid_parameter("gf_rhs_order: grid has too few levels");
    }

    const std::size_t D = std::max<std::size_t>(detail::inner_degree, 1);
    // F(w) before the level-1 operator: upsilon with plain s_0
    const auto ups = upsilon_coefficients(l, weights.gamma, s[0], c0, pt.xi, A);
    TaylorSeries F(ups);
    F = detail::apply_series_multipliers(F, diag_operator_multipliers(params, operator_shift(1, l), op_power,
                                                                      static_cast<int>(F.degree())));

    // inner levels 1 .. n-1 as Taylor series in the next chain variable
    for (int L = 1; L < order_n; ++L) {
        const auto &rule = grid.level(L);
        const double e = residue_exponent(L, l);
        const TaylorSeries w = TaylorSeries::variable(0.0, D);
        TaylorSeries acc(D);
        for (std::size_t it = 0; it < rule.t.nodes.size(); ++it) {
            for (std::size_t iu = 0; iu < rule.u.nodes.size(); ++iu) {
                const double t = rule.t.nodes[it];
                const double u = rule.u.nodes[iu];
                const TaylorSeries wt = w_tilde_value(s[L], t, u, w);
                const TaylorSeries ker = level_kernel(s[L], t, u, w, e);
                acc += (rule.t.weights[it] * rule.u.weights[iu]) * (ker * compose(F, wt));
            }
        }
        F = detail::apply_series_multipliers(
            acc, diag_operator_multipliers(params, operator_shift(L + 1, l), op_power, static_cast<int>(D)));
    }

    // outer level at eta with the truncated product s_{n,K}
    const auto &rule = grid.level(order_n);
    const double sn = s_partial_product(s, order_n, K);
    const double e = residue_exponent(order_n, l);
    const complex_t eta = pt.eta;
    complex_t val = 0.0;
    for (std::size_t it = 0; it < rule.t.nodes.size(); ++it) {
        for (std::size_t iu = 0; iu < rule.u.nodes.size(); ++iu) {
            const double t = rule.t.nodes[it];
            const double u = rule.u.nodes[iu];
            const complex_t wt = w_tilde_value(sn, t, u, eta);
            val += rule.t.weights[it] * rule.u.weights[iu] * level_kernel(sn, t, u, eta, e) * F.evaluate(wt);
        }
    }
    return detail::chain_prefactor(s, order_n + 1) * val * std::pow(pt.mu, order_n);
}

struct GFOrderReport {
    int order_n = 0;
    complex_t lhs;
    complex_t rhs;
    double gap = 0.0;
    double truncation_estimate = 0.0;

    bool pass(double tol) const { return gap < tol + truncation_estimate; }
};

// Last retained alpha_0 term magnitude times A_max.
inline double gf_tail_estimate(IndicialExponent lambda, const GFWeights &weights, const EvaluationPoint &pt,
                               int order_n, double c0 = 1.0)
{
    const int A = weights.A_max;
    const double smax = std::max(std::abs(weights.s[0]), std::abs(s_partial_product(weights.s, 0, weights.K())));
    double w = 1.0;
    for (int k = 0; k < A; ++k) {
        w *= (weights.gamma + k) / (k + 1.0);
    }
    return A * std::abs(w) * std::pow(smax, A) * std::abs(c0 * xi_power(pt.xi, lambda.lambda)) *
           std::pow(std::abs(pt.mu), order_n);
}

inline GFOrderReport gf_verify_order(const LameParams &params, IndicialExponent lambda, const GFWeights &weights,
                                     const EvaluationPoint &pt, int order_n, const QuadratureGrid &grid,
                                     int op_power = 2, double c0 = 1.0)
{
    GFOrderReport r;
    r.order_n = order_n;
    r.lhs = gf_lhs_order(params, lambda, weights, pt, order_n, false, grid, op_power, c0);
    r.rhs = gf_rhs_order(params, lambda, weights, pt, order_n, grid, op_power, c0);
    r.gap = std::abs(r.lhs - r.rhs);
    r.truncation_estimate = gf_tail_estimate(lambda, weights, pt, order_n, c0);
    return r;
}

// The order-1 identity before the residue step: the v-contour is kept on the unit circle and
// the alpha_0 sum carries the full product s_{0,K}.
inline complex_t gf_contour_form_order1(const LameParams &params, IndicialExponent lambda, const GFWeights &weights,
                                        const EvaluationPoint &pt, const QuadratureGrid &grid, int op_power = 2,
                                        double c0 = 1.0)
{
    params.validate();
    weights.validate();
    detail::check_order(weights, 1);
    const auto &s = weights.s;
    const int K = weights.K();
    const int A = weights.A_max;
    const double l = lambda.lambda;
    if (grid.lambda != l || grid.levels.empty()) {
        throw invalid_parameter("gf_contour_form_order1: grid mismatch");
    }
    const double S = s_partial_product(s, 1, K);
    const double S0 = s_partial_product(s, 0, K);
    const double eta = pt.eta;
    const auto w0 = detail::binomial_weights(weights.gamma, 1.0, A);
    const auto mult = diag_operator_multipliers(params, operator_shift(1, l), op_power, A);
    std::vector<std::vector<complex_t>> coef(static_cast<std::size_t>(A) + 1);
    for (int a0 = 0; a0 <= A; ++a0) {
        const auto c = y0_coefficients(a0, l);
        coef[a0].assign(c.begin(), c.end());
        apply_multipliers(coef[a0], mult);
    }
    const auto &rule = grid.level(1);
    complex_t val = 0.0;
    for (std::size_t it = 0; it < rule.t.nodes.size(); ++it) {
        for (std::size_t iu = 0; iu < rule.u.nodes.size(); ++iu) {
            const double t = rule.t.nodes[it];
            const double u = rule.u.nodes[iu];
            const double T = (1.0 - t) * (1.0 - u);
            const auto poles = pole_locations(S, t, u, eta);
            const complex_t pl[] = {complex_t(0.0), poles.v_in, poles.v_out, 1.0 / (eta * T)};
            const auto f = [&](complex_t v) {
                const complex_t den = 1.0 - eta * T * v;
                const complex_t X = (v - 1.0) / (v * den);
                const complex_t W = w_arrow(1, 1, v, t, u, eta, eta);
                complex_t sum = 0.0;
                complex_t Xp = 1.0;
                for (int a0 = 0; a0 <= A; ++a0) {
                    sum += w0[a0] * Xp * eval_polynomial(coef[a0], W);
                    Xp *= S0 * X;
                }
                return -std::pow(den, -(0.25 + l)) / (eta * T * v * v + (S - 1.0) * v - S) * sum;
            };
            val += rule.t.weights[it] * rule.u.weights[iu] * contour_integral(f, grid.M, pl);
        }
    }
    return detail::chain_prefactor(s, 2) * val * (c0 * xi_power(pt.xi, l) * pt.mu);
}

namespace detail
{

// D g = (x0 + e) g'(e) + a g on a Taylor series in e about x0; degree drops by one.
inline TaylorSeries conjugated_euler(const TaylorSeries &g, complex_t x0, double a)
{
    const TaylorSeries dg = g.derivative();
    TaylorSeries x = TaylorSeries::variable(x0, dg.degree());
    return x * dg + a * g.truncated(dg.degree());
}

inline TaylorSeries bracket_operator(const LameParams &params, const TaylorSeries &g, complex_t x0, double a,
                                     int power)
{
    TaylorSeries d = g;
    for (int k = 0; k < power; ++k) {
        d = conjugated_euler(d, x0, a);
    }
    return -(1.0 + params.a()) * d + (params.h * params.a() / 16.0) * g.truncated(d.degree());
}

struct RemarkContext {
    const LameParams &params;
    SolutionKind kind;
    const SParameters &s;
    const QuadratureGrid &grid;
    int op_power;
    double lambda;
};

// Value of the bracket operator of level L + 1 applied to the level-L function, composed with X.
// Level 0 is the closed-form kernel A or B.
inline TaylorSeries remark_level(const RemarkContext &ctx, int L, const TaylorSeries &X)
{
    const complex_t x0 = X[0];
    const std::size_t d = X.degree() + static_cast<std::size_t>(ctx.op_power);
    const TaylorSeries e = TaylorSeries::variable(x0, d);
    TaylorSeries f(d);
    if (L == 0) {
        f = ctx.kind == SolutionKind::first ? kernel_A(ctx.s[0], e) : kernel_B(ctx.s[0], e);
    } else {
        const auto &rule = ctx.grid.level(L);
        const double ex = residue_exponent(L, ctx.lambda);
        for (std::size_t it = 0; it < rule.t.nodes.size(); ++it) {
            for (std::size_t iu = 0; iu < rule.u.nodes.size(); ++iu) {
                const double t = rule.t.nodes[it];
                const double u = rule.u.nodes[iu];
                const TaylorSeries wt = w_tilde_value(ctx.s[L], t, u, e);
                f += (rule.t.weights[it] * rule.u.weights[iu]) *
                     (level_kernel(ctx.s[L], t, u, e, ex) * remark_level(ctx, L - 1, wt));
            }
        }
    }
    const TaylorSeries op =
        bracket_operator(ctx.params, f, x0, operator_shift(L + 1, ctx.lambda), ctx.op_power);
    TaylorSeries shifted = X;
    shifted[0] = 0.0;
    return compose(op, shifted);
}

} // namespace detail

// The closed-form assemblies of the two solution kinds, summed over orders 0 .. n_max, with
// (lambda, gamma, c_0) pinned to (0, 3/4, 1) or (1/2, 5/4, 1).
inline complex_t gf_remark_order(SolutionKind kind, const LameParams &params, const SParameters &s,
                                 const EvaluationPoint &pt, int order_n, const QuadratureGrid &grid, int op_power = 2)
{
    params.validate();
    s.validate();
    if (order_n < 0 || order_n > s.K()) {
        throw invalid_parameter("gf_remark: order must lie in 0 .. K");
    }
    if (order_n > 2) {
        throw invalid_parameter("gf_remark: orders above 2 are not supported");
    }
    const double lambda = kind == SolutionKind::first ? 0.0 : 0.5;
    const int K = s.K();
    const complex_t pref = kind == SolutionKind::first ? std::pow(2.0, -0.75) : std::pow(pt.xi * pt.xi / 2.0, 0.25);
    if (order_n == 0) {
        const double s0K = s_partial_product(s, 0, K);
        const complex_t eta = pt.eta;
        const complex_t k0 = kind == SolutionKind::first ? kernel_A(s0K, eta) : kernel_B(s0K, eta);
        return pref * detail::chain_prefactor(s, 1) * k0;
    }
    if (grid.lambda != lambda || static_cast<int>(grid.levels.size()) < order_n) {
        throw invalid_parameter("gf_remark: grid mismatch");
    }
    // outer level uses s_{n,K}; inner levels see the plain s_L through the context
    std::vector<double> s_eff = s.s;
    s_eff[order_n] = s_partial_product(s, order_n, K);
    const SParameters s_outer(s_eff);
    const detail::RemarkContext ctx{params, kind, s_outer, grid, op_power, lambda};
    const auto &rule = grid.level(order_n);
    const double ex = residue_exponent(order_n, lambda);
    const double sn = s_outer[order_n];
    const complex_t eta = pt.eta;
    complex_t val = 0.0;
    for (std::size_t it = 0; it < rule.t.nodes.size(); ++it) {
        for (std::size_t iu = 0; iu < rule.u.nodes.size(); ++iu) {
            const double t = rule.t.nodes[it];
            const double u = rule.u.nodes[iu];
            const complex_t wt = w_tilde_value(sn, t, u, eta);
            const TaylorSeries X = TaylorSeries::constant(wt, 0);
            val += rule.t.weights[it] * rule.u.weights[iu] * level_kernel(sn, t, u, eta, ex) *
                   detail::remark_level(ctx, order_n - 1, X)[0];
        }
    }
    return pref * detail::chain_prefactor(s, order_n + 1) * val * std::pow(pt.mu, order_n);
}

inline complex_t gf_remark(SolutionKind kind, const LameParams &params, const SParameters &s,
                           const EvaluationPoint &pt, const QuadratureGrid &grid, int n_max, int op_power = 2)
{
    if (n_max < 0) {
        throw invalid_parameter("gf_remark: n_max must be >= 0");
    }
    complex_t sum = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        sum += gf_remark_order(kind, params, s, pt, n, grid, op_power);
    }
    return sum;
}

inline complex_t gf_rhs_total(const LameParams &params, IndicialExponent lambda, const GFWeights &weights,
                              const EvaluationPoint &pt, int n_max, const QuadratureGrid &grid, int op_power = 2,
                              double c0 = 1.0)
{
    complex_t sum = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        sum += gf_rhs_order(params, lambda, weights, pt, n, grid, op_power, c0);
    }
    return sum;
}

} // namespace lame3trf

#endif
