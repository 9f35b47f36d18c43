#ifndef LAME3TRF_INTEGRAL_FORMS_HPP
#define LAME3TRF_INTEGRAL_FORMS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "error.hpp"
#include "lame_series.hpp"
#include "power_series.hpp"
#include "quadrature.hpp"
#include "scalar_kernels.hpp"

namespace lame3trf
{

struct SParameters {
    std::vector<double> s;

    SParameters() = default;
    SParameters(std::vector<double> values) : s(std::move(values)) { validate(); }

    void validate() const
    {
        if (s.empty()) {
            throw invalid_parameter("SParameters: need at least s_0");
        }
        for (double x : s) {
            if (!(std::abs(x) < 1.0)) {
                throw invalid_parameter("SParameters: every |s_i| must be < 1");
            }
        }
    }

    // chain length minus one
    int K() const { return static_cast<int>(s.size()) - 1; }
    double operator[](int i) const { return s.at(static_cast<std::size_t>(i)); }
};

// s_a s_{a+1} ... s_b; an upper index beyond K stands for the truncated product up to s_K.
inline double s_partial_product(const SParameters &s, int a, int b)
{
    if (a < 0 || a > b) {
        throw index_error("s_partial_product: need 0 <= a <= b");
    }
    if (a > s.K()) {
        throw index_error("s_partial_product: lower index beyond the chain");
    }
    b = std::min(b, s.K());
    double p = 1.0;
    for (int k = a; k <= b; ++k) {
        p *= s[k];
    }
    return p;
}

// The contour-variable recursion; returns eta when i > j.
inline complex_t w_arrow(int i, int j, complex_t v, double t, double u, complex_t inner, double eta)
{
    if (i > j) {
        return eta;
    }
    const complex_t den = 1.0 - inner * v * (1.0 - t) * (1.0 - u);
    if (v == 1.0 || den == 0.0) {
        throw pole_error("w_arrow: evaluation at a pole");
    }
    return inner * v * t * u / ((v - 1.0) * den);
}

struct PoleLocations {
    complex_t v_in;
    complex_t v_out;
};

// Roots of x T v^2 + (s - 1) v - s = 0 with T = (1-t)(1-u), each written without cancellation.
inline PoleLocations pole_locations(double s, double t, double u, complex_t x)
{
    const complex_t xT = x * (1.0 - t) * (1.0 - u);
    if (xT == 0.0) {
        throw invalid_parameter("pole_locations: degenerate quadratic");
    }
    const complex_t root = std::sqrt((1.0 - s) * (1.0 - s) + 4.0 * xT * s);
    const complex_t big = 1.0 - s + root;
    if (big == 0.0) {
        throw invalid_parameter("pole_locations: degenerate quadratic");
    }
    return {-2.0 * s / big, big / (2.0 * xT)};
}

// w-tilde closed form, multiplied through by the conjugate radical so that s -> 0 is regular.
template <typename T>
T w_tilde_value(double s, double t, double u, const T &inner)
{
    using std::sqrt;
    const T y = inner * ((1.0 - t) * (1.0 - u));
    const T R = sqrt(s * s - 2.0 * (1.0 - 2.0 * y) * s + 1.0);
    const T den = (1.0 + s * s) + 2.0 * s * y + (1.0 + s) * R;
    return (2.0 * t * u * s) * inner / den;
}

struct WChainValue {
    complex_t value;
    int level_i;
    int level_j;
};

inline WChainValue w_tilde(int i, int j, double s_eff, double t, double u, complex_t inner)
{
    if (i > j) {
        throw index_error("w_tilde: need i <= j");
    }
    return {w_tilde_value<complex_t>(s_eff, t, u, inner), i, j};
}

// ((1 + s + R) / 2)^{-e} / R with R = sqrt(s^2 - 2 (1 - 2 x (1-t)(1-u)) s + 1).
template <typename T>
T level_kernel(double s, double t, double u, const T &x, double e)
{
    using std::pow;
    using std::sqrt;
    const T y = x * ((1.0 - t) * (1.0 - u));
    const T R = sqrt(s * s - 2.0 * (1.0 - 2.0 * y) * s + 1.0);
    if (std::abs(value_of(R)) == 0.0) {
        throw singular_point("level_kernel: vanishing radicand");
    }
    return pow((1.0 + s + R) / 2.0, -e) / R;
}

// Integrand of the order-1 contour once the alpha_1 sum is closed:
//   -(1 - eta T v)^{-(1/4 + lambda)} / (eta T v^2 + (s - 1) v - s).
inline complex_t residue_integrand(complex_t v, double s, double t, double u, double eta, double lambda)
{
    const double xT = eta * (1.0 - t) * (1.0 - u);
    return -std::pow(1.0 - xT * v, -(0.25 + lambda)) / (xT * v * v + (s - 1.0) * v - s);
}

// Residue of residue_integrand at the interior pole v_in.
inline complex_t residue_closed_form(double s, double t, double u, double eta, double lambda)
{
    const complex_t x = eta;
    return level_kernel(s, t, u, x, 0.25 + lambda);
}

// Contour evaluation of residue_integrand with the radius kept clear of its poles.
inline complex_t residue_contour(double s, double t, double u, double eta, double lambda, int M)
{
    const auto p = pole_locations(s, t, u, eta);
    const complex_t poles[] = {p.v_in, p.v_out, 1.0 / (eta * (1.0 - t) * (1.0 - u))};
    return contour_integral([&](complex_t v) { return residue_integrand(v, s, t, u, eta, lambda); }, M, poles);
}

// Exponents attached to nesting level L.
inline double operator_shift(int L, double lambda) { return 0.5 * (L - 1 + lambda); }
inline double contour_exponent(int L, double lambda) { return L + 0.25 + lambda; }
inline double residue_exponent(int L, double lambda) { return L - 0.75 + lambda; }

// m_i = -(1 + rho^{-2}) (i + a)^p + h / (16 rho^2), the action of the bracketed operator on w^i.
inline std::vector<double> diag_operator_multipliers(const LameParams &params, double a, int power, int i_max)
{
    if (power != 1 && power != 2) {
        throw invalid_parameter("diag_operator_multipliers: power must be 1 or 2");
    }
    if (i_max < 0) {
        throw invalid_parameter("diag_operator_multipliers: i_max must be >= 0");
    }
    const double r2inv = params.a();
    const double c = params.h * r2inv / 16.0;
    std::vector<double> m(static_cast<std::size_t>(i_max) + 1);
    for (int i = 0; i <= i_max; ++i) {
        m[i] = -(1.0 + r2inv) * std::pow(i + a, power) + c;
    }
    return m;
}

class AlphaChain
{
public:
    AlphaChain(std::vector<int> alpha) : m_alpha(std::move(alpha))
    {
        if (m_alpha.empty()) {
            throw invalid_parameter("AlphaChain: empty chain");
        }
        for (std::size_t k = 0; k < m_alpha.size(); ++k) {
            if (m_alpha[k] < 0) {
                throw invalid_parameter("AlphaChain: entries must be nonnegative");
            }
            if (k > 0 && m_alpha[k] < m_alpha[k - 1]) {
                throw invalid_parameter("AlphaChain: entries must be non-decreasing");
            }
        }
    }

    int order() const { return static_cast<int>(m_alpha.size()) - 1; }
    int operator[](int k) const { return m_alpha.at(static_cast<std::size_t>(k)); }
    int back() const { return m_alpha.back(); }
    const std::vector<int> &values() const { return m_alpha; }

private:
    std::vector<int> m_alpha;
};

// Coefficients of eta^i in y_0 / (c_0 xi^lambda).
inline std::vector<double> y0_coefficients(int alpha0, double lambda)
{
    if (alpha0 < 0) {
        throw invalid_parameter("y0_coefficients: alpha0 must be >= 0");
    }
    std::vector<double> c(static_cast<std::size_t>(alpha0) + 1);
    double term = 1.0;
    for (int i = 0; i <= alpha0; ++i) {
        c[i] = term;
        term *= (i - alpha0) * (alpha0 + 0.25 + lambda + i) / ((1.0 + 0.5 * lambda + i) * (0.75 + 0.5 * lambda + i));
    }
    return c;
}

inline double xi_power(double xi, double lambda)
{
    if (lambda == 0.0) {
        return 1.0;
    }
    if (xi < 0.0) {
        throw invalid_parameter("xi^lambda: xi < 0 with lambda = 1/2 is off the real branch");
    }
    return std::sqrt(xi);
}

// One nesting level of the integral representation acts linearly on polynomials in the inner
// chain variable. Writing the level integrand for w^i through q = (v - 1) / v gives
//   (1/v) q^{alpha-i} (t u w)^i (1 - w v T)^{-(b+alpha+i)},
// so the output coefficient of w^j collects a contour factor, a (t, u) moment and a binomial
// series coefficient. The contour and moment tables are computed once per grid.
class LevelPropagator
{
public:
    LevelPropagator(const QuadratureGrid &grid, int levels, int a_cap) : m_grid(grid), m_cap(a_cap)
    {
        if (a_cap < 0) {
            throw invalid_parameter("LevelPropagator: negative degree cap");
        }
        if (levels > static_cast<int>(grid.levels.size())) {
            throw invalid_parameter("LevelPropagator: grid has fewer levels than requested");
        }
        build_contour_table();
        for (int L = 1; L <= levels; ++L) {
            m_moments.push_back(build_moments(grid.level(L)));
        }
    }

    int cap() const { return m_cap; }
    double lambda() const { return m_grid.lambda; }

    // (1 / 2 pi i) contour integral of (1/v) ((v-1)/v)^k v^d dv
    double contour_factor(int k, int d) const { return m_contour[idx(k, d)]; }

    // sum over the level's (t, u) nodes of w_t w_u (t u)^i ((1-t)(1-u))^d
    double moment(int L, int i, int d) const { return m_moments.at(static_cast<std::size_t>(L - 1))[idx(i, d)]; }

    // Maps coefficients g (in the level-L chain variable, multipliers already applied) to the
    // coefficients of the level-L integral in the next outer chain variable.
    std::vector<complex_t> apply(int L, int alpha, const std::vector<complex_t> &g) const
    {
        if (alpha > m_cap) {
            throw invalid_parameter("LevelPropagator: alpha exceeds the degree cap");
        }
        if (static_cast<int>(g.size()) > alpha + 1) {
            throw invalid_parameter("LevelPropagator: input degree exceeds alpha");
        }
        const double b = contour_exponent(L, m_grid.lambda);
        std::vector<complex_t> out(static_cast<std::size_t>(alpha) + 1, 0.0);
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i] == 0.0) {
                continue;
            }
            const int ii = static_cast<int>(i);
            // (b + alpha + i)_d / d!
            double binom = 1.0;
            for (int d = 0; ii + d <= alpha; ++d) {
                out[i + d] += g[i] * (moment(L, ii, d) * binom * contour_factor(alpha - ii, d));
                binom *= (b + alpha + ii + d) / (d + 1.0);
            }
        }
        return out;
    }

private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * (m_cap + 1) + b; }

    void build_contour_table()
    {
        m_contour.assign(static_cast<std::size_t>(m_cap + 1) * (m_cap + 1), 0.0);
        for (int k = 0; k <= m_cap; ++k) {
            for (int d = 0; d <= k; ++d) {
                const auto f = [k, d](complex_t v) { return std::pow((v - 1.0) / v, k) * std::pow(v, d) / v; };
                m_contour[idx(k, d)] = contour_integral(f, m_grid.M).real();
            }
        }
    }

    std::vector<double> build_moments(const LevelRule &rule) const
    {
        const auto one_dim = [this](const GaussRule &r) {
            std::vector<double> m(static_cast<std::size_t>(m_cap + 1) * (m_cap + 1), 0.0);
            for (std::size_t k = 0; k < r.nodes.size(); ++k) {
                const double x = r.nodes[k];
                double xi = r.weights[k];
                for (int i = 0; i <= m_cap; ++i) {
                    double v = xi;
                    for (int d = 0; d <= m_cap; ++d) {
                        m[idx(i, d)] += v;
                        v *= 1.0 - x;
                    }
                    xi *= x;
                }
            }
            return m;
        };
        const auto mt = one_dim(rule.t);
        const auto mu = one_dim(rule.u);
        std::vector<double> m(mt.size());
        for (std::size_t k = 0; k < m.size(); ++k) {
            m[k] = mt[k] * mu[k];
        }
        return m;
    }

    const QuadratureGrid &m_grid;
    int m_cap;
    std::vector<double> m_contour;
    std::vector<std::vector<double>> m_moments;
};

inline void apply_multipliers(std::vector<complex_t> &g, const std::vector<double> &m)
{
    for (std::size_t i = 0; i < g.size(); ++i) {
        g[i] *= m.at(i);
    }
}

inline complex_t eval_polynomial(const std::vector<complex_t> &g, complex_t x)
{
    complex_t acc = 0.0;
    for (std::size_t k = g.size(); k-- > 0;) {
        acc = acc * x + g[k];
    }
    return acc;
}

inline double y_n_term(const LameParams &params, IndicialExponent lambda, int n, const AlphaChain &chain,
                       const EvaluationPoint &pt, const QuadratureGrid &grid, int op_power = 2, double c0 = 1.0)
{
    params.validate();
    if (n < 0) {
        throw invalid_parameter("y_n_term: negative order");
    }
    if (chain.order() != n) {
        throw invalid_parameter("y_n_term: chain must carry alpha_0 .. alpha_n");
    }
    const double l = lambda.lambda;
    const double pref = c0 * xi_power(pt.xi, l) * std::pow(pt.mu, n);
    const auto c = y0_coefficients(chain[0], l);
    std::vector<complex_t> g(c.begin(), c.end());
    if (n == 0) {
        return pref * eval_polynomial(g, pt.eta).real();
    }
    if (grid.lambda != l) {
        throw invalid_parameter("y_n_term: grid built for a different lambda");
    }
    const LevelPropagator prop(grid, n, chain.back());
    for (int L = 1; L <= n; ++L) {
        apply_multipliers(g, diag_operator_multipliers(params, operator_shift(L, l), op_power,
                                                       static_cast<int>(g.size()) - 1));
        g = prop.apply(L, chain[L], g);
    }
    return pref * eval_polynomial(g, pt.eta).real();
}

inline double y_total(const LameParams &params, IndicialExponent lambda, const std::vector<AlphaChain> &chains,
                      const EvaluationPoint &pt, int n_max, const QuadratureGrid &grid, int op_power = 2,
                      double c0 = 1.0)
{
    if (n_max < 0 || static_cast<int>(chains.size()) < n_max + 1) {
        throw invalid_parameter("y_total: need one chain per order up to n_max");
    }
    double sum = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        sum += y_n_term(params, lambda, n, chains[n], pt, grid, op_power, c0);
    }
    return sum;
}

} // namespace lame3trf

#endif
