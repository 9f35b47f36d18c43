#ifndef LAME3TRF_SCALAR_KERNELS_HPP
#define LAME3TRF_SCALAR_KERNELS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>

#include "error.hpp"
#include "power_series.hpp"

namespace lame3trf
{

struct ToleranceConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_terms = 200;

    void validate() const
    {
        if (!(abs_tol > 0) || !(rel_tol > 0) || max_terms < 1) {
            throw invalid_parameter("ToleranceConfig: abs_tol, rel_tol must be positive and max_terms >= 1");
        }
    }
};

// Rising factorial x (x+1) ... (x+n-1) by iterated product.
template <typename T>
T pochhammer(const T &x, int n)
{
    if (n < 0) {
        throw invalid_parameter("pochhammer: negative n");
    }
    T r = T(1);
    for (int k = 0; k < n; ++k) {
        r = r * (x + T(k));
    }
    return r;
}

namespace detail
{

// Returns m >= 0 when a is (within 1e-12) the integer -m, otherwise -1.
inline long nonpositive_integer(const complex_t &a)
{
    const double r = std::round(a.real());
    if (std::abs(a.imag()) < 1e-12 && std::abs(a.real() - r) < 1e-12 && r <= 0) {
        return static_cast<long>(-r);
    }
    return -1;
}

} // namespace detail

inline complex_t gauss_2f1(complex_t a, complex_t b, complex_t c, complex_t x, const ToleranceConfig &tol = {})
{
    tol.validate();
    long m = detail::nonpositive_integer(a);
    const long mb = detail::nonpositive_integer(b);
    if (mb >= 0 && (m < 0 || mb < m)) {
        m = mb;
    }
    const bool terminating = m >= 0;
    if (!terminating && std::abs(x) >= 1.0) {
        throw non_convergence("gauss_2f1: |x| >= 1 and the series does not terminate");
    }

    complex_t sum = 1.0;
    complex_t term = 1.0;
    const long limit = terminating ? m : static_cast<long>(tol.max_terms);
    for (long k = 0; k < limit; ++k) {
        const complex_t ck = c + static_cast<double>(k);
        if (std::abs(ck) < 1e-12) {
            throw invalid_parameter("gauss_2f1: denominator pole reached before termination");
        }
        term *= (a + static_cast<double>(k)) * (b + static_cast<double>(k)) / (ck * static_cast<double>(k + 1)) * x;
        sum += term;
        if (!terminating && std::abs(term) <= std::max(tol.abs_tol, tol.rel_tol * std::abs(sum))) {
            return sum;
        }
    }
    if (!terminating) {
        throw non_convergence("gauss_2f1: max_terms reached before tolerance");
    }
    return sum;
}

// P_n^{(a,b)}(x) by the forward three-term recurrence in n. The explicit finite sum cancels badly
// once a + b + 1 is small and x is near -1.
inline complex_t jacobi_polynomial(int n, double a, double b, complex_t x)
{
    if (n < 0) {
        throw invalid_parameter("jacobi_polynomial: negative degree");
    }
    complex_t p0 = 1.0;
    if (n == 0) {
        return p0;
    }
    complex_t p1 = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
    for (int k = 1; k < n; ++k) {
        const double c = 2.0 * k + a + b;
        const double a1 = 2.0 * (k + 1) * (k + a + b + 1.0) * c;
        if (a1 == 0.0) {
            throw invalid_parameter("jacobi_polynomial: degenerate parameters for the recurrence");
        }
        const double a2 = (c + 1.0) * (a * a - b * b);
        const double a3 = c * (c + 1.0) * (c + 2.0);
        const double a4 = 2.0 * (k + a) * (k + b) * (c + 2.0);
        const complex_t p2 = ((a2 + a3 * x) * p1 - a4 * p0) / a1;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

template <typename T>
T jacobi_gf_closed(double a, double b, const T &x, const T &w)
{
    using std::pow;
    using std::sqrt;
    const T R = sqrt(w * w - 2.0 * x * w + 1.0);
    if (std::abs(value_of(R)) == 0.0) {
        throw singular_point("jacobi_gf_closed: vanishing radicand");
    }
    return std::pow(2.0, a + b) * pow(1.0 - w + R, -a) * pow(1.0 + w + R, -b) / R;
}

template <typename T>
T lemma1_closed_form(double gamma, double A, const T &w, const T &x)
{
    using std::pow;
    using std::sqrt;
    const T R = sqrt(w * w - 2.0 * (1.0 - 2.0 * x) * w + 1.0);
    if (std::abs(value_of(R)) == 0.0) {
        throw singular_point("lemma1_closed_form: vanishing radicand");
    }
    return std::pow(2.0, A - 1.0) * pow(1.0 - w + R, 1.0 - gamma) * pow(1.0 + w + R, gamma - A) / R;
}

struct Lemma1Result {
    complex_t lhs;
    complex_t rhs;
    double gap;
    // |last retained term| times N
    double tail_estimate;
};

inline Lemma1Result lemma1_identity(double gamma, double A, complex_t w, complex_t x, int N)
{
    if (N < 1) {
        throw invalid_parameter("lemma1_identity: N must be >= 1");
    }
    if (std::abs(w) >= 1.0) {
        throw invalid_parameter("lemma1_identity: |w| must be < 1");
    }
    complex_t lhs = 0.0;
    complex_t weight = 1.0; // (gamma)_n / n! w^n
    complex_t last = 0.0;
    for (int n = 0; n <= N; ++n) {
        last = weight * gauss_2f1(-static_cast<double>(n), n + A, gamma, x);
        lhs += last;
        weight *= (gamma + n) / (n + 1.0) * w;
    }
    const complex_t rhs = lemma1_closed_form<complex_t>(gamma, A, w, x);
    return {lhs, rhs, std::abs(lhs - rhs), std::abs(last) * N};
}

struct EllipticValues {
    double sn;
    double cn;
    double dn;
};

// Jacobi sn, cn, dn of real argument and modulus 0 <= rho <= 1 by descending Landen (AGM) transformation.
inline EllipticValues jacobi_sncndn(double z, double rho)
{
    if (!(rho >= 0.0 && rho <= 1.0)) {
        throw invalid_parameter("jacobi_sncndn: modulus must lie in [0, 1]");
    }
    double emc = 1.0 - rho * rho;
    if (emc == 0.0) {
        const double cn = 1.0 / std::cosh(z);
        return {std::tanh(z), cn, cn};
    }
    constexpr int max_iter = 32;
    double em[max_iter + 1];
    double en[max_iter + 1];
    double a = 1.0;
    double c = 1.0;
    double dn = 1.0;
    int l = 0;
    for (int i = 0; i < max_iter; ++i) {
        l = i;
        em[i] = a;
        emc = std::sqrt(emc);
        en[i] = emc;
        c = 0.5 * (a + emc);
        if (std::abs(a - emc) <= 1e-15 * a) {
            break;
        }
        emc *= a;
        a = c;
    }
    const double u = z * c;
    double sn = std::sin(u);
    double cn = std::cos(u);
    if (sn != 0.0) {
        a = cn / sn;
        c *= a;
        for (int ii = l; ii >= 0; --ii) {
            const double b = em[ii];
            a *= c;
            c *= dn;
            dn = (en[ii] + a) / (b + a);
            a = c / b;
        }
        a = 1.0 / std::sqrt(c * c + 1.0);
        sn = sn >= 0.0 ? a : -a;
        cn = c * sn;
    }
    return {sn, cn, dn};
}

inline double jacobi_sn(double z, double rho) { return jacobi_sncndn(z, rho).sn; }

// z in [0, K(rho)] with sn(z, rho)^2 = xi, by bisection on the monotone quarter period.
inline double jacobi_sn2_inverse(double xi, double rho)
{
    if (!(xi >= 0.0 && xi <= 1.0)) {
        throw invalid_parameter("jacobi_sn2_inverse: need 0 <= xi <= 1");
    }
    if (!(rho >= 0.0 && rho < 1.0)) {
        throw invalid_parameter("jacobi_sn2_inverse: need 0 <= rho < 1");
    }
    double lo = 0.0;
    double hi = std::comp_ellint_1(rho);
    for (int k = 0; k < 200 && hi - lo > 0.0; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) {
            break;
        }
        const double sn = jacobi_sn(mid, rho);
        (sn * sn < xi ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace lame3trf

#endif
