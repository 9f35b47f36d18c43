#ifndef LAME3TRF_POWER_SERIES_HPP
#define LAME3TRF_POWER_SERIES_HPP

#include <algorithm>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "error.hpp"

namespace lame3trf
{

using complex_t = std::complex<double>;

// Truncated Taylor series c_0 + c_1 e + ... + c_D e^D in one complex variable.
// All arithmetic truncates at the smaller degree of the operands.
class TaylorSeries
{
public:
    TaylorSeries() : m_c(1) {}
    explicit TaylorSeries(std::size_t degree) : m_c(degree + 1) {}
    TaylorSeries(std::vector<complex_t> coeffs) : m_c(std::move(coeffs))
    {
        if (m_c.empty()) {
            m_c.resize(1);
        }
    }

    static TaylorSeries constant(complex_t value, std::size_t degree)
    {
        TaylorSeries r(degree);
        r.m_c[0] = value;
        return r;
    }

    // x0 + e
    static TaylorSeries variable(complex_t x0, std::size_t degree)
    {
        TaylorSeries r(degree);
        r.m_c[0] = x0;
        if (degree > 0) {
            r.m_c[1] = 1.0;
        }
        return r;
    }

    std::size_t degree() const { return m_c.size() - 1; }
    complex_t &operator[](std::size_t k) { return m_c[k]; }
    const complex_t &operator[](std::size_t k) const { return m_c[k]; }
    std::span<const complex_t> coeffs() const { return m_c; }
    complex_t value() const { return m_c[0]; }

    TaylorSeries truncated(std::size_t degree) const
    {
        TaylorSeries r(degree);
        std::copy_n(m_c.begin(), std::min(m_c.size(), degree + 1), r.m_c.begin());
        return r;
    }

    complex_t evaluate(complex_t e) const
    {
        complex_t acc = 0.0;
        for (std::size_t k = m_c.size(); k-- > 0;) {
            acc = acc * e + m_c[k];
        }
        return acc;
    }

    TaylorSeries derivative() const
    {
        if (m_c.size() == 1) {
            return TaylorSeries(0);
        }
        TaylorSeries r(degree() - 1);
        for (std::size_t k = 1; k < m_c.size(); ++k) {
            r.m_c[k - 1] = static_cast<double>(k) * m_c[k];
        }
        return r;
    }

    TaylorSeries operator-() const
    {
        TaylorSeries r = *this;
        for (auto &c : r.m_c) {
            c = -c;
        }
        return r;
    }

    TaylorSeries &operator+=(const TaylorSeries &o)
    {
        shrink_to(o.degree());
        for (std::size_t k = 0; k < m_c.size(); ++k) {
            m_c[k] += o.m_c[k];
        }
        return *this;
    }
    TaylorSeries &operator-=(const TaylorSeries &o)
    {
        shrink_to(o.degree());
        for (std::size_t k = 0; k < m_c.size(); ++k) {
            m_c[k] -= o.m_c[k];
        }
        return *this;
    }
    TaylorSeries &operator*=(const TaylorSeries &o)
    {
        *this = *this * o;
        return *this;
    }
    TaylorSeries &operator/=(const TaylorSeries &o)
    {
        *this = *this / o;
        return *this;
    }
    TaylorSeries &operator+=(complex_t a)
    {
        m_c[0] += a;
        return *this;
    }
    TaylorSeries &operator-=(complex_t a)
    {
        m_c[0] -= a;
        return *this;
    }
    TaylorSeries &operator*=(complex_t a)
    {
        for (auto &c : m_c) {
            c *= a;
        }
        return *this;
    }
    TaylorSeries &operator/=(complex_t a)
    {
        for (auto &c : m_c) {
            c /= a;
        }
        return *this;
    }

    friend TaylorSeries operator+(TaylorSeries a, const TaylorSeries &b) { return a += b; }
    friend TaylorSeries operator-(TaylorSeries a, const TaylorSeries &b) { return a -= b; }
    friend TaylorSeries operator+(TaylorSeries a, complex_t b) { return a += b; }
    friend TaylorSeries operator+(complex_t b, TaylorSeries a) { return a += b; }
    friend TaylorSeries operator-(TaylorSeries a, complex_t b) { return a -= b; }
    friend TaylorSeries operator-(complex_t b, const TaylorSeries &a) { return (-a) += b; }
    friend TaylorSeries operator*(TaylorSeries a, complex_t b) { return a *= b; }
    friend TaylorSeries operator*(complex_t b, TaylorSeries a) { return a *= b; }
    friend TaylorSeries operator/(TaylorSeries a, complex_t b) { return a /= b; }

    friend TaylorSeries operator*(const TaylorSeries &a, const TaylorSeries &b)
    {
        const std::size_t d = std::min(a.degree(), b.degree());
        TaylorSeries r(d);
        for (std::size_t i = 0; i <= d; ++i) {
            if (a.m_c[i] == 0.0) {
                continue;
            }
            for (std::size_t j = 0; i + j <= d; ++j) {
                r.m_c[i + j] += a.m_c[i] * b.m_c[j];
            }
        }
        return r;
    }

    friend TaylorSeries operator/(const TaylorSeries &a, const TaylorSeries &b)
    {
        if (b.m_c[0] == 0.0) {
            throw pole_error("TaylorSeries: division by a series with zero constant term");
        }
        const std::size_t d = std::min(a.degree(), b.degree());
        TaylorSeries q(d);
        for (std::size_t k = 0; k <= d; ++k) {
            complex_t acc = a.m_c[k];
            for (std::size_t j = 1; j <= k; ++j) {
                acc -= b.m_c[j] * q.m_c[k - j];
            }
            q.m_c[k] = acc / b.m_c[0];
        }
        return q;
    }

    friend TaylorSeries operator/(complex_t a, const TaylorSeries &b)
    {
        return TaylorSeries::constant(a, b.degree()) / b;
    }

private:
    void shrink_to(std::size_t d)
    {
        if (d < degree()) {
            m_c.resize(d + 1);
        }
    }

    std::vector<complex_t> m_c;
};

// Principal branch, applied at the constant term.
inline TaylorSeries pow(const TaylorSeries &f, double e)
{
    const complex_t f0 = f[0];
    if (f0 == 0.0) {
        throw singular_point("TaylorSeries pow: zero constant term");
    }
    const std::size_t d = f.degree();
    TaylorSeries h(d);
    h[0] = std::pow(f0, e);
    // k f0 h_k = sum_{j=1}^{k} ((e + 1) j - k) f_j h_{k-j}
    for (std::size_t k = 1; k <= d; ++k) {
        complex_t acc = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            acc += ((e + 1.0) * static_cast<double>(j) - static_cast<double>(k)) * f[j] * h[k - j];
        }
        h[k] = acc / (static_cast<double>(k) * f0);
    }
    return h;
}

inline TaylorSeries sqrt(const TaylorSeries &f)
{
    const complex_t f0 = f[0];
    if (f0 == 0.0) {
        throw singular_point("TaylorSeries sqrt: zero constant term");
    }
    const std::size_t d = f.degree();
    TaylorSeries g(d);
    g[0] = std::sqrt(f0);
    for (std::size_t k = 1; k <= d; ++k) {
        complex_t acc = f[k];
        for (std::size_t j = 1; j < k; ++j) {
            acc -= g[j] * g[k - j];
        }
        g[k] = acc / (2.0 * g[0]);
    }
    return g;
}

// outer(inner(e)) where outer is a polynomial in its own variable and inner[0] == 0.
inline TaylorSeries compose(std::span<const complex_t> outer, const TaylorSeries &inner)
{
    if (inner[0] != 0.0) {
        throw invalid_parameter("compose: inner series must vanish at the origin");
    }
    const std::size_t d = inner.degree();
    TaylorSeries acc(d);
    for (std::size_t k = outer.size(); k-- > 0;) {
        acc = acc * inner;
        acc[0] += outer[k];
    }
    return acc;
}

inline TaylorSeries compose(const TaylorSeries &outer, const TaylorSeries &inner)
{
    return compose(outer.coeffs(), inner);
}

inline complex_t value_of(const complex_t &x) { return x; }
inline complex_t value_of(const TaylorSeries &x) { return x.value(); }

} // namespace lame3trf

#endif
