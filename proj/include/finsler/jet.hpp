#pragma once

/// \file
/// Truncated Taylor jets carrying a value and its derivatives in one variable.
///
/// A `Jet<T, N>` stores f, f', ..., f^(N) (derivatives, not Taylor coefficients)
/// together with a runtime order <= N. Arithmetic is exact truncated-Taylor
/// algebra: products follow the Leibniz rule, elementary functions follow
/// Faa di Bruno. The scalar type T may itself be a jet, so
/// Jet<Jet<Jet<Jet<double, 1>, 1>, 1>, 1> yields exact fourth-order mixed partials.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <type_traits>

namespace finsler {

template <typename T, int N = 4>
class Jet;

template <typename T>
struct is_jet : std::false_type {};
template <typename T, int N>
struct is_jet<Jet<T, N>> : std::true_type {};
template <typename T>
inline constexpr bool is_jet_v = is_jet<T>::value;

inline constexpr double primal(double x) noexcept { return x; }

template <typename T, int N>
constexpr double primal(const Jet<T, N>& x) noexcept
{
    return primal(x[0]);
}

template <typename T, int N>
class Jet {
    static_assert(N >= 0 && N <= 4, "jets are capped at order 4");

public:
    using scalar_type = T;
    static constexpr int capacity = N;

    constexpr Jet() noexcept : d_{}, order_(N) {}

    /// Constant. Constants never truncate: their order is the full capacity.
    constexpr Jet(double c) noexcept : d_{}, order_(N) { d_[0] = T(c); }

    template <typename U = T, std::enable_if_t<!std::is_same_v<U, double>, int> = 0>
    constexpr Jet(const T& c) noexcept : d_{}, order_(N)
    {
        d_[0] = c;
    }

    /// The independent variable x0 + t, truncated at `order`.
    static constexpr Jet variable(const T& x0, int order = N) noexcept
    {
        Jet j;
        j.order_ = std::clamp(order, 0, N);
        j.d_[0] = x0;
        if (j.order_ >= 1) j.d_[1] = T(1.0);
        return j;
    }

    /// Jet from explicit derivative values; slots past `order` are zeroed.
    static constexpr Jet from_derivatives(const std::array<T, N + 1>& d, int order = N) noexcept
    {
        Jet j;
        j.order_ = std::clamp(order, 0, N);
        for (int k = 0; k <= j.order_; ++k) j.d_[k] = d[k];
        return j;
    }

    constexpr int order() const noexcept { return order_; }
    constexpr const T& operator[](int k) const noexcept { return d_[k]; }
    constexpr T& operator[](int k) noexcept { return d_[k]; }
    constexpr const T& value() const noexcept { return d_[0]; }

    /// d/dt of this jet, one order lower.
    constexpr Jet derivative() const noexcept
    {
        Jet j;
        j.order_ = std::max(order_ - 1, 0);
        for (int k = 0; k + 1 <= order_; ++k) j.d_[k] = d_[k + 1];
        if (order_ == 0) j.d_[0] = T(0.0);
        return j;
    }

    friend constexpr Jet operator+(const Jet& a) noexcept { return a; }
    friend constexpr Jet operator-(const Jet& a) noexcept
    {
        Jet r = a;
        for (int k = 0; k <= r.order_; ++k) r.d_[k] = -r.d_[k];
        return r;
    }

    friend constexpr Jet operator+(const Jet& a, const Jet& b) noexcept
    {
        Jet r;
        r.order_ = std::min(a.order_, b.order_);
        for (int k = 0; k <= r.order_; ++k) r.d_[k] = a.d_[k] + b.d_[k];
        return r;
    }

    friend constexpr Jet operator-(const Jet& a, const Jet& b) noexcept
    {
        Jet r;
        r.order_ = std::min(a.order_, b.order_);
        for (int k = 0; k <= r.order_; ++k) r.d_[k] = a.d_[k] - b.d_[k];
        return r;
    }

    friend constexpr Jet operator*(const Jet& a, const Jet& b) noexcept
    {
        Jet r;
        r.order_ = std::min(a.order_, b.order_);
        for (int k = 0; k <= r.order_; ++k) {
            T acc = a.d_[0] * b.d_[k];
            for (int j = 1; j <= k; ++j) acc = acc + binomial(k, j) * (a.d_[j] * b.d_[k - j]);
            r.d_[k] = acc;
        }
        return r;
    }

    friend constexpr Jet operator/(const Jet& a, const Jet& b)
    {
        Jet r = a * reciprocal(b);
        r.d_[0] = a.d_[0] / b.d_[0];  // keep the value bit-identical to plain division
        return r;
    }

    friend constexpr Jet operator*(const Jet& a, double c) noexcept
    {
        Jet r = a;
        for (int k = 0; k <= r.order_; ++k) r.d_[k] = r.d_[k] * c;
        return r;
    }
    friend constexpr Jet operator*(double c, const Jet& a) noexcept { return a * c; }
    friend constexpr Jet operator/(const Jet& a, double c) noexcept { return a * (1.0 / c); }
    friend constexpr Jet operator+(const Jet& a, double c) noexcept
    {
        Jet r = a;
        r.d_[0] = r.d_[0] + c;
        return r;
    }
    friend constexpr Jet operator+(double c, const Jet& a) noexcept { return a + c; }
    friend constexpr Jet operator-(const Jet& a, double c) noexcept { return a + (-c); }
    friend constexpr Jet operator-(double c, const Jet& a) noexcept { return (-a) + c; }
    friend constexpr Jet operator/(double c, const Jet& a)
    {
        Jet r = reciprocal(a) * c;
        r.d_[0] = c / a.d_[0];
        return r;
    }

    Jet& operator+=(const Jet& b) noexcept { return *this = *this + b; }
    Jet& operator-=(const Jet& b) noexcept { return *this = *this - b; }
    Jet& operator*=(const Jet& b) noexcept { return *this = *this * b; }
    Jet& operator/=(const Jet& b) { return *this = *this / b; }

    /// f(g) given f and its first four derivatives evaluated at g's value.
    static constexpr Jet compose(const Jet& g, const std::array<T, 5>& f) noexcept
    {
        Jet h;
        h.order_ = g.order_;
        h.d_[0] = f[0];
        if constexpr (N >= 1) {
            const T& g1 = g.d_[1];
            if (g.order_ >= 1) h.d_[1] = f[1] * g1;
            if constexpr (N >= 2) {
                const T& g2 = g.d_[2];
                if (g.order_ >= 2) h.d_[2] = f[2] * (g1 * g1) + f[1] * g2;
                if constexpr (N >= 3) {
                    const T& g3 = g.d_[3];
                    if (g.order_ >= 3) h.d_[3] = f[3] * (g1 * g1 * g1) + 3.0 * (f[2] * (g1 * g2)) + f[1] * g3;
                    if constexpr (N >= 4) {
                        const T& g4 = g.d_[4];
                        const T g1sq = g1 * g1;
                        if (g.order_ >= 4)
                            h.d_[4] = f[4] * (g1sq * g1sq) + 6.0 * (f[3] * (g1sq * g2)) +
                                      f[2] * (3.0 * (g2 * g2) + 4.0 * (g1 * g3)) + f[1] * g4;
                    }
                }
            }
        }
        return h;
    }

    friend constexpr Jet reciprocal(const Jet& g)
    {
        const T inv = 1.0 / g.d_[0];
        const T inv2 = inv * inv;
        const T inv3 = inv2 * inv;
        return compose(g, {inv, -inv2, 2.0 * inv3, -6.0 * (inv3 * inv), 24.0 * (inv3 * inv2)});
    }

    friend Jet sqrt(const Jet& g)
    {
        using std::sqrt;
        const T r = sqrt(g.d_[0]);
        const T inv = 1.0 / g.d_[0];
        const T a = r * inv;
        const T b = a * inv;
        const T c = b * inv;
        return compose(g, {r, 0.5 * a, -0.25 * b, 0.375 * c, -0.9375 * (c * inv)});
    }

    friend Jet exp(const Jet& g)
    {
        using std::exp;
        const T e = exp(g.d_[0]);
        return compose(g, {e, e, e, e, e});
    }

    friend Jet log(const Jet& g)
    {
        using std::log;
        const T inv = 1.0 / g.d_[0];
        const T inv2 = inv * inv;
        return compose(g, {log(g.d_[0]), inv, -inv2, 2.0 * (inv2 * inv), -6.0 * (inv2 * inv2)});
    }

    friend Jet sin(const Jet& g)
    {
        using std::cos;
        using std::sin;
        const T s = sin(g.d_[0]);
        const T c = cos(g.d_[0]);
        return compose(g, {s, c, -s, -c, s});
    }

    friend Jet cos(const Jet& g)
    {
        using std::cos;
        using std::sin;
        const T s = sin(g.d_[0]);
        const T c = cos(g.d_[0]);
        return compose(g, {c, -s, -c, s, c});
    }

    /// g^p for a real constant exponent. Non-negative integer exponents keep
    /// exact zeros past degree p, so s^2 stays valid at s = 0 and for s < 0.
    friend Jet pow(const Jet& g, double p)
    {
        using std::pow;
        const bool poly = p >= 0.0 && p == std::floor(p);
        std::array<T, 5> f{};
        double falling = 1.0;
        const int top = std::min(N, g.order_);
        for (int k = 0; k <= top; ++k) {
            if (poly && k > static_cast<int>(p)) {
                f[k] = T(0.0);
            } else {
                f[k] = falling * pow(g.d_[0], p - k);
            }
            falling *= (p - k);
        }
        return compose(g, f);
    }

private:
    static constexpr double binomial(int k, int j) noexcept
    {
        constexpr double table[5][5] = {
            {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
        return table[k][j];
    }

    std::array<T, N + 1> d_;
    int order_;
};

/// Nested first-order jets: Nested<double, 2> = Jet<Jet<double, 1>, 1>.
template <typename T, int Depth>
struct NestedJet {
    using type = Jet<typename NestedJet<T, Depth - 1>::type, 1>;
};
template <typename T>
struct NestedJet<T, 0> {
    using type = T;
};
template <typename T, int Depth>
using nested_jet_t = typename NestedJet<T, Depth>::type;

}  // namespace finsler
