#pragma once

/// \file
/// s-derivatives of phi, and exact mixed y-partials of F^2 = u^2 phi(r, s)^2
/// through nested first-order jets (no finite differences).

#include <array>
#include <span>

#include "finsler/catalog.hpp"
#include "finsler/frame.hpp"
#include "finsler/jet.hpp"

namespace finsler {

/// phi and its s-partials at (r, s). Slots past `order` are zero.
struct PhiJet {
    double phi = 0.0;
    double phi_s = 0.0;
    double phi_ss = 0.0;
    double phi_sss = 0.0;
    double phi_ssss = 0.0;
    double r = 0.0;
    double s = 0.0;
    int order = 0;

    double derivative(int k) const;
};

PhiJet phi_jet(const MetricSpec& metric, double r, double s, int order = 4);

namespace detail {

/// Jet seeded so that its derivative is 1 at nesting level `level` (0 = innermost).
template <int Depth>
nested_jet_t<double, Depth> seed(int level)
{
    using J = nested_jet_t<double, Depth>;
    if constexpr (Depth == 0) {
        return 0.0;
    } else {
        using Inner = nested_jet_t<double, Depth - 1>;
        if (level == Depth - 1) return J::from_derivatives({Inner(0.0), Inner(1.0)}, 1);
        return J(seed<Depth - 1>(level));
    }
}

/// d/de_{Depth-1} ... d/de_0 component of a nested jet.
template <int Depth>
double mixed_component(const nested_jet_t<double, Depth>& v)
{
    if constexpr (Depth == 0) {
        return v;
    } else {
        return mixed_component<Depth - 1>(v[1]);
    }
}

template <int Depth>
nested_jet_t<double, Depth> value_at_depth(double v)
{
    return nested_jet_t<double, Depth>(v);
}

}  // namespace detail

/// F^2 and F evaluated over an arbitrary scalar algebra along y.
template <typename S>
S fpow2_generic(const MetricSpec& metric, std::span<const double> x, std::span<const S> y)
{
    using std::sqrt;
    S u2(0.0);
    S xy(0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        u2 = u2 + y[i] * y[i];
        xy = xy + x[i] * y[i];
    }
    const double r = norm(x);
    const S u = sqrt(u2);
    const S s = xy / u;
    const S phi = eval_expr(metric.expr, r, s, metric.params);
    return u2 * (phi * phi);
}

/// Exact mixed partial d^Depth(F^2)/dy^{idx[0]}...dy^{idx[Depth-1]}.
template <int Depth>
double fpow2_partial(const MetricSpec& metric, std::span<const double> x, std::span<const double> y,
                     const std::array<int, Depth>& idx)
{
    using J = nested_jet_t<double, Depth>;
    if (x.size() != y.size()) throw DimensionMismatch("x and y differ in size");
    std::vector<J> yj;
    yj.reserve(y.size());
    for (double v : y) yj.push_back(detail::value_at_depth<Depth>(v));
    for (int level = 0; level < Depth; ++level) {
        const int i = idx[level];
        if (i < 0 || i >= static_cast<int>(y.size())) throw DimensionMismatch("index out of range");
        yj[i] = yj[i] + detail::seed<Depth>(level);
    }
    const J f2 = fpow2_generic<J>(metric, x, std::span<const J>(yj));
    return detail::mixed_component<Depth>(f2);
}

/// d^4(F^2)/dy^h dy^i dy^j dy^k.
double fpow2_partial4(const MetricSpec& metric, std::span<const double> x, std::span<const double> y,
                      const std::array<int, 4>& idx);

/// F = sqrt(F^2) and its gradient dF/dy^i (the normalized supporting element).
struct FGradient {
    double F = 0.0;
    Vec ell;
};
FGradient f_gradient(const MetricSpec& metric, std::span<const double> x, std::span<const double> y);

}  // namespace finsler
