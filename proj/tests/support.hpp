#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "finsler/catalog.hpp"
#include "finsler/evaluate.hpp"
#include "finsler/metric.hpp"
#include "finsler/oracle.hpp"
#include "finsler/verify.hpp"

namespace finsler::test {

/// |a - b| / max(|a|, |b|, floor)
inline double rel_err(double a, double b, double floor = 1e-12)
{
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

template <typename Tensor>
double tensor_rel_err(const Tensor& a, const Tensor& b, double floor = 1e-12)
{
    return max_abs_diff(a, b) / std::max({a.max_abs(), b.max_abs(), floor});
}

/// Natural magnitude of a y-derivative of order k of g: |g| / u^k. Used as the
/// floor when the compared tensor vanishes identically (Riemannian metrics).
inline double derivative_floor(const SymTensor2& g, double u, int k) { return g.max_abs() / std::pow(u, k); }

/// Magnitude T is measured against: the largest definitional term, or F |g| / u^2
/// (the size of F dC/dy) when C vanishes and the terms are pure roundoff.
inline double t_floor(const OracleTensors& o, double u)
{
    return std::max(o.term_scale, o.F * derivative_floor(o.g, u, 2));
}

/// Central difference of order k (k <= 4) with step h.
inline double central_difference(const std::function<double(double)>& f, double x, int k, double h)
{
    switch (k) {
    case 1: return (f(x + h) - f(x - h)) / (2 * h);
    case 2: return (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
    case 3: return (f(x + 2 * h) - 2 * f(x + h) + 2 * f(x - h) - f(x - 2 * h)) / (2 * h * h * h);
    case 4: return (f(x + 2 * h) - 4 * f(x + h) + 6 * f(x) - 4 * f(x - h) + f(x - 2 * h)) / (h * h * h * h);
    default: return f(x);
    }
}

inline Vec random_direction(std::mt19937_64& rng, int n)
{
    std::normal_distribution<double> nd(0.0, 1.0);
    Vec v(n);
    double len = 0.0;
    do {
        for (double& c : v) c = nd(rng);
        len = norm(v);
    } while (len < 1e-8);
    for (double& c : v) c /= len;
    return v;
}

using TestPoint = SamplePoint;

/// Seeded regular, in-domain, non-degenerate points with |x| in (0.1, 0.9), |y| in (0.5, 2).
inline std::vector<TestPoint> regular_points(const MetricSpec& metric, int n, int count, unsigned seed)
{
    return sample_points(metric, n, count, seed);
}

inline std::vector<MetricSpec> reference_metrics()
{
    return {
        builtin("randers"),
        builtin("kropina"),
        builtin("riemannian", {{"c1", 1.0}, {"c2", 1.0}}),
        builtin("tcondition_family", {{"a", 1.0}, {"c", 0.5}}),
        builtin("tcondition_family", {{"a", 1.0}, {"c", 1.0}}),
        builtin("tcondition_family", {{"a", 1.0}, {"c", 2.0}}),
        expression_metric("1+s/2+s^2/8"),
    };
}

}  // namespace finsler::test
