#include "finsler/frame.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace finsler {

double dot(std::span<const double> a, std::span<const double> b)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

EvalPoint make_eval_point(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size())
        throw DimensionMismatch("x has " + std::to_string(x.size()) + " components but y has " +
                                std::to_string(y.size()));
    const int n = static_cast<int>(x.size());
    if (n < kMinDim || n > kMaxDim) throw DimensionMismatch("dimension must be in 2..6, got " + std::to_string(n));

    EvalPoint p;
    p.n = n;
    p.x.assign(x.begin(), x.end());
    p.y.assign(y.begin(), y.end());
    p.r = norm(x);
    p.u = norm(y);
    if (p.r == 0.0) throw ZeroVector("x must be nonzero");
    if (p.u == 0.0) throw ZeroVector("y must be nonzero");
    p.s = dot(x, y) / p.u;
    p.m2 = p.r * p.r - p.s * p.s;

    p.m.resize(n);
    for (int i = 0; i < n; ++i) p.m[i] = p.x[i] - (p.s / p.u) * p.y[i];

    // relative threshold: |m|^2 is O(eps) r^2 when y is parallel to x
    if (p.m2 <= 1e-14 * p.r * p.r || dot(p.m, p.m) <= 1e-14 * p.r * p.r) {
        p.degenerate = true;
        p.m2 = 0.0;
        std::fill(p.m.begin(), p.m.end(), 0.0);
    }

    p.hbar = SymTensor2(n);
    const double u2 = p.u * p.u;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) p.hbar(i, j) = (i == j ? 1.0 : 0.0) - p.y[i] * p.y[j] / u2;
    return p;
}

SymTensor2 n_tensor(const EvalPoint& p)
{
    SymTensor2 t(p.n);
    for (int i = 0; i < p.n; ++i)
        for (int j = i; j < p.n; ++j) t(i, j) = (p.y[i] * p.m[j] + p.y[j] * p.m[i]) / p.u;
    return t;
}

}  // namespace finsler
