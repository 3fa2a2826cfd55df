#include "finsler/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "finsler/phi_jet.hpp"

namespace finsler {

namespace {

template <typename T>
bool all_finite(const T& t)
{
    return std::all_of(t.data().begin(), t.data().end(), [](double v) { return std::isfinite(v); });
}

}  // namespace

bool OracleTensors::finite() const
{
    return std::isfinite(F) && std::isfinite(term_scale) && all_finite(g) && all_finite(g_inv) && all_finite(C) &&
           all_finite(C4) && all_finite(T) && std::all_of(ell.begin(), ell.end(), [](double v) { return std::isfinite(v); });
}

OracleTensors oracle_tensors(const MetricSpec& metric, std::span<const double> x, std::span<const double> y,
                             int max_rank)
{
    if (x.size() != y.size()) throw DimensionMismatch("x and y differ in size");
    const int n = static_cast<int>(y.size());
    OracleTensors out;
    out.n = n;

    out.g = SymTensor2(n);
    for (const auto& [i, j] : out.g.multisets()) out.g(i, j) = 0.5 * fpow2_partial<2>(metric, x, y, {i, j});

    Eigen::MatrixXd g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = out.g(i, j);
    // SVD leaves its singular values unset on non-finite input
    if (!g.allFinite()) throw SingularMetric("numeric metric tensor is not finite");
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(g);
    const auto& sv = svd.singularValues();
    if (svd.info() != Eigen::Success || !(sv(n - 1) > 0.0) || sv(0) / sv(n - 1) > kOracleMaxCondition)
        throw SingularMetric("numeric metric tensor is ill-conditioned");
    out.condition = sv(0) / sv(n - 1);
    const Eigen::MatrixXd ginv = g.fullPivLu().solve(Eigen::MatrixXd::Identity(n, n));
    out.g_inv = SymTensor2(n);
    for (const auto& [i, j] : out.g_inv.multisets()) out.g_inv(i, j) = 0.5 * (ginv(i, j) + ginv(j, i));
    if (max_rank < 3) return out;

    out.C = SymTensor3(n);
    for (const auto& [i, j, k] : out.C.multisets()) out.C(i, j, k) = 0.25 * fpow2_partial<3>(metric, x, y, {i, j, k});
    if (max_rank < 4) return out;

    out.C4 = SymTensor4(n);
    for (const auto& [h, i, j, k] : out.C4.multisets())
        out.C4(h, i, j, k) = 0.25 * fpow2_partial<4>(metric, x, y, {h, i, j, k});

    const FGradient fg = f_gradient(metric, x, y);
    out.F = fg.F;
    out.ell = fg.ell;

    // Cm(r, a, b) = g^{rq} C_qab
    std::vector<double> cm(static_cast<std::size_t>(n) * n * n, 0.0);
    auto cm_at = [&](int r, int a, int b) -> double& { return cm[(static_cast<std::size_t>(r) * n + a) * n + b]; };
    for (int r = 0; r < n; ++r)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                double acc = 0.0;
                for (int q = 0; q < n; ++q) acc += ginv(r, q) * out.C(q, a, b);
                cm_at(r, a, b) = acc;
            }

    const double F = out.F;
    const auto& C = out.C;
    const auto& l = out.ell;
    auto t_full = [&](int h, int i, int j, int k, double& scale) {
        double cc = 0.0;
        for (int r = 0; r < n; ++r) cc += C(r, i, j) * cm_at(r, h, k) + C(r, j, h) * cm_at(r, i, k) + C(r, i, h) * cm_at(r, j, k);
        const double cl = C(h, i, j) * l[k] + C(h, i, k) * l[j] + C(h, j, k) * l[i] + C(i, j, k) * l[h];
        const double fc4 = F * out.C4(h, i, j, k);
        scale = std::max({scale, std::abs(fc4), std::abs(F * cc), std::abs(cl)});
        return fc4 - F * cc + cl;
    };

    out.T = SymTensor4(n);
    for (const auto& [h, i, j, k] : out.T.multisets()) out.T(h, i, j, k) = t_full(h, i, j, k, out.term_scale);
    for (int h = 0; h < n; ++h)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    const double v = t_full(h, i, j, k, out.term_scale);
                    out.asymmetry = std::max(out.asymmetry, std::abs(v - out.T(h, i, j, k)));
                }
    return out;
}

SymTensor4 t_tensor_oracle(const MetricSpec& metric, std::span<const double> x, std::span<const double> y)
{
    return oracle_tensors(metric, x, y).T;
}

}  // namespace finsler
