#include "finsler/phi_jet.hpp"

#include <cmath>

namespace finsler {

double PhiJet::derivative(int k) const
{
    switch (k) {
    case 0: return phi;
    case 1: return phi_s;
    case 2: return phi_ss;
    case 3: return phi_sss;
    case 4: return phi_ssss;
    default: throw InsufficientOrder("phi derivative order must be in 0..4");
    }
}

PhiJet phi_jet(const MetricSpec& metric, double r, double s, int order)
{
    if (order < 0 || order > 4) throw InsufficientOrder("phi_jet order must be in 0..4");
    const auto j = eval_expr(metric.expr, r, Jet<double, 4>::variable(s, order), metric.params);
    PhiJet pj;
    pj.r = r;
    pj.s = s;
    pj.order = order;
    double* slots[5] = {&pj.phi, &pj.phi_s, &pj.phi_ss, &pj.phi_sss, &pj.phi_ssss};
    for (int k = 0; k <= order; ++k) *slots[k] = j[k];
    return pj;
}

double fpow2_partial4(const MetricSpec& metric, std::span<const double> x, std::span<const double> y,
                      const std::array<int, 4>& idx)
{
    return fpow2_partial<4>(metric, x, y, idx);
}

FGradient f_gradient(const MetricSpec& metric, std::span<const double> x, std::span<const double> y)
{
    using J = Jet<double, 1>;
    FGradient out;
    out.ell.resize(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        std::vector<J> yj(y.begin(), y.end());
        yj[i] = J::variable(y[i], 1);
        J u2(0.0);
        J xy(0.0);
        for (std::size_t k = 0; k < y.size(); ++k) {
            u2 += yj[k] * yj[k];
            xy += x[k] * yj[k];
        }
        const J u = sqrt(u2);
        const J F = u * eval_expr(metric.expr, norm(x), xy / u, metric.params);
        out.F = F[0];
        out.ell[i] = F[1];
    }
    return out;
}

}  // namespace finsler
