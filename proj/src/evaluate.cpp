#include "finsler/evaluate.hpp"

#include <cmath>

namespace finsler {

PointState evaluate_point(const MetricSpec& metric, std::span<const double> x, std::span<const double> y)
{
    PointState st;
    st.p = make_eval_point(x, y);
    st.pj = phi_jet(metric, st.p.r, st.p.s, 4);
    st.reg = regularity(st.pj, st.p.m2);
    st.sr = rhos(st.pj, st.p.m2);
    return st;
}

std::pair<Vec, Vec> canonical_point(int n, double r, double s, double u)
{
    if (n < kMinDim || n > kMaxDim) throw DimensionMismatch("dimension must be in 2..6");
    Vec x(n, 0.0);
    Vec y(n, 0.0);
    x[0] = r;
    const double c = s / r;
    y[0] = u * c;
    y[1] = u * std::sqrt(std::max(0.0, 1.0 - c * c));
    return {x, y};
}

}  // namespace finsler
