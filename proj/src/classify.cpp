#include "finsler/classify.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "finsler/evaluate.hpp"
#include "finsler/parallel.hpp"

namespace finsler {

namespace {

enum class Outcome { Used, Domain, Irregular, Singular };

struct GridSample {
    Outcome outcome = Outcome::Domain;
    double r = 0.0;
    double s = 0.0;
    double sigma2 = 0.0;
    double sigma2_scaled = 0.0;
    TCoefficients tc;
    TCoefficients scaled;
    double A_u = 0.0;
};

GridSample evaluate_grid_point(const MetricSpec& metric, double r, double s, double u, int dim)
{
    GridSample g;
    g.r = r;
    g.s = s;
    if (!metric.domain.admits(r, s)) return g;
    try {
        const auto [x, y] = canonical_point(dim, r, s, u);
        const PointState st = evaluate_point(metric, x, y);
        if (!st.reg.regular) {
            g.outcome = Outcome::Irregular;
            return g;
        }
        g.tc = t_coefficients(st.pj, st.sr, st.p.u);
        g.scaled = scaled_coefficients(g.tc, t_coefficient_magnitudes(st.pj, st.sr, st.p.u));
        g.sigma2 = st.sr.sigma2;
        const double scale = sigma2_scale(st.pj);
        g.sigma2_scaled = g.sigma2 == 0.0 ? 0.0 : std::abs(g.sigma2) / scale;
        g.A_u = std::abs(mean_cartan(st.p, st.sr).A) * st.p.u;
        g.outcome = Outcome::Used;
    } catch (const MathError&) {
        g.outcome = Outcome::Singular;
    }
    return g;
}

void keep_max(Extreme& e, double scaled, double value, double r, double s)
{
    if (scaled > e.scaled) e = {scaled, value, r, s};
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

Grid Grid::standard() { return {{0.2, 0.4, 0.6, 0.8}, {0.15, 0.35, 0.55, 0.75, 0.95}, 1.0}; }

std::vector<std::pair<double, double>> Grid::points() const
{
    std::vector<std::pair<double, double>> out;
    for (double r : r_values)
        for (double f : s_fractions) {
            out.emplace_back(r, r * f);
            out.emplace_back(r, -r * f);
        }
    return out;
}

std::string Grid::describe() const
{
    std::string out = "r in {";
    for (std::size_t i = 0; i < r_values.size(); ++i) out += (i ? ", " : "") + fmt(r_values[i]);
    out += "}, s = +-r * {";
    for (std::size_t i = 0; i < s_fractions.size(); ++i) out += (i ? ", " : "") + fmt(s_fractions[i]);
    out += "}, u = " + fmt(u);
    return out;
}

ClassificationReport t_condition_check(const MetricSpec& metric, const Grid& grid, double tol, int dim)
{
    const auto pts = grid.points();
    std::vector<GridSample> samples(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) {
        samples[i] = evaluate_grid_point(metric, pts[i].first, pts[i].second, grid.u, dim);
    });

    ClassificationReport rep;
    rep.metric = metric.label;
    rep.dim = dim;
    rep.tol = tol;
    rep.grid = grid.describe();
    rep.total_points = static_cast<int>(pts.size());
    Extreme sigma2;
    Extreme phi;
    Extreme psi;
    Extreme omega;
    Extreme a_min{std::numeric_limits<double>::infinity(), 0.0, 0.0, 0.0};
    for (const GridSample& g : samples) {
        switch (g.outcome) {
        case Outcome::Domain: ++rep.excluded_domain; continue;
        case Outcome::Irregular: ++rep.excluded_irregular; continue;
        case Outcome::Singular: ++rep.excluded_singular; continue;
        case Outcome::Used: ++rep.used_points; break;
        }
        keep_max(sigma2, g.sigma2_scaled, g.sigma2, g.r, g.s);
        keep_max(phi, g.scaled.Phi, g.tc.Phi, g.r, g.s);
        keep_max(psi, g.scaled.Psi, g.tc.Psi, g.r, g.s);
        keep_max(omega, g.scaled.Omega, g.tc.Omega, g.r, g.s);
        if (g.A_u < a_min.scaled) a_min = {g.A_u, g.A_u / grid.u, g.r, g.s};
    }
    if (rep.used_points == 0) throw EmptyGrid("no admissible grid points for " + metric.label);

    rep.regular_fraction = static_cast<double>(rep.used_points) / rep.total_points;
    rep.riemannian = sigma2.scaled < tol;
    rep.t_condition = std::max({phi.scaled, psi.scaled, omega.scaled}) < tol;
    rep.quasi_c_reducible = dim >= 3 && a_min.scaled > kZeroMeanCartanTol;
    rep.extremes = {{"sigma2", sigma2}, {"Phi", phi}, {"Psi", psi}, {"Omega", omega}, {"A", a_min}};
    return rep;
}

FamilyFit recover_family_params(const MetricSpec& metric, double r, const std::vector<double>& s_samples,
                                double sigma2_tol)
{
    FamilyFit fit;
    bool any_nonriemannian = false;
    for (double s : s_samples) {
        const PhiJet pj = phi_jet(metric, r, s, 2);
        const SigmaRho sr = sigmas(pj);
        const double scale = sigma2_scale(pj);
        if (sr.sigma2 != 0.0 && std::abs(sr.sigma2) > sigma2_tol * scale) any_nonriemannian = true;
        const WValue w = w_value(pj);
        fit.c_samples.push_back((1.0 + s * w.W) / (r * r - s * s));
    }
    if (!any_nonriemannian) throw RiemannianAtRadius("sigma2 vanishes at every sample at r = " + fmt(r));
    double sum = 0.0;
    for (double c : fit.c_samples) sum += c;
    fit.c_estimate = sum / static_cast<double>(fit.c_samples.size());
    for (double c : fit.c_samples) fit.max_deviation = std::max(fit.max_deviation, std::abs(c - fit.c_estimate));
    return fit;
}

}  // namespace finsler
