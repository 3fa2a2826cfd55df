#include "finsler/metric.hpp"

#include <cmath>
#include <limits>

namespace finsler {

namespace {

constexpr double kSingularRelTol = 1e-14;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

SigmaRho sigmas(const PhiJet& pj)
{
    if (pj.order < 2) throw InsufficientOrder("sigma coefficients need phi_ss (order >= 2)");
    const double phi = pj.phi;
    const double p1 = pj.phi_s;
    const double p2 = pj.phi_ss;
    const double s = pj.s;
    const double a = phi - s * p1;

    SigmaRho sr;
    sr.order = pj.order;
    sr.sigma0 = phi * a;
    sr.sigma1 = p1 * p1 + phi * p2;
    sr.sigma2 = a * p1 - s * phi * p2;
    sr.sigma3 = -s * sr.sigma2;
    sr.mu = sr.sigma1;
    sr.mu_s = pj.order >= 3 ? 3.0 * p1 * p2 + phi * pj.phi_sss : kNaN;
    sr.mu_ss = pj.order >= 4 ? 3.0 * p2 * p2 + 4.0 * p1 * pj.phi_sss + phi * pj.phi_ssss : kNaN;
    sr.rho0 = sr.rho1 = sr.rho2 = sr.rho3 = sr.kappa = kNaN;
    sr.m2 = pj.r * pj.r - s * s;
    return sr;
}

SigmaRho rhos(const PhiJet& pj, double m2)
{
    SigmaRho sr = sigmas(pj);
    const double phi = pj.phi;
    const double p1 = pj.phi_s;
    const double p2 = pj.phi_ss;
    const double s = pj.s;
    const double a = phi - s * p1;
    const double d = a + m2 * p2;

    if (std::abs(phi * a) <= kSingularRelTol * phi * phi || phi == 0.0)
        throw SingularMetric("phi (phi - s phi_s) vanishes");
    if (std::abs(d) <= kSingularRelTol * (std::abs(phi) + std::abs(s * p1) + std::abs(m2 * p2)))
        throw SingularMetric("phi - s phi_s + m^2 phi_ss vanishes");

    const double b = phi * p1 - s * p1 * p1 - s * phi * p2;
    sr.m2 = m2;
    // Factored through rho0 so phi^3 (phi - s phi_s) D never forms: steep families reach phi ~ 1e120.
    const double bd = (b / phi) / d;
    sr.rho0 = 1.0 / (phi * a);
    sr.rho1 = (s + m2 * p1 / phi) * bd * sr.rho0;
    sr.rho2 = -bd * sr.rho0;
    sr.rho3 = -(p2 / d) * sr.rho0;
    // rho0 + rho3 m^2 simplifies to 1 / (phi D); the sum cancels badly when rho3 m^2 ~ -rho0.
    sr.kappa = 1.0 / (phi * d);
    sr.has_rho = true;
    return sr;
}

SymTensor2 metric_tensor(const EvalPoint& p, const SigmaRho& sr)
{
    SymTensor2 g(p.n);
    const double u = p.u;
    for (int i = 0; i < p.n; ++i)
        for (int j = i; j < p.n; ++j)
            g(i, j) = (i == j ? sr.sigma0 : 0.0) + sr.sigma1 * p.x[i] * p.x[j] +
                      sr.sigma2 / u * (p.x[i] * p.y[j] + p.x[j] * p.y[i]) + sr.sigma3 / (u * u) * p.y[i] * p.y[j];
    return g;
}

SymTensor2 inverse_metric(const EvalPoint& p, const SigmaRho& sr)
{
    if (!sr.has_rho) throw SingularMetric("inverse metric needs rho coefficients");
    SymTensor2 g(p.n);
    const double u = p.u;
    for (int i = 0; i < p.n; ++i)
        for (int j = i; j < p.n; ++j)
            g(i, j) = (i == j ? sr.rho0 : 0.0) + sr.rho1 / (u * u) * p.y[i] * p.y[j] +
                      sr.rho2 / u * (p.x[i] * p.y[j] + p.x[j] * p.y[i]) + sr.rho3 * p.x[i] * p.x[j];
    return g;
}

RegularityReport regularity(const PhiJet& pj, double m2)
{
    RegularityReport rep;
    rep.phi_positive = pj.phi > 0.0;
    rep.first = pj.phi - pj.s * pj.phi_s;
    rep.second = rep.first + m2 * pj.phi_ss;
    rep.regular = rep.phi_positive && rep.first > 0.0 && rep.second > 0.0;
    return rep;
}

double sigma2_scale(const PhiJet& pj)
{
    return std::abs(pj.phi - pj.s * pj.phi_s) * std::abs(pj.phi_s) + std::abs(pj.s * pj.phi * pj.phi_ss);
}

}  // namespace finsler
