#include "finsler/ttensor.hpp"

#include <cmath>
#include <limits>

namespace finsler {

namespace {

void require_t_inputs(const SigmaRho& sr)
{
    if (sr.order < 4) throw InsufficientOrder("T coefficients need phi derivatives up to order 4");
    if (!sr.has_rho) throw SingularMetric("T coefficients need rho coefficients");
}

double hh_sum(const SymTensor2& H, int h, int i, int j, int k)
{
    return H(h, i) * H(j, k) + H(h, j) * H(i, k) + H(h, k) * H(i, j);
}

double hmm_sum(const SymTensor2& H, const Vec& m, int h, int i, int j, int k)
{
    return H(h, k) * m[i] * m[j] + H(h, j) * m[i] * m[k] + H(h, i) * m[j] * m[k] + H(i, j) * m[h] * m[k] +
           H(j, k) * m[i] * m[h] + H(i, k) * m[j] * m[h];
}

double hn_sum(const SymTensor2& H, const SymTensor2& nt, int h, int i, int j, int k)
{
    return H(i, k) * nt(j, h) + H(j, k) * nt(i, h) + H(i, j) * nt(k, h) + H(j, h) * nt(i, k) + H(k, h) * nt(i, j) +
           H(i, h) * nt(j, k);
}

}  // namespace

TCoefficients t_coefficients(const PhiJet& pj, const SigmaRho& sr, double u)
{
    require_t_inputs(sr);
    const double phi = pj.phi;
    const double p1 = pj.phi_s;
    const double s = pj.s;
    const double m2 = sr.m2;
    const double s2 = sr.sigma2;
    const double ms = sr.mu_s;
    const double mss = sr.mu_ss;
    const double k = sr.kappa;
    const double pre = phi / (4.0 * u);

    TCoefficients tc;
    tc.Phi = -pre * s2 * (2.0 * s + s2 * m2 * k);
    tc.Psi = pre * (4.0 * p1 * s2 / phi - 2.0 * s * ms - 2.0 * sr.rho0 * s2 * s2 - s2 * k * (2.0 * s2 + ms * m2));
    tc.Omega = pre * (8.0 * ms * p1 / phi + 2.0 * mss - 6.0 * sr.rho0 * s2 * ms -
                      3.0 * (2.0 * s2 + ms * m2) * (k * ms + 2.0 * sr.rho3 * s2));
    return tc;
}

TCoefficients t_coefficient_magnitudes(const PhiJet& pj, const SigmaRho& sr, double u)
{
    require_t_inputs(sr);
    const double phi = std::abs(pj.phi);
    const double p1 = std::abs(pj.phi_s);
    const double p2 = std::abs(pj.phi_ss);
    const double p3 = std::abs(pj.phi_sss);
    const double p4 = std::abs(pj.phi_ssss);
    const double s = std::abs(pj.s);
    const double m2 = std::abs(sr.m2);
    const double s2 = sigma2_scale(pj);
    const double ms = 3.0 * p1 * p2 + phi * p3;
    const double mss = 3.0 * p2 * p2 + 4.0 * p1 * p3 + phi * p4;
    const double r0 = std::abs(sr.rho0);
    const double r3 = std::abs(sr.rho3);
    const double k = r0 + r3 * m2;
    const double pre = phi / (4.0 * u);

    TCoefficients mag;
    mag.Phi = pre * s2 * (2.0 * s + s2 * m2 * k);
    mag.Psi = p1 * s2 / u + pre * (2.0 * s * ms + 2.0 * r0 * s2 * s2 + s2 * k * (2.0 * s2 + ms * m2));
    mag.Omega = 2.0 * ms * p1 / u + pre * (2.0 * mss + 6.0 * r0 * s2 * ms + 3.0 * (2.0 * s2 + ms * m2) * (k * ms + 2.0 * r3 * s2));
    return mag;
}

TCoefficients scaled_coefficients(const TCoefficients& tc, const TCoefficients& magnitude)
{
    auto ratio = [](double v, double mag) {
        if (v == 0.0) return 0.0;
        if (mag == 0.0) return std::numeric_limits<double>::infinity();
        return std::abs(v) / mag;
    };
    return {ratio(tc.Phi, magnitude.Phi), ratio(tc.Psi, magnitude.Psi), ratio(tc.Omega, magnitude.Omega)};
}

SymTensor4 t_tensor_closed(const EvalPoint& p, const TCoefficients& tc)
{
    SymTensor4 t(p.n);
    const auto& H = p.hbar;
    const auto& m = p.m;
    for (const auto& [h, i, j, k] : t.multisets())
        t(h, i, j, k) = tc.Phi * hh_sum(H, h, i, j, k) + tc.Psi * hmm_sum(H, m, h, i, j, k) +
                        tc.Omega * m[h] * m[i] * m[j] * m[k];
    return t;
}

CyclicSums t_tensor_cyclic_lemmas(const EvalPoint& p, const PhiJet& pj, const SigmaRho& sr)
{
    if (sr.order < 3) throw InsufficientOrder("cyclic sums need phi derivatives up to order 3");
    if (!sr.has_rho) throw SingularMetric("cyclic sums need rho coefficients");
    const double u = p.u;
    const double u2 = u * u;
    const double m2 = p.m2;
    const double s2 = sr.sigma2;
    const double ms = sr.mu_s;
    const double r0 = sr.rho0;
    const double r3 = sr.rho3;
    const double w = 2.0 * s2 + ms * m2;

    // rho factors scale like 1/phi^2 and sigma2 like phi^2; pair them first so steep families do not overflow
    const double r0s2 = r0 * s2;
    const double cc_mmmm = 3.0 * (2.0 * r0s2 * ms + w * (r0 * ms + r3 * w)) / (4.0 * u2);
    const double cc_hh = (sr.kappa * s2) * s2 * m2 / (4.0 * u2);
    const double cc_hmm = (2.0 * r0s2 + w * sr.kappa) * s2 / (4.0 * u2);

    const double cl_nmm = ms * pj.phi / (2.0 * u);
    const double cl_mmmm = 2.0 * ms * pj.phi_s / u;
    const double cl_hmm = pj.phi_s * s2 / u;
    const double cl_hn = pj.phi * s2 / (2.0 * u);

    const auto& H = p.hbar;
    const auto& m = p.m;
    const SymTensor2 nt = n_tensor(p);
    CyclicSums out{SymTensor4(p.n), SymTensor4(p.n)};
    for (const auto& [h, i, j, k] : out.cc.multisets()) {
        const double mmmm = m[h] * m[i] * m[j] * m[k];
        const double hmm = hmm_sum(H, m, h, i, j, k);
        out.cc(h, i, j, k) = cc_mmmm * mmmm + cc_hh * hh_sum(H, h, i, j, k) + cc_hmm * hmm;
        const double nmm = m[i] * m[j] * nt(k, h) + m[k] * m[h] * nt(i, j);
        out.cl(h, i, j, k) = cl_nmm * nmm + cl_mmmm * mmmm + cl_hmm * hmm + cl_hn * hn_sum(H, nt, h, i, j, k);
    }
    return out;
}

WValue w_value(const PhiJet& pj)
{
    if (pj.order < 2) throw InsufficientOrder("W_s needs phi_ss");
    const double a = pj.phi - pj.s * pj.phi_s;
    if (std::abs(a) <= 1e-14 * (std::abs(pj.phi) + std::abs(pj.s * pj.phi_s)) || a == 0.0)
        throw SingularMetric("phi - s phi_s vanishes");
    return {pj.phi_s / a, pj.phi * pj.phi_ss / (a * a)};
}

IdentitySides phi_zero_identity(const PhiJet& pj, const SigmaRho& sr)
{
    const double s = pj.s;
    const double m2 = sr.m2;
    if (s == 0.0) throw DegeneratePoint("identity needs s != 0");
    if (!(std::abs(m2) > 1e-14 * pj.r * pj.r)) throw DegeneratePoint("identity needs m^2 != 0");
    if (!sr.has_rho) throw SingularMetric("identity needs kappa");
    const WValue w = w_value(pj);
    const double a = pj.phi - s * pj.phi_s;
    const double d = a + m2 * pj.phi_ss;
    IdentitySides out;
    out.lhs = 2.0 * s + m2 * sr.sigma2 * sr.kappa;
    out.rhs = s * m2 * (a / pj.phi) * (a / d) * (w.W_s + (1.0 / s + 2.0 * s / m2) * w.W + 2.0 / m2);
    return out;
}

double family_phi(double a, double c, double r, double s)
{
    const double cr2 = c * r * r;
    if (cr2 == 0.0) throw DomainError("family needs c r^2 != 0");
    if (!(s > 0.0) || !(s < r)) throw DomainError("family needs 0 < s < r");
    return a * std::pow(s, (cr2 - 1.0) / cr2) * std::pow(r * r - s * s, 1.0 / (2.0 * cr2));
}

}  // namespace finsler
