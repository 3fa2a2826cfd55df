#include "finsler/cartan.hpp"

#include <cmath>

namespace finsler {

namespace {

void require_order(const SigmaRho& sr, int order, const char* what)
{
    if (sr.order < order) throw InsufficientOrder(std::string(what) + " needs phi derivatives up to order " +
                                                  std::to_string(order));
}

}  // namespace

SymTensor3 cartan_tensor(const EvalPoint& p, const SigmaRho& sr)
{
    require_order(sr, 3, "cartan_tensor");
    SymTensor3 c(p.n);
    const double a = sr.sigma2 / (2.0 * p.u);
    const double b = sr.mu_s / (2.0 * p.u);
    const auto& h = p.hbar;
    const auto& m = p.m;
    for (const auto& [i, j, k] : c.multisets())
        c(i, j, k) = a * (h(i, j) * m[k] + h(j, k) * m[i] + h(i, k) * m[j]) + b * m[i] * m[j] * m[k];
    return c;
}

MixedTensor cartan_mixed(const EvalPoint& p, const SigmaRho& sr)
{
    require_order(sr, 3, "cartan_mixed");
    if (!sr.has_rho) throw SingularMetric("cartan_mixed needs rho coefficients");
    const double u = p.u;
    const double m2 = p.m2;
    const double s2 = sr.sigma2;
    const double ms = sr.mu_s;
    const double a0 = sr.rho0 * s2 / (2.0 * u);
    const double a1 = sr.rho0 * ms / (2.0 * u);
    const double y0 = sr.rho2 * s2 * m2 / (2.0 * u * u);
    const double y1 = (2.0 * sr.rho2 * s2 + sr.rho2 * ms * m2) / (2.0 * u * u);
    const double x0 = sr.rho3 * s2 * m2 / (2.0 * u);
    const double x1 = (2.0 * sr.rho3 * s2 + sr.rho3 * ms * m2) / (2.0 * u);
    const auto& h = p.hbar;
    const auto& m = p.m;

    MixedTensor out(p.n, SymTensor2(p.n));
    for (int r = 0; r < p.n; ++r) {
        for (const auto& [j, k] : out[r].multisets()) {
            const double hjk = h(j, k);
            const double mjk = m[j] * m[k];
            out[r](j, k) = a0 * (h(r, j) * m[k] + h(r, k) * m[j]) + (a0 * hjk + a1 * mjk) * m[r] +
                           (y0 * hjk + y1 * mjk) * p.y[r] + (x0 * hjk + x1 * mjk) * p.x[r];
        }
    }
    return out;
}

MeanCartan mean_cartan(const EvalPoint& p, const SigmaRho& sr)
{
    require_order(sr, 3, "mean_cartan");
    if (!sr.has_rho) throw SingularMetric("mean_cartan needs rho coefficients");
    const double m2 = p.m2;
    MeanCartan mc;
    mc.A = (sr.rho0 * sr.sigma2 * (p.n + 1) + sr.rho0 * sr.mu_s * m2 + 3.0 * sr.rho3 * sr.sigma2 * m2 +
            sr.rho3 * sr.mu_s * m2 * m2) /
           (2.0 * p.u);
    mc.C.resize(p.n);
    for (int i = 0; i < p.n; ++i) mc.C[i] = mc.A * p.m[i];
    return mc;
}

SymTensor4 cartan_vertical_closed(const EvalPoint& p, const SigmaRho& sr)
{
    require_order(sr, 4, "cartan_vertical_closed");
    const double u2 = p.u * p.u;
    const double s = p.s;
    const double k_hn = -sr.sigma2 / (2.0 * u2);
    const double k_hh = -s * sr.sigma2 / (2.0 * u2);
    const double k_hmm = -s * sr.mu_s / (2.0 * u2);
    const double k_mmmm = sr.mu_ss / (2.0 * u2);
    const double k_nmm = -sr.mu_s / (2.0 * u2);
    const auto& H = p.hbar;
    const auto& m = p.m;
    const SymTensor2 nt = n_tensor(p);

    SymTensor4 t(p.n);
    for (const auto& [h, i, j, k] : t.multisets()) {
        const double hn = H(i, k) * nt(j, h) + H(j, k) * nt(i, h) + H(i, j) * nt(k, h) + H(j, h) * nt(i, k) +
                          H(k, h) * nt(i, j) + H(i, h) * nt(j, k);
        const double hh = H(i, k) * H(j, h) + H(j, k) * H(i, h) + H(k, h) * H(i, j);
        const double hmm = H(i, j) * m[h] * m[k] + H(k, i) * m[j] * m[h] + H(h, k) * m[i] * m[j] +
                           H(j, h) * m[k] * m[i] + H(i, h) * m[j] * m[k] + H(k, j) * m[i] * m[h];
        const double mmmm = m[i] * m[j] * m[h] * m[k];
        // expands to y_(h m_i m_j m_k) / u, so two terms suffice for total symmetry
        const double nmm = nt(i, j) * m[h] * m[k] + nt(k, h) * m[i] * m[j];
        t(h, i, j, k) = k_hn * hn + k_hh * hh + k_hmm * hmm + k_mmmm * mmmm + k_nmm * nmm;
    }
    return t;
}

QuasiCDecomposition quasi_c_decomposition(const EvalPoint& p, const SigmaRho& sr, const MeanCartan& mc)
{
    if (p.n < 3) throw DimensionTooSmall("quasi-C-reducibility needs n >= 3");
    if (!(std::abs(mc.A) * p.u > kZeroMeanCartanTol)) throw ZeroMeanCartan("mean Cartan tensor vanishes");

    const double A = mc.A;
    const double qa = sr.sigma2 / (2.0 * p.u * A);
    const double qb = sr.mu_s / (6.0 * p.u * A * A * A);
    QuasiCDecomposition out;
    out.Q = SymTensor2(p.n);
    for (const auto& [i, j] : out.Q.multisets()) out.Q(i, j) = qa * p.hbar(i, j) + qb * mc.C[i] * mc.C[j];

    const SymTensor3 c = cartan_tensor(p, sr);
    const auto& Q = out.Q;
    const auto& C = mc.C;
    for (const auto& [i, j, k] : c.multisets()) {
        const double rebuilt = Q(i, j) * C[k] + Q(j, k) * C[i] + Q(k, i) * C[j];
        out.residual = std::max(out.residual, std::abs(c(i, j, k) - rebuilt));
    }
    out.cartan_norm = c.max_abs();
    return out;
}

}  // namespace finsler
