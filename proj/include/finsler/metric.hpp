#pragma once

#include "finsler/frame.hpp"
#include "finsler/phi_jet.hpp"
#include "finsler/sym_tensor.hpp"

namespace finsler {

/// Scalar coefficients of g_ij and g^ij at a point.
///
///     sigma0 = phi (phi - s phi_s)
///     sigma1 = mu = phi_s^2 + phi phi_ss
///     sigma2 = (phi - s phi_s) phi_s - s phi phi_ss
///     sigma3 = s^2 phi phi_ss - s (phi - s phi_s) phi_s     (= -s sigma2)
///     kappa  = rho0 + rho3 m^2 = 1 / (phi (phi - s phi_s + m^2 phi_ss))
///
/// Fields needing more derivatives than the source PhiJet carries are NaN.
struct SigmaRho {
    double sigma0 = 0.0;
    double sigma1 = 0.0;
    double sigma2 = 0.0;
    double sigma3 = 0.0;
    double mu = 0.0;
    double mu_s = 0.0;
    double mu_ss = 0.0;
    double rho0 = 0.0;
    double rho1 = 0.0;
    double rho2 = 0.0;
    double rho3 = 0.0;
    double kappa = 0.0;
    double m2 = 0.0;
    int order = 0;
    bool has_rho = false;
};

struct RegularityReport {
    bool phi_positive = false;
    double first = 0.0;   // phi - s phi_s
    double second = 0.0;  // phi - s phi_s + (r^2 - s^2) phi_ss
    bool regular = false;
};

/// sigma and mu fields. Throws InsufficientOrder when pj.order < 2.
SigmaRho sigmas(const PhiJet& pj);

/// sigma, mu and rho fields. Throws SingularMetric when phi (phi - s phi_s) or
/// phi - s phi_s + m^2 phi_ss vanishes relative to its natural scale.
SigmaRho rhos(const PhiJet& pj, double m2);

SymTensor2 metric_tensor(const EvalPoint& p, const SigmaRho& sr);
SymTensor2 inverse_metric(const EvalPoint& p, const SigmaRho& sr);

RegularityReport regularity(const PhiJet& pj, double m2);

/// Natural magnitude of sigma2 (sum of absolute values of its terms), used to scale near-zero tests.
double sigma2_scale(const PhiJet& pj);

}  // namespace finsler
