#pragma once

/// \file
/// Closed-form T-tensor of F = u phi(r, s):
///
///     T_hijk = Phi   (hbar_hi hbar_jk + hbar_hj hbar_ik + hbar_hk hbar_ij)
///            + Psi   (hbar_hk m_i m_j + ... six terms ...)
///            + Omega  m_h m_i m_j m_k
///
/// plus the W-function, the Phi = 0 identity and the vanishing-T family.

#include "finsler/cartan.hpp"
#include "finsler/metric.hpp"

namespace finsler {

struct TCoefficients {
    double Phi = 0.0;
    double Psi = 0.0;
    double Omega = 0.0;
};

/// Needs a fourth-order PhiJet and rho coefficients. m^2 is taken from sr.
TCoefficients t_coefficients(const PhiJet& pj, const SigmaRho& sr, double u);

/// Sum of absolute values of the terms making up each coefficient, with sigma2,
/// mu_s, mu_ss replaced by their own term magnitudes. Roundoff in a computed
/// coefficient is a small multiple of eps times this, so |coef| / magnitude is
/// a scale-free test for vanishing.
TCoefficients t_coefficient_magnitudes(const PhiJet& pj, const SigmaRho& sr, double u);

/// |coef| / magnitude, componentwise; exact zeros map to 0.
TCoefficients scaled_coefficients(const TCoefficients& tc, const TCoefficients& magnitude);

SymTensor4 t_tensor_closed(const EvalPoint& p, const TCoefficients& tc);

/// Closed right-hand sides of the two cyclic-sum identities used to assemble T:
///   cc: C_ijr C^r_hk + C_jkr C^r_hi + C_ikr C^r_hj
///   cl: C_hij l_k + C_hik l_j + C_hjk l_i + C_ijk l_h
struct CyclicSums {
    SymTensor4 cc;
    SymTensor4 cl;
};
CyclicSums t_tensor_cyclic_lemmas(const EvalPoint& p, const PhiJet& pj, const SigmaRho& sr);

/// W = phi_s / (phi - s phi_s), W_s = phi phi_ss / (phi - s phi_s)^2.
struct WValue {
    double W = 0.0;
    double W_s = 0.0;
};
WValue w_value(const PhiJet& pj);

/// Both sides of
///   2s + m^2 sigma2 kappa
///     = s m^2 (phi - s phi_s)^2 / (phi (phi - s phi_s + m^2 phi_ss)) (W_s + (1/s + 2s/m^2) W + 2/m^2).
/// Throws DegeneratePoint when s = 0 or m^2 = 0.
struct IdentitySides {
    double lhs = 0.0;
    double rhs = 0.0;
};
IdentitySides phi_zero_identity(const PhiJet& pj, const SigmaRho& sr);

/// a s^((c r^2 - 1)/(c r^2)) (r^2 - s^2)^(1/(2 c r^2)) on 0 < s < r.
double family_phi(double a, double c, double r, double s);

}  // namespace finsler
