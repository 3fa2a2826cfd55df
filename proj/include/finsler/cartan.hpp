#pragma once

#include <vector>

#include "finsler/frame.hpp"
#include "finsler/metric.hpp"

namespace finsler {

/// C^r_jk: one symmetric (j, k) block per upper index r.
using MixedTensor = std::vector<SymTensor2>;

struct MeanCartan {
    double A = 0.0;  // C_i = A m_i
    Vec C;
};

struct QuasiCDecomposition {
    SymTensor2 Q;
    double residual = 0.0;  // max |C_ijk - (Q_ij C_k + Q_jk C_i + Q_ki C_j)|
    double cartan_norm = 0.0;  // max |C_ijk|
};

/// C_ijk = sigma2/(2u) (hbar_ij m_k + hbar_jk m_i + hbar_ik m_j) + mu_s/(2u) m_i m_j m_k
SymTensor3 cartan_tensor(const EvalPoint& p, const SigmaRho& sr);

/// C^r_jk = g^{ri} C_ijk in closed form.
MixedTensor cartan_mixed(const EvalPoint& p, const SigmaRho& sr);

MeanCartan mean_cartan(const EvalPoint& p, const SigmaRho& sr);

/// d C_ijk / d y^h in closed form (needs mu_ss, so a fourth-order PhiJet).
SymTensor4 cartan_vertical_closed(const EvalPoint& p, const SigmaRho& sr);

/// Throws DimensionTooSmall for n < 3 and ZeroMeanCartan when |A| u <= 1e-10.
QuasiCDecomposition quasi_c_decomposition(const EvalPoint& p, const SigmaRho& sr, const MeanCartan& mc);

inline constexpr double kZeroMeanCartanTol = 1e-10;

}  // namespace finsler
