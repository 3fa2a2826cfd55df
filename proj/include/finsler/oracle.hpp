#pragma once

/// \file
/// T-tensor assembled straight from its definition,
///
///     T_hijk = F C_hijk - F (C_rij C^r_hk + C_rjh C^r_ik + C_rih C^r_jk)
///            + C_hij l_k + C_hik l_j + C_hjk l_i + C_ijk l_h,
///
/// with g = 1/2 d^2 F^2, C = 1/4 d^3 F^2, C_hijk = 1/4 d^4 F^2 and l = dF/dy
/// taken from nested jets, and g^-1 from a dense linear solve. Nothing here
/// touches the sigma/rho/Phi/Psi/Omega closed forms.

#include <span>

#include "finsler/catalog.hpp"
#include "finsler/sym_tensor.hpp"

namespace finsler {

struct OracleTensors {
    int n = 0;
    double F = 0.0;
    std::vector<double> ell;
    SymTensor2 g;
    SymTensor2 g_inv;
    SymTensor3 C;
    SymTensor4 C4;  // d C_ijk / d y^h
    SymTensor4 T;
    /// max |T(perm) - T(sorted)| over all index tuples of the unsymmetrized definition.
    double asymmetry = 0.0;
    /// max over entries of the three definitional terms, the scale T cancels down from.
    double term_scale = 0.0;
    /// 2-norm condition number of g.
    double condition = 0.0;

    /// Every computed entry is a finite number.
    bool finite() const;
};

inline constexpr double kOracleMaxCondition = 1e12;

/// `max_rank` 2 stops after g, 3 after C; 4 computes everything.
/// Throws SingularMetric when cond(g) > 1e12 and DomainError from phi evaluation.
OracleTensors oracle_tensors(const MetricSpec& metric, std::span<const double> x, std::span<const double> y,
                             int max_rank = 4);

SymTensor4 t_tensor_oracle(const MetricSpec& metric, std::span<const double> x, std::span<const double> y);

}  // namespace finsler
