#pragma once

#include <span>
#include <vector>

#include "finsler/sym_tensor.hpp"

namespace finsler {

using Vec = std::vector<double>;

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);

/// A base point x with direction y, and the Euclidean frame fields built from them:
/// r = |x|, u = |y|, s = <x, y>/u, m_i = x_i - (s/u) y_i, hbar_ij = delta_ij - y_i y_j / u^2.
struct EvalPoint {
    int n = 0;
    Vec x;
    Vec y;
    double r = 0.0;
    double u = 0.0;
    double s = 0.0;
    Vec m;
    SymTensor2 hbar;
    double m2 = 0.0;  // r^2 - s^2
    /// y parallel to x, so m vanishes. Operations dividing by m^2 reject such points.
    bool degenerate = false;
};

/// Throws ZeroVector for x = 0 or y = 0 and DimensionMismatch unless both have the same size in 2..6.
EvalPoint make_eval_point(std::span<const double> x, std::span<const double> y);

/// n_ij = (y_i m_j + y_j m_i) / u.
SymTensor2 n_tensor(const EvalPoint& p);

}  // namespace finsler
