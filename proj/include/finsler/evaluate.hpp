#pragma once

#include <span>

#include "finsler/catalog.hpp"
#include "finsler/frame.hpp"
#include "finsler/metric.hpp"
#include "finsler/phi_jet.hpp"

namespace finsler {

/// Everything the closed-form formulas need at one (x, y).
struct PointState {
    EvalPoint p;
    PhiJet pj;
    SigmaRho sr;
    RegularityReport reg;
};

/// Frame, fourth-order phi jet, sigma/rho bundle and regularity.
/// Throws DomainError or SingularMetric; does not consult metric.domain.
PointState evaluate_point(const MetricSpec& metric, std::span<const double> x, std::span<const double> y);

/// Canonical (x, y) in dimension n realizing given r > 0, |s| <= r, u > 0:
/// x = r e_1, y = u (s/r e_1 + sqrt(1 - s^2/r^2) e_2).
std::pair<Vec, Vec> canonical_point(int n, double r, double s, double u = 1.0);

}  // namespace finsler
