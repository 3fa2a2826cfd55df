#pragma once

#include <map>
#include <string>
#include <vector>

#include "finsler/catalog.hpp"
#include "finsler/ttensor.hpp"

namespace finsler {

/// (r, s) sample grid: s = +-r * fraction for each r, evaluated at direction length u.
struct Grid {
    std::vector<double> r_values;
    std::vector<double> s_fractions;
    double u = 1.0;

    /// r in {0.2, 0.4, 0.6, 0.8}, s = +-r {0.15, 0.35, 0.55, 0.75, 0.95}.
    static Grid standard();
    std::vector<std::pair<double, double>> points() const;
    std::string describe() const;
};

struct Extreme {
    double scaled = 0.0;  // worst |value| / natural magnitude
    double value = 0.0;
    double r = 0.0;
    double s = 0.0;
};

struct ClassificationReport {
    std::string metric;
    int dim = 3;
    double tol = 0.0;
    bool riemannian = false;
    bool t_condition = false;
    bool quasi_c_reducible = false;
    double regular_fraction = 0.0;
    int total_points = 0;
    int used_points = 0;
    int excluded_domain = 0;
    int excluded_irregular = 0;
    int excluded_singular = 0;
    std::string grid;
    /// keys: sigma2, Phi, Psi, Omega (largest scaled magnitude) and A (smallest |A| u).
    std::map<std::string, Extreme> extremes;
};

/// Throws EmptyGrid when no grid point survives the domain, regularity and singularity filters.
ClassificationReport t_condition_check(const MetricSpec& metric, const Grid& grid, double tol, int dim = 3);

struct FamilyFit {
    double c_estimate = 0.0;   // mean of the per-sample values
    double max_deviation = 0.0;  // max |c_i - mean|
    std::vector<double> c_samples;
};

/// c = (1 + s W) / (r^2 - s^2) at each s. Throws RiemannianAtRadius when
/// |sigma2| is below `sigma2_tol` (relative to its term magnitude) at every sample.
FamilyFit recover_family_params(const MetricSpec& metric, double r, const std::vector<double>& s_samples,
                                double sigma2_tol = 1e-11);

}  // namespace finsler
