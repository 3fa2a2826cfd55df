#pragma once

/// \file
/// Seeded numerical verification suites: closed forms against the definitional
/// oracle, structural identities, the Phi = 0 identity and quasi-C reducibility.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finsler/catalog.hpp"
#include "finsler/evaluate.hpp"

namespace finsler {

struct SamplePoint {
    Vec x;
    Vec y;
    PointState st;
};

/// Largest cond(g) a sample point may have. Oracle roundoff grows like eps * cond,
/// so beyond this the comparisons test double precision, not the formulas.
inline constexpr double kSampleMaxCondition = 1e6;

/// Accepted phi range; steep families leave it near s = 0 and |s| = r, where
/// fourth-order products of phi over- or underflow.
inline constexpr double kSamplePhiMin = 1e-12;
inline constexpr double kSamplePhiMax = 1e12;

/// Seeded points with x uniform on the sphere of radius r ~ U(0.1, 0.9) and y
/// uniform in direction with u ~ U(0.5, 2). Points outside the metric's domain,
/// degenerate, irregular, with phi outside [kSamplePhiMin, kSamplePhiMax], with
/// cond(g) above kSampleMaxCondition, or where the oracle is not finite are rejected.
/// Gives up after 100 * count draws, so fewer points may come back.
std::vector<SamplePoint> sample_points(const MetricSpec& metric, int n, int count, std::uint64_t seed);

/// Suites: oracle, identities, phi-zero, quasi-c, all.
const std::vector<std::string>& suite_names();

struct VerifyOptions {
    std::string suite = "all";
    int samples = 200;
    std::uint64_t seed = 42;
    int dim = 3;
    /// Overrides every property's default tolerance.
    std::optional<double> tol;
};

/// Worst discrepancy seen for one property, with the values that produced it.
struct PropertyResult {
    std::string name;
    double tol = 0.0;
    int checked = 0;
    int failed = 0;
    double max_err = 0.0;
    Vec x;
    Vec y;
    double value = 0.0;
    double reference = 0.0;

    bool passed() const { return failed == 0; }
};

struct VerifyReport {
    std::string metric;
    std::string suite;
    int dim = 3;
    int samples = 0;
    std::uint64_t seed = 0;
    std::vector<PropertyResult> properties;

    bool passed() const;
    double max_err() const;
};

/// Throws UsageError for an unknown suite and DomainError when no admissible point is found.
VerifyReport run_verify(const MetricSpec& metric, const VerifyOptions& opts);

}  // namespace finsler
