#pragma once

/// \file
/// Reports for the command-line front end and their deterministic serialization:
/// objects with sorted keys, floats printed with 17 significant digits.

#include <string>
#include <vector>

#include <json.hpp>

#include "finsler/catalog.hpp"
#include "finsler/classify.hpp"
#include "finsler/frame.hpp"

namespace finsler {

using Json = nlohmann::json;

/// Tensor names accepted by eval_report.
const std::vector<std::string>& tensor_names();

/// Point, scalars, regularity and the requested tensors at (x, y). The metric's
/// domain is reported (point.in_domain) rather than enforced.
/// Scalars that are undefined at the point (W where phi - s phi_s vanishes) are null.
/// Throws UsageError for an unknown tensor name and MathError from evaluation.
Json eval_report(const MetricSpec& metric, const Vec& x, const Vec& y, const std::vector<std::string>& tensors);

Json classification_json(const ClassificationReport& rep);

struct SweepRow {
    double r = 0.0;
    double s = 0.0;
    double u = 0.0;
    double Phi = 0.0;
    double Psi = 0.0;
    double Omega = 0.0;
    bool regular = false;
};

/// Closed-form coefficients at every in-domain grid point, in grid order.
/// Points where the coefficients are singular carry NaN.
std::vector<SweepRow> sweep(const MetricSpec& metric, const Grid& grid, int dim = 3);

/// Header r,s,u,Phi,Psi,Omega,regular.
std::string sweep_csv(const std::vector<SweepRow>& rows);
Json sweep_json(const MetricSpec& metric, const Grid& grid, const std::vector<SweepRow>& rows);

/// "key,value" rows over the flattened report; nested indices join with '.'.
std::string flat_csv(const Json& report);

/// %.17g; non-finite values print as nan, inf, -inf.
std::string format_double(double v);

/// Two-space indented JSON with sorted keys and %.17g numbers; non-finite numbers become null.
std::string dump_json(const Json& j);

}  // namespace finsler
