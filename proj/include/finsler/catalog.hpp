#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finsler/expr.hpp"

namespace finsler {

/// Constraints on (r, s) where a metric is declared usable.
struct Domain {
    bool s_positive = false;  // s > 0
    bool s_below_r = false;   // s < r
    std::optional<double> r_max;  // r < r_max

    bool admits(double r, double s) const;
    std::string describe() const;
};

/// phi(r, s) definition: a built-in family or a user expression, with bound parameters.
struct MetricSpec {
    std::string kind;  // builtin name, or "expr"
    ParamMap params;
    Domain domain;
    std::string label;
    MetricExpr expr;
};

struct BuiltinInfo {
    std::string name;
    std::string formula;
    std::vector<std::string> required_params;
    std::string domain;
    std::string note;
};

/// Names: euclidean, riemannian (c1, c2), randers, kropina, tcondition_family (a, c).
/// Throws UnknownMetric, MissingParam, DomainError (non-positive family parameters).
MetricSpec builtin(std::string_view name, const ParamMap& params = {});

/// Metric from expression text, with the given bound parameters.
MetricSpec expression_metric(std::string_view source, const ParamMap& params = {});

/// CLI form: "randers", "riemannian:c1=1,c2=1", or "expr:<source>". `extra` adds or overrides parameters.
MetricSpec parse_metric_arg(std::string_view text, const ParamMap& extra = {});

const std::vector<BuiltinInfo>& builtin_catalog();

/// "k=v,k=v" into a parameter map. Throws UsageError.
ParamMap parse_param_list(std::string_view text);

}  // namespace finsler
