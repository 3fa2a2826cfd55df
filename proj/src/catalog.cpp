#include "finsler/catalog.hpp"

#include <charconv>
#include <cstdio>

namespace finsler {

namespace {

std::string fmt_double(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trim(std::string_view t)
{
    std::size_t a = 0;
    std::size_t b = t.size();
    while (a < b && (t[a] == ' ' || t[a] == '\t')) ++a;
    while (b > a && (t[b - 1] == ' ' || t[b - 1] == '\t')) --b;
    return std::string(t.substr(a, b - a));
}

double require(const ParamMap& params, const char* key)
{
    auto it = params.find(key);
    if (it == params.end()) throw MissingParam(key);
    return it->second;
}

std::set<std::string, std::less<>> names_of(const ParamMap& params)
{
    std::set<std::string, std::less<>> out;
    for (const auto& [k, v] : params) out.insert(k);
    return out;
}

}  // namespace

bool Domain::admits(double r, double s) const
{
    if (s_positive && !(s > 0.0)) return false;
    if (s_below_r && !(s < r)) return false;
    if (r_max && !(r < *r_max)) return false;
    return true;
}

std::string Domain::describe() const
{
    std::string out;
    auto add = [&](const std::string& c) { out += (out.empty() ? "" : ", ") + c; };
    if (s_positive) add("s > 0");
    if (s_below_r) add("s < r");
    if (r_max) add("r < " + fmt_double(*r_max));
    return out.empty() ? "all" : out;
}

const std::vector<BuiltinInfo>& builtin_catalog()
{
    static const std::vector<BuiltinInfo> entries = {
        {"euclidean", "1", {}, "all", "regular everywhere"},
        {"riemannian", "sqrt(c1*s^2+c2)", {"c1", "c2"}, "all",
         "regular where c2 > 0 and c1*r^2 + c2 > 0; constant c1, c2"},
        {"randers", "1+s", {}, "r < 1", "regular on r < 1"},
        {"kropina", "1/s", {}, "s > 0", "defined on the half-space s > 0 only, so never a full norm"},
        {"tcondition_family", "a*s^((c*r^2-1)/(c*r^2))*(r^2-s^2)^(1/(2*c*r^2))", {"a", "c"}, "s > 0, s < r",
         "a > 0, c > 0 constants; vanishing T-tensor"},
    };
    return entries;
}

MetricSpec expression_metric(std::string_view source, const ParamMap& params)
{
    MetricSpec spec;
    spec.kind = "expr";
    spec.params = params;
    spec.expr = parse_metric_expr(source, names_of(params));
    spec.label = "expr:" + std::string(source);
    return spec;
}

MetricSpec builtin(std::string_view name, const ParamMap& params)
{
    const BuiltinInfo* info = nullptr;
    for (const auto& e : builtin_catalog())
        if (e.name == name) info = &e;
    if (!info) throw UnknownMetric(std::string(name));

    ParamMap bound;
    for (const auto& key : info->required_params) bound[key] = require(params, key.c_str());

    MetricSpec spec;
    spec.kind = info->name;
    spec.params = bound;
    spec.expr = parse_metric_expr(info->formula, names_of(bound));
    spec.label = info->name;
    for (const auto& [k, v] : bound) spec.label += (k == bound.begin()->first ? ":" : ",") + k + "=" + fmt_double(v);

    if (name == "randers") {
        spec.domain.r_max = 1.0;
    } else if (name == "kropina") {
        spec.domain.s_positive = true;
    } else if (name == "tcondition_family") {
        if (!(bound["a"] > 0.0)) throw DomainError("tcondition_family requires a > 0");
        if (!(bound["c"] > 0.0)) throw DomainError("tcondition_family requires c > 0");
        spec.domain.s_positive = true;
        spec.domain.s_below_r = true;
    }
    return spec;
}

ParamMap parse_param_list(std::string_view text)
{
    ParamMap out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (trim(item).empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw UsageError("parameter '" + std::string(item) + "' is not key=value");
        const std::string key = trim(item.substr(0, eq));
        const std::string val = trim(item.substr(eq + 1));
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
        if (key.empty() || ec != std::errc{} || ptr != val.data() + val.size())
            throw UsageError("bad parameter '" + std::string(item) + "'");
        out[key] = v;
    }
    return out;
}

MetricSpec parse_metric_arg(std::string_view text, const ParamMap& extra)
{
    constexpr std::string_view expr_prefix = "expr:";
    if (text.substr(0, expr_prefix.size()) == expr_prefix) return expression_metric(text.substr(expr_prefix.size()), extra);

    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    ParamMap params = colon == std::string_view::npos ? ParamMap{} : parse_param_list(text.substr(colon + 1));
    for (const auto& [k, v] : extra) params[k] = v;
    return builtin(name, params);
}

}  // namespace finsler
