// Command-line front end: eval, verify, classify, sweep, catalog.
// Exit status: 0 ok, 1 verification failure, 2 usage error, 3 domain or singularity error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "finsler/catalog.hpp"
#include "finsler/classify.hpp"
#include "finsler/report.hpp"
#include "finsler/verify.hpp"

using namespace finsler;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMath = 3;

std::vector<double> parse_numbers(const std::string& text, const std::string& flag)
{
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (item.empty() || end == item.c_str() || *end != '\0')
            throw UsageError(flag + ": expected comma-separated numbers, got '" + text + "'");
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

/// Metric text plus --param overrides, shared by every metric-taking subcommand.
struct MetricArgs {
    std::string metric;
    std::vector<std::string> params;

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("--metric", metric, "randers, kropina, euclidean, riemannian:c1=..,c2=.., "
                                            "tcondition_family:a=..,c=.., or expr:<phi(r,s)>")
            ->required();
        cmd->add_option("--param", params, "parameter k=v (repeatable, or k=v,k=v)");
    }

    MetricSpec resolve() const
    {
        ParamMap extra;
        for (const std::string& p : params)
            for (const auto& [k, v] : parse_param_list(p)) extra[k] = v;
        return parse_metric_arg(metric, extra);
    }
};

/// --r, --fractions, --u; unset values fall back to the standard grid.
struct GridArgs {
    std::string r_values;
    std::string fractions;
    double u = 1.0;

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("--r", r_values, "comma-separated r values (default 0.2,0.4,0.6,0.8)");
        cmd->add_option("--fractions", fractions, "s = +-r * fraction (default 0.15,0.35,0.55,0.75,0.95)");
        cmd->add_option("--u", u, "direction length |y| (default 1)");
    }

    Grid resolve() const
    {
        Grid g = Grid::standard();
        if (!r_values.empty()) g.r_values = parse_numbers(r_values, "--r");
        if (!fractions.empty()) g.s_fractions = parse_numbers(fractions, "--fractions");
        if (!(u > 0.0)) throw UsageError("--u must be positive");
        g.u = u;
        for (double r : g.r_values)
            if (!(r > 0.0)) throw UsageError("--r values must be positive");
        for (double f : g.s_fractions)
            if (!(f >= 0.0 && f <= 1.0)) throw UsageError("--fractions must lie in [0, 1]");
        return g;
    }
};

void require_format(const std::string& format, std::initializer_list<const char*> allowed)
{
    for (const char* a : allowed)
        if (format == a) return;
    throw UnsupportedFormat(format);
}

std::string vec_text(const Vec& v)
{
    std::string out = "[";
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + format_double(v[k]);
    return out + "]";
}

std::string verify_text(const VerifyReport& rep)
{
    std::string out = "metric: " + rep.metric + "\n";
    out += "suite: " + rep.suite + "  dim: " + std::to_string(rep.dim) + "  samples: " + std::to_string(rep.samples) +
           "  seed: " + std::to_string(rep.seed) + "\n";
    int failed = 0;
    for (const PropertyResult& p : rep.properties) {
        if (p.checked == 0) {
            out += "SKIP " + p.name + " (no applicable points)\n";
            continue;
        }
        out += std::string(p.passed() ? "PASS " : "FAIL ") + p.name + " max_rel_err=" + format_double(p.max_err) +
               " tol=" + format_double(p.tol) + " checked=" + std::to_string(p.checked);
        if (!p.passed()) {
            ++failed;
            out += " failed=" + std::to_string(p.failed) + "\n  worst at x=" + vec_text(p.x) + " y=" + vec_text(p.y) +
                   " value=" + format_double(p.value) + " reference=" + format_double(p.reference);
        }
        out += "\n";
    }
    out += std::string("summary: ") + (rep.passed() ? "PASS" : "FAIL") + " max_rel_err=" + format_double(rep.max_err()) +
           " properties=" + std::to_string(rep.properties.size()) + " failed=" + std::to_string(failed) + "\n";
    return out;
}

Json verify_json(const VerifyReport& rep)
{
    Json j;
    j["metric"] = rep.metric;
    j["suite"] = rep.suite;
    j["dim"] = rep.dim;
    j["samples"] = rep.samples;
    j["seed"] = rep.seed;
    j["passed"] = rep.passed();
    j["max_rel_err"] = rep.max_err();
    Json props = Json::array();
    for (const PropertyResult& p : rep.properties)
        props.push_back({{"name", p.name},
                         {"tol", p.tol},
                         {"checked", p.checked},
                         {"failed", p.failed},
                         {"passed", p.passed()},
                         {"max_rel_err", p.max_err},
                         {"worst", {{"x", p.x}, {"y", p.y}, {"value", p.value}, {"reference", p.reference}}}});
    j["properties"] = props;
    return j;
}

std::string catalog_text()
{
    std::string out;
    for (const BuiltinInfo& e : builtin_catalog()) {
        std::string params;
        for (const std::string& p : e.required_params) params += (params.empty() ? "" : ",") + p;
        out += e.name + "\n  phi = " + e.formula + "\n  params: " + (params.empty() ? "none" : params) +
               "\n  domain: " + e.domain + "\n";
        if (!e.note.empty()) out += "  note: " + e.note + "\n";
    }
    return out;
}

Json catalog_json()
{
    Json arr = Json::array();
    for (const BuiltinInfo& e : builtin_catalog())
        arr.push_back({{"name", e.name},
                       {"formula", e.formula},
                       {"params", e.required_params},
                       {"domain", e.domain},
                       {"note", e.note}});
    return arr;
}

int run(int argc, char** argv)
{
    CLI::App app{"Tensor calculus for spherically symmetric Finsler metrics F = u phi(r, s)"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate scalars and tensors at one point");
    MetricArgs eval_metric;
    eval_metric.add_to(eval);
    std::string eval_x;
    std::string eval_y;
    std::vector<std::string> eval_tensors;
    std::string eval_format = "json";
    eval->add_option("--x", eval_x, "base point, comma-separated")->required();
    eval->add_option("--y", eval_y, "direction, comma-separated")->required();
    eval->add_option("--tensors", eval_tensors,
                     "subset of g,g_inv,cartan,cartan_mixed,mean_cartan,cartan_vert,T_closed,T_oracle, or all")
        ->delimiter(',');
    eval->add_option("--format", eval_format, "json or csv");

    // verify
    auto* verify = app.add_subcommand("verify", "run a seeded verification suite");
    MetricArgs verify_metric;
    verify_metric.add_to(verify);
    VerifyOptions vopts;
    double verify_tol = 0.0;
    std::string verify_format = "text";
    verify->add_option("--suite", vopts.suite, "oracle, identities, phi-zero, quasi-c or all");
    verify->add_option("--samples", vopts.samples, "number of sample points (default 200)");
    verify->add_option("--seed", vopts.seed, "random seed (default 42)");
    auto* tol_opt = verify->add_option("--tol", verify_tol, "tolerance overriding every property's default");
    verify->add_option("--dim", vopts.dim, "dimension n in 2..6 (default 3)");
    verify->add_option("--format", verify_format, "text or json");

    // classify
    auto* classify = app.add_subcommand("classify", "T-condition classification on a grid");
    MetricArgs classify_metric;
    classify_metric.add_to(classify);
    GridArgs classify_grid;
    classify_grid.add_to(classify);
    double classify_tol = 1e-9;
    int classify_dim = 3;
    std::string classify_format = "json";
    classify->add_option("--tol", classify_tol, "scaled vanishing tolerance (default 1e-9)");
    classify->add_option("--dim", classify_dim, "dimension n in 2..6 (default 3)");
    classify->add_option("--format", classify_format, "json or csv");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Phi, Psi, Omega over a grid");
    MetricArgs sweep_metric;
    sweep_metric.add_to(sweep_cmd);
    GridArgs sweep_grid;
    sweep_grid.add_to(sweep_cmd);
    int sweep_dim = 3;
    std::string sweep_format = "csv";
    sweep_cmd->add_option("--dim", sweep_dim, "dimension n in 2..6 (default 3)");
    sweep_cmd->add_option("--format", sweep_format, "csv or json");

    // catalog
    auto* catalog = app.add_subcommand("catalog", "list built-in metrics");
    std::string catalog_format = "text";
    catalog->add_option("--format", catalog_format, "text or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed()) {
            require_format(eval_format, {"json", "csv"});
            const MetricSpec metric = eval_metric.resolve();
            std::vector<std::string> tensors = eval_tensors;
            if (tensors.size() == 1 && tensors[0] == "all") tensors = tensor_names();
            const Vec x = parse_numbers(eval_x, "--x");
            const Vec y = parse_numbers(eval_y, "--y");
            if (x.size() != y.size()) throw UsageError("--x and --y must have the same number of components");
            if (x.size() < static_cast<std::size_t>(kMinDim) || x.size() > static_cast<std::size_t>(kMaxDim))
                throw UsageError("--x and --y need 2 to 6 components");
            const Json rep = eval_report(metric, x, y, tensors);
            std::cout << (eval_format == "json" ? dump_json(rep) : flat_csv(rep));
            return kExitOk;
        }
        if (verify->parsed()) {
            require_format(verify_format, {"text", "json"});
            if (tol_opt->count() > 0) {
                if (!(verify_tol > 0.0)) throw UsageError("--tol must be positive");
                vopts.tol = verify_tol;
            }
            const MetricSpec metric = verify_metric.resolve();
            const VerifyReport rep = run_verify(metric, vopts);
            std::cout << (verify_format == "text" ? verify_text(rep) : dump_json(verify_json(rep)));
            return rep.passed() ? kExitOk : kExitVerifyFailed;
        }
        if (classify->parsed()) {
            require_format(classify_format, {"json", "csv"});
            if (classify_dim < kMinDim || classify_dim > kMaxDim) throw UsageError("--dim must be in 2..6");
            const MetricSpec metric = classify_metric.resolve();
            const Json rep = classification_json(t_condition_check(metric, classify_grid.resolve(), classify_tol, classify_dim));
            std::cout << (classify_format == "json" ? dump_json(rep) : flat_csv(rep));
            return kExitOk;
        }
        if (sweep_cmd->parsed()) {
            require_format(sweep_format, {"csv", "json"});
            if (sweep_dim < kMinDim || sweep_dim > kMaxDim) throw UsageError("--dim must be in 2..6");
            const MetricSpec metric = sweep_metric.resolve();
            const Grid grid = sweep_grid.resolve();
            const auto rows = sweep(metric, grid, sweep_dim);
            std::cout << (sweep_format == "csv" ? sweep_csv(rows) : dump_json(sweep_json(metric, grid, rows)));
            return kExitOk;
        }
        if (catalog->parsed()) {
            require_format(catalog_format, {"text", "json"});
            std::cout << (catalog_format == "text" ? catalog_text() : dump_json(catalog_json()));
            return kExitOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
