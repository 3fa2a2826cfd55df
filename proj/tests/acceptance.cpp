// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "finsler/classify.hpp"
#include "finsler/errors.hpp"
#include "finsler/evaluate.hpp"
#include "finsler/oracle.hpp"
#include "finsler/ttensor.hpp"
#include "finsler/verify.hpp"

#ifndef FINSLER_SPH_CLI
#error "FINSLER_SPH_CLI must name the command-line binary"
#endif

using namespace finsler;

namespace {

constexpr std::array<double, 5> kUValues{0.5, 0.8, 1.0, 1.4, 2.0};

double rel_err(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
};

std::vector<MetricSpec> oracle_metrics()
{
    return {
        builtin("randers"),
        builtin("kropina"),
        builtin("riemannian", {{"c1", 1.0}, {"c2", 1.0}}),
        builtin("tcondition_family", {{"a", 1.0}, {"c", 0.5}}),
        builtin("tcondition_family", {{"a", 1.0}, {"c", 1.0}}),
        builtin("tcondition_family", {{"a", 1.0}, {"c", 2.0}}),
        expression_metric("1+s/2+s^2/8"),
    };
}

// Runs one suite per metric and folds the named properties into the outcome.
void verify_suite(Outcome& out, const std::vector<MetricSpec>& metrics, const std::string& suite, int dim,
                  int samples = 200)
{
    for (const MetricSpec& m : metrics) {
        VerifyOptions opts;
        opts.suite = suite;
        opts.samples = samples;
        opts.dim = dim;
        const VerifyReport rep = run_verify(m, opts);
        for (const PropertyResult& p : rep.properties) {
            if (!p.passed()) {
                out.ok = false;
                out.detail << " " << m.label << "/" << p.name << "=" << p.max_err;
            }
        }
        if (rep.samples < samples) {
            out.ok = false;
            out.detail << " " << m.label << " only " << rep.samples << " points";
        }
    }
}

Outcome randers_regression()
{
    Outcome o;
    const MetricSpec m = builtin("randers");
    int count = 0;
    double worst = 0.0;
    for (double u : kUValues) {
        for (auto [r, s] : Grid::standard().points()) {
            const auto [x, y] = canonical_point(3, r, s, u);
            const PointState st = evaluate_point(m, x, y);
            const TCoefficients tc = t_coefficients(st.pj, st.sr, u);
            const TCoefficients mag = t_coefficient_magnitudes(st.pj, st.sr, u);
            worst = std::max(worst, rel_err(tc.Phi, -(r * r + s * s + 2 * s) / (4 * u)));
            // Psi and Omega vanish: roundoff relative to the terms they cancel from
            worst = std::max({worst, std::abs(tc.Psi) / mag.Psi, std::abs(tc.Omega) / mag.Omega});
            ++count;
        }
    }
    o.ok = count >= 100 && worst <= 1e-12;
    o.detail << " points=" << count << " max_rel=" << worst;
    return o;
}

Outcome kropina_regression()
{
    Outcome o;
    const MetricSpec m = builtin("kropina");
    int count = 0;
    double worst = 0.0;
    for (double u : kUValues) {
        for (auto [r, s] : Grid::standard().points()) {
            if (s <= 0) continue;
            const auto [x, y] = canonical_point(3, r, s, u);
            const PointState st = evaluate_point(m, x, y);
            const TCoefficients tc = t_coefficients(st.pj, st.sr, u);
            worst = std::max({worst, rel_err(tc.Phi, 2 / (s * u * r * r)),
                              rel_err(tc.Psi, 2 / (u * r * r * std::pow(s, 3))),
                              rel_err(tc.Omega, 6 / (u * r * r * std::pow(s, 5)))});
            ++count;
        }
    }
    o.ok = count >= 100 && worst <= 1e-12;
    o.detail << " points=" << count << " max_rel=" << worst;
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    const std::vector<MetricSpec> metrics = oracle_metrics();
    verify_suite(o, metrics, "oracle", 3);
    o.detail << " metrics=" << metrics.size() << " points=200";
    return o;
}

Outcome t_condition_forward()
{
    Outcome o;
    for (auto [a, c] : {std::pair{1.0, 0.5}, std::pair{1.0, 1.0}, std::pair{2.0, 2.0}}) {
        const ClassificationReport rep =
            t_condition_check(builtin("tcondition_family", {{"a", a}, {"c", c}}), Grid::standard(), 1e-9);
        double worst = 0.0;
        for (const char* k : {"Phi", "Psi", "Omega"}) worst = std::max(worst, rep.extremes.at(k).scaled);
        o.ok = o.ok && rep.t_condition && rep.used_points > 0;
        o.detail << " " << rep.metric << ":" << worst;
    }
    return o;
}

Outcome riemannian_branch()
{
    Outcome o;
    double max_sigma = 0.0;
    double max_t = 0.0;
    for (auto [c1, c2] : {std::pair{1.0, 1.0}, std::pair{2.0, 0.5}}) {
        const MetricSpec m = builtin("riemannian", {{"c1", c1}, {"c2", c2}});
        for (auto [r, s] : Grid::standard().points()) {
            const auto [x, y] = canonical_point(3, r, s, 1.0);
            const PointState st = evaluate_point(m, x, y);
            max_sigma = std::max(max_sigma, std::abs(st.sr.sigma2));
            max_t = std::max(max_t, t_tensor_closed(st.p, t_coefficients(st.pj, st.sr, st.p.u)).max_abs());
            max_t = std::max(max_t, t_tensor_oracle(m, x, y).max_abs());
        }
        o.ok = o.ok && !t_condition_check(m, Grid::standard(), 1e-9).quasi_c_reducible;
    }
    o.ok = o.ok && max_sigma <= 1e-11 && max_t <= 1e-10;
    o.detail << " max|sigma2|=" << max_sigma << " max|T|=" << max_t;
    return o;
}

Outcome negative_control()
{
    Outcome o;
    const MetricSpec m = builtin("randers");
    const ClassificationReport rep = t_condition_check(m, Grid::standard(), 1e-9);
    double worst_dev = 1e300;
    for (double r : {0.3, 0.6}) {
        const FamilyFit fit = recover_family_params(m, r, {0.2 * r, 0.5 * r, 0.8 * r});
        worst_dev = std::min(worst_dev, fit.max_deviation);
    }
    o.ok = !rep.t_condition && rep.extremes.at("Phi").scaled > 1e-3 && worst_dev > 1e-3;
    o.detail << " Phi_scaled=" << rep.extremes.at("Phi").scaled << " min_deviation=" << worst_dev;
    return o;
}

Outcome family_recovery()
{
    Outcome o;
    const MetricSpec m = builtin("tcondition_family", {{"a", 1.0}, {"c", 2.0}});
    for (double r : {0.3, 0.6}) {
        const FamilyFit fit = recover_family_params(m, r, {0.1 * r, 0.3 * r, 0.5 * r, 0.7 * r, 0.9 * r});
        o.ok = o.ok && std::abs(fit.c_estimate - 2.0) <= 1e-9 && fit.max_deviation <= 1e-9;
        o.detail << " r=" << r << ":c=" << fit.c_estimate << ",dev=" << fit.max_deviation;
    }
    return o;
}

Outcome identity_suites()
{
    Outcome o;
    verify_suite(o, oracle_metrics(), "identities", 3);
    o.detail << " points=200";
    return o;
}

Outcome phi_zero()
{
    Outcome o;
    std::vector<MetricSpec> metrics = oracle_metrics();
    metrics.push_back(builtin("euclidean"));
    verify_suite(o, metrics, "phi-zero", 3);

    const PhiJet pj = phi_jet(builtin("randers"), 2.0, 1.0, 4);
    const IdentitySides id = phi_zero_identity(pj, rhos(pj, 3.0));
    double spot = std::max(rel_err(id.lhs, 3.5), rel_err(id.rhs, 3.5));
    for (const MetricSpec& m : {builtin("euclidean"), builtin("riemannian", {{"c1", 1.0}, {"c2", 1.0}}),
                                builtin("riemannian", {{"c1", 2.0}, {"c2", 0.5}})}) {
        for (auto [r, s] : {std::pair{1.0, 0.5}, std::pair{0.7, -0.2}, std::pair{0.4, 0.1}}) {
            const PhiJet q = phi_jet(m, r, s, 4);
            const IdentitySides i2 = phi_zero_identity(q, rhos(q, r * r - s * s));
            spot = std::max({spot, rel_err(i2.lhs, 2 * s), rel_err(i2.rhs, 2 * s)});
        }
    }
    o.ok = o.ok && spot <= 1e-9;
    o.detail << " spot_max_rel=" << spot;
    return o;
}

Outcome quasi_c()
{
    Outcome o;
    for (int n : {3, 4}) {
        for (const MetricSpec& m : {builtin("randers"), builtin("kropina")}) {
            VerifyOptions opts;
            opts.suite = "quasi-c";
            opts.dim = n;
            const VerifyReport rep = run_verify(m, opts);
            for (const PropertyResult& p : rep.properties) {
                o.ok = o.ok && p.passed() && p.checked > 0;
                o.detail << " " << m.label << "/n=" << n << ":" << p.checked << "pts," << p.max_err;
            }
        }
    }
    return o;
}

struct RunResult {
    std::string out;
    int status = -1;
};

RunResult run_cli(const std::string& args, const char* env = "")
{
    const std::string cmd = std::string(env) + " '" FINSLER_SPH_CLI "' " + args + " 2>/dev/null";
    RunResult rr;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return rr;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) rr.out.append(buf.data(), got);
    rr.status = pclose(pipe);
    return rr;
}

Outcome cli_determinism()
{
    Outcome o;
    const std::vector<std::string> commands{
        "eval --metric randers --x 1,0,0 --y 0,1,0",
        "eval --metric kropina --x 1,1,0 --y 0,1,0 --format csv",
        "eval --metric 'expr:1+s/2+s^2/8' --x 0.3,0.2,0.1 --y 0.1,0.5,-0.4 --tensors g,T_closed,T_oracle",
        "verify --metric randers --suite all --samples 50",
        "verify --metric kropina --suite oracle --samples 50 --seed 7 --format json",
        "verify --metric tcondition_family --param a=1 --param c=2 --suite identities --samples 50 --dim 4",
        "classify --metric randers",
        "classify --metric tcondition_family --param a=1,c=1 --format csv",
        "sweep --metric kropina",
        "sweep --metric randers --r 0.3,0.6 --fractions 0.2,0.8 --u 1.5 --format json",
        "catalog",
        "catalog --format json",
    };
    for (const std::string& c : commands) {
        const RunResult a = run_cli(c);
        const RunResult b = run_cli(c);
        const RunResult single = run_cli(c, "FINSLER_SPH_THREADS=1");
        const bool same = !a.out.empty() && a.out == b.out && a.out == single.out && a.status == b.status &&
                          a.status == single.status && a.status == 0;
        if (!same) {
            o.ok = false;
            o.detail << " [" << c << "]";
        }
    }
    o.detail << " commands=" << commands.size();
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Randers coefficient regression", randers_regression},
        {"Kropina coefficient regression", kropina_regression},
        {"closed forms match the jet oracle", oracle_equivalence},
        {"T-condition family has vanishing T", t_condition_forward},
        {"Riemannian metrics have sigma2 = 0 and T = 0", riemannian_branch},
        {"Randers negative control", negative_control},
        {"family parameter recovery", family_recovery},
        {"identity suites", identity_suites},
        {"phi = 0 identity", phi_zero},
        {"quasi-C reducibility", quasi_c},
        {"CLI determinism", cli_determinism},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        Outcome result;
        try {
            result = check();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail << " exception: " << e.what();
        }
        if (!result.ok) ++failures;
        std::printf("%s %2d %s:%s\n", result.ok ? "PASS" : "FAIL", index, name.c_str(), result.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
