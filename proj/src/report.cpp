#include "finsler/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "finsler/cartan.hpp"
#include "finsler/evaluate.hpp"
#include "finsler/oracle.hpp"
#include "finsler/parallel.hpp"
#include "finsler/ttensor.hpp"

namespace finsler {

namespace {

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json vec_json(const Vec& v)
{
    Json out = Json::array();
    for (double c : v) out.push_back(number(c));
    return out;
}

Json tensor_json(const SymTensor2& t)
{
    Json out = Json::array();
    for (int i = 0; i < t.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < t.dim(); ++j) row.push_back(number(t(i, j)));
        out.push_back(row);
    }
    return out;
}

Json tensor_json(const SymTensor3& t)
{
    Json out = Json::array();
    for (int i = 0; i < t.dim(); ++i) {
        Json a = Json::array();
        for (int j = 0; j < t.dim(); ++j) {
            Json b = Json::array();
            for (int k = 0; k < t.dim(); ++k) b.push_back(number(t(i, j, k)));
            a.push_back(b);
        }
        out.push_back(a);
    }
    return out;
}

Json tensor_json(const SymTensor4& t)
{
    Json out = Json::array();
    for (int h = 0; h < t.dim(); ++h) {
        Json a = Json::array();
        for (int i = 0; i < t.dim(); ++i) {
            Json b = Json::array();
            for (int j = 0; j < t.dim(); ++j) {
                Json c = Json::array();
                for (int k = 0; k < t.dim(); ++k) c.push_back(number(t(h, i, j, k)));
                b.push_back(c);
            }
            a.push_back(b);
        }
        out.push_back(a);
    }
    return out;
}

Json tensor_json(const MixedTensor& t)
{
    Json out = Json::array();
    for (const SymTensor2& block : t) out.push_back(tensor_json(block));
    return out;
}

void dump(const Json& j, std::string& out, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        // the default object type is std::map, so iteration is in sorted key order
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ",\n";
            first = false;
            out += inner + Json(it.key()).dump() + ": ";
            dump(it.value(), out, indent + 1);
        }
        out += "\n" + pad + "}";
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        // arrays of scalars stay on one line so matrices read as rows
        bool scalars = true;
        for (const Json& e : j) scalars = scalars && !e.is_structured();
        if (scalars) {
            out += "[";
            for (std::size_t k = 0; k < j.size(); ++k) {
                if (k) out += ", ";
                dump(j[k], out, indent + 1);
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t k = 0; k < j.size(); ++k) {
            if (k) out += ",\n";
            out += inner;
            dump(j[k], out, indent + 1);
        }
        out += "\n" + pad + "]";
        return;
    }
    case Json::value_t::number_float: {
        const double v = j.get<double>();
        out += std::isfinite(v) ? format_double(v) : "null";
        return;
    }
    default: out += j.dump(); return;
    }
}

void flatten(const Json& j, const std::string& prefix, std::string& out)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array()) {
        for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], prefix + "." + std::to_string(k), out);
    } else {
        std::string value;
        dump(j, value, 0);
        if (j.is_string()) value = j.get<std::string>();
        out += prefix + "," + value + "\n";
    }
}

}  // namespace

std::string format_double(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";  // drop the sign of negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string dump_json(const Json& j)
{
    std::string out;
    dump(j, out, 0);
    out += "\n";
    return out;
}

std::string flat_csv(const Json& report)
{
    std::string out = "key,value\n";
    flatten(report, "", out);
    return out;
}

const std::vector<std::string>& tensor_names()
{
    static const std::vector<std::string> names = {"g",          "g_inv",       "cartan",      "cartan_mixed",
                                                   "mean_cartan", "cartan_vert", "T_closed", "T_oracle"};
    return names;
}

Json eval_report(const MetricSpec& metric, const Vec& x, const Vec& y, const std::vector<std::string>& tensors)
{
    for (const std::string& t : tensors)
        if (std::find(tensor_names().begin(), tensor_names().end(), t) == tensor_names().end())
            throw UsageError("unknown tensor '" + t + "'");

    const PointState st = evaluate_point(metric, x, y);
    const EvalPoint& p = st.p;
    const SigmaRho& sr = st.sr;
    const MeanCartan mc = mean_cartan(p, sr);
    const TCoefficients tc = t_coefficients(st.pj, sr, p.u);

    Json rep;
    rep["metric"] = metric.label;
    rep["point"] = {{"x", vec_json(x)}, {"y", vec_json(y)}, {"r", number(p.r)}, {"u", number(p.u)},
                    {"s", number(p.s)}, {"degenerate", p.degenerate},
                    {"in_domain", metric.domain.admits(p.r, p.s)}};

    Json sc;
    sc["phi"] = number(st.pj.phi);
    sc["phi_s"] = number(st.pj.phi_s);
    sc["phi_ss"] = number(st.pj.phi_ss);
    sc["sigma0"] = number(sr.sigma0);
    sc["sigma1"] = number(sr.sigma1);
    sc["sigma2"] = number(sr.sigma2);
    sc["sigma3"] = number(sr.sigma3);
    sc["rho0"] = number(sr.rho0);
    sc["rho1"] = number(sr.rho1);
    sc["rho2"] = number(sr.rho2);
    sc["rho3"] = number(sr.rho3);
    sc["kappa"] = number(sr.kappa);
    sc["A"] = number(mc.A);
    sc["Phi"] = number(tc.Phi);
    sc["Psi"] = number(tc.Psi);
    sc["Omega"] = number(tc.Omega);
    try {
        sc["W"] = number(w_value(st.pj).W);
    } catch (const MathError&) {
        sc["W"] = nullptr;
    }
    rep["scalars"] = sc;

    rep["regularity"] = {{"phi_positive", st.reg.phi_positive},
                         {"first", number(st.reg.first)},
                         {"second", number(st.reg.second)},
                         {"regular", st.reg.regular}};

    Json tj = Json::object();
    for (const std::string& t : tensors) {
        if (t == "g") tj[t] = tensor_json(metric_tensor(p, sr));
        else if (t == "g_inv") tj[t] = tensor_json(inverse_metric(p, sr));
        else if (t == "cartan") tj[t] = tensor_json(cartan_tensor(p, sr));
        else if (t == "cartan_mixed") tj[t] = tensor_json(cartan_mixed(p, sr));
        else if (t == "mean_cartan") tj[t] = vec_json(mc.C);
        else if (t == "cartan_vert") tj[t] = tensor_json(cartan_vertical_closed(p, sr));
        else if (t == "T_closed") tj[t] = tensor_json(t_tensor_closed(p, tc));
        else if (t == "T_oracle") tj[t] = tensor_json(t_tensor_oracle(metric, x, y));
    }
    rep["tensors"] = tj;
    return rep;
}

Json classification_json(const ClassificationReport& rep)
{
    Json j;
    j["metric"] = rep.metric;
    j["dim"] = rep.dim;
    j["tol"] = number(rep.tol);
    j["riemannian"] = rep.riemannian;
    j["t_condition"] = rep.t_condition;
    j["quasi_c_reducible"] = rep.quasi_c_reducible;
    j["regular_fraction"] = number(rep.regular_fraction);
    j["grid"] = rep.grid;
    j["points"] = {{"total", rep.total_points},
                   {"used", rep.used_points},
                   {"excluded_domain", rep.excluded_domain},
                   {"excluded_irregular", rep.excluded_irregular},
                   {"excluded_singular", rep.excluded_singular}};
    Json ex = Json::object();
    for (const auto& [name, e] : rep.extremes)
        ex[name] = {{"scaled", number(e.scaled)}, {"value", number(e.value)}, {"r", number(e.r)}, {"s", number(e.s)}};
    j["extremes"] = ex;
    return j;
}

std::vector<SweepRow> sweep(const MetricSpec& metric, const Grid& grid, int dim)
{
    std::vector<std::pair<double, double>> pts;
    for (auto [r, s] : grid.points())
        if (metric.domain.admits(r, s)) pts.emplace_back(r, s);
    std::vector<SweepRow> rows(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) {
        SweepRow& row = rows[i];
        row.r = pts[i].first;
        row.s = pts[i].second;
        row.u = grid.u;
        try {
            const auto [x, y] = canonical_point(dim, row.r, row.s, grid.u);
            const PointState st = evaluate_point(metric, x, y);
            row.regular = st.reg.regular;
            const TCoefficients tc = t_coefficients(st.pj, st.sr, st.p.u);
            row.Phi = tc.Phi;
            row.Psi = tc.Psi;
            row.Omega = tc.Omega;
        } catch (const MathError&) {
            row.Phi = row.Psi = row.Omega = std::nan("");
        }
    });
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows)
{
    std::string out = "r,s,u,Phi,Psi,Omega,regular\n";
    for (const SweepRow& row : rows)
        out += format_double(row.r) + "," + format_double(row.s) + "," + format_double(row.u) + "," +
               format_double(row.Phi) + "," + format_double(row.Psi) + "," + format_double(row.Omega) + "," +
               (row.regular ? "1" : "0") + "\n";
    return out;
}

Json sweep_json(const MetricSpec& metric, const Grid& grid, const std::vector<SweepRow>& rows)
{
    Json j;
    j["metric"] = metric.label;
    j["grid"] = grid.describe();
    Json arr = Json::array();
    for (const SweepRow& row : rows)
        arr.push_back({{"r", number(row.r)},
                       {"s", number(row.s)},
                       {"u", number(row.u)},
                       {"Phi", number(row.Phi)},
                       {"Psi", number(row.Psi)},
                       {"Omega", number(row.Omega)},
                       {"regular", row.regular}});
    j["rows"] = arr;
    return j;
}

}  // namespace finsler
