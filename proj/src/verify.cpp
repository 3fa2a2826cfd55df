#include "finsler/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "finsler/cartan.hpp"
#include "finsler/jet.hpp"
#include "finsler/oracle.hpp"
#include "finsler/parallel.hpp"
#include "finsler/ttensor.hpp"

namespace finsler {

namespace {

using J4 = Jet<double, 4>;

/// One property's outcome at one point; skipped points leave `checked` false.
struct Check {
    bool checked = false;
    double err = 0.0;
    double value = 0.0;
    double reference = 0.0;
};

/// Largest relative gap between two tensors; the reported values are the entries where it occurs.
template <int Rank>
Check compare(const SymTensor<Rank>& a, const SymTensor<Rank>& b, double floor)
{
    Check c{true};
    std::size_t worst = 0;
    double diff = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k) {
        const double d = std::abs(a.data()[k] - b.data()[k]);
        if (d > diff) {
            diff = d;
            worst = k;
        }
    }
    c.err = diff / std::max({a.max_abs(), b.max_abs(), floor, 1e-300});
    if (!a.data().empty()) {
        c.value = a.data()[worst];
        c.reference = b.data()[worst];
    }
    return c;
}

/// Keeps the worse of two checks.
void merge(Check& into, const Check& c)
{
    if (!c.checked) return;
    if (!into.checked || c.err > into.err) into = c;
}

/// A sum that should vanish, measured against the magnitude of its terms.
Check vanishing(double sum, double magnitude, double floor)
{
    return {true, std::abs(sum) / std::max({magnitude, floor, 1e-300}), sum, 0.0};
}

double rel(double a, double b, double floor) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor}); }

Vec scaled(const Vec& v, double c)
{
    Vec out = v;
    for (double& e : out) e *= c;
    return out;
}

struct Property {
    std::string name;
    double tol;
};

struct Context {
    const MetricSpec& metric;
    const SamplePoint& pt;
};

using Evaluator = std::function<std::vector<Check>(const Context&)>;

struct Suite {
    std::vector<Property> properties;
    Evaluator evaluate;
};

/// Scale closed-form T is measured against: |F| |g| / u^2 (the size of F dC/dy) or,
/// when larger, the term magnitudes Phi, Psi, Omega cancel down from, weighted by
/// the basis sizes |hbar| ~ 1 and |m| ~ sqrt(m^2).
double t_base_floor(const PointState& st, const SymTensor2& g)
{
    const double u = st.p.u;
    const TCoefficients mag = t_coefficient_magnitudes(st.pj, st.sr, u);
    const double m2 = std::abs(st.p.m2);
    return std::max(std::abs(u * st.pj.phi) * g.max_abs() / (u * u), mag.Phi + mag.Psi * m2 + mag.Omega * m2 * m2);
}

Suite oracle_suite()
{
    return {{{"T_closed_vs_oracle", 1e-8},
             {"g_vs_oracle", 1e-9},
             {"g_inv_vs_oracle", 1e-9},
             {"cartan_vs_oracle", 1e-9},
             {"cartan_vert_vs_oracle", 1e-9},
             {"T_oracle_symmetry", 1e-10}},
            [](const Context& c) {
                const PointState& st = c.pt.st;
                const double u = st.p.u;
                const OracleTensors o = oracle_tensors(c.metric, c.pt.x, c.pt.y);
                const double t_floor = std::max(o.term_scale, o.F * o.g.max_abs() / (u * u));
                const SymTensor4 T = t_tensor_closed(st.p, t_coefficients(st.pj, st.sr, u));
                return std::vector<Check>{
                    compare(T, o.T, t_floor),
                    compare(metric_tensor(st.p, st.sr), o.g, 1e-12),
                    compare(inverse_metric(st.p, st.sr), o.g_inv, 1e-12),
                    compare(cartan_tensor(st.p, st.sr), o.C, o.g.max_abs() / u),
                    compare(cartan_vertical_closed(st.p, st.sr), o.C4, o.g.max_abs() / (u * u)),
                    {true, o.asymmetry / t_floor, o.asymmetry, 0.0},
                };
            }};
}

Suite identities_suite()
{
    return {{{"sigma_identities", 1e-10},
             {"g_times_g_inv", 1e-10},
             {"F2_contraction", 1e-10},
             {"hbar_annihilates_y", 1e-12},
             {"m_orthogonal_to_y", 1e-12},
             {"cartan_annihilates_y", 1e-11},
             {"T_annihilates_y", 1e-10},
             {"cartan_symmetry", 1e-10},
             {"T_symmetry", 1e-10},
             {"g_homogeneity", 1e-10},
             {"cartan_homogeneity", 1e-10},
             {"T_homogeneity", 1e-10},
             {"mean_cartan", 1e-10}},
            [](const Context& c) {
                const PointState& st = c.pt.st;
                const EvalPoint& p = st.p;
                const SigmaRho& sr = st.sr;
                const Vec& y = c.pt.y;
                const int n = p.n;
                const double u = p.u;
                std::vector<Check> out(13);

                // sigma0' = sigma2, sigma2' = -s mu_s, sigma3' = s^2 mu_s - sigma2, sigma3 = -s sigma2
                {
                    const J4 s = J4::variable(p.s);
                    const J4 phi = eval_expr(c.metric.expr, p.r, s, c.metric.params);
                    const J4 p1 = phi.derivative();
                    const J4 p2 = p1.derivative();
                    const J4 a = phi - s * p1;
                    const J4 sigma0 = phi * a;
                    const J4 sigma2 = a * p1 - s * phi * p2;
                    const J4 sigma3 = -s * sigma2;
                    const double smu = p.s * sr.mu_s;
                    const double rhs3 = p.s * smu - sr.sigma2;
                    merge(out[0], {true, std::abs(sigma0[1] - sr.sigma2) / std::max(1.0, std::abs(sr.sigma2)), sigma0[1], sr.sigma2});
                    merge(out[0], {true, std::abs(sigma2[1] + smu) / std::max(1.0, std::abs(smu)), sigma2[1], -smu});
                    merge(out[0], {true, std::abs(sigma3[1] - rhs3) / std::max({1.0, std::abs(rhs3), std::abs(sr.sigma2)}),
                                   sigma3[1], rhs3});
                    merge(out[0], {true, rel(sr.sigma3, -p.s * sr.sigma2, 1e-300), sr.sigma3, -p.s * sr.sigma2});
                }

                const SymTensor2 g = metric_tensor(p, sr);
                const SymTensor2 gi = inverse_metric(p, sr);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        double acc = 0.0;
                        double mag = 0.0;
                        for (int k = 0; k < n; ++k) {
                            acc += gi(i, k) * g(k, j);
                            mag += std::abs(gi(i, k) * g(k, j));
                        }
                        const double delta = i == j ? 1.0 : 0.0;
                        merge(out[1], {true, std::abs(acc - delta) / std::max(1.0, mag), acc, delta});
                    }

                double gyy = 0.0;
                double gyy_mag = 0.0;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        gyy += g(i, j) * y[i] * y[j];
                        gyy_mag += std::abs(g(i, j) * y[i] * y[j]);
                    }
                const double F2 = u * u * st.pj.phi * st.pj.phi;
                out[2] = {true, std::abs(gyy - F2) / std::max({gyy_mag, std::abs(F2), 1e-300}), gyy, F2};

                double my = 0.0;
                double my_mag = 0.0;
                for (int i = 0; i < n; ++i) {
                    double hy = 0.0;
                    double hy_mag = 0.0;
                    for (int j = 0; j < n; ++j) {
                        hy += p.hbar(i, j) * y[j];
                        hy_mag += std::abs(p.hbar(i, j) * y[j]);
                    }
                    merge(out[3], vanishing(hy, hy_mag, u));
                    my += p.m[i] * y[i];
                    my_mag += std::abs(p.m[i] * y[i]);
                }
                out[4] = vanishing(my, my_mag, p.r * u);

                const SymTensor3 C = cartan_tensor(p, sr);
                const double c_floor = g.max_abs() / u;
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k) {
                        double acc = 0.0;
                        double mag = 0.0;
                        for (int i = 0; i < n; ++i) {
                            acc += y[i] * C(i, j, k);
                            mag += std::abs(y[i] * C(i, j, k));
                        }
                        merge(out[5], vanishing(acc, mag, c_floor * u));
                    }

                const TCoefficients tc = t_coefficients(st.pj, sr, u);
                const SymTensor4 T = t_tensor_closed(p, tc);
                const double t_floor = t_base_floor(st, g);
                for (const auto& [i, j, k] : SymTensor3(n).multisets()) {
                    double acc = 0.0;
                    double mag = 0.0;
                    for (int h = 0; h < n; ++h) {
                        acc += y[h] * T(h, i, j, k);
                        mag += std::abs(y[h] * T(h, i, j, k));
                    }
                    merge(out[6], vanishing(acc, mag, t_floor * u));
                }

                // lowering C^r_jk with g must give a tensor symmetric in its first two slots
                const MixedTensor Cm = cartan_mixed(p, sr);
                for (int r = 0; r < n; ++r)
                    for (int j = 0; j < n; ++j)
                        for (int k = 0; k < n; ++k) {
                            double lrj = 0.0;
                            double ljr = 0.0;
                            double mag = 0.0;
                            for (int i = 0; i < n; ++i) {
                                lrj += g(r, i) * Cm[i](j, k);
                                ljr += g(j, i) * Cm[i](r, k);
                                mag += std::abs(g(r, i) * Cm[i](j, k)) + std::abs(g(j, i) * Cm[i](r, k));
                            }
                            merge(out[7], {true, std::abs(lrj - ljr) / std::max(mag, c_floor), lrj, ljr});
                        }

                // the oracle assembles T without symmetrizing, so its asymmetry is a real test
                const OracleTensors o = oracle_tensors(c.metric, c.pt.x, y);
                const double ot_floor = std::max(o.term_scale, t_floor);
                out[8] = {true, o.asymmetry / ot_floor, o.asymmetry, 0.0};

                for (double lambda : {2.0, 10.0}) {
                    const PointState st2 = evaluate_point(c.metric, c.pt.x, scaled(y, lambda));
                    merge(out[9], compare(metric_tensor(st2.p, st2.sr), g, 1e-12));
                    SymTensor3 C2 = cartan_tensor(st2.p, st2.sr);
                    C2 *= lambda;
                    merge(out[10], compare(C2, C, c_floor));
                    SymTensor4 T2 = t_tensor_closed(st2.p, t_coefficients(st2.pj, st2.sr, st2.p.u));
                    T2 *= lambda;
                    merge(out[11], compare(T2, T, t_floor));
                }

                const MeanCartan mc = mean_cartan(p, sr);
                for (int i = 0; i < n; ++i) {
                    double acc = 0.0;
                    double mag = 0.0;
                    for (int j = 0; j < n; ++j)
                        for (int k = 0; k < n; ++k) {
                            acc += gi(j, k) * C(i, j, k);
                            mag += std::abs(gi(j, k) * C(i, j, k));
                        }
                    const double am = mc.A * p.m[i];
                    merge(out[12], {true, std::abs(acc - am) / std::max({mag, gi.max_abs() * c_floor, 1e-300}), am, acc});
                }
                return out;
            }};
}

Suite phi_zero_suite()
{
    return {{{"phi_zero_identity", 1e-9}}, [](const Context& c) {
                std::vector<Check> out(1);
                if (c.pt.st.p.s == 0.0) return out;
                try {
                    const IdentitySides id = phi_zero_identity(c.pt.st.pj, c.pt.st.sr);
                    // on the vanishing-T family both sides cancel to zero, so the floor is the lhs term size
                    const PointState& st = c.pt.st;
                    const double terms = std::abs(2.0 * st.p.s) + std::abs(st.sr.m2 * st.sr.sigma2 * st.sr.kappa);
                    out[0] = {true, rel(id.lhs, id.rhs, std::max(terms, 1e-300)), id.lhs, id.rhs};
                } catch (const MathError&) {
                }
                return out;
            }};
}

Suite quasi_c_suite()
{
    return {{{"quasi_c_residual", 1e-9}}, [](const Context& c) {
                std::vector<Check> out(1);
                const PointState& st = c.pt.st;
                if (st.p.n < 3) return out;
                const MeanCartan mc = mean_cartan(st.p, st.sr);
                if (!(std::abs(mc.A) * st.p.u > kZeroMeanCartanTol)) return out;
                const QuasiCDecomposition q = quasi_c_decomposition(st.p, st.sr, mc);
                out[0] = {true, q.residual / std::max(q.cartan_norm, 1e-300), q.residual, 0.0};
                return out;
            }};
}

std::vector<Suite> suites_for(const std::string& name)
{
    if (name == "oracle") return {oracle_suite()};
    if (name == "identities") return {identities_suite()};
    if (name == "phi-zero") return {phi_zero_suite()};
    if (name == "quasi-c") return {quasi_c_suite()};
    if (name == "all") return {oracle_suite(), identities_suite(), phi_zero_suite(), quasi_c_suite()};
    throw UsageError("unknown suite '" + name + "' (expected oracle, identities, phi-zero, quasi-c or all)");
}

}  // namespace

std::vector<SamplePoint> sample_points(const MetricSpec& metric, int n, int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    std::uniform_real_distribution<double> rd(0.1, 0.9);
    std::uniform_real_distribution<double> ud(0.5, 2.0);
    const auto direction = [&] {
        Vec v(n);
        double len = 0.0;
        do {
            for (double& c : v) c = nd(rng);
            len = norm(v);
        } while (len < 1e-8);
        for (double& c : v) c /= len;
        return v;
    };
    std::vector<SamplePoint> out;
    for (int attempt = 0; static_cast<int>(out.size()) < count && attempt < 100 * count; ++attempt) {
        Vec x = direction();
        Vec y = direction();
        const double r = rd(rng);
        const double u = ud(rng);
        for (double& c : x) c *= r;
        for (double& c : y) c *= u;
        try {
            PointState st = evaluate_point(metric, x, y);
            if (st.p.degenerate || !st.reg.regular || !metric.domain.admits(st.p.r, st.p.s)) continue;
            if (!(st.pj.phi >= kSamplePhiMin && st.pj.phi <= kSamplePhiMax)) continue;
            const OracleTensors o = oracle_tensors(metric, x, y);
            if (o.condition > kSampleMaxCondition || !o.finite()) continue;
            out.push_back({std::move(x), std::move(y), std::move(st)});
        } catch (const MathError&) {
        }
    }
    return out;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"oracle", "identities", "phi-zero", "quasi-c", "all"};
    return names;
}

bool VerifyReport::passed() const
{
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed(); });
}

double VerifyReport::max_err() const
{
    double m = 0.0;
    for (const PropertyResult& p : properties) m = std::max(m, p.max_err);
    return m;
}

VerifyReport run_verify(const MetricSpec& metric, const VerifyOptions& opts)
{
    const std::vector<Suite> suites = suites_for(opts.suite);
    if (opts.samples < 1) throw UsageError("--samples must be positive");
    if (opts.dim < kMinDim || opts.dim > kMaxDim) throw UsageError("--dim must be in 2..6");

    const std::vector<SamplePoint> pts = sample_points(metric, opts.dim, opts.samples, opts.seed);
    if (pts.empty()) throw DomainError("no admissible sample points for " + metric.label);

    VerifyReport rep;
    rep.metric = metric.label;
    rep.suite = opts.suite;
    rep.dim = opts.dim;
    rep.samples = static_cast<int>(pts.size());
    rep.seed = opts.seed;

    for (const Suite& suite : suites) {
        // per point, per property; filled by index so the result never depends on scheduling
        std::vector<std::vector<Check>> checks(pts.size());
        parallel_for(pts.size(), [&](std::size_t i) {
            try {
                checks[i] = suite.evaluate({metric, pts[i]});
            } catch (const MathError&) {
                checks[i].assign(suite.properties.size(), Check{});
            }
        });
        for (std::size_t k = 0; k < suite.properties.size(); ++k) {
            PropertyResult res;
            res.name = suite.properties[k].name;
            res.tol = opts.tol.value_or(suite.properties[k].tol);
            bool have_worst = false;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const Check& c = checks[i][k];
                if (!c.checked) continue;
                ++res.checked;
                // NaN counts as a failure
                if (!(c.err <= res.tol)) ++res.failed;
                const double err = std::isnan(c.err) ? INFINITY : c.err;
                if (!have_worst || err > res.max_err) {
                    have_worst = true;
                    res.max_err = err;
                    res.x = pts[i].x;
                    res.y = pts[i].y;
                    res.value = c.value;
                    res.reference = c.reference;
                }
            }
            rep.properties.push_back(std::move(res));
        }
    }
    return rep;
}

}  // namespace finsler
