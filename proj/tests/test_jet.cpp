#include <doctest.h>

#include <random>

#include "finsler/jet.hpp"
#include "finsler/phi_jet.hpp"
#include "support.hpp"

using namespace finsler;
using J4 = Jet<double, 4>;

TEST_CASE("reciprocal jet at 1 carries factorial derivatives")
{
    const J4 v = 1.0 / J4::variable(1.0);
    CHECK(v[0] == doctest::Approx(1.0));
    CHECK(v[1] == doctest::Approx(-1.0));
    CHECK(v[2] == doctest::Approx(2.0));
    CHECK(v[3] == doctest::Approx(-6.0));
    CHECK(v[4] == doctest::Approx(24.0));
}

TEST_CASE("sqrt(1+s^2) at zero")
{
    const J4 s = J4::variable(0.0);
    const J4 v = sqrt(1.0 + s * s);
    const double expected[5] = {1, 0, 1, 0, -3};
    for (int k = 0; k <= 4; ++k) CHECK(v[k] == doctest::Approx(expected[k]));
}

TEST_CASE("truncation: entries past the order stay zero and order is the minimum")
{
    const J4 a = J4::variable(0.7, 2);
    const J4 b = J4::variable(1.3, 4);
    const J4 c = exp(a) * sin(b);
    CHECK(c.order() == 2);
    CHECK(c[3] == 0.0);
    CHECK(c[4] == 0.0);
    CHECK(J4(3.0).order() == 4);
}

TEST_CASE("derivative shifts the jet")
{
    const J4 v = pow(J4::variable(2.0), 3.0);  // x^3 at 2: 8, 12, 12, 6, 0
    const J4 d = v.derivative();
    CHECK(d.order() == 3);
    CHECK(d[0] == doctest::Approx(12.0));
    CHECK(d[1] == doctest::Approx(12.0));
    CHECK(d[2] == doctest::Approx(6.0));
}

TEST_CASE("integer powers stay exact at zero and for negative bases")
{
    const J4 z = pow(J4::variable(0.0), 2.0);
    CHECK(z[0] == 0.0);
    CHECK(z[1] == 0.0);
    CHECK(z[2] == 2.0);
    CHECK(z[3] == 0.0);
    const J4 neg = pow(J4::variable(-1.5), 3.0);
    CHECK(neg[0] == doctest::Approx(-3.375));
    CHECK(neg[1] == doctest::Approx(6.75));
    CHECK(neg[2] == doctest::Approx(-9.0));
    CHECK(neg[3] == doctest::Approx(6.0));
    CHECK(neg[4] == 0.0);
}

TEST_CASE("elementary functions agree with central differences to O(h^2)")
{
    struct Case {
        const char* name;
        std::function<J4(const J4&)> jet;
        std::function<double(double)> plain;
        double x;
    };
    const std::vector<Case> cases = {
        {"sqrt", [](const J4& x) { return sqrt(x); }, [](double x) { return std::sqrt(x); }, 1.7},
        {"exp", [](const J4& x) { return exp(x); }, [](double x) { return std::exp(x); }, 0.3},
        {"log", [](const J4& x) { return log(x); }, [](double x) { return std::log(x); }, 1.9},
        {"sin", [](const J4& x) { return sin(x); }, [](double x) { return std::sin(x); }, 0.4},
        {"cos", [](const J4& x) { return cos(x); }, [](double x) { return std::cos(x); }, 1.1},
        {"pow", [](const J4& x) { return pow(x, 2.5); }, [](double x) { return std::pow(x, 2.5); }, 1.4},
        {"quotient", [](const J4& x) { return (1.0 + x) / (2.0 + x * x); },
         [](double x) { return (1.0 + x) / (2.0 + x * x); }, 0.6},
    };
    for (const auto& c : cases) {
        CAPTURE(c.name);
        const J4 v = c.jet(J4::variable(c.x));
        CHECK(v[0] == c.plain(c.x));
        // first and second derivatives are well conditioned at both steps
        for (double h : {1e-4, 1e-5}) {
            for (int k = 1; k <= 2; ++k) {
                const double fd = test::central_difference(c.plain, c.x, k, h);
                CHECK(std::abs(fd - v[k]) <= 1e-5 * std::max(1.0, std::abs(v[k])) + (k == 2 ? 1e-3 : 0.0));
            }
        }
        // third and fourth derivatives: FD cancellation needs a larger step
        for (int k = 3; k <= 4; ++k) {
            const double fd = test::central_difference(c.plain, c.x, k, 1e-2);
            CHECK(std::abs(fd - v[k]) <= 1e-2 * std::max(1.0, std::abs(v[k])));
        }
    }
}

TEST_CASE("Leibniz rule: product jet equals the jet of the product formula")
{
    // (x^2 e^x)'''' = e^x (x^2 + 8x + 12)
    const double x0 = 0.8;
    const J4 x = J4::variable(x0);
    const J4 v = x * x * exp(x);
    CHECK(v[4] == doctest::Approx(std::exp(x0) * (x0 * x0 + 8 * x0 + 12)).epsilon(1e-13));
}

TEST_CASE("nested jets give mixed partials of a bivariate function")
{
    using N2 = nested_jet_t<double, 2>;
    // f(a, b) = a^3 b^2 -> d2f/da db = 6 a^2 b
    const double a0 = 1.3;
    const double b0 = -0.7;
    N2 a = N2(a0) + detail::seed<2>(0);
    N2 b = N2(b0) + detail::seed<2>(1);
    const N2 f = a * a * a * b * b;
    CHECK(detail::mixed_component<2>(f) == doctest::Approx(6 * a0 * a0 * b0));
}

TEST_CASE("phi_jet examples")
{
    SUBCASE("randers")
    {
        const PhiJet pj = phi_jet(builtin("randers"), 0.5, 0.3, 2);
        CHECK(pj.phi == doctest::Approx(1.3));
        CHECK(pj.phi_s == doctest::Approx(1.0));
        CHECK(pj.phi_ss == 0.0);
        CHECK(pj.order == 2);
        CHECK(pj.phi_sss == 0.0);
    }
    SUBCASE("kropina")
    {
        const PhiJet pj = phi_jet(builtin("kropina"), 2.0, 1.0, 4);
        const double expected[5] = {1, -1, 2, -6, 24};
        for (int k = 0; k <= 4; ++k) CHECK(pj.derivative(k) == doctest::Approx(expected[k]));
    }
    SUBCASE("family collapses to sqrt(1 - s^2) at c r^2 = 1")
    {
        const MetricSpec fam = builtin("tcondition_family", {{"a", 1.0}, {"c", 1.0}});
        const MetricSpec ref = expression_metric("sqrt(1-s^2)");
        for (double s : {0.1, 0.4, 0.8}) {
            const PhiJet a = phi_jet(fam, 1.0, s, 4);
            const PhiJet b = phi_jet(ref, 1.0, s, 4);
            for (int k = 0; k <= 4; ++k) CHECK(a.derivative(k) == doctest::Approx(b.derivative(k)).epsilon(1e-12));
        }
    }
}

TEST_CASE("fpow2 partials at the Randers reference point")
{
    const MetricSpec randers = builtin("randers");
    const Vec x{1, 0, 0};
    const Vec y{0, 1, 0};
    CHECK(fpow2_partial<2>(randers, x, y, {0, 0}) == doctest::Approx(4.0));
    CHECK(fpow2_partial<3>(randers, x, y, {0, 0, 0}) == doctest::Approx(6.0));

    const MetricSpec euclid = builtin("euclidean");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(fpow2_partial<2>(euclid, x, y, {i, j}) == doctest::Approx(i == j ? 2.0 : 0.0));
    CHECK(fpow2_partial<3>(euclid, x, y, {0, 1, 2}) == doctest::Approx(0.0));
    CHECK(fpow2_partial4(euclid, x, y, {0, 1, 1, 2}) == doctest::Approx(0.0));
}

TEST_CASE("nested-jet fourth partials are symmetric under index permutation")
{
    for (const MetricSpec& metric : test::reference_metrics()) {
        CAPTURE(metric.label);
        for (const auto& pt : test::regular_points(metric, 3, 5, 11)) {
            std::array<int, 4> idx{0, 1, 1, 2};
            const double base = fpow2_partial4(metric, pt.x, pt.y, idx);
            std::sort(idx.begin(), idx.end());
            do {
                const double v = fpow2_partial4(metric, pt.x, pt.y, idx);
                // a quadratic F^2 has vanishing fourth partials, so compare on an O(1) scale
                CHECK(test::rel_err(v, base, 1.0) <= 1e-12);
            } while (std::next_permutation(idx.begin(), idx.end()));
        }
    }
}

TEST_CASE("Euler homogeneity: y^i dF/dy^i = F")
{
    for (const MetricSpec& metric : test::reference_metrics()) {
        CAPTURE(metric.label);
        for (const auto& pt : test::regular_points(metric, 3, 200, 5)) {
            const FGradient fg = f_gradient(metric, pt.x, pt.y);
            CHECK(test::rel_err(dot(fg.ell, pt.y), fg.F) <= 1e-10);
        }
    }
}
