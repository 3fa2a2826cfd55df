#include <doctest.h>

#include <random>

#include "finsler/frame.hpp"
#include "support.hpp"

using namespace finsler;

TEST_CASE("frame at x = e1, y = e2")
{
    const EvalPoint p = make_eval_point(Vec{1, 0, 0}, Vec{0, 1, 0});
    CHECK(p.n == 3);
    CHECK(p.r == 1.0);
    CHECK(p.u == 1.0);
    CHECK(p.s == 0.0);
    CHECK(p.m == Vec{1, 0, 0});
    CHECK(p.m2 == 1.0);
    CHECK_FALSE(p.degenerate);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(p.hbar(i, j) == ((i == j && i != 1) ? 1.0 : 0.0));

    const SymTensor2 nt = n_tensor(p);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(nt(i, j) == ((i + j == 1) ? 1.0 : 0.0));
}

TEST_CASE("frame at x = (1,1,0), y = (0,2,0)")
{
    const EvalPoint p = make_eval_point(Vec{1, 1, 0}, Vec{0, 2, 0});
    CHECK(p.r == doctest::Approx(std::sqrt(2.0)));
    CHECK(p.u == 2.0);
    CHECK(p.s == doctest::Approx(1.0));
    CHECK(p.m[0] == doctest::Approx(1.0));
    CHECK(std::abs(p.m[1]) < 1e-15);
    CHECK(p.m[2] == 0.0);
    CHECK(p.m2 == doctest::Approx(1.0));
}

TEST_CASE("parallel x and y give a flagged degenerate point")
{
    const EvalPoint p = make_eval_point(Vec{1, 0}, Vec{2, 0});
    CHECK(p.degenerate);
    CHECK(p.s == doctest::Approx(1.0));
    CHECK(p.m2 == 0.0);
    CHECK(p.m == Vec{0, 0});
    CHECK(n_tensor(p).max_abs() == 0.0);

    const EvalPoint anti = make_eval_point(Vec{0, 3, 0}, Vec{0, -1, 0});
    CHECK(anti.degenerate);
    CHECK(anti.s == doctest::Approx(-3.0));
}

TEST_CASE("frame input errors")
{
    CHECK_THROWS_AS(make_eval_point(Vec{0, 0, 0}, Vec{0, 1, 0}), ZeroVector);
    CHECK_THROWS_AS(make_eval_point(Vec{1, 0, 0}, Vec{0, 0, 0}), ZeroVector);
    CHECK_THROWS_AS(make_eval_point(Vec{1, 0, 0}, Vec{0, 1}), DimensionMismatch);
    CHECK_THROWS_AS(make_eval_point(Vec{1}, Vec{1}), DimensionMismatch);
    CHECK_THROWS_AS(make_eval_point(Vec(7, 1.0), Vec(7, 1.0)), DimensionMismatch);
}

TEST_CASE("property: frame identities at random points in every dimension")
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> rd(0.1, 0.9);
    std::uniform_real_distribution<double> ud(0.5, 2.0);
    for (int n = kMinDim; n <= kMaxDim; ++n) {
        CAPTURE(n);
        for (int trial = 0; trial < 200; ++trial) {
            Vec x = test::random_direction(rng, n);
            Vec y = test::random_direction(rng, n);
            const double r = rd(rng);
            const double u = ud(rng);
            for (double& c : x) c *= r;
            for (double& c : y) c *= u;
            const EvalPoint p = make_eval_point(x, y);
            const double tol = 1e-12 * p.r * p.r;

            CHECK(std::abs(p.r - r) <= 1e-14);
            CHECK(std::abs(p.s) <= p.r);
            CHECK(std::abs(dot(y, p.m)) <= tol);
            CHECK(std::abs(dot(x, p.m) - p.m2) <= tol);
            CHECK(std::abs(dot(p.m, p.m) - p.m2) <= tol);
            CHECK(std::abs(p.m2 - (p.r * p.r - p.s * p.s)) <= tol);

            double trace = 0.0;
            for (int i = 0; i < n; ++i) {
                trace += p.hbar(i, i);
                double hy = 0.0;
                double xh = 0.0;
                for (int j = 0; j < n; ++j) {
                    hy += p.hbar(i, j) * y[j];
                    xh += x[j] * p.hbar(j, i);
                }
                CHECK(std::abs(hy) <= 1e-12 * p.u);
                CHECK(std::abs(xh - p.m[i]) <= 1e-12 * p.r);
                // projection: hbar hbar = hbar
                for (int j = 0; j < n; ++j) {
                    double hh = 0.0;
                    for (int k = 0; k < n; ++k) hh += p.hbar(i, k) * p.hbar(k, j);
                    CHECK(std::abs(hh - p.hbar(i, j)) <= 1e-12);
                }
            }
            CHECK(trace == doctest::Approx(n - 1).epsilon(1e-13));

            const SymTensor2 nt = n_tensor(p);
            double nmm = 0.0;
            for (int i = 0; i < n; ++i) {
                double ny = 0.0;
                double nm = 0.0;
                for (int j = 0; j < n; ++j) {
                    ny += nt(i, j) * y[j];
                    nm += nt(i, j) * p.m[j];
                    nmm += nt(i, j) * p.m[i] * p.m[j];
                }
                CHECK(std::abs(ny - p.u * p.m[i]) <= 1e-12 * std::max(1.0, p.u * p.r));
                CHECK(std::abs(nm - p.m2 * y[i] / p.u) <= 1e-12 * std::max(1.0, p.r * p.r));
            }
            CHECK(std::abs(nmm) <= 1e-12);
        }
    }
}

TEST_CASE("symmetric storage returns one entry for every index permutation")
{
    SymTensor4 t(4);
    for (std::size_t k = 0; k < t.stored_size(); ++k) t.data()[k] = static_cast<double>(k) + 0.5;
    CHECK(t.stored_size() == 35);
    CHECK(t(0, 1, 2, 3) == t(3, 2, 1, 0));
    CHECK(t(1, 1, 3, 0) == t(0, 1, 3, 1));
    CHECK(t(2, 2, 2, 1) == t(1, 2, 2, 2));
    CHECK(SymTensor4(6).stored_size() == 126);
    CHECK(SymTensor3(3).stored_size() == 10);
    CHECK(SymTensor2(2).stored_size() == 3);
}
