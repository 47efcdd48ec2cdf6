#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "gfh/local_poly.hpp"
#include "test_util.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double horner(const std::vector<double>& c, double x) {
    double v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
}

}  // namespace

TEST_CASE("local polynomial values on a hand-worked node set") {
    auto ns = gfh::make_node_set<double>({0.0, 1.0, 2.0});
    const std::vector<double> f{0.0, 1.0, 0.0};

    SECTION("degree-1 windows") {
        // Chord through (0,0),(1,1) and the line through (1,1),(2,0),
        // both evaluated at 0.5 (extrapolation for the second window).
        CHECK_THAT(gfh::eval_local(ns, f, {0, 1}, 0.5), WithinAbs(0.5, 1e-15));
        CHECK_THAT(gfh::eval_local(ns, f, {1, 1}, 0.5), WithinAbs(1.5, 1e-15));
    }
    SECTION("degree-2 window is the parabola x(2-x)") {
        CHECK_THAT(gfh::eval_local(ns, f, {0, 2}, 0.5), WithinAbs(0.75, 1e-15));
        CHECK_THAT(gfh::eval_local(ns, f, {0, 2}, 1.5), WithinAbs(0.75, 1e-15));
        CHECK_THAT(gfh::eval_local(ns, f, {0, 2}, -1.0), WithinAbs(-3.0, 1e-14));
    }
    SECTION("window nodes return their samples verbatim") {
        const std::vector<double> g{0.1, -7.25, 3.0};
        for (int k = 0; k < 3; ++k)
            CHECK(gfh::eval_local(ns, g, {0, 2}, ns.xs[k]) == g[k]);
        // Snapping: within tolerance of a node counts as the node.
        const double tol = gfh::snap_tolerance(ns);
        CHECK(gfh::eval_local(ns, g, {0, 2}, 1.0 + 0.5 * tol) == g[1]);
    }
}

TEST_CASE("window weights") {
    SECTION("equidistant degree-2 pattern") {
        auto ns = gfh::make_equidistant(0.0, 1.0, 4);  // spacing 0.25
        auto sw = gfh::window_weights(ns, {1, 2});
        REQUIRE(sw.w.size() == 3);
        CHECK_THAT(sw.w[0], WithinAbs(0.5, 1e-15));
        CHECK_THAT(sw.w[1], WithinAbs(-1.0, 1e-15));
        CHECK_THAT(sw.w[2], WithinAbs(0.5, 1e-15));
        CHECK_THAT(sw.logscale, WithinRel(std::log(16.0), 1e-14));
    }
    SECTION("largest magnitude is always exactly 1") {
        std::mt19937_64 rng(2024);
        for (int rep = 0; rep < 50; ++rep) {
            auto ns = testutil::random_nodes(rng, testutil::irand(rng, 4, 12), -2.0,
                                             3.0);
            const int d = testutil::irand(rng, 0, 4);
            const int i = testutil::irand(rng, 0, ns.n() - d);
            auto sw = gfh::window_weights(ns, {i, d});
            double maxabs = 0;
            for (double w : sw.w) maxabs = std::max(maxabs, std::abs(w));
            CHECK(maxabs == 1.0);
            CHECK(std::isfinite(sw.logscale));
        }
    }
    SECTION("degree 0 window") {
        auto ns = gfh::make_equidistant(0.0, 1.0, 4);
        auto sw = gfh::window_weights(ns, {2, 0});
        REQUIRE(sw.w == std::vector<double>{1.0});
        CHECK(sw.logscale == 0.0);
    }
}

TEST_CASE("local polynomials reproduce polynomials of matching degree") {
    std::mt19937_64 rng(77);
    for (int rep = 0; rep < 60; ++rep) {
        const int n = testutil::irand(rng, 3, 14);
        auto ns = testutil::random_nodes(rng, n, -1.0, 1.0);
        const int d = testutil::irand(rng, 0, std::min(6, n));
        const int i = testutil::irand(rng, 0, n - d);
        std::vector<double> coeff(d + 1);
        for (double& c : coeff) c = testutil::urand(rng, -1.0, 1.0);
        std::vector<double> f(n + 1);
        for (int k = 0; k <= n; ++k) f[k] = horner(coeff, ns.xs[k]);
        for (int t = 0; t < 10; ++t) {
            const double x = testutil::urand(rng, -1.2, 1.2);
            const double want = horner(coeff, x);
            const double got = gfh::eval_local(ns, f, {i, d}, x);
            CHECK_THAT(got, WithinAbs(want, 1e-10 * std::max(1.0, std::abs(want))));
        }
    }
}

TEST_CASE("window validation") {
    auto ns = gfh::make_equidistant(0.0, 1.0, 4);
    const std::vector<double> f(5, 1.0);
    CHECK_THROWS_AS(gfh::eval_local(ns, f, {-1, 2}, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(gfh::eval_local(ns, f, {3, 2}, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(gfh::eval_local(ns, f, {0, -1}, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(gfh::window_weights(ns, {2, 5}), std::invalid_argument);
    const std::vector<double> short_f(3, 1.0);
    CHECK_THROWS_AS(gfh::eval_local(ns, short_f, {0, 2}, 0.3), std::invalid_argument);
}
