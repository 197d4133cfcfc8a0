#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "support/oracles.hpp"
#include "transorder/dist.hpp"
#include "transorder/shape.hpp"

using namespace transorder;
using Catch::Approx;

TEST_CASE("piecewise linear function basics", "[shape]") {
    const PiecewiseLinearFn f({0.0, 1.0, 3.0}, {0.0, 2.0, 2.0});
    REQUIRE(f(0.0) == 0.0);
    REQUIRE(f(1.0) == 2.0);
    REQUIRE(f(0.5) == Approx(1.0).margin(1e-15));
    REQUIRE(f(2.0) == 2.0);
    REQUIRE_THROWS_AS(f(-0.1), std::domain_error);
    REQUIRE_THROWS_AS(f(3.1), std::domain_error);

    SECTION("left inverse maps flats to their left endpoint") {
        REQUIRE(f.inverse_left(2.0) == Approx(1.0).margin(1e-15));
        REQUIRE(f.inverse_left(1.0) == Approx(0.5).margin(1e-15));
        REQUIRE(f.inverse_left(0.0) == 0.0);
        REQUIRE(f.inverse_left(-1.0) == 0.0);
        REQUIRE_THROWS_AS(f.inverse_left(2.5), std::domain_error);
    }
    SECTION("construction validated") {
        REQUIRE_THROWS_AS(PiecewiseLinearFn({0.0}, {0.0}), std::invalid_argument);
        REQUIRE_THROWS_AS(PiecewiseLinearFn({0.0, 0.0}, {0.0, 1.0}), std::invalid_argument);
    }
}

TEST_CASE("transform graph and empirical hazard", "[shape]") {
    SECTION("two-point hazard by hand") {
        const auto g = empirical_hazard(EmpiricalDist({1.0, 2.0}));
        REQUIRE(g.t == std::vector<double>{0.0, 1.0, 2.0});
        REQUIRE(g.v[0] == 0.0);
        REQUIRE(g.v[1] == 0.0);  // -ln(1 - 0)
        REQUIRE(g.v[2] == Approx(std::log(2.0)).margin(1e-15));
    }
    SECTION("hazard heights stay finite, first is zero") {
        for (std::size_t n : {1UL, 2UL, 7UL, 40UL}) {
            std::vector<double> values(n);
            for (std::size_t i = 0; i < n; ++i) values[i] = static_cast<double>(i + 1);
            const auto g = empirical_hazard(EmpiricalDist(values));
            REQUIRE(g.v[1] == 0.0);
            for (double v : g.v) REQUIRE(std::isfinite(v));
        }
    }
    SECTION("nonpositive observations rejected") {
        REQUIRE_THROWS_AS(empirical_hazard(EmpiricalDist({0.0, 1.0})), std::domain_error);
        REQUIRE_THROWS_AS(empirical_hazard(EmpiricalDist({-1.0, 1.0})), std::domain_error);
    }
    SECTION("ties collapse keeping the smallest left limit") {
        const auto g = empirical_hazard(EmpiricalDist({1.0, 1.0, 2.0}));
        REQUIRE(g.t == std::vector<double>{0.0, 1.0, 2.0});
        REQUIRE(g.v[1] == 0.0);  // not -ln(1-1/3)
        REQUIRE(g.v[2] == Approx(-std::log(1.0 - 2.0 / 3.0)).margin(1e-15));
    }
    SECTION("prefix graph keeps full-sample jump heights") {
        const EmpiricalDist s({1.0, 2.0, 3.0, 4.0});
        const auto g = transform_graph_prefix(s, ParametricModel::unit_exponential(), 3);
        REQUIRE(g.t == std::vector<double>{0.0, 1.0, 2.0, 3.0});
        REQUIRE(g.v[2] == Approx(-std::log(1.0 - 0.25)).margin(1e-15));
        REQUIRE(g.v[3] == Approx(-std::log(1.0 - 0.5)).margin(1e-15));
    }
}

TEST_CASE("greatest convex minorant", "[shape]") {
    SECTION("convex input is its own minorant") {
        TransformGraph g;
        g.t = {0.0, 1.0, 2.0, 3.0};
        g.v = {0.0, 0.0, 0.5, 2.0};
        const auto hull = gcm(g);
        for (std::size_t i = 0; i < g.size(); ++i) {
            REQUIRE(hull(g.t[i]) == Approx(g.v[i]).margin(1e-15));
        }
    }
    SECTION("hand hull") {
        TransformGraph g;
        g.t = {0.0, 1.0, 2.0};
        g.v = {0.0, 1.0, 1.2};
        const auto hull = gcm(g);
        REQUIRE(hull.xs() == std::vector<double>{0.0, 2.0});
        REQUIRE(hull(1.0) == Approx(0.6).margin(1e-15));
    }
    SECTION("idempotent on its own vertex set") {
        RandomStream rng(SeedSpec{31, 0});
        for (int trial = 0; trial < 50; ++trial) {
            const auto g = oracles::random_graph(rng, 30);
            const auto hull = gcm(g);
            TransformGraph again;
            again.t = hull.xs();
            again.v = hull.ys();
            const auto hull2 = gcm(again);
            REQUIRE(hull2.xs() == hull.xs());
            REQUIRE(hull2.ys() == hull.ys());
        }
    }
    SECTION("fewer than two anchors rejected") {
        TransformGraph g;
        g.t = {0.0};
        g.v = {0.0};
        REQUIRE_THROWS_AS(gcm(g), std::invalid_argument);
    }
}

TEST_CASE("greatest star-shaped minorant", "[shape]") {
    SECTION("star-shaped input untouched at the nodes") {
        TransformGraph g;
        g.t = {0.0, 1.0, 2.0, 4.0};
        g.v = {0.0, 0.5, 1.5, 4.0};  // ratios 0.5, 0.75, 1.0
        const auto m = gsm(g);
        for (std::size_t i = 0; i < g.size(); ++i) {
            REQUIRE(m(g.t[i]) == Approx(g.v[i]).margin(1e-15));
        }
    }
    SECTION("suffix minimum by hand") {
        TransformGraph g;
        g.t = {0.0, 1.0, 2.0, 4.0};
        g.v = {0.0, 0.0, 1.0, 1.5};  // a = {0, 0.5, 0.375}, alpha = {0, 0.375, 0.375}
        const auto m = gsm(g);
        REQUIRE(m(1.0) == 0.0);
        REQUIRE(m(2.0) == Approx(0.75).margin(1e-15));
        REQUIRE(m(4.0) == Approx(1.5).margin(1e-15));
    }
    SECTION("nonpositive abscissa rejected") {
        TransformGraph g;
        g.t = {-1.0, 1.0};
        g.v = {0.0, 1.0};
        REQUIRE_THROWS_AS(gsm(g), std::domain_error);
    }
}

TEST_CASE("minorant property suite on random graphs", "[shape][property]") {
    RandomStream rng(SeedSpec{32, 0});
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = oracles::random_graph(rng, 40);
        const auto hull = gcm(g);
        const auto star = gsm(g);

        // minorants never exceed the anchors
        for (std::size_t i = 0; i < g.size(); ++i) {
            REQUIRE(hull(g.t[i]) <= g.v[i] + 1e-12);
            REQUIRE(star(g.t[i]) <= g.v[i] + 1e-12);
        }
        // the hull touches the first and last anchor
        REQUIRE(hull(g.t.front()) == Approx(g.v.front()).margin(1e-12));
        REQUIRE(hull(g.t.back()) == Approx(g.v.back()).margin(1e-12));

        // convexity: hull slopes strictly increase across vertices
        const auto& hx = hull.xs();
        const auto& hy = hull.ys();
        for (std::size_t i = 2; i < hx.size(); ++i) {
            const double s1 = (hy[i - 1] - hy[i - 2]) / (hx[i - 1] - hx[i - 2]);
            const double s2 = (hy[i] - hy[i - 1]) / (hx[i] - hx[i - 1]);
            REQUIRE(s2 >= s1 - 1e-12);
        }

        // star rays are nondecreasing and realized by some a_j with j >= i
        double prev_alpha = 0.0;
        for (std::size_t i = 1; i < g.size(); ++i) {
            const double alpha = star(g.t[i]) / g.t[i];
            REQUIRE(alpha >= prev_alpha - 1e-12);
            prev_alpha = alpha;
            bool realized = false;
            for (std::size_t j = i; j < g.size() && !realized; ++j) {
                realized = std::fabs(alpha - g.v[j] / g.t[j]) <= 1e-12;
            }
            REQUIRE(realized);
        }

        // agreement with the independent oracles at every anchor
        const auto pava = oracles::pava_gcm_values(g);
        const auto nested = oracles::nested_min_gsm_values(g);
        for (std::size_t i = 0; i < g.size(); ++i) {
            REQUIRE(hull(g.t[i]) == Approx(pava[i]).margin(1e-12));
            REQUIRE(star(g.t[i]) == Approx(nested[i]).margin(1e-12));
        }

        // the star minorant dominates the convex minorant pointwise
        for (std::size_t i = 1; i < g.size(); ++i) {
            for (double frac : {0.0, 0.31, 0.77, 1.0}) {
                const double x = g.t[i - 1] + frac * (g.t[i] - g.t[i - 1]);
                REQUIRE(star(x) >= hull(x) - 1e-12);
            }
        }
    }
}

TEST_CASE("affine-envelope oracle agrees on small graphs", "[shape][property]") {
    RandomStream rng(SeedSpec{33, 0});
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = oracles::random_graph(rng, 9);
        const auto hull = gcm(g);
        for (std::size_t i = 0; i < g.size(); ++i) {
            REQUIRE(hull(g.t[i]) == Approx(oracles::affine_envelope_gcm(g, g.t[i])).margin(1e-9));
        }
    }
}

TEST_CASE("horizontal scaling commutes with both minorants", "[shape][property]") {
    RandomStream rng(SeedSpec{34, 0});
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = oracles::random_graph(rng, 25);
        for (double c : {0.5, 8.0}) {
            TransformGraph scaled;
            scaled.t = g.t;
            scaled.v = g.v;
            for (double& t : scaled.t) t *= c;
            const auto hull = gcm(g);
            const auto hull_c = gcm(scaled);
            const auto star = gsm(g);
            const auto star_c = gsm(scaled);
            for (std::size_t i = 0; i < g.size(); ++i) {
                REQUIRE(hull_c(c * g.t[i]) == Approx(hull(g.t[i])).margin(1e-12));
                REQUIRE(star_c(c * g.t[i]) == Approx(star(g.t[i])).margin(1e-12));
            }
        }
    }
}
