#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <sstream>

#include "transorder/csv.hpp"
#include "transorder/dist.hpp"
#include "transorder/seed.hpp"

using namespace transorder;
using Catch::Approx;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("parametric cdf closed forms", "[dist]") {
    const auto exponential = ParametricModel::unit_exponential();
    REQUIRE(exponential.cdf(0.0) == 0.0);
    REQUIRE(exponential.cdf(-3.0) == 0.0);
    REQUIRE(exponential.cdf(1.0) == Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));

    const auto weibull2 = ParametricModel::weibull(2.0);
    // F(1) = 1 - e^{-1^2}
    REQUIRE(weibull2.cdf(1.0) == Approx(0.6321205588285577).margin(1e-12));

    const auto burr11 = ParametricModel::burr(1.0, 1.0);
    // 1 - (1+1)^{-1}
    REQUIRE(burr11.cdf(1.0) == Approx(0.5).margin(1e-14));

    SECTION("infinities clamp to the support ends") {
        REQUIRE(weibull2.cdf(kInf) == 1.0);
        REQUIRE(weibull2.cdf(-kInf) == 0.0);
        REQUIRE(burr11.cdf(kInf) == 1.0);
        REQUIRE_THROWS_AS(weibull2.cdf(std::nan("")), std::invalid_argument);
    }
}

TEST_CASE("beta cdf matches closed-form special cases", "[dist]") {
    const auto uniform = ParametricModel::beta(1.0, 1.0);
    const auto beta21 = ParametricModel::beta(2.0, 1.0);
    const auto beta12 = ParametricModel::beta(1.0, 2.0);
    const auto arcsine = ParametricModel::beta(0.5, 0.5);
    for (double x : {0.05, 0.25, 0.5, 0.8, 0.99}) {
        REQUIRE(uniform.cdf(x) == Approx(x).margin(1e-12));
        REQUIRE(beta21.cdf(x) == Approx(x * x).margin(1e-12));
        REQUIRE(beta12.cdf(x) == Approx(2.0 * x - x * x).margin(1e-12));
        REQUIRE(arcsine.cdf(x) == Approx(2.0 / M_PI * std::asin(std::sqrt(x))).margin(1e-12));
    }
}

TEST_CASE("quantiles are left-continuous generalized inverses", "[dist]") {
    const auto exponential = ParametricModel::unit_exponential();
    REQUIRE(exponential.quantile(1.0) == kInf);
    REQUIRE(exponential.quantile(0.0) == 0.0);

    const EmpiricalDist sample({1.0, 2.0, 3.0});
    REQUIRE(sample.quantile(0.5) == 2.0);  // ceil(3*0.5) = 2
    REQUIRE(sample.quantile(1.0 / 3.0) == 1.0);
    REQUIRE(sample.quantile(2.0 / 3.0) == 2.0);
    REQUIRE(sample.quantile(2.0 / 3.0 + 1e-6) == 3.0);
    REQUIRE(sample.quantile(1.0) == 3.0);

    SECTION("weibull shape 1 is the unit exponential") {
        const auto weibull1 = ParametricModel::weibull(1.0);
        for (double p : {0.0, 0.1, 0.37, 0.5, 0.9, 0.999}) {
            REQUIRE(weibull1.quantile(p) == Approx(exponential.quantile(p)).margin(1e-13));
        }
    }

    SECTION("burr closed form") {
        const auto burr = ParametricModel::burr(1.0, 1.0);
        // (1-p)^{-1} - 1 = p/(1-p)
        REQUIRE(burr.quantile(0.5) == Approx(1.0).margin(1e-13));
        REQUIRE(burr.quantile(1.0) == kInf);
    }

    SECTION("p outside [0,1] rejected") {
        REQUIRE_THROWS_AS(exponential.quantile(-0.1), std::invalid_argument);
        REQUIRE_THROWS_AS(sample.quantile(1.5), std::invalid_argument);
        REQUIRE_THROWS_AS(sample.quantile(std::nan("")), std::invalid_argument);
    }
}

TEST_CASE("galois pair between cdf and quantile", "[dist][property]") {
    std::vector<ParametricModel> models;
    models.push_back(ParametricModel::unit_exponential());
    models.push_back(ParametricModel::weibull(0.7));
    models.push_back(ParametricModel::weibull(2.5));
    models.push_back(ParametricModel::burr(1.0, 2.0));
    models.push_back(ParametricModel::beta(0.5, 2.0));
    models.push_back(ParametricModel::discrete_uniform({-1.0, 0.5, 2.0, 7.25}));
    for (const auto& model : models) {
        for (int i = 1; i < 40; ++i) {
            const double p = static_cast<double>(i) / 40.0;
            const double q = model.quantile(p);
            REQUIRE(model.cdf(q) >= p - 1e-10);
        }
    }
    // quantile(cdf(x)) <= x on support points
    const auto discrete = ParametricModel::discrete_uniform({-1.0, 0.5, 2.0, 7.25});
    for (double x : {-1.0, 0.5, 2.0, 7.25}) {
        REQUIRE(discrete.quantile(discrete.cdf(x)) <= x);
    }
    const EmpiricalDist sample({0.3, 0.9, 1.7, 1.7, 4.0});
    for (double x : sample.sorted()) {
        REQUIRE(sample.quantile(sample.cdf(x)) <= x);
        REQUIRE(sample.cdf(sample.quantile(sample.cdf(x))) >= sample.cdf(x));
    }
}

TEST_CASE("beta quantile/cdf round trip to 1e-10", "[dist][property]") {
    for (double a : {0.5, 1.0, 2.0}) {
        for (double b : {0.5, 1.0, 2.0}) {
            const auto model = ParametricModel::beta(a, b);
            for (int i = 1; i < 20; ++i) {
                const double p = static_cast<double>(i) / 20.0;
                REQUIRE(model.cdf(model.quantile(p)) == Approx(p).margin(1e-10));
            }
        }
    }
}

TEST_CASE("draw is deterministic and seed-sensitive", "[dist]") {
    const auto weibull = ParametricModel::weibull(0.8);
    const SeedSpec seed{42, 7};
    const auto first = draw(weibull, 1000, seed);
    const auto second = draw(weibull, 1000, seed);
    REQUIRE(first == second);

    const auto other_stream = draw(weibull, 1000, seed.stream(8));
    REQUIRE(first != other_stream);

    SECTION("degenerate support") {
        const auto point = ParametricModel::discrete_uniform({5.0});
        for (double v : draw(point, 10, seed)) {
            REQUIRE(v == 5.0);
        }
    }

    SECTION("empirical resampling draws sample values only") {
        const EmpiricalDist sample({1.0, 2.0, 3.0});
        for (double v : draw(sample, 200, seed)) {
            REQUIRE((v == 1.0 || v == 2.0 || v == 3.0));
        }
    }

    SECTION("exponential sample mean near 1 (3 sigma / sqrt(n))") {
        const auto values = draw(ParametricModel::unit_exponential(), 100000, SeedSpec{1234, 0});
        const EmpiricalDist dist(values);
        REQUIRE(std::fabs(dist.mean() - 1.0) < 0.02);
    }
}

TEST_CASE("distinct streams look independent", "[dist][property]") {
    RandomStream a(SeedSpec{99, 0});
    RandomStream b(SeedSpec{99, 1});
    const std::size_t n = 100000;
    double sa = 0.0, sb = 0.0, saa = 0.0, sbb = 0.0, sab = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double u = a.next_u01();
        const double v = b.next_u01();
        sa += u;
        sb += v;
        saa += u * u;
        sbb += v * v;
        sab += u * v;
    }
    const double m = static_cast<double>(n);
    const double cov = sab / m - (sa / m) * (sb / m);
    const double var_a = saa / m - (sa / m) * (sa / m);
    const double var_b = sbb / m - (sb / m) * (sb / m);
    REQUIRE(std::fabs(cov / std::sqrt(var_a * var_b)) < 0.01);
}

TEST_CASE("uniforms live in [0,1)", "[dist]") {
    RandomStream rng(SeedSpec{7, 3});
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.next_u01();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
    }
}

TEST_CASE("sample csv round trip", "[dist][io]") {
    const std::vector<double> values{0.1, -2.5, 3.0, 1e-17, 12345.6789};
    std::ostringstream out;
    write_sample_csv(out, values);
    std::istringstream in(out.str());
    REQUIRE(read_sample_csv(in) == values);

    SECTION("header enforced") {
        std::istringstream bad("y\n1\n");
        REQUIRE_THROWS_AS(read_sample_csv(bad), std::invalid_argument);
    }
    SECTION("bad value named by line") {
        std::istringstream bad("x\n1.0\noops\n");
        REQUIRE_THROWS_WITH(read_sample_csv(bad), Catch::Matchers::ContainsSubstring("line 3"));
    }
}

TEST_CASE("model json and cli forms", "[dist][io]") {
    const auto weibull = ParametricModel::parse("weibull:0.8");
    REQUIRE(weibull.family() == Family::Weibull);
    REQUIRE(weibull.shape_a() == 0.8);
    REQUIRE(weibull.to_json() == R"({"a":0.8,"family":"weibull"})");

    const auto round_trip = ParametricModel::from_json(weibull.to_json());
    REQUIRE(round_trip.family() == Family::Weibull);
    REQUIRE(round_trip.shape_a() == 0.8);

    REQUIRE(ParametricModel::parse("exponential").family() == Family::UnitExponential);
    REQUIRE(ParametricModel::parse("burr:1,2").shape_b() == 2.0);
    REQUIRE(ParametricModel::parse(R"({"family":"beta","a":0.5,"b":2})").shape_b() == 2.0);
    REQUIRE(ParametricModel::parse("discrete:1,2,3").support().size() == 3);

    SECTION("invalid specs rejected") {
        REQUIRE_THROWS_AS(ParametricModel::parse("gamma:1"), std::invalid_argument);
        REQUIRE_THROWS_AS(ParametricModel::parse("weibull:0"), std::invalid_argument);
        REQUIRE_THROWS_AS(ParametricModel::parse("weibull:1,2"), std::invalid_argument);
        REQUIRE_THROWS_AS(ParametricModel::from_json(R"({"family":"weibull","a":1,"c":2})"),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(ParametricModel::discrete_uniform({}), std::invalid_argument);
        REQUIRE_THROWS_AS(ParametricModel::discrete_uniform({1.0, 1.0}), std::invalid_argument);
    }
}

TEST_CASE("empirical distribution invariants", "[dist]") {
    const EmpiricalDist sample({2.0, 1.0, 2.0, 3.0});
    REQUIRE(sample.sorted() == std::vector<double>{1.0, 2.0, 2.0, 3.0});
    REQUIRE(sample.cdf(2.0) == 0.75);
    REQUIRE(sample.cdf(1.5) == 0.25);
    REQUIRE(sample.cdf(0.0) == 0.0);
    REQUIRE(sample.cdf(5.0) == 1.0);
    REQUIRE(sample.quantile(0.75) == 2.0);
    REQUIRE(sample.quantile(0.7500001) == 3.0);
    REQUIRE(sample.mean() == 2.0);

    REQUIRE_THROWS_AS(EmpiricalDist(std::vector<double>{}), std::invalid_argument);
    REQUIRE_THROWS_AS(EmpiricalDist({1.0, kInf}), std::invalid_argument);
}
