#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "transorder/dist.hpp"
#include "transorder/shape.hpp"

namespace transorder {

enum class TestKind { Convex, Star };

// Strictly increasing transform K applied to both sides of the statistic.
// ApplyG means K = G, which turns the statistic into a Kolmogorov-Smirnov
// type distance.
enum class KTransform { Identity, ApplyG };

struct TestSpec {
    TestKind kind = TestKind::Convex;
    ParametricModel g = ParametricModel::unit_exponential();
    KTransform k = KTransform::ApplyG;
    double nu = 0.0;  // upper-tail truncation, Star only; 0 disables it
    double alpha = 0.1;
    std::size_t sims = 10000;
    SeedSpec seed;
    int workers = 1;
};

struct TestResult {
    double statistic = 0.0;
    double critical_value = 0.0;
    double p_value = 1.0;
    bool reject = false;  // statistic >= critical_value
    std::size_t n = 0;
    double alpha = 0.0;
    std::size_t sims = 0;
    std::string test;  // e.g. "star[K=g,nu=0.05]"
};

// sup over i = 2..n-1 of K(G^{-1}((i-1)/n)) - K(M(X_(i))), M the greatest
// convex minorant of the sample's transform graph. Nonnegative and, for
// G = unit exponential, scale invariant. Requires n >= 4.
double stat_convex(const EmpiricalDist& s, const ParametricModel& g, KTransform k);

// Star analogue with the greatest star-shaped minorant. nu truncates the
// graph to the first n_nu = ceil(n(1-nu)) order statistics BEFORE the
// suffix-minimum, and the sup runs over i = 2..n_nu-1; n_nu < 3 is an error.
// nu below 1/n leaves the statistic unrestricted.
double stat_star(const EmpiricalDist& s, const ParametricModel& g, KTransform k, double nu);

// Least-favorable null: spec.sims statistic values on independent size-n
// draws from G (Propositions: sampling from G stochastically dominates every
// H0 member). Deterministic in spec.seed; replicate r uses its own stream.
std::vector<double> null_distribution(const TestSpec& spec, std::size_t n);

// Smallest observed value c with (fraction of null values >= c) <= alpha;
// conservative under discreteness. +infinity when alpha < 1/m.
double critical_value(std::span<const double> null_values, double alpha);

// Fraction of null values >= statistic.
double p_value(std::span<const double> null_values, double statistic);

TestResult run_test(const EmpiricalDist& s, const TestSpec& spec);

// Isotonic estimate G o M with M the minorant polyline of the sample's
// transform graph (GCM for Convex, GSM for Star). A proper distribution on
// [0, X_(n)]: the mass G never reaches under M goes to an atom at X_(n).
class IsotonicEstimate {
public:
    IsotonicEstimate(const EmpiricalDist& s, const ParametricModel& g, TestKind kind);

    [[nodiscard]] double cdf(double x) const;
    // M^{-1}(G^{-1}(u)); flat segments of M invert to their left endpoint.
    [[nodiscard]] double quantile(double u) const;
    [[nodiscard]] const PiecewiseLinearFn& minorant() const noexcept { return minorant_; }

private:
    ParametricModel g_;
    PiecewiseLinearFn minorant_;
};

IsotonicEstimate isotonic_estimate(const EmpiricalDist& s, const ParametricModel& g,
                                   TestKind kind);

// Bootstrap null: statistic values on size-n resamples from the isotonic
// estimate of s. Under H0 this is stochastically dominated by the
// least-favorable null and sharpens the critical value.
std::vector<double> bootstrap_null(const EmpiricalDist& s, const TestSpec& spec);

// Deshpande's rank statistic J_p = [n(n-1)]^{-1} sum_{i != j} 1{X_i > p X_j}
// for the null F = exponential against IHRA alternatives; E[J_p] = 1/(1+p)
// under the null. Requires n >= 2 and a positive sample.
double deshpande_j(const EmpiricalDist& s, double p);

// Simple-null Monte Carlo test: simulate J_p on unit-exponential samples and
// reject for large values.
TestResult deshpande_test(const EmpiricalDist& s, double p, double alpha, std::size_t sims,
                          SeedSpec seed, int workers = 1);

std::string test_label(const TestSpec& spec);

}  // namespace transorder
