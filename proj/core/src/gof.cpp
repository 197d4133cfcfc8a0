#include "transorder/gof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "transorder/csv.hpp"
#include "transorder/parallel.hpp"

namespace transorder {

namespace {

void validate_spec(const TestSpec& spec) {
    if (!(spec.alpha > 0.0 && spec.alpha < 1.0)) {
        throw std::invalid_argument("test spec: alpha must lie in (0,1)");
    }
    if (spec.sims == 0) {
        throw std::invalid_argument("test spec: sims must be >= 1");
    }
    if (!(spec.nu >= 0.0 && spec.nu <= 1.0)) {
        throw std::invalid_argument("test spec: nu must lie in [0,1]");
    }
    if (spec.kind == TestKind::Convex && spec.nu != 0.0) {
        throw std::invalid_argument("test spec: nu applies to the star test only");
    }
}

double apply_k(KTransform k, const ParametricModel& g, double value) {
    return k == KTransform::ApplyG ? g.cdf(value) : value;
}

// sup over i in [i_lo, i_hi] of K(G^{-1}((i-1)/n)) - K(M(X_(i))). Each term
// is nonnegative in exact arithmetic (the minorant sits below the left-limit
// anchors), so the result is clamped at zero against rounding.
double sup_deviation(const EmpiricalDist& s, const ParametricModel& g, KTransform k,
                     const PiecewiseLinearFn& minorant, std::size_t i_lo, std::size_t i_hi) {
    const std::size_t n = s.size();
    const auto& xs = s.sorted();
    double best = 0.0;
    for (std::size_t i = i_lo; i <= i_hi; ++i) {
        const double p = static_cast<double>(i - 1) / static_cast<double>(n);
        // K = G collapses K(G^{-1}(p)) to p exactly
        const double lhs = k == KTransform::ApplyG ? p : g.quantile(p);
        const double rhs = apply_k(k, g, minorant(xs[i - 1]));
        best = std::max(best, lhs - rhs);
    }
    return best;
}

double statistic_for(const TestSpec& spec, const EmpiricalDist& s) {
    return spec.kind == TestKind::Convex ? stat_convex(s, spec.g, spec.k)
                                         : stat_star(s, spec.g, spec.k, spec.nu);
}

}  // namespace

double stat_convex(const EmpiricalDist& s, const ParametricModel& g, KTransform k) {
    const std::size_t n = s.size();
    if (n < 4) {
        throw std::invalid_argument("stat_convex: need n >= 4 for a testable index range");
    }
    const PiecewiseLinearFn minorant = gcm(transform_graph(s, g));
    return sup_deviation(s, g, k, minorant, 2, n - 1);
}

double stat_star(const EmpiricalDist& s, const ParametricModel& g, KTransform k, double nu) {
    if (!(nu >= 0.0 && nu <= 1.0)) {
        throw std::invalid_argument("stat_star: nu must lie in [0,1]");
    }
    const std::size_t n = s.size();
    // n_nu realizes X_(n_nu) = F_n^{-1}(1-nu) under the left-continuous quantile
    const std::size_t n_nu =
        std::min<std::size_t>(n, detail::ceil_index(static_cast<double>(n) * (1.0 - nu)));
    if (n_nu < 3) {
        throw std::invalid_argument("stat_star: restriction leaves no testable indices");
    }
    const PiecewiseLinearFn minorant = gsm(transform_graph_prefix(s, g, n_nu));
    return sup_deviation(s, g, k, minorant, 2, n_nu - 1);
}

std::vector<double> null_distribution(const TestSpec& spec, std::size_t n) {
    validate_spec(spec);
    const SeedSpec base = spec.seed.derive(
        (spec.kind == TestKind::Convex ? std::string("null:convex:n=") : "null:star:n=") +
        std::to_string(n));
    std::vector<double> values(spec.sims);
    parallel_for(spec.sims, spec.workers, [&](std::size_t r) {
        const EmpiricalDist sample(draw(spec.g, n, base.stream(r)));
        values[r] = statistic_for(spec, sample);
    });
    return values;
}

double critical_value(std::span<const double> null_values, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("critical_value: alpha must lie in (0,1)");
    }
    if (null_values.empty()) {
        throw std::invalid_argument("critical_value: empty null distribution");
    }
    std::vector<double> sorted(null_values.begin(), null_values.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t m = sorted.size();
    // walk distinct values upward; tail mass of sorted[k] is (m - first_k)/m
    for (std::size_t k = 0; k < m; ++k) {
        if (k > 0 && sorted[k] == sorted[k - 1]) continue;
        const double tail = static_cast<double>(m - k) / static_cast<double>(m);
        if (tail <= alpha) return sorted[k];
    }
    return std::numeric_limits<double>::infinity();
}

double p_value(std::span<const double> null_values, double statistic) {
    if (null_values.empty()) {
        throw std::invalid_argument("p_value: empty null distribution");
    }
    std::size_t count = 0;
    for (double v : null_values) {
        if (v >= statistic) ++count;
    }
    return static_cast<double>(count) / static_cast<double>(null_values.size());
}

std::string test_label(const TestSpec& spec) {
    std::string label = spec.kind == TestKind::Convex ? "convex[K=" : "star[K=";
    label += spec.k == KTransform::ApplyG ? "g" : "id";
    if (spec.kind == TestKind::Star) {
        label += ",nu=" + format_double(spec.nu);
    }
    label += "]";
    return label;
}

TestResult run_test(const EmpiricalDist& s, const TestSpec& spec) {
    validate_spec(spec);
    TestResult result;
    result.n = s.size();
    result.alpha = spec.alpha;
    result.sims = spec.sims;
    result.test = test_label(spec);
    result.statistic = statistic_for(spec, s);
    const std::vector<double> null = null_distribution(spec, s.size());
    result.critical_value = critical_value(null, spec.alpha);
    result.p_value = p_value(null, result.statistic);
    result.reject = result.statistic >= result.critical_value;
    return result;
}

IsotonicEstimate::IsotonicEstimate(const EmpiricalDist& s, const ParametricModel& g,
                                   TestKind kind)
    : g_(g),
      minorant_(kind == TestKind::Convex ? gcm(transform_graph(s, g))
                                         : gsm(transform_graph(s, g))) {}

double IsotonicEstimate::cdf(double x) const {
    if (std::isnan(x)) {
        throw std::invalid_argument("cdf: x is NaN");
    }
    if (x < minorant_.front_x()) return 0.0;
    if (x >= minorant_.back_x()) return 1.0;
    return g_.cdf(minorant_(x));
}

double IsotonicEstimate::quantile(double u) const {
    if (!(u >= 0.0 && u <= 1.0)) {
        throw std::invalid_argument("quantile: p must lie in [0,1]");
    }
    const double z = g_.quantile(u);
    if (z >= minorant_.back_y()) return minorant_.back_x();
    return minorant_.inverse_left(z);
}

IsotonicEstimate isotonic_estimate(const EmpiricalDist& s, const ParametricModel& g,
                                   TestKind kind) {
    return {s, g, kind};
}

std::vector<double> bootstrap_null(const EmpiricalDist& s, const TestSpec& spec) {
    validate_spec(spec);
    const IsotonicEstimate estimate(s, spec.g, spec.kind);
    const std::size_t n = s.size();
    const SeedSpec base = spec.seed.derive("boot:n=" + std::to_string(n));
    std::vector<double> values(spec.sims);
    parallel_for(spec.sims, spec.workers, [&](std::size_t r) {
        const EmpiricalDist resample(draw(estimate, n, base.stream(r)));
        values[r] = statistic_for(spec, resample);
    });
    return values;
}

double deshpande_j(const EmpiricalDist& s, double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("deshpande_j: p must lie in (0,1)");
    }
    const std::size_t n = s.size();
    if (n < 2) {
        throw std::invalid_argument("deshpande_j: need n >= 2");
    }
    if (!(s.min() > 0.0)) {
        throw std::domain_error("deshpande_j: sample must be strictly positive");
    }
    const auto& xs = s.sorted();
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && xs[i] > p * xs[j]) ++count;
        }
    }
    return static_cast<double>(count) / static_cast<double>(n * (n - 1));
}

TestResult deshpande_test(const EmpiricalDist& s, double p, double alpha, std::size_t sims,
                          SeedSpec seed, int workers) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("deshpande_test: alpha must lie in (0,1)");
    }
    if (sims == 0) {
        throw std::invalid_argument("deshpande_test: sims must be >= 1");
    }
    const std::size_t n = s.size();
    TestResult result;
    result.n = n;
    result.alpha = alpha;
    result.sims = sims;
    result.test = "deshpande[p=" + format_double(p) + "]";
    result.statistic = deshpande_j(s, p);
    const ParametricModel g = ParametricModel::unit_exponential();
    const SeedSpec base = seed.derive("null:jp:n=" + std::to_string(n));
    std::vector<double> null(sims);
    parallel_for(sims, workers, [&](std::size_t r) {
        const EmpiricalDist sample(draw(g, n, base.stream(r)));
        null[r] = deshpande_j(sample, p);
    });
    result.critical_value = critical_value(null, alpha);
    result.p_value = p_value(null, result.statistic);
    result.reject = result.statistic >= result.critical_value;
    return result;
}

}  // namespace transorder
