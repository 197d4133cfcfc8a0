#include "transorder/ineq.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace transorder {

namespace {

void require_nonnegative(const EmpiricalDist& s, const char* op) {
    if (s.min() < 0.0) {
        throw std::domain_error(std::string(op) + ": sample must be nonnegative");
    }
}

void require_positive_mean(const EmpiricalDist& s, const char* op) {
    if (!(s.mean() > 0.0)) {
        throw std::domain_error(std::string(op) + ": sample mean must be positive");
    }
}

double interpolate(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
    const auto it = std::lower_bound(xs.begin(), xs.end(), x);
    if (it == xs.end()) return ys.back();
    const std::size_t j = static_cast<std::size_t>(it - xs.begin());
    if (xs[j] == x || j == 0) return ys[j];
    const double t = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
    return ys[j - 1] + t * (ys[j] - ys[j - 1]);
}

void validate_polyline_01(const std::vector<double>& grid, const std::vector<double>& values,
                          const char* what) {
    if (grid.size() != values.size() || grid.size() < 2) {
        throw std::invalid_argument(std::string(what) + ": grid and values must match, size >= 2");
    }
    if (grid.front() != 0.0 || grid.back() != 1.0) {
        throw std::invalid_argument(std::string(what) + ": grid must span [0,1]");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i]) || !std::isfinite(values[i])) {
            throw std::invalid_argument(std::string(what) + ": entries must be finite");
        }
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            throw std::invalid_argument(std::string(what) + ": grid must be strictly increasing");
        }
        if (i > 0 && values[i] < values[i - 1]) {
            throw std::invalid_argument(std::string(what) + ": values must be nondecreasing");
        }
    }
}

// Exact integral of a polyline (grid, values) over [a,b] within [0,1].
double polyline_integral(const std::vector<double>& grid, const std::vector<double>& values,
                         double a, double b) {
    long double acc = 0.0L;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double lo = std::max(a, grid[i - 1]);
        const double hi = std::min(b, grid[i]);
        if (hi <= lo) continue;
        const double vlo = interpolate(grid, values, lo);
        const double vhi = interpolate(grid, values, hi);
        acc += 0.5L * (static_cast<long double>(vlo) + vhi) * (hi - lo);
    }
    return static_cast<double>(acc);
}

}  // namespace

double LorenzCurve::at(double prob) const {
    if (!(prob >= 0.0 && prob <= 1.0)) {
        throw std::invalid_argument("lorenz: p must lie in [0,1]");
    }
    return interpolate(p, value, prob);
}

LorenzCurve lorenz_curve(const EmpiricalDist& s) {
    require_nonnegative(s, "lorenz_curve");
    require_positive_mean(s, "lorenz_curve");
    const auto& xs = s.sorted();
    const std::size_t n = xs.size();
    long double total = 0.0L;
    for (double v : xs) total += v;
    LorenzCurve curve;
    curve.p.resize(n + 1);
    curve.value.resize(n + 1);
    curve.p[0] = 0.0;
    curve.value[0] = 0.0;
    long double cum = 0.0L;
    for (std::size_t i = 1; i <= n; ++i) {
        cum += xs[i - 1];
        curve.p[i] = static_cast<double>(i) / static_cast<double>(n);
        curve.value[i] = static_cast<double>(cum / total);
    }
    return curve;
}

DistortionFn DistortionFn::power_dual(double k) {
    if (!(std::isfinite(k) && k >= 1.0)) {
        throw std::invalid_argument("distortion: power_dual needs k >= 1");
    }
    DistortionFn h;
    h.power_ = true;
    h.k_ = k;
    return h;
}

DistortionFn DistortionFn::tabulated(std::vector<double> grid, std::vector<double> values) {
    validate_polyline_01(grid, values, "distortion");
    if (values.front() != 0.0 || values.back() != 1.0) {
        throw std::invalid_argument("distortion: H(0)=0 and H(1)=1 required");
    }
    DistortionFn h;
    h.grid_ = std::move(grid);
    h.values_ = std::move(values);
    return h;
}

double DistortionFn::operator()(double p) const {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("distortion: p must lie in [0,1]");
    }
    if (power_) {
        return 1.0 - std::pow(1.0 - p, k_);
    }
    return interpolate(grid_, values_, p);
}

WeightFn WeightFn::gini() {
    WeightFn w;
    w.kind_ = Kind::Gini;
    return w;
}

WeightFn WeightFn::relative_range() {
    WeightFn w;
    w.kind_ = Kind::RelativeRange;
    return w;
}

WeightFn WeightFn::tabulated(std::vector<double> grid, std::vector<double> values) {
    validate_polyline_01(grid, values, "weight");
    WeightFn w;
    w.kind_ = Kind::Tabulated;
    w.grid_ = std::move(grid);
    w.values_ = std::move(values);
    if (std::fabs(polyline_integral(w.grid_, w.values_, 0.0, 1.0)) > 1e-9) {
        throw std::invalid_argument("weight: integral over [0,1] must be zero");
    }
    return w;
}

double WeightFn::integral(double a, double b) const {
    switch (kind_) {
        case Kind::Gini:
            // integral of 2p-1 is p^2-p
            return (b * b - b) - (a * a - a);
        case Kind::RelativeRange:
            throw std::logic_error("weight: relative range has endpoint atoms, not a density");
        case Kind::Tabulated:
            return polyline_integral(grid_, values_, a, b);
    }
    throw std::logic_error("weight: unreachable");
}

double transformed_expectation(const EmpiricalDist& s,
                               const std::function<double(double)>& phi) {
    require_positive_mean(s, "transformed_expectation");
    const auto& xs = s.sorted();
    const double mean = s.mean();
    long double acc = 0.0L;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double v = phi(xs[i] / mean);
        if (!std::isfinite(v)) {
            throw std::domain_error("transformed_expectation: phi not finite at index " +
                                    std::to_string(i) + " (value " + std::to_string(xs[i]) + ")");
        }
        acc += v;
    }
    return static_cast<double>(acc / static_cast<long double>(xs.size()));
}

double gen_entropy(const EmpiricalDist& s, double r) {
    require_nonnegative(s, "gen_entropy");
    require_positive_mean(s, "gen_entropy");
    const bool needs_positive = (r < 0.0) || r == 0.0 || r == 1.0;
    const auto& xs = s.sorted();
    if (needs_positive && !(xs.front() > 0.0)) {
        const std::size_t bad =
            static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), 0.0) - xs.begin());
        throw std::domain_error("gen_entropy: nonpositive value at index " + std::to_string(bad) +
                                " not allowed for r=" + std::to_string(r));
    }
    const double mean = s.mean();
    const std::size_t n = xs.size();
    long double acc = 0.0L;
    if (r == 0.0) {
        for (double v : xs) acc += std::log(mean / v);
        return static_cast<double>(acc / static_cast<long double>(n));
    }
    if (r == 1.0) {
        for (double v : xs) {
            const double z = v / mean;
            acc += z * std::log(z);
        }
        return static_cast<double>(acc / static_cast<long double>(n));
    }
    // centered so that a constant sample scores zero and 2 I_2 = CV_n^2
    for (double v : xs) acc += std::pow(v / mean, r) - 1.0;
    return static_cast<double>(acc / (r * (r - 1.0) * static_cast<long double>(n)));
}

double distorted_expectation(const EmpiricalDist& s, const DistortionFn& h) {
    require_nonnegative(s, "distorted_expectation");
    require_positive_mean(s, "distorted_expectation");
    const auto& xs = s.sorted();
    const std::size_t n = xs.size();
    long double acc = 0.0L;
    double h_prev = h(0.0);
    for (std::size_t i = 1; i <= n; ++i) {
        const double h_cur = h(static_cast<double>(i) / static_cast<double>(n));
        acc += static_cast<long double>(xs[i - 1]) * (h_cur - h_prev);
        h_prev = h_cur;
    }
    return static_cast<double>(acc / static_cast<long double>(s.mean()));
}

double gini(const EmpiricalDist& s, GiniMethod method) {
    require_nonnegative(s, "gini");
    require_positive_mean(s, "gini");
    const auto& xs = s.sorted();
    const std::size_t n = xs.size();
    long double total = 0.0L;
    for (double v : xs) total += v;
    switch (method) {
        case GiniMethod::LStat: {
            long double acc = 0.0L;
            for (std::size_t i = 1; i <= n; ++i) {
                acc += static_cast<long double>(xs[i - 1]) *
                       static_cast<long double>(2 * (n - i) + 1);
            }
            return static_cast<double>(1.0L - acc / (static_cast<long double>(n) * total));
        }
        case GiniMethod::Pairs: {
            long double acc = 0.0L;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    acc += xs[j] - xs[i];
                }
            }
            // sum over ordered pairs is twice the i<j sum
            return static_cast<double>(acc / (static_cast<long double>(n) * total));
        }
        case GiniMethod::Lorenz: {
            const LorenzCurve curve = lorenz_curve(s);
            long double integral = 0.0L;
            for (std::size_t i = 1; i < curve.p.size(); ++i) {
                integral += 0.5L *
                            (static_cast<long double>(curve.value[i - 1]) + curve.value[i]) /
                            static_cast<long double>(n);
            }
            return static_cast<double>(1.0L - 2.0L * integral);
        }
    }
    throw std::logic_error("gini: unreachable");
}

double generalized_gini(const EmpiricalDist& s, double k) {
    if (!(k >= 1.0)) {
        throw std::invalid_argument("generalized_gini: k must be >= 1 (concave distortion)");
    }
    return 1.0 - distorted_expectation(s, DistortionFn::power_dual(k));
}

double linear_measure(const EmpiricalDist& s, const WeightFn& w) {
    require_nonnegative(s, "linear_measure");
    require_positive_mean(s, "linear_measure");
    const auto& xs = s.sorted();
    const std::size_t n = xs.size();
    if (w.kind() == WeightFn::Kind::RelativeRange) {
        return (xs.back() - xs.front()) / s.mean();
    }
    long double acc = 0.0L;
    for (std::size_t i = 1; i <= n; ++i) {
        const double a = static_cast<double>(i - 1) / static_cast<double>(n);
        const double b = static_cast<double>(i) / static_cast<double>(n);
        acc += static_cast<long double>(xs[i - 1]) * w.integral(a, b);
    }
    return static_cast<double>(acc / static_cast<long double>(s.mean()));
}

}  // namespace transorder
