#include "transorder/shape.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace transorder {

PiecewiseLinearFn::PiecewiseLinearFn(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.size() != ys_.size() || xs_.size() < 2) {
        throw std::invalid_argument("polyline: need matching xs/ys with at least 2 points");
    }
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        if (!std::isfinite(xs_[i]) || !std::isfinite(ys_[i])) {
            throw std::invalid_argument("polyline: points must be finite");
        }
        if (i > 0 && !(xs_[i] > xs_[i - 1])) {
            throw std::invalid_argument("polyline: breakpoints must be strictly increasing");
        }
    }
}

double PiecewiseLinearFn::operator()(double x) const {
    if (!(x >= xs_.front() && x <= xs_.back())) {
        throw std::domain_error("polyline: evaluation outside domain");
    }
    const auto it = std::lower_bound(xs_.begin(), xs_.end(), x);
    const std::size_t j = static_cast<std::size_t>(it - xs_.begin());
    if (j < xs_.size() && xs_[j] == x) return ys_[j];
    const double t = (x - xs_[j - 1]) / (xs_[j] - xs_[j - 1]);
    return ys_[j - 1] + t * (ys_[j] - ys_[j - 1]);
}

double PiecewiseLinearFn::inverse_left(double y) const {
    if (y <= ys_.front()) return xs_.front();
    if (y > ys_.back()) {
        throw std::domain_error("polyline: inverse above range");
    }
    const auto it = std::lower_bound(ys_.begin(), ys_.end(), y);
    const std::size_t j = static_cast<std::size_t>(it - ys_.begin());
    if (ys_[j] == y && j > 0 && ys_[j - 1] == y) {
        // defensive; lower_bound already lands on the first occurrence
        return xs_[j - 1];
    }
    if (ys_[j] == y) return xs_[j];
    // ys_[j-1] < y < ys_[j], rising segment
    const double t = (y - ys_[j - 1]) / (ys_[j] - ys_[j - 1]);
    return xs_[j - 1] + t * (xs_[j] - xs_[j - 1]);
}

TransformGraph transform_graph_prefix(const EmpiricalDist& s, const ParametricModel& g,
                                      std::size_t m) {
    const std::size_t n = s.size();
    if (m < 1 || m > n) {
        throw std::invalid_argument("transform_graph: prefix length out of range");
    }
    if (!(s.min() > 0.0)) {
        throw std::domain_error("transform_graph: observations must be strictly positive");
    }
    if (g.cdf(0.0) != 0.0) {
        throw std::domain_error("transform_graph: G(0) = 0 required");
    }
    const auto& xs = s.sorted();
    TransformGraph graph;
    graph.t.reserve(m + 1);
    graph.v.reserve(m + 1);
    graph.t.push_back(0.0);
    graph.v.push_back(0.0);
    for (std::size_t i = 1; i <= m; ++i) {
        // ties collapse to the first index of the block, the smallest left limit
        if (xs[i - 1] == graph.t.back()) continue;
        graph.t.push_back(xs[i - 1]);
        graph.v.push_back(g.quantile(static_cast<double>(i - 1) / static_cast<double>(n)));
    }
    return graph;
}

TransformGraph transform_graph(const EmpiricalDist& s, const ParametricModel& g) {
    return transform_graph_prefix(s, g, s.size());
}

TransformGraph empirical_hazard(const EmpiricalDist& s) {
    return transform_graph(s, ParametricModel::unit_exponential());
}

namespace {

void validate_graph(const TransformGraph& g, const char* op) {
    if (g.t.size() != g.v.size() || g.size() < 2) {
        throw std::invalid_argument(std::string(op) + ": need at least 2 anchor points");
    }
    if (g.t[0] != 0.0 || g.v[0] != 0.0) {
        throw std::domain_error(std::string(op) + ": graph must be anchored at the origin");
    }
    for (std::size_t i = 1; i < g.size(); ++i) {
        if (!(g.t[i] > g.t[i - 1])) {
            throw std::domain_error(std::string(op) +
                                    ": abscissas must be strictly increasing and positive");
        }
        if (!std::isfinite(g.v[i]) || g.v[i] < g.v[i - 1]) {
            throw std::domain_error(std::string(op) + ": values must be finite and nondecreasing");
        }
    }
}

}  // namespace

PiecewiseLinearFn gcm(const TransformGraph& g) {
    validate_graph(g, "gcm");
    const std::size_t n = g.size();
    // monotone-chain lower hull; cross > 0 keeps strictly increasing slopes
    std::vector<std::size_t> hull;
    hull.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        while (hull.size() >= 2) {
            const std::size_t a = hull[hull.size() - 2];
            const std::size_t b = hull[hull.size() - 1];
            const long double cross =
                (static_cast<long double>(g.t[b]) - g.t[a]) *
                    (static_cast<long double>(g.v[i]) - g.v[a]) -
                (static_cast<long double>(g.v[b]) - g.v[a]) *
                    (static_cast<long double>(g.t[i]) - g.t[a]);
            if (cross <= 0.0L) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(i);
    }
    std::vector<double> xs, ys;
    xs.reserve(hull.size());
    ys.reserve(hull.size());
    for (std::size_t idx : hull) {
        xs.push_back(g.t[idx]);
        ys.push_back(g.v[idx]);
    }
    return {std::move(xs), std::move(ys)};
}

PiecewiseLinearFn gsm(const TransformGraph& g) {
    validate_graph(g, "gsm");
    const std::size_t n = g.size();
    std::vector<double> alpha(n, 0.0);
    double running = g.v[n - 1] / g.t[n - 1];
    alpha[n - 1] = running;
    for (std::size_t i = n - 1; i-- > 1;) {
        running = std::min(running, g.v[i] / g.t[i]);
        alpha[i] = running;
    }
    std::vector<double> xs(n), ys(n);
    xs[0] = 0.0;
    ys[0] = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        xs[i] = g.t[i];
        ys[i] = alpha[i] * g.t[i];
    }
    return {std::move(xs), std::move(ys)};
}

}  // namespace transorder
