#include "transorder/orders.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "transorder/ineq.hpp"

namespace transorder {

TransformPoints transform_points(const EmpiricalDist& f, const EmpiricalDist& g) {
    const std::size_t n = g.size();
    if (f.size() != n) {
        throw std::invalid_argument("transform_points: samples must have equal size");
    }
    TransformPoints pts;
    pts.y.reserve(n);
    pts.x.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const double p = static_cast<double>(i) / static_cast<double>(n);
        pts.y.push_back(g.quantile(p));
        pts.x.push_back(f.quantile(p));
    }
    return pts;
}

namespace {

// Collapse tied y values, keeping the last pair of each block. Since x is
// nondecreasing this attaches the largest matched quantile to a collapsed
// point, which is exactly F_n^{-1}(G_n(y)).
TransformPoints collapse_ties(const TransformPoints& pts) {
    TransformPoints out;
    const std::size_t n = pts.y.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (i + 1 < n && pts.y[i + 1] == pts.y[i]) continue;
        out.y.push_back(pts.y[i]);
        out.x.push_back(pts.x[i]);
    }
    return out;
}

OrderCheckReport exact_report(bool holds, std::optional<std::size_t> witness, double tol) {
    return {holds, CheckMode::Exact, holds ? std::nullopt : witness, tol};
}

// First 1-based index i >= 2 where seq[i] < seq[i-1] - tol, 0 if monotone.
std::size_t first_monotonicity_break(std::span<const double> seq, double tol) {
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (seq[i] < seq[i - 1] - tol) return i + 1;
    }
    return 0;
}

OrderCheckReport check_star_points(const TransformPoints& pts, double tol) {
    for (double y : pts.y) {
        if (!(y > 0.0)) {
            throw std::domain_error("check star: G-support must be strictly positive");
        }
    }
    std::vector<double> ratios(pts.y.size());
    for (std::size_t i = 0; i < pts.y.size(); ++i) ratios[i] = pts.x[i] / pts.y[i];
    const std::size_t bad = first_monotonicity_break(ratios, tol);
    return exact_report(bad == 0, bad, tol);
}

OrderCheckReport check_superadditive_points(const TransformPoints& pts, double tol) {
    const std::size_t m = pts.y.size();
    bool holds = true;
    for (std::size_t i = 0; i < m && holds; ++i) {
        for (std::size_t j = i; j < m && holds; ++j) {
            const double target = pts.y[i] + pts.y[j];
            // all k with |y_k - target| <= tol
            const auto lo = std::lower_bound(pts.y.begin(), pts.y.end(), target - tol);
            const auto hi = std::upper_bound(pts.y.begin(), pts.y.end(), target + tol);
            for (auto it = lo; it != hi; ++it) {
                const std::size_t k = static_cast<std::size_t>(it - pts.y.begin());
                if (pts.x[k] < pts.x[i] + pts.x[j] - tol) {
                    holds = false;
                    break;
                }
            }
        }
    }
    return {holds, CheckMode::NecessaryOnly, std::nullopt, tol};
}

}  // namespace

OrderCheckReport check_extended_order(OrderKind kind, const EmpiricalDist& f,
                                      const EmpiricalDist& g, double tol) {
    if (kind == OrderKind::Lorenz) {
        return check_lorenz(f, g, tol);
    }
    const TransformPoints pts = collapse_ties(transform_points(f, g));
    const std::size_t m = pts.y.size();
    switch (kind) {
        case OrderKind::UsualStochastic: {
            for (std::size_t i = 0; i < m; ++i) {
                if (pts.x[i] < pts.y[i] - tol) {
                    return exact_report(false, i + 1, tol);
                }
            }
            return exact_report(true, std::nullopt, tol);
        }
        case OrderKind::ConvexTransform: {
            std::vector<double> slopes;
            slopes.reserve(m > 0 ? m - 1 : 0);
            for (std::size_t i = 1; i < m; ++i) {
                slopes.push_back((pts.x[i] - pts.x[i - 1]) / (pts.y[i] - pts.y[i - 1]));
            }
            const std::size_t bad = first_monotonicity_break(slopes, tol);
            // slope k is the chord ending at point k+1
            return exact_report(bad == 0, bad == 0 ? std::nullopt : std::optional(bad + 1), tol);
        }
        case OrderKind::Star:
            return check_star_points(pts, tol);
        case OrderKind::Dispersive: {
            std::vector<double> diffs(m);
            for (std::size_t i = 0; i < m; ++i) diffs[i] = pts.x[i] - pts.y[i];
            const std::size_t bad = first_monotonicity_break(diffs, tol);
            return exact_report(bad == 0, bad, tol);
        }
        case OrderKind::Superadditive: {
            OrderCheckReport rep = check_superadditive_points(pts, tol);
            if (rep.holds && std::all_of(pts.y.begin(), pts.y.end(),
                                         [](double y) { return y > 0.0; })) {
                // star pass certifies existence of a superadditive extension
                if (check_star_points(pts, tol).holds) {
                    rep.mode = CheckMode::Exact;
                }
            }
            return rep;
        }
        case OrderKind::Lorenz:
            break;  // handled above
    }
    throw std::logic_error("check_extended_order: unreachable");
}

OrderCheckReport check_lorenz(const EmpiricalDist& f, const EmpiricalDist& g, double tol) {
    const LorenzCurve lf = lorenz_curve(f);
    const LorenzCurve lg = lorenz_curve(g);
    std::vector<double> grid;
    grid.reserve(lf.p.size() + lg.p.size());
    grid.insert(grid.end(), lf.p.begin(), lf.p.end());
    grid.insert(grid.end(), lg.p.begin(), lg.p.end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (lf.at(grid[i]) > lg.at(grid[i]) + tol) {
            return {false, CheckMode::Exact, i + 1, tol};
        }
    }
    return {true, CheckMode::Exact, std::nullopt, tol};
}

std::vector<double> compose_transform(const ParametricModel& f, const ParametricModel& g,
                                      std::span<const double> xs) {
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs) {
        out.push_back(f.quantile(g.cdf(x)));
    }
    return out;
}

std::string_view to_string(OrderKind kind) {
    switch (kind) {
        case OrderKind::UsualStochastic: return "stochastic";
        case OrderKind::ConvexTransform: return "convex";
        case OrderKind::Star: return "star";
        case OrderKind::Superadditive: return "superadditive";
        case OrderKind::Dispersive: return "dispersive";
        case OrderKind::Lorenz: return "lorenz";
    }
    return {};
}

OrderKind order_kind_from_string(std::string_view name) {
    if (name == "stochastic") return OrderKind::UsualStochastic;
    if (name == "convex") return OrderKind::ConvexTransform;
    if (name == "star") return OrderKind::Star;
    if (name == "superadditive") return OrderKind::Superadditive;
    if (name == "dispersive") return OrderKind::Dispersive;
    if (name == "lorenz") return OrderKind::Lorenz;
    throw std::invalid_argument("unknown order kind \"" + std::string(name) + "\"");
}

std::string_view to_string(CheckMode mode) {
    return mode == CheckMode::Exact ? "exact" : "necessary-only";
}

}  // namespace transorder
