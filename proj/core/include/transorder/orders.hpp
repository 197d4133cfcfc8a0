#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "transorder/dist.hpp"

namespace transorder {

enum class OrderKind { UsualStochastic, ConvexTransform, Star, Superadditive, Dispersive, Lorenz };
enum class CheckMode { Exact, NecessaryOnly };

// Quantile pairs (y_i, x_i) = (G_n^{-1}(i/n), F_n^{-1}(i/n)), i = 1..n, both
// nondecreasing. On distinct y these are exactly the points a candidate
// transform must pass through.
struct TransformPoints {
    std::vector<double> y;
    std::vector<double> x;
};

struct OrderCheckReport {
    bool holds = false;
    CheckMode mode = CheckMode::Exact;
    // 1-based index of the point at which the defining inequality first fails
    // (into the tie-collapsed transform points; for Lorenz, into the union of
    // curve breakpoints). Present iff !holds and mode is Exact.
    std::optional<std::size_t> witness;
    double tolerance = 0.0;
};

inline constexpr double kDefaultOrderTol = 1e-9;

// Requires equal sample sizes; comparing quantile steps of unequal grids is
// not supported.
TransformPoints transform_points(const EmpiricalDist& f, const EmpiricalDist& g);

// Existence check for an extension of F_n^{-1}.G_n within the chosen class,
// on the tie-collapsed points (the x attached to a collapsed y is the largest
// matched quantile):
//   UsualStochastic  x_i >= y_i - tol
//   ConvexTransform  chord slopes nondecreasing within tol
//   Star             ratios x_i/y_i nondecreasing within tol (y_i > 0 required)
//   Dispersive       differences x_i - y_i nondecreasing within tol
//   Superadditive    necessary-only: x_k >= x_i + x_j - tol whenever
//                    y_i + y_j = y_k within tol. A pass is upgraded to an
//                    exact certificate when the Star check also passes
//                    (star-shaped with phi(0)=0 implies superadditive).
//   Lorenz           delegates to check_lorenz
OrderCheckReport check_extended_order(OrderKind kind, const EmpiricalDist& f,
                                      const EmpiricalDist& g, double tol = kDefaultOrderTol);

// F >=_L G: the Lorenz curve of F lies weakly below that of G. Both curves
// are polylines, so checking the union of their breakpoints is exact. Sample
// sizes may differ. Requires nonnegative samples with positive means.
OrderCheckReport check_lorenz(const EmpiricalDist& f, const EmpiricalDist& g,
                              double tol = kDefaultOrderTol);

// F^{-1}(G(x)) pointwise: the analytic transform for parametric pairs, used
// to verify order claims in closed form.
std::vector<double> compose_transform(const ParametricModel& f, const ParametricModel& g,
                                      std::span<const double> xs);

std::string_view to_string(OrderKind kind);
OrderKind order_kind_from_string(std::string_view name);
std::string_view to_string(CheckMode mode);

}  // namespace transorder
