#pragma once

#include <cstddef>
#include <vector>

#include "transorder/dist.hpp"

namespace transorder {

// Breakpoint/value polyline. Evaluation interpolates linearly and is exact at
// breakpoints; evaluation outside [front_x, back_x] is an error (no
// extrapolation).
class PiecewiseLinearFn {
public:
    PiecewiseLinearFn(std::vector<double> xs, std::vector<double> ys);

    [[nodiscard]] double operator()(double x) const;

    // inf{x : f(x) >= y} for a nondecreasing polyline; flat segments invert
    // to their left endpoint. y above the range is an error.
    [[nodiscard]] double inverse_left(double y) const;

    [[nodiscard]] const std::vector<double>& xs() const noexcept { return xs_; }
    [[nodiscard]] const std::vector<double>& ys() const noexcept { return ys_; }
    [[nodiscard]] double front_x() const noexcept { return xs_.front(); }
    [[nodiscard]] double back_x() const noexcept { return xs_.back(); }
    [[nodiscard]] double back_y() const noexcept { return ys_.back(); }

private:
    std::vector<double> xs_, ys_;
};

// Left-limit vertices of the step function G^{-1} o F_n, anchored at the
// origin: (t_0, v_0) = (0, 0) and (t_i, v_i) = (X_(i), G^{-1}((i-1)/n)).
// Tied observations collapse to one abscissa keeping the smallest v, so t is
// strictly increasing and v nondecreasing.
struct TransformGraph {
    std::vector<double> t;
    std::vector<double> v;

    [[nodiscard]] std::size_t size() const noexcept { return t.size(); }
};

// Graph of the full sample. Requires strictly positive observations and a
// model with G(0) = 0.
TransformGraph transform_graph(const EmpiricalDist& s, const ParametricModel& g);

// Graph of the first m order statistics, with jump heights still taken from
// the full sample size n. This is the restricted graph used by the
// nu-truncated star statistic.
TransformGraph transform_graph_prefix(const EmpiricalDist& s, const ParametricModel& g,
                                      std::size_t m);

// Empirical cumulative hazard -ln(1 - F_n): the transform graph with G the
// unit exponential, v_i = -ln(1 - (i-1)/n). Always finite (never touches
// G^{-1}(1)).
TransformGraph empirical_hazard(const EmpiricalDist& s);

// Greatest convex minorant: the lower convex hull polyline of the anchors on
// [0, t_n]. Touches at least the first and last anchor and never exceeds any.
PiecewiseLinearFn gcm(const TransformGraph& g);

// Greatest star-shaped minorant, suffix-minimum ray construction: with
// a_i = v_i/t_i and alpha_i = min{a_j : j >= i}, the minorant is alpha_i x on
// (t_{i-1}, t_i]. The returned polyline carries the anchor values
// alpha_i t_i; between anchors it is the chord, which stays a minorant and
// still dominates the GCM. Requires t_i > 0 for i >= 1.
PiecewiseLinearFn gsm(const TransformGraph& g);

}  // namespace transorder
