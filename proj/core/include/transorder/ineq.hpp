#pragma once

#include <functional>
#include <vector>

#include "transorder/dist.hpp"

namespace transorder {

// L(i/n) = sum_{j<=i} X_(j) / sum_j X_j, linear in between, L(0) = 0.
// Convex and nondecreasing with L(1) = 1 for nonnegative samples.
struct LorenzCurve {
    std::vector<double> p;      // 0, 1/n, ..., 1
    std::vector<double> value;  // L(p_i)

    [[nodiscard]] double at(double prob) const;
};

// Requires a nonnegative sample with positive mean.
LorenzCurve lorenz_curve(const EmpiricalDist& s);

// Distortion function: nondecreasing on [0,1] with H(0)=0, H(1)=1.
// PowerDual(k) is H(p) = 1-(1-p)^k, concave for k >= 1.
class DistortionFn {
public:
    static DistortionFn power_dual(double k);
    // Nondecreasing values on a strictly increasing grid spanning [0,1],
    // interpolated linearly.
    static DistortionFn tabulated(std::vector<double> grid, std::vector<double> values);

    [[nodiscard]] double operator()(double p) const;

private:
    DistortionFn() = default;
    bool power_ = false;
    double k_ = 1.0;
    std::vector<double> grid_, values_;
};

// Nondecreasing weight w on [0,1] with integral zero. The Gini preset is
// w(p) = 2p-1; RelativeRange puts -1/+1 atoms at the endpoints instead of a
// density, so it is handled in closed form.
class WeightFn {
public:
    static WeightFn gini();
    static WeightFn relative_range();
    // Polyline weight; validated nondecreasing with |integral| <= 1e-9.
    static WeightFn tabulated(std::vector<double> grid, std::vector<double> values);

    enum class Kind { Gini, RelativeRange, Tabulated };
    [[nodiscard]] Kind kind() const noexcept { return kind_; }

    // Exact integral of the weight polyline over [a,b] within [0,1].
    [[nodiscard]] double integral(double a, double b) const;

private:
    WeightFn() = default;
    Kind kind_ = Kind::Gini;
    std::vector<double> grid_, values_;
};

// (1/n) sum phi(X_i / mean). phi must be finite on the scaled sample; the
// error message names the first offending index (0-based into the sorted
// sample).
double transformed_expectation(const EmpiricalDist& s, const std::function<double(double)>& phi);

// Generalized entropy I_r with phi_r(x) = (x^r - 1)/(r(r-1)), phi_0 = -log x,
// phi_1 = x log x, so a constant sample scores zero and (2 I_2)^{1/2} is the
// divisor-n coefficient of variation. Branches are selected by exact equality
// on r; zeros in the sample are rejected for r < 0 and r in {0,1}.
double gen_entropy(const EmpiricalDist& s, double r);

enum class GiniMethod { LStat, Pairs, Lorenz };

// Gini coefficient by three algebraically equivalent routes: the L-statistic
// 1 - sum X_(i)(2n-2i+1)/(n^2 mean), the mean absolute difference over all
// ordered pairs, and 1 - 2 integral of the Lorenz polyline (trapezoid on the
// breakpoints is exact). They agree to 1e-12.
double gini(const EmpiricalDist& s, GiniMethod method = GiniMethod::LStat);

// Donaldson-Weymark generalized Gini: 1 - E_H with H = PowerDual(k), k >= 1.
double generalized_gini(const EmpiricalDist& s, double k);

// L-statistic E_H = (1/mean) sum X_(i) [H(i/n) - H((i-1)/n)].
double distorted_expectation(const EmpiricalDist& s, const DistortionFn& h);

// (1/mean) integral F^{-1}(p) w(p) dp, exact for the step quantile against
// the weight polyline; RelativeRange gives (X_(n) - X_(1))/mean.
double linear_measure(const EmpiricalDist& s, const WeightFn& w);

}  // namespace transorder
