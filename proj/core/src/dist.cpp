#include "transorder/dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "transorder/csv.hpp"

namespace transorder {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_finite_shape(double v, const char* name) {
    if (!(std::isfinite(v) && v > 0.0)) {
        throw std::invalid_argument(std::string("model: shape parameter ") + name +
                                    " must be finite and > 0");
    }
}

}  // namespace

namespace detail {

std::size_t ceil_index(double t) {
    const double c = std::ceil(t - 1e-9);
    return c <= 0.0 ? 0 : static_cast<std::size_t>(c);
}

}  // namespace detail

ParametricModel::ParametricModel(Family f, double a, double b, std::vector<double> support)
    : family_(f), a_(a), b_(b), support_(std::move(support)) {}

ParametricModel ParametricModel::unit_exponential() {
    return {Family::UnitExponential, 0.0, 0.0, {}};
}

ParametricModel ParametricModel::weibull(double shape) {
    require_finite_shape(shape, "a");
    return {Family::Weibull, shape, 0.0, {}};
}

ParametricModel ParametricModel::beta(double a, double b) {
    require_finite_shape(a, "a");
    require_finite_shape(b, "b");
    return {Family::Beta, a, b, {}};
}

ParametricModel ParametricModel::burr(double a, double b) {
    require_finite_shape(a, "a");
    require_finite_shape(b, "b");
    return {Family::Burr, a, b, {}};
}

ParametricModel ParametricModel::discrete_uniform(std::vector<double> support) {
    if (support.empty()) {
        throw std::invalid_argument("discrete_uniform: support must be nonempty");
    }
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (!std::isfinite(support[i])) {
            throw std::invalid_argument("discrete_uniform: support values must be finite");
        }
        if (i > 0 && !(support[i - 1] < support[i])) {
            throw std::invalid_argument("discrete_uniform: support must be strictly sorted");
        }
    }
    return {Family::DiscreteUniform, 0.0, 0.0, std::move(support)};
}

double ParametricModel::cdf(double x) const {
    if (std::isnan(x)) {
        throw std::invalid_argument("cdf: x is NaN");
    }
    switch (family_) {
        case Family::UnitExponential:
            return x <= 0.0 ? 0.0 : -std::expm1(-x);
        case Family::Weibull:
            return x <= 0.0 ? 0.0 : -std::expm1(-std::pow(x, a_));
        case Family::Burr:
            return x <= 0.0 ? 0.0 : 1.0 - std::pow(1.0 + std::pow(x, b_), -a_);
        case Family::Beta:
            if (x <= 0.0) return 0.0;
            if (x >= 1.0) return 1.0;
            return detail::reg_inc_beta(a_, b_, x);
        case Family::DiscreteUniform: {
            const auto it = std::upper_bound(support_.begin(), support_.end(), x);
            return static_cast<double>(it - support_.begin()) /
                   static_cast<double>(support_.size());
        }
    }
    throw std::logic_error("cdf: unreachable");
}

double ParametricModel::quantile(double p) const {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("quantile: p must lie in [0,1]");
    }
    switch (family_) {
        case Family::UnitExponential:
            return -std::log1p(-p);
        case Family::Weibull:
            return std::pow(-std::log1p(-p), 1.0 / a_);
        case Family::Burr:
            return p == 1.0 ? kInf : std::pow(std::pow(1.0 - p, -1.0 / a_) - 1.0, 1.0 / b_);
        case Family::Beta: {
            if (p == 0.0) return 0.0;
            if (p == 1.0) return 1.0;
            double lo = 0.0;
            double hi = 1.0;
            // cdf is continuous and strictly increasing on [0,1]; keep the
            // bracket cdf(lo) < p <= cdf(hi) and return its upper end.
            for (int iter = 0; iter < 200 && hi - lo > 1e-15; ++iter) {
                const double mid = 0.5 * (lo + hi);
                if (cdf(mid) >= p) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            return hi;
        }
        case Family::DiscreteUniform: {
            const std::size_t n = support_.size();
            std::size_t k = detail::ceil_index(static_cast<double>(n) * p);
            k = std::clamp<std::size_t>(k, 1, n);
            return support_[k - 1];
        }
    }
    throw std::logic_error("quantile: unreachable");
}

std::string ParametricModel::family_name() const {
    switch (family_) {
        case Family::UnitExponential: return "exponential";
        case Family::Weibull: return "weibull";
        case Family::Beta: return "beta";
        case Family::Burr: return "burr";
        case Family::DiscreteUniform: return "discrete_uniform";
    }
    return {};
}

std::string ParametricModel::params_string() const {
    switch (family_) {
        case Family::UnitExponential:
            return {};
        case Family::Weibull:
            return "a=" + format_double(a_);
        case Family::Beta:
        case Family::Burr:
            return "a=" + format_double(a_) + ";b=" + format_double(b_);
        case Family::DiscreteUniform: {
            std::string s = "support=";
            for (std::size_t i = 0; i < support_.size(); ++i) {
                if (i > 0) s += ';';
                s += format_double(support_[i]);
            }
            return s;
        }
    }
    return {};
}

std::string ParametricModel::describe() const {
    const std::string params = params_string();
    return params.empty() ? family_name() : family_name() + "(" + params + ")";
}

std::string ParametricModel::to_json() const {
    nlohmann::json j;
    j["family"] = family_name();
    switch (family_) {
        case Family::UnitExponential:
            break;
        case Family::Weibull:
            j["a"] = a_;
            break;
        case Family::Beta:
        case Family::Burr:
            j["a"] = a_;
            j["b"] = b_;
            break;
        case Family::DiscreteUniform:
            j["support"] = support_;
            break;
    }
    return j.dump();
}

namespace {

ParametricModel model_from_json_obj(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
        throw std::invalid_argument("model: expected an object with a \"family\" string");
    }
    const std::string family = j.at("family").get<std::string>();
    auto expect_keys = [&](std::initializer_list<const char*> allowed) {
        for (const auto& item : j.items()) {
            if (std::none_of(allowed.begin(), allowed.end(),
                             [&](const char* k) { return item.key() == k; })) {
                throw std::invalid_argument("model: unknown key \"" + item.key() + "\" for family " +
                                            family);
            }
        }
    };
    auto num = [&](const char* key) {
        if (!j.contains(key) || !j.at(key).is_number()) {
            throw std::invalid_argument(std::string("model: missing numeric \"") + key +
                                        "\" for family " + family);
        }
        return j.at(key).get<double>();
    };
    if (family == "exponential" || family == "unit_exponential") {
        expect_keys({"family"});
        return ParametricModel::unit_exponential();
    }
    if (family == "weibull") {
        expect_keys({"family", "a"});
        return ParametricModel::weibull(num("a"));
    }
    if (family == "beta") {
        expect_keys({"family", "a", "b"});
        return ParametricModel::beta(num("a"), num("b"));
    }
    if (family == "burr") {
        expect_keys({"family", "a", "b"});
        return ParametricModel::burr(num("a"), num("b"));
    }
    if (family == "discrete_uniform") {
        expect_keys({"family", "support"});
        if (!j.contains("support") || !j.at("support").is_array()) {
            throw std::invalid_argument("model: discrete_uniform needs a \"support\" array");
        }
        return ParametricModel::discrete_uniform(j.at("support").get<std::vector<double>>());
    }
    throw std::invalid_argument("model: unknown family \"" + family + "\"");
}

}  // namespace

ParametricModel ParametricModel::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("model: invalid JSON: ") + e.what());
    }
    return model_from_json_obj(j);
}

ParametricModel ParametricModel::parse(std::string_view text) {
    if (!text.empty() && text.front() == '{') {
        return from_json(text);
    }
    const auto colon = text.find(':');
    const std::string head(text.substr(0, colon));
    std::vector<double> params;
    if (colon != std::string_view::npos) {
        std::string rest(text.substr(colon + 1));
        std::istringstream in(rest);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            std::size_t pos = 0;
            double v = 0.0;
            try {
                v = std::stod(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("model: bad parameter \"" + tok + "\" in \"" +
                                            std::string(text) + "\"");
            }
            if (pos != tok.size()) {
                throw std::invalid_argument("model: bad parameter \"" + tok + "\" in \"" +
                                            std::string(text) + "\"");
            }
            params.push_back(v);
        }
    }
    auto arity = [&](std::size_t want) {
        if (params.size() != want) {
            throw std::invalid_argument("model: \"" + head + "\" takes " + std::to_string(want) +
                                        " parameter(s)");
        }
    };
    if (head == "exponential" || head == "exp") {
        arity(0);
        return unit_exponential();
    }
    if (head == "weibull") {
        arity(1);
        return weibull(params[0]);
    }
    if (head == "beta") {
        arity(2);
        return beta(params[0], params[1]);
    }
    if (head == "burr") {
        arity(2);
        return burr(params[0], params[1]);
    }
    if (head == "discrete") {
        if (params.empty()) {
            throw std::invalid_argument("model: discrete needs at least one support point");
        }
        return discrete_uniform(std::move(params));
    }
    throw std::invalid_argument("model: unknown family \"" + head + "\"");
}

EmpiricalDist::EmpiricalDist(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("empirical: sample must be nonempty");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("empirical: sample values must be finite");
        }
    }
    std::sort(values_.begin(), values_.end());
    long double acc = 0.0L;
    for (double v : values_) acc += v;
    mean_ = static_cast<double>(acc / static_cast<long double>(values_.size()));
}

double EmpiricalDist::cdf(double x) const {
    if (std::isnan(x)) {
        throw std::invalid_argument("cdf: x is NaN");
    }
    const auto it = std::upper_bound(values_.begin(), values_.end(), x);
    return static_cast<double>(it - values_.begin()) / static_cast<double>(values_.size());
}

double EmpiricalDist::quantile(double p) const {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("quantile: p must lie in [0,1]");
    }
    const std::size_t n = values_.size();
    std::size_t k = detail::ceil_index(static_cast<double>(n) * p);
    k = std::clamp<std::size_t>(k, 1, n);
    return values_[k - 1];
}

}  // namespace transorder
