#include "transorder/mc.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "transorder/csv.hpp"
#include "transorder/ineq.hpp"
#include "transorder/orders.hpp"
#include "transorder/parallel.hpp"

namespace transorder {

namespace {

double phi_preset(const std::string& name, double x) {
    if (name == "square") return x * x;
    if (name == "abs_dev") return std::fabs(x - 1.0);
    if (name == "fourth") return x * x * x * x;
    throw std::invalid_argument("functional: unknown phi preset \"" + name + "\"");
}

double parse_number(std::string_view text, const char* what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(std::string(text), &pos);
        if (pos == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("functional: bad ") + what + " \"" +
                                std::string(text) + "\"");
}

}  // namespace

FunctionalSpec FunctionalSpec::parse(std::string_view text) {
    FunctionalSpec spec;
    const auto colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    const std::string_view arg =
        colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    if (head == "gini") {
        spec.kind = Functional::Gini;
    } else if (head == "entropy") {
        spec.kind = Functional::GenEntropy;
        spec.param = parse_number(arg, "entropy order r");
    } else if (head == "ggini") {
        spec.kind = Functional::GenGini;
        spec.param = parse_number(arg, "generalized-gini k");
    } else if (head == "relrange") {
        spec.kind = Functional::RelRange;
    } else if (head == "relmad") {
        spec.kind = Functional::RelMAD;
    } else if (head == "phi") {
        spec.kind = Functional::CustomPhi;
        spec.phi_name = std::string(arg);
        phi_preset(spec.phi_name, 1.0);  // validate the name now
    } else {
        throw std::invalid_argument("functional: unknown measure \"" + std::string(text) + "\"");
    }
    return spec;
}

std::string FunctionalSpec::to_string() const {
    switch (kind) {
        case Functional::Gini: return "gini";
        case Functional::GenEntropy: return "entropy:" + format_double(param);
        case Functional::GenGini: return "ggini:" + format_double(param);
        case Functional::RelRange: return "relrange";
        case Functional::RelMAD: return "relmad";
        case Functional::CustomPhi: return "phi:" + phi_name;
    }
    return {};
}

double evaluate_functional(const FunctionalSpec& spec, const EmpiricalDist& s) {
    switch (spec.kind) {
        case Functional::Gini:
            return gini(s, GiniMethod::LStat);
        case Functional::GenEntropy:
            return gen_entropy(s, spec.param);
        case Functional::GenGini:
            return generalized_gini(s, spec.param);
        case Functional::RelRange:
            return linear_measure(s, WeightFn::relative_range());
        case Functional::RelMAD:
            return transformed_expectation(s, [](double x) { return std::fabs(x - 1.0); });
        case Functional::CustomPhi:
            return transformed_expectation(
                s, [&spec](double x) { return phi_preset(spec.phi_name, x); });
    }
    throw std::logic_error("functional: unreachable");
}

namespace {

std::vector<double> auto_grid(const std::vector<double>& a, const std::vector<double>& b,
                              std::size_t points) {
    double lo = a.front();
    double hi = a.front();
    for (double v : a) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    for (double v : b) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (!(hi > lo)) return {lo};
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    }
    return grid;
}

// #{v <= x} via a sorted copy, one binary search per grid point.
std::vector<std::size_t> counts_at(const std::vector<double>& sorted_values,
                                   const std::vector<double>& grid) {
    std::vector<std::size_t> counts(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        counts[i] = static_cast<std::size_t>(
            std::upper_bound(sorted_values.begin(), sorted_values.end(), grid[i]) -
            sorted_values.begin());
    }
    return counts;
}

}  // namespace

DominanceReport dominance_experiment(const DominanceSpec& spec) {
    if (spec.reps == 0) {
        throw std::invalid_argument("dominance: reps must be >= 1");
    }
    if (!std::is_sorted(spec.grid.begin(), spec.grid.end())) {
        throw std::invalid_argument("dominance: grid must be sorted");
    }
    const SeedSpec seed_f = spec.seed.derive("dominance:f");
    const SeedSpec seed_g = spec.seed.derive("dominance:g");
    std::vector<double> stat_f(spec.reps);
    std::vector<double> stat_g(spec.reps);
    parallel_for(spec.reps, spec.workers, [&](std::size_t r) {
        stat_f[r] = evaluate_functional(spec.functional,
                                        EmpiricalDist(draw(spec.model_f, spec.n, seed_f.stream(r))));
        stat_g[r] = evaluate_functional(spec.functional,
                                        EmpiricalDist(draw(spec.model_g, spec.n, seed_g.stream(r))));
    });

    DominanceReport report;
    report.grid = spec.grid.empty() ? auto_grid(stat_f, stat_g, 512) : spec.grid;
    std::sort(stat_f.begin(), stat_f.end());
    std::sort(stat_g.begin(), stat_g.end());
    const auto counts_f = counts_at(stat_f, report.grid);
    const auto counts_g = counts_at(stat_g, report.grid);
    const double m = static_cast<double>(spec.reps);
    report.cdf_f.resize(report.grid.size());
    report.cdf_g.resize(report.grid.size());
    report.stderr_.resize(report.grid.size());
    bool above = false;
    bool below = false;
    for (std::size_t i = 0; i < report.grid.size(); ++i) {
        const double pf = static_cast<double>(counts_f[i]) / m;
        const double pg = static_cast<double>(counts_g[i]) / m;
        report.cdf_f[i] = pf;
        report.cdf_g[i] = pg;
        const double se = std::sqrt((pf * (1.0 - pf) + pg * (1.0 - pg)) / m);
        report.stderr_[i] = se;
        const double diff = pf - pg;
        report.max_violation = std::max(report.max_violation, diff);
        if (diff > 3.0 * se && diff > 0.0) above = true;
        if (diff < -3.0 * se) below = true;
    }
    report.max_violation = std::max(report.max_violation, 0.0);
    report.verdict =
        (above && below) ? DominanceVerdict::Crosses : DominanceVerdict::Dominates;
    return report;
}

std::string dominance_report_csv(const DominanceReport& report) {
    std::string out = "x,cdfF,cdfG,stderr\n";
    for (std::size_t i = 0; i < report.grid.size(); ++i) {
        out += format_double(report.grid[i]);
        out += ',';
        out += format_double(report.cdf_f[i]);
        out += ',';
        out += format_double(report.cdf_g[i]);
        out += ',';
        out += format_double(report.stderr_[i]);
        out += '\n';
    }
    return out;
}

namespace {

std::string grid_test_label(const RejectionGridSpec& spec) {
    if (spec.test == "tstar") return "tstar:" + format_double(spec.nu);
    if (spec.test == "jp") return "jp:" + format_double(spec.p);
    throw std::invalid_argument("grid: unknown test \"" + spec.test + "\" (tstar or jp)");
}

}  // namespace

RejectionTable rejection_grid(const RejectionGridSpec& spec) {
    if (spec.models.empty() || spec.sizes.empty()) {
        throw std::invalid_argument("grid: need at least one model and one sample size");
    }
    if (spec.runs == 0) {
        throw std::invalid_argument("grid: runs must be >= 1");
    }
    const std::string label = grid_test_label(spec);
    const bool star = spec.test == "tstar";
    const ParametricModel exponential = ParametricModel::unit_exponential();

    // least-favorable critical value per sample size, shared across the grid
    std::map<std::size_t, double> critical;
    for (std::size_t n : spec.sizes) {
        std::vector<double> null_values;
        if (star) {
            TestSpec tspec;
            tspec.kind = TestKind::Star;
            tspec.g = exponential;
            tspec.k = KTransform::ApplyG;
            tspec.nu = spec.nu;
            tspec.alpha = spec.alpha;
            tspec.sims = spec.sims;
            tspec.seed = spec.seed;
            tspec.workers = spec.workers;
            null_values = null_distribution(tspec, n);
        } else {
            const SeedSpec base = spec.seed.derive("null:jp:n=" + std::to_string(n));
            null_values.resize(spec.sims);
            parallel_for(spec.sims, spec.workers, [&](std::size_t r) {
                null_values[r] = deshpande_j(EmpiricalDist(draw(exponential, n, base.stream(r))),
                                             spec.p);
            });
        }
        critical[n] = critical_value(null_values, spec.alpha);
    }

    RejectionTable table;
    for (const ParametricModel& model : spec.models) {
        for (std::size_t n : spec.sizes) {
            const SeedSpec base =
                spec.seed.derive("cell:" + model.describe() + ":n=" + std::to_string(n) + ":" +
                                 label);
            const double cv = critical.at(n);
            std::vector<unsigned char> rejected(spec.runs, 0);
            parallel_for(spec.runs, spec.workers, [&](std::size_t r) {
                const EmpiricalDist sample(draw(model, n, base.stream(r)));
                const double stat = star
                                        ? stat_star(sample, exponential, KTransform::ApplyG, spec.nu)
                                        : deshpande_j(sample, spec.p);
                rejected[r] = stat >= cv ? 1 : 0;
            });
            std::size_t count = 0;
            for (unsigned char b : rejected) count += b;
            RejectionRow row;
            row.family = model.family_name();
            row.params = model.params_string();
            row.n = n;
            row.test = label;
            row.rate = static_cast<double>(count) / static_cast<double>(spec.runs);
            row.runs = spec.runs;
            row.stderr_ = std::sqrt(row.rate * (1.0 - row.rate) / static_cast<double>(spec.runs));
            table.push_back(std::move(row));
        }
    }
    return table;
}

std::string rejection_table_csv(const RejectionTable& table) {
    std::string out = "family,params,n,test,rate,runs,stderr\n";
    for (const RejectionRow& row : table) {
        out += row.family;
        out += ',';
        out += row.params;
        out += ',';
        out += std::to_string(row.n);
        out += ',';
        out += row.test;
        out += ',';
        out += format_double(row.rate);
        out += ',';
        out += std::to_string(row.runs);
        out += ',';
        out += format_double(row.stderr_);
        out += '\n';
    }
    return out;
}

std::vector<ParametricModel> figure2_models() {
    std::vector<ParametricModel> models;
    for (double a : {0.5, 0.8, 1.0, 1.5}) {
        models.push_back(ParametricModel::weibull(a));
    }
    for (double a : {0.5, 0.7, 1.0}) {
        for (double b : {2.0, 3.0}) {
            models.push_back(ParametricModel::beta(a, b));
        }
    }
    for (double a : {1.0, 2.0}) {
        for (double b : {0.8, 1.5, 2.0}) {
            models.push_back(ParametricModel::burr(a, b));
        }
    }
    return models;
}

Lemma1Summary lemma1_property_run(std::size_t count, SeedSpec seed) {
    Lemma1Summary summary;
    RandomStream rng(seed.derive("lemma1"));
    while (summary.pairs_filtered < count) {
        ++summary.pairs_generated;
        const std::size_t n = 2 + static_cast<std::size_t>(rng.next_u64() % 11);
        std::vector<double> ys(n);
        for (double& y : ys) y = -std::log1p(-rng.next_u01());
        std::vector<double> xs(n);
        if (summary.pairs_generated % 2 == 0) {
            // star-shaped transform of the base sample: x = c y^gamma, gamma >= 1
            const double gamma = 1.0 + 2.0 * rng.next_u01();
            const double c = 0.2 + 5.0 * rng.next_u01();
            for (std::size_t i = 0; i < n; ++i) xs[i] = c * std::pow(ys[i], gamma);
        } else {
            for (double& x : xs) x = -std::log1p(-rng.next_u01());
        }
        const EmpiricalDist f(std::move(xs));
        const EmpiricalDist g(std::move(ys));
        if (!check_extended_order(OrderKind::Star, f, g).holds) continue;
        ++summary.pairs_filtered;
        if (!check_lorenz(f, g).holds) ++summary.violations;
    }
    return summary;
}

}  // namespace transorder
