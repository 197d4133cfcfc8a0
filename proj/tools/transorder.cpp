// transorder: command-line front end for the transform-order library.
// Subcommands: ineq, order-check, shape, gof, simulate (dominance | grid).
// Exit codes: 0 ok, 2 gof rejection, 64 usage, 65 data error, 70 internal.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "transorder/csv.hpp"
#include "transorder/dist.hpp"
#include "transorder/gof.hpp"
#include "transorder/ineq.hpp"
#include "transorder/mc.hpp"
#include "transorder/orders.hpp"
#include "transorder/shape.hpp"

namespace {

using nlohmann::json;
using namespace transorder;

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

struct GlobalOpts {
    std::uint64_t seed = 0;
    bool seed_set = false;
    int workers = 1;
    std::string out;
    std::string config;
    int verbosity = 0;
};

void write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw std::invalid_argument("cannot write output file " + out_path);
    }
    file << payload;
}

json load_json_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw std::invalid_argument("cannot open config file " + path);
    }
    try {
        return json::parse(file);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config " + path + ": " + e.what());
    }
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
    if (!obj.is_object()) {
        throw std::invalid_argument("config: " + where + " must be an object");
    }
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) {
            known = known || item.key() == key;
        }
        if (!known) {
            throw std::invalid_argument("config: unknown key \"" + item.key() + "\" in " + where);
        }
    }
}

SeedSpec parse_seed_json(const json& j) {
    reject_unknown(j, {"master_seed", "stream_id"}, "seed");
    SeedSpec seed;
    if (j.contains("master_seed")) seed.master_seed = j.at("master_seed").get<std::uint64_t>();
    if (j.contains("stream_id")) seed.stream_id = j.at("stream_id").get<std::uint64_t>();
    return seed;
}

json seed_to_json(SeedSpec seed) {
    return json{{"master_seed", seed.master_seed}, {"stream_id", seed.stream_id}};
}

ParametricModel model_from_config(const json& j, const std::string& where) {
    if (j.is_string()) return ParametricModel::parse(j.get<std::string>());
    if (j.is_object()) return ParametricModel::from_json(j.dump());
    throw std::invalid_argument("config: " + where + " must be a model string or object");
}

// Loads the per-subcommand config document: top-level sections are
// {measure | order | test | experiment} plus seed, out, verbosity; unknown
// keys are rejected.
struct ConfigDoc {
    json section;  // null when absent
    std::optional<SeedSpec> seed;
    std::string out;
};

ConfigDoc load_config(const GlobalOpts& global, const char* section_name) {
    ConfigDoc doc;
    doc.section = json();
    if (global.config.empty()) return doc;
    const json root = load_json_file(global.config);
    reject_unknown(root, {"measure", "order", "test", "experiment", "seed", "out", "verbosity"},
                   "top level");
    for (const char* other : {"measure", "order", "test", "experiment"}) {
        if (root.contains(other) && std::string(other) != section_name) {
            throw std::invalid_argument(std::string("config: section \"") + other +
                                        "\" does not belong to this subcommand");
        }
    }
    if (root.contains(section_name)) doc.section = root.at(section_name);
    if (root.contains("seed")) doc.seed = parse_seed_json(root.at("seed"));
    if (root.contains("out")) doc.out = root.at("out").get<std::string>();
    return doc;
}

SeedSpec resolve_seed(const GlobalOpts& global, const ConfigDoc& doc) {
    if (global.seed_set) return SeedSpec{global.seed, 0};
    if (doc.seed) return *doc.seed;
    return SeedSpec{};
}

std::string resolve_out(const GlobalOpts& global, const ConfigDoc& doc) {
    return global.out.empty() ? doc.out : global.out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---- ineq ------------------------------------------------------------

int run_ineq(const GlobalOpts& global, std::string measure, std::string input) {
    const ConfigDoc doc = load_config(global, "measure");
    if (!doc.section.is_null()) {
        reject_unknown(doc.section, {"measure", "input"}, "measure");
        if (doc.section.contains("measure") && measure.empty())
            measure = doc.section.at("measure").get<std::string>();
        if (doc.section.contains("input") && input.empty())
            input = doc.section.at("input").get<std::string>();
    }
    if (measure.empty() || input.empty()) {
        throw std::invalid_argument("ineq: --measure and --input are required");
    }
    const FunctionalSpec spec = FunctionalSpec::parse(measure);
    const EmpiricalDist sample(read_sample_csv_file(input));
    json out;
    out["measure"] = spec.to_string();
    out["value"] = evaluate_functional(spec, sample);
    out["n"] = sample.size();
    write_output(dump(out), resolve_out(global, doc));
    return 0;
}

// ---- order-check -----------------------------------------------------

int run_order_check(const GlobalOpts& global, std::string kind, std::string f_path,
                    std::string g_path, double tol) {
    const ConfigDoc doc = load_config(global, "order");
    if (!doc.section.is_null()) {
        reject_unknown(doc.section, {"kind", "f", "g", "tol"}, "order");
        if (doc.section.contains("kind") && kind.empty())
            kind = doc.section.at("kind").get<std::string>();
        if (doc.section.contains("f") && f_path.empty())
            f_path = doc.section.at("f").get<std::string>();
        if (doc.section.contains("g") && g_path.empty())
            g_path = doc.section.at("g").get<std::string>();
        if (doc.section.contains("tol")) tol = doc.section.at("tol").get<double>();
    }
    if (kind.empty() || f_path.empty() || g_path.empty()) {
        throw std::invalid_argument("order-check: --kind, --f and --g are required");
    }
    const OrderKind order = order_kind_from_string(kind);
    const EmpiricalDist f(read_sample_csv_file(f_path));
    const EmpiricalDist g(read_sample_csv_file(g_path));
    const OrderCheckReport report = check_extended_order(order, f, g, tol);
    json out;
    out["holds"] = report.holds;
    out["mode"] = std::string(to_string(report.mode));
    out["witness"] = report.witness ? json(*report.witness) : json(nullptr);
    out["tolerance"] = report.tolerance;
    write_output(dump(out), resolve_out(global, doc));
    return 0;
}

// ---- shape -----------------------------------------------------------

int run_shape(const GlobalOpts& global, const std::string& op, const std::string& model_text,
              const std::string& input) {
    const ParametricModel g = ParametricModel::parse(model_text);
    const EmpiricalDist sample(read_sample_csv_file(input));
    const TransformGraph graph = transform_graph(sample, g);
    PiecewiseLinearFn fn = op == "gcm" ? gcm(graph) : gsm(graph);
    std::string csv = "x,value\n";
    for (std::size_t i = 0; i < fn.xs().size(); ++i) {
        csv += format_double(fn.xs()[i]);
        csv += ',';
        csv += format_double(fn.ys()[i]);
        csv += '\n';
    }
    write_output(csv, global.out);
    return 0;
}

// ---- gof -------------------------------------------------------------

int run_gof(const GlobalOpts& global, std::string kind, std::string model_text, std::string k_name,
            double nu, double alpha, std::size_t sims, std::string input, bool bootstrap) {
    const ConfigDoc doc = load_config(global, "test");
    if (!doc.section.is_null()) {
        reject_unknown(doc.section,
                       {"kind", "g", "K", "nu", "alpha", "sims", "input", "bootstrap"}, "test");
        if (doc.section.contains("kind") && kind.empty())
            kind = doc.section.at("kind").get<std::string>();
        if (doc.section.contains("g"))
            model_text = doc.section.at("g").is_string()
                             ? doc.section.at("g").get<std::string>()
                             : doc.section.at("g").dump();
        if (doc.section.contains("K")) k_name = doc.section.at("K").get<std::string>();
        if (doc.section.contains("nu")) nu = doc.section.at("nu").get<double>();
        if (doc.section.contains("alpha")) alpha = doc.section.at("alpha").get<double>();
        if (doc.section.contains("sims")) sims = doc.section.at("sims").get<std::size_t>();
        if (doc.section.contains("input") && input.empty())
            input = doc.section.at("input").get<std::string>();
        if (doc.section.contains("bootstrap")) bootstrap = doc.section.at("bootstrap").get<bool>();
    }
    if (kind.empty() || input.empty()) {
        throw std::invalid_argument("gof: --kind and --input are required");
    }
    TestSpec spec;
    if (kind == "convex") {
        spec.kind = TestKind::Convex;
    } else if (kind == "star") {
        spec.kind = TestKind::Star;
    } else {
        throw std::invalid_argument("gof: --kind must be convex or star");
    }
    spec.g = ParametricModel::parse(model_text);
    if (k_name == "g") {
        spec.k = KTransform::ApplyG;
    } else if (k_name == "id") {
        spec.k = KTransform::Identity;
    } else {
        throw std::invalid_argument("gof: --K must be g or id");
    }
    spec.nu = nu;
    spec.alpha = alpha;
    spec.sims = sims;
    spec.seed = resolve_seed(global, doc);
    spec.workers = global.workers;

    const EmpiricalDist sample(read_sample_csv_file(input));
    TestResult result;
    if (bootstrap) {
        result.n = sample.size();
        result.alpha = spec.alpha;
        result.sims = spec.sims;
        result.test = test_label(spec);
        result.statistic = spec.kind == TestKind::Convex
                               ? stat_convex(sample, spec.g, spec.k)
                               : stat_star(sample, spec.g, spec.k, spec.nu);
        const auto null_values = bootstrap_null(sample, spec);
        result.critical_value = critical_value(null_values, spec.alpha);
        result.p_value = p_value(null_values, result.statistic);
        result.reject = result.statistic >= result.critical_value;
    } else {
        result = run_test(sample, spec);
    }

    json out;
    out["statistic"] = result.statistic;
    out["critical_value"] = result.critical_value;
    out["p_value"] = result.p_value;
    out["reject"] = result.reject;
    out["n"] = result.n;
    out["alpha"] = result.alpha;
    out["sims"] = result.sims;
    out["test"] = result.test;
    out["g"] = json::parse(spec.g.to_json());
    out["null"] = bootstrap ? "bootstrap" : "least-favorable";
    out["seed"] = seed_to_json(spec.seed);
    write_output(dump(out), resolve_out(global, doc));
    return result.reject ? 2 : 0;
}

// ---- simulate --------------------------------------------------------

int run_simulate_dominance(const GlobalOpts& global) {
    const ConfigDoc doc = load_config(global, "experiment");
    if (doc.section.is_null()) {
        throw std::invalid_argument("simulate dominance: --config with an experiment section "
                                    "is required");
    }
    const json& exp = doc.section;
    reject_unknown(exp, {"type", "f", "g", "functional", "n", "reps", "grid"}, "experiment");
    if (!exp.contains("type") || exp.at("type") != "dominance") {
        throw std::invalid_argument("simulate dominance: experiment.type must be \"dominance\"");
    }
    DominanceSpec spec;
    spec.model_f = model_from_config(exp.at("f"), "experiment.f");
    spec.model_g = model_from_config(exp.at("g"), "experiment.g");
    spec.functional = FunctionalSpec::parse(exp.at("functional").get<std::string>());
    spec.n = exp.at("n").get<std::size_t>();
    spec.reps = exp.at("reps").get<std::size_t>();
    if (exp.contains("grid")) spec.grid = exp.at("grid").get<std::vector<double>>();
    spec.seed = resolve_seed(global, doc);
    spec.workers = global.workers;

    const DominanceReport report = dominance_experiment(spec);
    const std::string out_path = resolve_out(global, doc);
    write_output(dominance_report_csv(report), out_path);
    if (!out_path.empty()) {
        json summary;
        summary["verdict"] =
            report.verdict == DominanceVerdict::Crosses ? "crosses" : "dominates";
        summary["max_violation"] = report.max_violation;
        summary["functional"] = spec.functional.to_string();
        summary["n"] = spec.n;
        summary["reps"] = spec.reps;
        summary["out"] = out_path;
        std::cout << dump(summary);
    }
    return 0;
}

int run_simulate_grid(const GlobalOpts& global, bool full) {
    const ConfigDoc doc = load_config(global, "experiment");
    if (doc.section.is_null()) {
        throw std::invalid_argument("simulate grid: --config with an experiment section is "
                                    "required");
    }
    const json& exp = doc.section;
    reject_unknown(exp,
                   {"type", "models", "preset", "sizes", "test", "nu", "p", "alpha", "runs",
                    "sims"},
                   "experiment");
    if (!exp.contains("type") || exp.at("type") != "grid") {
        throw std::invalid_argument("simulate grid: experiment.type must be \"grid\"");
    }
    RejectionGridSpec spec;
    if (exp.contains("models")) {
        for (const auto& m : exp.at("models")) {
            spec.models.push_back(model_from_config(m, "experiment.models"));
        }
    } else if (exp.contains("preset")) {
        if (exp.at("preset") != "figure2") {
            throw std::invalid_argument("simulate grid: unknown preset");
        }
        spec.models = figure2_models();
    } else {
        throw std::invalid_argument("simulate grid: experiment needs models or preset");
    }
    if (exp.contains("sizes")) spec.sizes = exp.at("sizes").get<std::vector<std::size_t>>();
    if (full) spec.sizes = {10, 50, 100, 200, 300};
    if (exp.contains("test")) spec.test = exp.at("test").get<std::string>();
    if (exp.contains("nu")) spec.nu = exp.at("nu").get<double>();
    if (exp.contains("p")) spec.p = exp.at("p").get<double>();
    if (exp.contains("alpha")) spec.alpha = exp.at("alpha").get<double>();
    if (exp.contains("runs")) spec.runs = exp.at("runs").get<std::size_t>();
    if (exp.contains("sims")) spec.sims = exp.at("sims").get<std::size_t>();
    spec.seed = resolve_seed(global, doc);
    spec.workers = global.workers;

    const RejectionTable table = rejection_grid(spec);
    const std::string out_path = resolve_out(global, doc);
    write_output(rejection_table_csv(table), out_path);
    if (!out_path.empty()) {
        json summary;
        summary["cells"] = table.size();
        summary["test"] = table.empty() ? spec.test : table.front().test;
        summary["runs"] = spec.runs;
        summary["out"] = out_path;
        std::cout << dump(summary);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Transform stochastic orders, inequality measures, shape-constrained minorants "
                 "and goodness-of-fit tests",
                 "transorder"};
    app.require_subcommand(1);

    GlobalOpts global;
    app.add_option("--seed", global.seed, "Master seed (stream 0)")
        ->each([&global](const std::string&) { global.seed_set = true; });
    app.add_option("--workers", global.workers, "Worker threads for Monte Carlo loops")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", global.out, "Output file (default: stdout)");
    app.add_option("--config", global.config, "JSON config document");
    app.add_option("--verbosity", global.verbosity, "Verbosity level");

    // global flags may appear before or after the subcommand name
    app.fallthrough();

    // ineq
    auto* ineq_cmd = app.add_subcommand("ineq", "Evaluate an inequality measure on a sample");
    ineq_cmd->fallthrough();
    std::string measure, input;
    ineq_cmd->add_option("--measure", measure,
                         "gini | entropy:r | ggini:k | relrange | relmad | phi:name");
    ineq_cmd->add_option("--input", input, "One-column sample CSV (header x)");

    // order-check
    auto* order_cmd =
        app.add_subcommand("order-check", "Check an extended transform order between two samples");
    order_cmd->fallthrough();
    std::string kind, f_path, g_path;
    double tol = kDefaultOrderTol;
    order_cmd->add_option("--kind", kind,
                          "stochastic | convex | star | superadditive | dispersive | lorenz");
    order_cmd->add_option("--f", f_path, "Sample CSV for the dominating side");
    order_cmd->add_option("--g", g_path, "Sample CSV for the dominated side");
    order_cmd->add_option("--tol", tol, "Monotonicity tolerance");

    // shape
    auto* shape_cmd =
        app.add_subcommand("shape", "Emit a shape-constrained minorant of a sample's transform");
    shape_cmd->fallthrough();
    std::string shape_op, shape_model = "exponential", shape_input;
    shape_cmd->add_option("--op", shape_op, "gcm | gsm")->required()
        ->check(CLI::IsMember({"gcm", "gsm"}));
    shape_cmd->add_option("--g", shape_model, "Reference model (e.g. exponential, weibull:2)");
    shape_cmd->add_option("--input", shape_input, "Sample CSV")->required();

    // gof
    auto* gof_cmd = app.add_subcommand("gof", "Goodness-of-fit test for convexity or "
                                              "star-shapedness of the generalized hazard");
    gof_cmd->fallthrough();
    std::string gof_kind, gof_model = "exponential", gof_k = "g", gof_input;
    double nu = 0.0, alpha = 0.1;
    std::size_t sims = 10000;
    bool bootstrap = false;
    gof_cmd->add_option("--kind", gof_kind, "convex | star");
    gof_cmd->add_option("--g", gof_model, "Null reference model with G(0)=0");
    gof_cmd->add_option("--K", gof_k, "Statistic transform: g (KS type) or id");
    gof_cmd->add_option("--nu", nu, "Upper-tail truncation (star only)");
    gof_cmd->add_option("--alpha", alpha, "Test level");
    gof_cmd->add_option("--sims", sims, "Null simulation count");
    gof_cmd->add_option("--input", gof_input, "Sample CSV");
    gof_cmd->add_flag("--bootstrap", bootstrap,
                      "Calibrate on the isotonic-estimate bootstrap null instead of the "
                      "least-favorable null");

    // simulate
    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo experiment engine");
    simulate_cmd->fallthrough();
    simulate_cmd->require_subcommand(1);
    auto* dom_cmd = simulate_cmd->add_subcommand(
        "dominance", "Stochastic dominance experiment for a functional (CSV: x,cdfF,cdfG,stderr)");
    dom_cmd->fallthrough();
    auto* grid_cmd = simulate_cmd->add_subcommand(
        "grid", "Rejection-rate grid (CSV: family,params,n,test,rate,runs,stderr)");
    grid_cmd->fallthrough();
    bool full_scale = false;
    grid_cmd->add_flag("--full", full_scale, "Paper-scale sizes n=10..300");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (ineq_cmd->parsed()) return run_ineq(global, measure, input);
        if (order_cmd->parsed()) return run_order_check(global, kind, f_path, g_path, tol);
        if (shape_cmd->parsed()) return run_shape(global, shape_op, shape_model, shape_input);
        if (gof_cmd->parsed())
            return run_gof(global, gof_kind, gof_model, gof_k, nu, alpha, sims, gof_input,
                           bootstrap);
        if (simulate_cmd->parsed()) {
            if (dom_cmd->parsed()) return run_simulate_dominance(global);
            if (grid_cmd->parsed()) return run_simulate_grid(global, full_scale);
        }
        throw std::logic_error("no subcommand dispatched");
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
