// metriclab command-line front end. Talks to the core exclusively through
// the C API in metriclab/metriclab.h.
//
// Exit codes: 0 success, 1 check failure, 2 usage/parse error, 3 invalid
// input data.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "metriclab/metriclab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidInput = 3;

int exit_code_for(ml_status status) {
    switch (status) {
        case ML_OK: return kExitOk;
        case ML_CHECK_FAILED: return kExitCheckFailed;
        case ML_PARSE_ERROR: return kExitUsage;
        case ML_INVALID_INPUT: return kExitInvalidInput;
        case ML_DOMAIN_ERROR: return kExitUsage;
        case ML_BUDGET_EXCEEDED: return kExitUsage;
    }
    return kExitUsage;
}

struct Options {
    std::uint64_t seed = 0;
    double tol = 1e-9;
    std::uint64_t budget = 823543;
    int workers = 1;
    std::string format = "json";
};

std::string config_json(const Options& opt) {
    nlohmann::ordered_json doc;
    doc["seed"] = opt.seed;
    doc["tol"] = opt.tol;
    doc["budget"] = opt.budget;
    doc["workers"] = opt.workers;
    return doc.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CStr {
    char* ptr = nullptr;
    ~CStr() { ml_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

void print_report(const std::string& report, const Options& opt) {
    if (opt.format == "text") {
        const auto doc = nlohmann::ordered_json::parse(report, nullptr, false);
        if (doc.is_object()) {
            for (const auto& [k, v] : doc.items())
                std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                          << "\n";
            return;
        }
    }
    std::cout << report << "\n";
}

int fail(ml_status status) {
    std::cerr << "error: " << ml_last_error() << "\n";
    return exit_code_for(status);
}

using SpaceHandle = std::unique_ptr<ml_space, decltype(&ml_space_free)>;
using MapHandle = std::unique_ptr<ml_selfmap, decltype(&ml_map_free)>;

// Loads and validates a space; exit 3 with the axiom report when invalid.
int load_valid_space(const std::string& path, const Options& opt, SpaceHandle& out) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    ml_space* raw = nullptr;
    if (const auto st = ml_space_from_json(text.c_str(), &raw); st != ML_OK) return fail(st);
    out = SpaceHandle(raw, ml_space_free);
    CStr report;
    if (const auto st = ml_space_validate(raw, opt.tol, &report.ptr); st != ML_OK)
        return fail(st);
    const auto doc = nlohmann::ordered_json::parse(report.str());
    if (!doc["valid"].get<bool>()) {
        std::cout << report.str() << "\n";
        return kExitInvalidInput;
    }
    return kExitOk;
}

int load_map(const SpaceHandle& space, const std::string& path, MapHandle& out) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    ml_selfmap* raw = nullptr;
    if (const auto st = ml_map_from_json(space.get(), text.c_str(), &raw); st != ML_OK)
        return fail(st);
    out = MapHandle(raw, ml_map_free);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"metriclab: expansion classification and theorem verification "
                 "on metric spaces"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags (--format, --seed, ...) after a subcommand
    app.set_version_flag("--version", std::string(ml_version()));

    Options opt;
    app.add_option("--seed", opt.seed, "seed for randomized generation");
    app.add_option("--tol", opt.tol, "relative numeric tolerance");
    app.add_option("--budget", opt.budget, "enumeration budget (maps)");
    app.add_option("--workers", opt.workers, "worker count for parallel scans");
    app.add_option("--format", opt.format, "output format: json, csv, text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    std::string space_path, map_path;
    double epsilon = 0.05;
    std::uint64_t points = 1000;
    std::size_t start = 0;
    std::uint64_t max_iter = 1000;
    std::uint64_t target = 0;
    int count = 3;
    std::string suite, oracle = "real-line", entry, oracle_params = "{}";
    std::size_t sparse_count = 4;
    std::uint64_t scan_budget = 100000;
    std::size_t net_cmd_dummy = 0;
    (void)net_cmd_dummy;

    auto* classify = app.add_subcommand("classify", "classify a self-map of a finite space");
    classify->add_option("space", space_path, "space JSON file")->required();
    classify->add_option("map", map_path, "map JSON file")->required();

    auto* validate = app.add_subcommand("validate", "check the metric axioms of a space");
    validate->add_option("space", space_path, "space JSON file")->required();

    auto* enumerate = app.add_subcommand("enumerate", "enumerate all expansive self-maps");
    enumerate->add_option("space", space_path, "space JSON file")->required();

    auto* recurrence = app.add_subcommand("recurrence", "smallest n with d(x, T^n x) <= eps");
    recurrence->add_option("space", space_path, "space JSON file")->required();
    recurrence->add_option("map", map_path, "map JSON file")->required();
    recurrence->add_option("--start", start, "start point index");
    recurrence->add_option("--epsilon", epsilon, "return threshold")->required();
    recurrence->add_option("--max-iter", max_iter, "iteration bound");

    auto* dial = app.add_subcommand("dial", "dial set operations");
    dial->require_subcommand(1);
    auto* approach = dial->add_subcommand("approach", "approach sequence toward e^{i target}");
    approach->add_option("--target", target, "target index");
    approach->add_option("--count", count, "number of terms");
    auto* density = dial->add_subcommand("density", "range density of the rotation");
    density->add_option("--points", points, "number of dial points");
    density->add_option("--epsilon", epsilon, "density radius");
    auto* limit = dial->add_subcommand("limit-point", "find a cluster around a limit point");
    limit->add_option("--points", points, "number of dial points");
    limit->add_option("--epsilon", epsilon, "cluster radius");

    auto* sparse = app.add_subcommand("sparse", "greedy sparse set + anticontraction certificate");
    sparse->add_option("--oracle", oracle, "oracle name");
    sparse->add_option("--params", oracle_params, "oracle parameters (JSON)");
    sparse->add_option("--count", sparse_count, "points to select");
    sparse->add_option("--scan-budget", scan_budget, "max oracle indices to scan");

    auto* gallery = app.add_subcommand("gallery", "example spaces and maps");
    gallery->require_subcommand(1);
    auto* list = gallery->add_subcommand("list", "list gallery entries");
    auto* run = gallery->add_subcommand("run", "run a gallery entry");
    run->add_option("name", entry, "entry name")->required();
    run->add_option("--params", oracle_params, "entry parameters (JSON)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite,
                       "compact | counterexample | dial | sparse | boundedness")
        ->required();
    verify->add_option("--epsilon", epsilon, "dial density radius");
    verify->add_option("--points", points, "dial sample size");
    std::size_t max_size = 4, ce_n = 5, ce_n_large = 12;
    verify->add_option("--max-size", max_size, "max space size (compact/boundedness)");
    verify->add_option("--n", ce_n, "counterexample truncation size (full scan)");
    verify->add_option("--n-large", ce_n_large, "counterexample truncation size (pruned)");

    CLI11_PARSE(app, argc, argv);

    const std::string cfg = config_json(opt);

    if (*classify) {
        SpaceHandle sp(nullptr, ml_space_free);
        if (const int rc = load_valid_space(space_path, opt, sp); rc != kExitOk) return rc;
        MapHandle mp(nullptr, ml_map_free);
        if (const int rc = load_map(sp, map_path, mp); rc != kExitOk) return rc;
        CStr report;
        if (const auto st = ml_classify(sp.get(), mp.get(), opt.tol, &report.ptr); st != ML_OK)
            return fail(st);
        print_report(report.str(), opt);
        return kExitOk;
    }

    if (*validate) {
        std::string text;
        try {
            text = read_file(space_path);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        ml_space* raw = nullptr;
        if (const auto st = ml_space_from_json(text.c_str(), &raw); st != ML_OK)
            return fail(st);
        SpaceHandle sp(raw, ml_space_free);
        CStr report;
        if (const auto st = ml_space_validate(sp.get(), opt.tol, &report.ptr); st != ML_OK)
            return fail(st);
        print_report(report.str(), opt);
        const auto doc = nlohmann::ordered_json::parse(report.str());
        return doc["valid"].get<bool>() ? kExitOk : kExitInvalidInput;
    }

    if (*enumerate) {
        SpaceHandle sp(nullptr, ml_space_free);
        if (const int rc = load_valid_space(space_path, opt, sp); rc != kExitOk) return rc;
        CStr report;
        if (const auto st = ml_enumerate_expansive(sp.get(), cfg.c_str(), &report.ptr);
            st != ML_OK)
            return fail(st);
        print_report(report.str(), opt);
        return kExitOk;
    }

    if (*recurrence) {
        SpaceHandle sp(nullptr, ml_space_free);
        if (const int rc = load_valid_space(space_path, opt, sp); rc != kExitOk) return rc;
        MapHandle mp(nullptr, ml_map_free);
        if (const int rc = load_map(sp, map_path, mp); rc != kExitOk) return rc;
        CStr report;
        if (const auto st = ml_recurrence_search(sp.get(), mp.get(), start, epsilon, max_iter,
                                                 &report.ptr);
            st != ML_OK)
            return fail(st);
        print_report(report.str(), opt);
        return kExitOk;
    }

    if (*approach) {
        CStr report;
        if (const auto st = ml_dial_approach(target, count, &report.ptr); st != ML_OK)
            return fail(st);
        if (opt.format == "csv") {
            const auto doc = nlohmann::ordered_json::parse(report.str());
            std::cout << "n,x,y,chord_error\n";
            for (std::size_t i = 0; i < doc["indices"].size(); ++i) {
                const auto n = doc["indices"][i].get<std::uint64_t>();
                CStr pt;
                if (const auto st = ml_dial_point(n, &pt.ptr); st != ML_OK) return fail(st);
                const auto p = nlohmann::ordered_json::parse(pt.str());
                std::cout << n << "," << p["x"].dump() << "," << p["y"].dump() << ","
                          << doc["chord_errors"][i].dump() << "\n";
            }
            return kExitOk;
        }
        print_report(report.str(), opt);
        return kExitOk;
    }

    if (*density) {
        CStr report;
        const auto st = ml_dial_density(points, epsilon, &report.ptr);
        if (st != ML_OK && st != ML_CHECK_FAILED) return fail(st);
        print_report(report.str(), opt);
        return exit_code_for(st);
    }

    if (*limit) {
        CStr report;
        const auto st = ml_dial_limit_point(epsilon, points, &report.ptr);
        if (st != ML_OK && st != ML_CHECK_FAILED) return fail(st);
        print_report(report.str(), opt);
        return exit_code_for(st);
    }

    if (*sparse) {
        CStr report;
        const auto st = ml_sparse_build(oracle.c_str(), oracle_params.c_str(), sparse_count,
                                        scan_budget, &report.ptr);
        if (st != ML_OK && st != ML_CHECK_FAILED) return fail(st);
        print_report(report.str(), opt);
        return exit_code_for(st);
    }

    if (*list) {
        CStr report;
        if (const auto st = ml_gallery_list(&report.ptr); st != ML_OK) return fail(st);
        print_report(report.str(), opt);
        return kExitOk;
    }

    if (*run) {
        CStr report;
        if (const auto st = ml_gallery_run(entry.c_str(), oracle_params.c_str(), &report.ptr);
            st != ML_OK)
            return fail(st);
        print_report(report.str(), opt);
        return kExitOk;
    }

    if (*verify) {
        nlohmann::ordered_json params;
        params["max_size"] = max_size;
        params["n"] = ce_n;
        params["n_large"] = ce_n_large;
        params["epsilon"] = epsilon;
        params["points"] = points;
        const std::string params_text = params.dump();
        CStr report;
        const auto st = ml_verify(suite.c_str(), cfg.c_str(), params_text.c_str(), &report.ptr);
        if (st != ML_OK && st != ML_CHECK_FAILED) return fail(st);
        print_report(report.str(), opt);
        return exit_code_for(st);
    }

    return kExitUsage;
}
