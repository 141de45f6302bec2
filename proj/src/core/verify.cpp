#include "verify.hpp"

#include <algorithm>
#include <cmath>

#include "dial.hpp"
#include "expansion.hpp"
#include "gallery.hpp"
#include "sparse.hpp"
#include "theorems.hpp"

namespace metriclab {

const char* artifact_version() { return "0.1.0"; }

RunConfig RunConfig::from_json(const json& doc) {
    RunConfig cfg;
    if (!doc.is_object()) throw ParseError("config must be an object");
    cfg.seed = doc.value("seed", cfg.seed);
    cfg.tol = doc.value("tol", cfg.tol);
    cfg.budget = doc.value("budget", cfg.budget);
    cfg.workers = doc.value("workers", cfg.workers);
    if (cfg.tol < 0) throw ParseError("tolerance must be nonnegative");
    if (cfg.budget < 1) throw ParseError("budget must be >= 1");
    return cfg;
}

json RunConfig::to_json() const {
    json doc;
    doc["seed"] = seed;
    doc["tol"] = tol;
    doc["budget"] = budget;
    doc["workers"] = workers;
    return doc;
}

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

json SuiteReport::to_json(const RunConfig& config) const {
    json doc;
    doc["version"] = artifact_version();
    doc["config"] = config.to_json();
    doc["suite"] = suite;
    doc["passed"] = passed();
    json cs = json::array();
    for (const auto& c : checks) {
        json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        e["details"] = c.details;
        cs.push_back(std::move(e));
    }
    doc["checks"] = std::move(cs);
    return doc;
}

namespace {

EnumerationOptions enum_opts(const RunConfig& cfg) {
    EnumerationOptions opts;
    opts.max_maps = cfg.budget;
    opts.tol = cfg.tol;
    return opts;
}

double pairwise_sum(const FiniteMetricSpace& s) {
    double total = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) total += s.dist(i, j);
    return total;
}

SuiteReport suite_compact(const RunConfig& cfg, const json& params) {
    SuiteReport rep;
    rep.suite = "compact";
    const auto max_size = params.value("max_size", std::size_t{4});
    const auto random_instances = params.value("random_instances", std::size_t{1000});
    EnumerationOptions opts = enum_opts(cfg);

    std::size_t scanned = 0, map_total = 0;
    bool all_ok = true, sums_ok = true;
    json counterexample;
    auto run_one = [&](const FiniteMetricSpace& space) {
        const auto r = verify_compact_theorem(space, opts);
        ++scanned;
        map_total += r.expansive_count;
        if (!r.all_expansive_are_isometric_bijections) {
            all_ok = false;
            if (counterexample.is_null()) {
                counterexample = space.to_json();
                if (r.counterexample) counterexample["map"] = r.counterexample->to_json();
            }
        }
        // sum argument: a permutation with no shrinking pair preserves the
        // total pairwise distance, which forces termwise equality
        const double total = pairwise_sum(space);
        for (const auto& tm : enumerate_expansive_maps(space, opts)) {
            double mapped = 0;
            for (std::size_t i = 0; i < space.size(); ++i)
                for (std::size_t j = i + 1; j < space.size(); ++j)
                    mapped += space.dist(tm.map(i), tm.map(j));
            if (std::abs(mapped - total) > cfg.tol * std::max(1.0, total)) sums_ok = false;
        }
    };

    for (std::size_t n = 1; n <= max_size; ++n)
        for (const auto& space : all_metric_spaces(n, {1, 2, 3})) run_one(space);
    const std::size_t exhaustive_count = scanned;

    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::size_t> size_draw(2, max_size);
    for (std::size_t i = 0; i < random_instances; ++i)
        run_one(random_metric_space(rng, size_draw(rng)));

    rep.checks.push_back({"exhaustive_and_random_spaces", all_ok,
                          json{{"spaces_scanned", scanned},
                               {"exhaustive_spaces", exhaustive_count},
                               {"random_spaces", scanned - exhaustive_count},
                               {"expansive_maps_seen", map_total},
                               {"counterexample", counterexample}}});
    rep.checks.push_back({"pairwise_sum_preserved", sums_ok, json::object()});
    return rep;
}

SuiteReport suite_counterexample(const RunConfig& cfg, const json& params) {
    SuiteReport rep;
    rep.suite = "counterexample";
    const auto n_small = params.value("n", std::size_t{5});
    const auto n_large = params.value("n_large", std::size_t{12});
    EnumerationOptions opts = enum_opts(cfg);

    const auto small = verify_counterexample(n_small, opts);
    rep.checks.push_back({"full_scan_identity_up_to_tail_swap",
                          small.identity_up_to_tail_swap &&
                              small.fixed_prefix == n_small - 2 &&
                              small.distances_match_formula && small.all_pairwise_above_one,
                          small.to_json()});

    const auto large = verify_counterexample(n_large, opts);
    rep.checks.push_back({"pruned_scan_identity_up_to_tail_swap",
                          large.identity_up_to_tail_swap &&
                              large.fixed_prefix == n_large - 2 &&
                              large.distances_match_formula && large.all_pairwise_above_one,
                          large.to_json()});

    const auto space = linf_counterexample_space(n_small);
    const auto net = min_epsilon_net(space, 0.5);
    rep.checks.push_back({"half_net_is_whole_set",
                          net.optimal && net.centers.size() == n_small,
                          json{{"net_size", net.centers.size()}}});

    const double d1n = space.dist(0, n_small - 1);
    rep.checks.push_back({"first_point_distance_two", d1n == 2.0, json{{"d", d1n}}});
    return rep;
}

SuiteReport suite_dial(const RunConfig&, const json& params) {
    SuiteReport rep;
    rep.suite = "dial";
    const auto epsilon = params.value("epsilon", 0.05);
    const auto points = params.value("points", 1000ull);
    const auto isometry_points = params.value("isometry_points", std::size_t{10000});

    const double dev = dial::isometry_max_deviation(isometry_points);
    rep.checks.push_back({"rotation_is_isometry", dev <= 1e-12,
                          json{{"max_deviation", dev}, {"points", isometry_points}}});

    const double margin100 = dial::non_surjectivity_margin(100);
    const double margin10k = dial::non_surjectivity_margin(10000);
    rep.checks.push_back({"origin_not_in_image", margin100 > 1.7e-2 && margin10k > 0,
                          json{{"margin_n100", margin100}, {"margin_n10000", margin10k}}});

    const auto density = dial::density_check(points, epsilon);
    rep.checks.push_back({"range_is_dense", density.dense, density.to_json()});

    const auto rec44 = recurrence_search(
        [](unsigned long long n) { return dial::chord(dial::dial_point(0), dial::dial_point(n)); },
        0.02, 100);
    rep.checks.push_back({"recurrence_eps_0.02", rec44.found && rec44.n == 44, rec44.to_json()});

    const auto rec710 = recurrence_search(
        [](unsigned long long n) { return dial::chord(dial::dial_point(0), dial::dial_point(n)); },
        1e-4, 1000);
    rep.checks.push_back({"recurrence_eps_1e-4", rec710.found && rec710.n == 710, rec710.to_json()});

    const auto seq = dial::approach_sequence(0, 3);
    bool seq_ok = seq.indices == std::vector<unsigned long long>{44, 333, 710};
    for (std::size_t i = 1; i < seq.chord_errors.size(); ++i)
        if (!(seq.chord_errors[i] < seq.chord_errors[i - 1])) seq_ok = false;
    rep.checks.push_back({"approach_sequence", seq_ok,
                          json{{"indices", seq.indices}, {"chord_errors", seq.chord_errors}}});

    const auto limit = dial::find_limit_point(epsilon, points);
    rep.checks.push_back({"limit_point_cluster", limit.found && limit.witnesses.size() >= 3,
                          limit.to_json()});
    return rep;
}

SuiteReport suite_sparse(const RunConfig& cfg, const json& params) {
    SuiteReport rep;
    rep.suite = "sparse";
    const auto budget = params.value("scan_budget", 100000ull);

    const auto line = make_oracle("real-line");
    const auto set = greedy_sparse(line, 4, budget);
    const auto cert = certify_anticontraction(line, set);
    rep.checks.push_back(
        {"integer_line_selection",
         set.complete && set.indices == std::vector<unsigned long long>{0, 1, 4, 13},
         set.to_json()});
    rep.checks.push_back({"integer_line_certificate", cert.ok && cert.E_achieved == 3.0,
                          cert.to_json()});

    const auto bounded = make_oracle("bounded-interval");
    const auto bounded_set = greedy_sparse(bounded, 3, 10000);
    rep.checks.push_back({"bounded_interval_exhausts_budget", !bounded_set.complete,
                          json{{"accepted", bounded_set.points.size()}}});

    bool others_ok = true;
    json other_es;
    for (const char* name : {"integer-lattice-sup", "geometric"}) {
        const auto o = make_oracle(name);
        const auto s = greedy_sparse(o, 5, budget);
        if (!s.complete) { others_ok = false; continue; }
        const auto c = certify_anticontraction(o, s);
        if (!c.ok) others_ok = false;
        other_es[name] = c.E_achieved;
    }
    rep.checks.push_back({"unbounded_oracles_certify", others_ok, other_es});

    // iterate divergence: d(T^k x1, T^k x2) >= 2^k d(x1, x2) for k <= n-2
    const auto big = greedy_sparse(line, 6, 100000000ull);
    bool divergence_ok = big.complete;
    if (big.complete) {
        const auto space = sparse_space(line, big);
        const auto shift = shift_map(big);
        const double base = space.dist(0, 1);
        for (unsigned long long k = 0; k + 2 <= big.points.size() && divergence_ok; ++k) {
            const double d = space.dist(iterate(shift, 0, k), iterate(shift, 1, k));
            if (!(d >= std::pow(2.0, static_cast<double>(k)) * base)) divergence_ok = false;
        }
    }
    rep.checks.push_back({"iterate_divergence", divergence_ok, json::object()});
    return rep;
}

SuiteReport suite_boundedness(const RunConfig& cfg, const json& params) {
    SuiteReport rep;
    rep.suite = "boundedness";
    const auto max_size = params.value("max_size", std::size_t{4});
    EnumerationOptions opts = enum_opts(cfg);

    bool none_found = true, implication_ok = true;
    std::size_t scanned = 0;
    for (std::size_t n = 2; n <= max_size; ++n)
        for (const auto& space : all_metric_spaces(n, {1, 2, 3})) {
            const auto scan = no_anticontraction_check(space, cfg.tol, 5, opts);
            ++scanned;
            if (!scan.none_found) none_found = false;
            // implied by the compact theorem on the same space
            const auto thm = verify_compact_theorem(space, opts);
            if (thm.all_expansive_are_isometric_bijections && !scan.none_found)
                implication_ok = false;
        }
    rep.checks.push_back({"no_anticontraction_on_finite_spaces", none_found,
                          json{{"spaces_scanned", scanned}}});
    rep.checks.push_back({"implied_by_compact_theorem", implication_ok, json::object()});
    return rep;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"compact", "counterexample", "dial", "sparse", "boundedness"};
}

SuiteReport run_verify_suite(const std::string& suite, const RunConfig& config,
                             const json& params) {
    if (suite == "compact") return suite_compact(config, params);
    if (suite == "counterexample") return suite_counterexample(config, params);
    if (suite == "dial") return suite_dial(config, params);
    if (suite == "sparse") return suite_sparse(config, params);
    if (suite == "boundedness") return suite_boundedness(config, params);
    throw ParseError("unknown verify suite \"" + suite + "\"");
}

}  // namespace metriclab
