#include "metriclab/metriclab.h"

#include <cstring>
#include <new>
#include <string>

#include "../core/dial.hpp"
#include "../core/expansion.hpp"
#include "../core/gallery.hpp"
#include "../core/sparse.hpp"
#include "../core/theorems.hpp"
#include "../core/verify.hpp"

using namespace metriclab;

struct ml_space {
    FiniteMetricSpace space;
};

struct ml_selfmap {
    SelfMap map;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** out, const json& doc) {
    if (out) *out = dup_string(doc.dump(2));
}

// Maps C++ failures onto status codes; body returns the status for the
// success path (usually ML_OK).
template <typename Fn>
ml_status guarded(Fn&& body) {
    try {
        g_last_error.clear();
        return body();
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return ML_PARSE_ERROR;
    } catch (const StructuralError& e) {
        g_last_error = e.what();
        return ML_INVALID_INPUT;
    } catch (const BudgetExceeded& e) {
        g_last_error = std::string(e.what()) +
                       " (required budget: " + std::to_string(e.required_budget) + ")";
        return ML_BUDGET_EXCEEDED;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return ML_DOMAIN_ERROR;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ML_INVALID_INPUT;
    }
}

RunConfig parse_config(const char* config_json) {
    if (!config_json || !*config_json) return RunConfig{};
    json doc = json::parse(config_json, nullptr, false);
    if (doc.is_discarded()) throw ParseError("config is not valid JSON");
    return RunConfig::from_json(doc);
}

json parse_params(const char* params_json) {
    if (!params_json || !*params_json) return json::object();
    json doc = json::parse(params_json, nullptr, false);
    if (doc.is_discarded()) throw ParseError("params document is not valid JSON");
    return doc;
}

}  // namespace

extern "C" {

const char* ml_version(void) { return artifact_version(); }

const char* ml_last_error(void) { return g_last_error.c_str(); }

void ml_string_free(char* s) { delete[] s; }

ml_status ml_space_from_json(const char* json_text, ml_space** out) {
    return guarded([&]() -> ml_status {
        if (!json_text || !out) throw ParseError("null argument");
        *out = new ml_space{FiniteMetricSpace::from_json_text(json_text)};
        return ML_OK;
    });
}

void ml_space_free(ml_space* space) { delete space; }

size_t ml_space_size(const ml_space* space) { return space ? space->space.size() : 0; }

ml_status ml_space_validate(const ml_space* space, double tol, char** report_json) {
    return guarded([&]() -> ml_status {
        if (!space) throw ParseError("null space");
        const auto report = validate_metric(space->space, tol);
        emit(report_json, report.to_json(space->space));
        return ML_OK;
    });
}

ml_status ml_space_diameter(const ml_space* space, double* out) {
    return guarded([&]() -> ml_status {
        if (!space || !out) throw ParseError("null argument");
        *out = diameter(space->space);
        return ML_OK;
    });
}

ml_status ml_space_epsilon_net(const ml_space* space, double epsilon, char** report_json) {
    return guarded([&]() -> ml_status {
        if (!space) throw ParseError("null space");
        const auto net = min_epsilon_net(space->space, epsilon);
        json doc;
        doc["centers"] = net.centers;
        doc["optimal"] = net.optimal;
        doc["cardinality"] = net.centers.size();
        emit(report_json, doc);
        return ML_OK;
    });
}

ml_status ml_map_from_json(const ml_space* space, const char* json_text, ml_selfmap** out) {
    return guarded([&]() -> ml_status {
        if (!space || !json_text || !out) throw ParseError("null argument");
        *out = new ml_selfmap{SelfMap::from_json_text(json_text, space->space.size())};
        return ML_OK;
    });
}

void ml_map_free(ml_selfmap* map) { delete map; }

ml_status ml_map_iterate(const ml_selfmap* map, size_t x, uint64_t n, size_t* out) {
    return guarded([&]() -> ml_status {
        if (!map || !out) throw ParseError("null argument");
        if (x >= map->map.size()) throw std::domain_error("start point out of range");
        *out = iterate(map->map, x, n);
        return ML_OK;
    });
}

ml_status ml_classify(const ml_space* space, const ml_selfmap* map, double tol,
                      char** report_json) {
    return guarded([&]() -> ml_status {
        if (!space || !map) throw ParseError("null argument");
        const auto cls = classify(space->space, map->map, tol);
        emit(report_json, cls.to_json(space->space));
        return ML_OK;
    });
}

ml_status ml_ratio_profile(const ml_space* space, const ml_selfmap* map, char** report_json) {
    return guarded([&]() -> ml_status {
        if (!space || !map) throw ParseError("null argument");
        const auto prof = ratio_profile(space->space, map->map);
        json doc;
        doc["min_ratio"] = prof.min_ratio;
        doc["max_ratio"] = prof.max_ratio;
        doc["max_infinite"] = prof.max_infinite;
        doc["argmin"] = {space->space.label(prof.argmin.a), space->space.label(prof.argmin.b)};
        doc["argmax"] = {space->space.label(prof.argmax.a), space->space.label(prof.argmax.b)};
        emit(report_json, doc);
        return ML_OK;
    });
}

ml_status ml_is_surjective(const ml_space* space, const ml_selfmap* map, char** report_json) {
    return guarded([&]() -> ml_status {
        if (!space || !map) throw ParseError("null argument");
        emit(report_json, is_surjective(space->space, map->map).to_json(space->space));
        return ML_OK;
    });
}

ml_status ml_range_density(const ml_space* space, const ml_selfmap* map, double epsilon,
                           char** report_json) {
    return guarded([&]() -> ml_status {
        if (!space || !map) throw ParseError("null argument");
        emit(report_json, range_density(space->space, map->map, epsilon).to_json(space->space));
        return ML_OK;
    });
}

ml_status ml_enumerate_expansive(const ml_space* space, const char* config_json,
                                 char** report_json) {
    return guarded([&]() -> ml_status {
        if (!space) throw ParseError("null space");
        const RunConfig cfg = parse_config(config_json);
        EnumerationOptions opts;
        opts.max_maps = cfg.budget;
        opts.tol = cfg.tol;
        const auto maps = enumerate_expansive_maps(space->space, opts);
        json arr = json::array();
        for (const auto& tm : maps) {
            json e;
            e["map"] = tm.map.to_json();
            e["classification"] = tm.cls.to_json(space->space);
            arr.push_back(std::move(e));
        }
        json doc;
        doc["version"] = artifact_version();
        doc["config"] = cfg.to_json();
        doc["expansive_count"] = maps.size();
        doc["maps"] = std::move(arr);
        emit(report_json, doc);
        return ML_OK;
    });
}

ml_status ml_verify_compact_theorem(const ml_space* space, const char* config_json,
                                    char** report_json) {
    return guarded([&]() -> ml_status {
        if (!space) throw ParseError("null space");
        const RunConfig cfg = parse_config(config_json);
        EnumerationOptions opts;
        opts.max_maps = cfg.budget;
        opts.tol = cfg.tol;
        const auto rep = verify_compact_theorem(space->space, opts);
        emit(report_json, rep.to_json());
        return rep.all_expansive_are_isometric_bijections ? ML_OK : ML_CHECK_FAILED;
    });
}

ml_status ml_recurrence_search(const ml_space* space, const ml_selfmap* map, size_t x,
                               double epsilon, uint64_t max_iter, char** report_json) {
    return guarded([&]() -> ml_status {
        if (!space || !map) throw ParseError("null argument");
        if (x >= space->space.size()) throw std::domain_error("start point out of range");
        const auto rec = recurrence_search(space->space, map->map, x, epsilon, max_iter);
        emit(report_json, rec.to_json());
        return ML_OK;
    });
}

ml_status ml_dial_point(uint64_t n, char** report_json) {
    return guarded([&]() -> ml_status {
        const auto p = dial::dial_point(n);
        json doc;
        doc["n"] = p.n;
        doc["x"] = p.x;
        doc["y"] = p.y;
        emit(report_json, doc);
        return ML_OK;
    });
}

ml_status ml_dial_approach(uint64_t target, int count, char** report_json) {
    return guarded([&]() -> ml_status {
        const auto seq = dial::approach_sequence(target, count);
        json doc;
        doc["target"] = seq.target;
        doc["indices"] = seq.indices;
        doc["chord_errors"] = seq.chord_errors;
        doc["truncated"] = seq.truncated;
        emit(report_json, doc);
        return ML_OK;
    });
}

ml_status ml_dial_density(uint64_t points, double epsilon, char** report_json) {
    return guarded([&]() -> ml_status {
        const auto rep = dial::density_check(points, epsilon);
        emit(report_json, rep.to_json());
        return rep.dense ? ML_OK : ML_CHECK_FAILED;
    });
}

ml_status ml_dial_limit_point(double epsilon, uint64_t points, char** report_json) {
    return guarded([&]() -> ml_status {
        const auto rep = dial::find_limit_point(epsilon, points);
        emit(report_json, rep.to_json());
        return rep.found ? ML_OK : ML_CHECK_FAILED;
    });
}

ml_status ml_continued_fraction(double x, int depth, char** report_json) {
    return guarded([&]() -> ml_status {
        const auto cf = dial::continued_fraction(x, depth);
        json doc;
        doc["coefficients"] = cf.coefficients;
        json convs = json::array();
        for (const auto& c : cf.convergents) {
            json e;
            e["p"] = c.p;
            e["q"] = c.q;
            e["error"] = c.error;
            convs.push_back(std::move(e));
        }
        doc["convergents"] = std::move(convs);
        doc["truncated"] = cf.truncated;
        emit(report_json, doc);
        return ML_OK;
    });
}

ml_status ml_sparse_build(const char* oracle_name, const char* params_json, size_t count,
                          uint64_t scan_budget, char** report_json) {
    return guarded([&]() -> ml_status {
        if (!oracle_name) throw ParseError("null oracle name");
        const json params = parse_params(params_json);
        const auto oracle = make_oracle(oracle_name, params);
        const double multiplier = params.value("multiplier", 2.0);
        const auto set = greedy_sparse(oracle, count, scan_budget, multiplier);
        json doc = set.to_json();
        if (set.complete && set.points.size() >= 3) {
            const auto cert = certify_anticontraction(oracle, set);
            doc["certificate"] = cert.to_json();
            emit(report_json, doc);
            return cert.ok ? ML_OK : ML_CHECK_FAILED;
        }
        emit(report_json, doc);
        return set.complete ? ML_OK : ML_CHECK_FAILED;
    });
}

ml_status ml_gallery_list(char** report_json) {
    return guarded([&]() -> ml_status {
        json arr = json::array();
        for (const auto& e : gallery::gallery_entries()) {
            json doc;
            doc["name"] = e.name;
            doc["description"] = e.description;
            arr.push_back(std::move(doc));
        }
        json doc;
        doc["entries"] = std::move(arr);
        emit(report_json, doc);
        return ML_OK;
    });
}

ml_status ml_gallery_run(const char* name, const char* params_json, char** report_json) {
    return guarded([&]() -> ml_status {
        if (!name) throw ParseError("null gallery name");
        emit(report_json, gallery::run_gallery_entry(name, parse_params(params_json)));
        return ML_OK;
    });
}

ml_status ml_verify(const char* suite, const char* config_json, const char* params_json,
                    char** report_json) {
    return guarded([&]() -> ml_status {
        if (!suite) throw ParseError("null suite name");
        const RunConfig cfg = parse_config(config_json);
        const auto rep = run_verify_suite(suite, cfg, parse_params(params_json));
        emit(report_json, rep.to_json(cfg));
        return rep.passed() ? ML_OK : ML_CHECK_FAILED;
    });
}

}  // extern "C"
