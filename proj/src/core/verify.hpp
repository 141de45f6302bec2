#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "metric_space.hpp"

namespace metriclab {

struct RunConfig {
    std::uint64_t seed = 0;
    double tol = 1e-9;
    unsigned long long budget = 823543;  // 7^7 maps
    int workers = 1;

    static RunConfig from_json(const json& doc);
    json to_json() const;
};

struct CheckResult {
    std::string name;
    bool passed;
    json details;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
    json to_json(const RunConfig& config) const;
};

// Suites: "compact", "counterexample", "dial", "sparse", "boundedness".
// Unknown suite -> ParseError. Extra knobs ride along in the params object
// (max_size, n, epsilon, points, ...).
SuiteReport run_verify_suite(const std::string& suite, const RunConfig& config,
                             const json& params = json::object());

std::vector<std::string> verify_suite_names();

const char* artifact_version();

}  // namespace metriclab
