#pragma once

#include <functional>
#include <string>
#include <vector>

#include "metric_space.hpp"

namespace metriclab {

// Lazily sampled metric space: a point generator plus a distance rule.
// Models unbounded and countable spaces that cannot be tabulated.
struct MetricOracle {
    std::string name;
    std::function<std::vector<double>(unsigned long long)> point_at;
    std::function<double(const std::vector<double>&, const std::vector<double>&)> distance;
};

// Built-ins: "real-line" (point k on the real axis), "integer-lattice-sup"
// (diagonal enumeration of the nonnegative quadrant, sup metric),
// "geometric" (3^k on the real axis, base configurable), "bounded-interval"
// (a dense sequence in [0, 1]).
MetricOracle make_oracle(const std::string& name, const json& params = json::object());
std::vector<std::string> oracle_names();

// Spot-checks symmetry / zero self-distance on sampled pairs and the
// triangle inequality on sampled triples.
bool oracle_spot_check(const MetricOracle& oracle, std::size_t samples, double tol);

struct SparseSet {
    std::string oracle_name;
    std::vector<unsigned long long> indices;       // oracle indices, scan order
    std::vector<std::vector<double>> points;
    // per-acceptance certificates, one entry per point past the second:
    std::vector<double> min_new;   // min distance from the accepted point to prior ones
    std::vector<double> max_prev;  // max pairwise distance among prior ones
    bool complete;                 // false: scan budget ran out (space may be bounded)
    double multiplier;             // separation predicate min > multiplier * max
    json to_json() const;
};

// Scans oracle points in index order and accepts the first point satisfying
// min_i d(x, x_i) > multiplier * max_{i,j} d(x_i, x_j) over those already
// accepted. Deterministic by construction.
SparseSet greedy_sparse(const MetricOracle& oracle, std::size_t count,
                        unsigned long long scan_budget, double multiplier = 2.0);

// Finite restriction of the index-shift map: x_k -> x_{k+1}, last point
// fixed. The fixed point is a boundary convention; certification covers
// interior pairs only.
SelfMap shift_map(const SparseSet& set);

// The sparse set as a finite metric space under the oracle distance.
FiniteMetricSpace sparse_space(const MetricOracle& oracle, const SparseSet& set);

struct AnticontractionCertificate {
    bool ok;
    double E_achieved;  // min over interior pairs of d(x_{a+1}, x_{b+1}) / d(x_a, x_b)
    std::size_t worst_a;
    std::size_t worst_b;
    json to_json() const;
};

// Certifies E_achieved > multiplier over the interior pairs of the shift map.
AnticontractionCertificate certify_anticontraction(const MetricOracle& oracle,
                                                   const SparseSet& set);

}  // namespace metriclab
