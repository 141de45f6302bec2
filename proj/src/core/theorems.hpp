#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "expansion.hpp"
#include "metric_space.hpp"

namespace metriclab {

struct EnumerationOptions {
    // Full n^n scans are refused beyond this many maps.
    unsigned long long max_maps = 823543;  // 7^7
    // The pruned (injective, order-preserving-constraint) search is allowed
    // up to this many points.
    std::size_t pruned_max_n = 12;
    double tol = 0.0;
};

struct TaggedMap {
    SelfMap map;
    ExpansionClass cls;
};

// Exactly the self-maps with no shrinking pair, each tagged via classify.
// Uses the full n^n scan when it fits the budget; otherwise a backtracking
// search over injective maps with the pairwise non-shrinking constraint
// (complete: any expansive map on a space with positive off-diagonal
// distances is injective).
std::vector<TaggedMap> enumerate_expansive_maps(const FiniteMetricSpace& space,
                                                const EnumerationOptions& opts = {});

struct EnumerationReport {
    std::size_t n;
    unsigned long long total_maps;
    std::size_t expansive_count;
    bool all_expansive_are_isometric_bijections;
    std::optional<SelfMap> counterexample;
    json to_json() const;
};

EnumerationReport verify_compact_theorem(const FiniteMetricSpace& space,
                                         const EnumerationOptions& opts = {});

struct RecurrenceResult {
    bool found;
    unsigned long long n;  // minimal return index when found, best seen otherwise
    double distance;
    json to_json() const;
};

// Smallest n in [1, max_iter] with d(x, T^n x) <= epsilon.
RecurrenceResult recurrence_search(const FiniteMetricSpace& space, const SelfMap& map,
                                   PointId x, double epsilon, unsigned long long max_iter);

// Rule-based variant: step advances the orbit, dist measures back to the start.
RecurrenceResult recurrence_search(const std::function<double(unsigned long long)>& orbit_distance,
                                   double epsilon, unsigned long long max_iter);

// Truncation {x_1..x_N} of the sup-metric family with 1 + 1/n in slot n:
// d(x_m, x_n) = 1 + 1/min(m, n). Exact rational distances.
FiniteMetricSpace linf_counterexample_space(std::size_t N);

// On the infinite family {x_n} the only expansive self-map is the identity.
// A finite truncation keeps a boundary artifact: the last two points have
// identical distance profiles once the tail is cut, so their swap is an
// isometry. The rigidity that survives truncation, and the property the
// report certifies, is: the expansive maps are exactly the identity and the
// final-pair swap, and every one of them fixes the first N - 2 points.
struct CounterexampleReport {
    std::size_t N;
    bool distances_match_formula;
    bool all_pairwise_above_one;
    bool identity_up_to_tail_swap;  // expansive maps == {identity, final-pair swap}
    std::size_t fixed_prefix;       // leading points fixed by every expansive map
    std::vector<SelfMap> expansive_maps;
    json to_json() const;
};

CounterexampleReport verify_counterexample(std::size_t N, const EnumerationOptions& opts = {});

struct AnticontractionScanReport {
    bool none_found;  // true iff no self-map of the space or its small subsets
                      // has min ratio > 1 + tol
    std::optional<SelfMap> offending_map;
    std::vector<PointId> offending_subset;
    json to_json() const;
};

// Scans all self-maps of the space and of every subset of size <= max_subset.
AnticontractionScanReport no_anticontraction_check(const FiniteMetricSpace& space,
                                                   double tol = 0.0,
                                                   std::size_t max_subset = 5,
                                                   const EnumerationOptions& opts = {});

// Random valid metric: entries drawn uniformly from {1..10}, repaired to a
// metric by shortest-path completion. Deterministic for a given generator
// state.
FiniteMetricSpace random_metric_space(std::mt19937_64& rng, std::size_t n);

// All valid metrics on n points with entries from the given set (exhaustive
// over assignments, filtered by the triangle inequality). Exact mode.
std::vector<FiniteMetricSpace> all_metric_spaces(std::size_t n,
                                                 const std::vector<std::int64_t>& values);

}  // namespace metriclab
