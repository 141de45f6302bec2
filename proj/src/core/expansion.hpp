#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "metric_space.hpp"

namespace metriclab {

enum class ExpansionTag {
    NotExpansive,
    Isometry,
    ProperNotStrict,
    StrictNotAnticontraction,
    Anticontraction,
};

const char* expansion_tag_name(ExpansionTag tag);

struct PairWitness {
    PointId a;
    PointId b;
    double before;  // d(a, b)
    double after;   // d(Ta, Tb)
};

struct ExpansionClass {
    ExpansionTag tag;
    // Anticontraction: certified constant E = min ratio, E > 1.
    std::optional<double> expansion_constant;
    // NotExpansive: a shrinking pair. ProperNotStrict: strict pair + equality
    // pair. Others: extremal pairs for reference.
    std::optional<PairWitness> shrink_witness;
    std::optional<PairWitness> strict_witness;
    std::optional<PairWitness> equality_witness;

    json to_json(const FiniteMetricSpace& space) const;
};

struct RatioProfile {
    double min_ratio;
    double max_ratio;
    bool max_infinite;  // never set for valid metrics (d > 0 off-diagonal)
    PairWitness argmin;
    PairWitness argmax;
};

// min/max of d(Tx,Ty)/d(x,y) over unordered distinct pairs. Ties resolve to
// the lowest pair index, so the result is deterministic.
RatioProfile ratio_profile(const FiniteMetricSpace& space, const SelfMap& map);

// Four-tier classification. tol is multiplicative on ratios. When the space
// carries exact distances and tol == 0, comparisons are exact rational.
ExpansionClass classify(const FiniteMetricSpace& space, const SelfMap& map, double tol);

// Rule-based variant for maps given on a sampled domain whose images need
// not stay inside the sample: before(a,b) is the distance of a pair,
// after(a,b) the distance of its images. The verdict only certifies the
// sampled restriction.
ExpansionClass classify_pairs(std::size_t n_points,
                              const std::function<double(PointId, PointId)>& before,
                              const std::function<double(PointId, PointId)>& after,
                              double tol);

struct SurjectivityReport {
    bool surjective;
    std::vector<PointId> missing;
    json to_json(const FiniteMetricSpace& space) const;
};

SurjectivityReport is_surjective(const FiniteMetricSpace& space, const SelfMap& map);

struct DensityReport {
    bool dense;
    PointId worst_point;
    double worst_distance;  // distance from worst_point to the image set
    json to_json(const FiniteMetricSpace& space) const;
};

// True iff every point of the sample lies within epsilon of some image point.
DensityReport range_density(const FiniteMetricSpace& sample, const SelfMap& map, double epsilon);

}  // namespace metriclab
