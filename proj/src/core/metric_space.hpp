#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "rational.hpp"

namespace metriclab {

using PointId = std::size_t;
using json = nlohmann::ordered_json;

// Finite point set with an explicit symmetric distance matrix. Distances are
// held as doubles; an optional parallel rational matrix enables exact
// comparisons in the enumeration harness. Immutable after construction.
class FiniteMetricSpace {
public:
    static FiniteMetricSpace from_matrix(std::vector<std::string> labels,
                                         std::vector<std::vector<double>> dist);
    static FiniteMetricSpace from_exact(std::vector<std::string> labels,
                                        std::vector<std::vector<Rat>> dist);
    // Document format: { "labels": [...], "dist": [[...]] }. Matrix entries
    // may be numbers or "p/q" strings; any string entry switches the whole
    // space to exact mode (numeric entries must then be integers).
    static FiniteMetricSpace from_json(const json& doc);
    static FiniteMetricSpace from_json_text(const std::string& text);

    std::size_t size() const { return labels_.size(); }
    double dist(PointId i, PointId j) const { return dist_[i * size() + j]; }
    const std::string& label(PointId i) const { return labels_[i]; }
    bool exact() const { return exact_.has_value(); }
    const Rat& dist_exact(PointId i, PointId j) const { return (*exact_)[i * size() + j]; }

    // Submetric on the given points (indices into this space, in order).
    FiniteMetricSpace restrict(std::span<const PointId> points) const;

    json to_json() const;

private:
    FiniteMetricSpace() = default;
    std::vector<std::string> labels_;
    std::vector<double> dist_;
    std::optional<std::vector<Rat>> exact_;
};

enum class ViolationCode {
    NonzeroDiagonal,
    Asymmetric,
    NonPositive,
    Negative,
    TriangleViolation,
};

const char* violation_code_name(ViolationCode code);

struct Violation {
    ViolationCode code;
    std::array<PointId, 3> points;  // witness indices; unused slots repeat
    double lhs;
    double rhs;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    json to_json(const FiniteMetricSpace& space) const;
};

// Checks the four metric axioms within a relative tolerance. Degenerate
// triangles (equality) are valid.
ValidationReport validate_metric(const FiniteMetricSpace& space, double tol);

// Max pairwise distance; 0 for a singleton. Empty space -> domain error.
double diameter(const FiniteMetricSpace& space);

struct EpsilonNet {
    std::vector<PointId> centers;
    bool optimal;  // false when the greedy fallback produced an upper bound
};

// Minimum-cardinality set of centers whose closed epsilon-balls cover the
// space. Exact subset search up to exact_cutoff points, greedy beyond.
EpsilonNet min_epsilon_net(const FiniteMetricSpace& space, double epsilon,
                           std::size_t exact_cutoff = 20);

// Total self-map of a finite space, stored as an image table.
class SelfMap {
public:
    explicit SelfMap(std::vector<PointId> image);
    static SelfMap identity(std::size_t n);
    // Document format: { "image": [...] } with 0-based indices.
    static SelfMap from_json(const json& doc, std::size_t domain_size);
    static SelfMap from_json_text(const std::string& text, std::size_t domain_size);

    std::size_t size() const { return image_.size(); }
    PointId operator()(PointId x) const { return image_[x]; }
    const std::vector<PointId>& image() const { return image_; }
    bool is_permutation() const;

    json to_json() const;

    friend bool operator==(const SelfMap& a, const SelfMap& b) { return a.image_ == b.image_; }

private:
    std::vector<PointId> image_;
};

// T^n x; n = 0 returns x.
PointId iterate(const SelfMap& map, PointId x, unsigned long long n);

}  // namespace metriclab
