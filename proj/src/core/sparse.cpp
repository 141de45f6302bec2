#include "sparse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace metriclab {

namespace {

double sup_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

double line_dist(const std::vector<double>& a, const std::vector<double>& b) {
    return std::abs(a[0] - b[0]);
}

}  // namespace

MetricOracle make_oracle(const std::string& name, const json& params) {
    if (name == "real-line")
        return {name, [](unsigned long long k) { return std::vector<double>{static_cast<double>(k)}; },
                line_dist};
    if (name == "integer-lattice-sup")
        return {name,
                [](unsigned long long k) {
                    // diagonal enumeration of the nonnegative quadrant
                    unsigned long long d = 0, acc = 0;
                    while (acc + d + 1 <= k) acc += ++d;
                    const unsigned long long a = k - acc;
                    return std::vector<double>{static_cast<double>(a),
                                               static_cast<double>(d - a)};
                },
                sup_dist};
    if (name == "geometric") {
        const double base = params.value("base", 3.0);
        if (base <= 1.0) throw ParseError("geometric oracle needs base > 1");
        return {name,
                [base](unsigned long long k) {
                    return std::vector<double>{std::pow(base, static_cast<double>(k))};
                },
                line_dist};
    }
    if (name == "bounded-interval") {
        // low-discrepancy sequence in [0, 1]; bounded, so the greedy scan
        // must exhaust its budget
        constexpr double phi = 0.6180339887498949;
        return {name,
                [](unsigned long long k) {
                    const double v = static_cast<double>(k) * phi;
                    return std::vector<double>{v - std::floor(v)};
                },
                line_dist};
    }
    throw ParseError("unknown oracle \"" + name + "\"");
}

std::vector<std::string> oracle_names() {
    return {"real-line", "integer-lattice-sup", "geometric", "bounded-interval"};
}

bool oracle_spot_check(const MetricOracle& oracle, std::size_t samples, double tol) {
    std::vector<std::vector<double>> pts;
    for (std::size_t k = 0; k < samples; ++k) pts.push_back(oracle.point_at(k));
    for (std::size_t i = 0; i < samples; ++i) {
        if (std::abs(oracle.distance(pts[i], pts[i])) > tol) return false;
        for (std::size_t j = i + 1; j < samples; ++j) {
            const double dij = oracle.distance(pts[i], pts[j]);
            // tol is relative: degenerate triangles at large magnitudes round
            // by ulps of the operands, not by an absolute amount
            if (std::abs(dij - oracle.distance(pts[j], pts[i])) > tol * std::max(1.0, dij))
                return false;
            if (dij < 0) return false;
            for (std::size_t k = 0; k < samples; ++k) {
                const double dik = oracle.distance(pts[i], pts[k]);
                const double djk = oracle.distance(pts[j], pts[k]);
                const double scale = std::max({1.0, dij, dik, djk});
                if (dik > dij + djk + tol * scale) return false;
            }
        }
    }
    return true;
}

json SparseSet::to_json() const {
    json doc;
    doc["oracle"] = oracle_name;
    doc["indices"] = indices;
    json pts = json::array();
    for (const auto& p : points) pts.push_back(p);
    doc["points"] = std::move(pts);
    doc["min_new"] = min_new;
    doc["max_prev"] = max_prev;
    doc["complete"] = complete;
    doc["multiplier"] = multiplier;
    return doc;
}

SparseSet greedy_sparse(const MetricOracle& oracle, std::size_t count,
                        unsigned long long scan_budget, double multiplier) {
    if (count < 2) throw std::domain_error("count must be >= 2");
    SparseSet set;
    set.oracle_name = oracle.name;
    set.multiplier = multiplier;
    set.complete = false;

    double max_pairwise = 0.0;
    for (unsigned long long k = 0; k < scan_budget && set.points.size() < count; ++k) {
        const auto cand = oracle.point_at(k);
        if (set.points.empty()) {
            set.indices.push_back(k);
            set.points.push_back(cand);
            continue;
        }
        double min_d = std::numeric_limits<double>::infinity();
        for (const auto& p : set.points) min_d = std::min(min_d, oracle.distance(p, cand));
        const bool accept = set.points.size() == 1 ? min_d > 0
                                                   : min_d > multiplier * max_pairwise;
        if (!accept) continue;
        if (set.points.size() >= 2) {
            set.min_new.push_back(min_d);
            set.max_prev.push_back(max_pairwise);
        }
        for (const auto& p : set.points)
            max_pairwise = std::max(max_pairwise, oracle.distance(p, cand));
        set.indices.push_back(k);
        set.points.push_back(cand);
    }
    set.complete = set.points.size() == count;
    return set;
}

SelfMap shift_map(const SparseSet& set) {
    const std::size_t n = set.points.size();
    if (n < 3) throw std::domain_error("shift map needs at least 3 points");
    std::vector<PointId> im(n);
    for (std::size_t i = 0; i + 1 < n; ++i) im[i] = i + 1;
    im[n - 1] = n - 1;
    return SelfMap(std::move(im));
}

FiniteMetricSpace sparse_space(const MetricOracle& oracle, const SparseSet& set) {
    const std::size_t n = set.points.size();
    std::vector<std::string> labels;
    for (unsigned long long k : set.indices) labels.push_back("x@" + std::to_string(k));
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            d[i][j] = d[j][i] = oracle.distance(set.points[i], set.points[j]);
    return FiniteMetricSpace::from_matrix(std::move(labels), std::move(d));
}

json AnticontractionCertificate::to_json() const {
    json doc;
    doc["ok"] = ok;
    doc["E_achieved"] = E_achieved;
    doc["worst_pair"] = {worst_a, worst_b};
    return doc;
}

AnticontractionCertificate certify_anticontraction(const MetricOracle& oracle,
                                                   const SparseSet& set) {
    const std::size_t n = set.points.size();
    if (n < 3) throw std::domain_error("certification needs at least 3 points");
    AnticontractionCertificate cert{true, std::numeric_limits<double>::infinity(), 0, 0};
    for (std::size_t a = 0; a + 1 < n - 1; ++a)
        for (std::size_t b = a + 1; b < n - 1; ++b) {
            const double before = oracle.distance(set.points[a], set.points[b]);
            const double after = oracle.distance(set.points[a + 1], set.points[b + 1]);
            const double r = after / before;
            if (r < cert.E_achieved) {
                cert.E_achieved = r;
                cert.worst_a = a;
                cert.worst_b = b;
            }
        }
    cert.ok = cert.E_achieved > set.multiplier;
    return cert;
}

}  // namespace metriclab
