#include "metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace metriclab {

namespace {

Rat rat_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat::integer(std::stoll(s));
        return Rat{std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
    } catch (const std::exception&) {
        throw ParseError("bad rational literal: \"" + s + "\"");
    }
}

}  // namespace

FiniteMetricSpace FiniteMetricSpace::from_matrix(std::vector<std::string> labels,
                                                std::vector<std::vector<double>> dist) {
    const std::size_t n = labels.size();
    if (dist.size() != n)
        throw StructuralError("distance matrix has " + std::to_string(dist.size()) +
                              " rows for " + std::to_string(n) + " labels");
    FiniteMetricSpace s;
    s.labels_ = std::move(labels);
    s.dist_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (dist[i].size() != n)
            throw StructuralError("row " + std::to_string(i) + " has " +
                                  std::to_string(dist[i].size()) + " entries, expected " +
                                  std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) s.dist_[i * n + j] = dist[i][j];
    }
    return s;
}

FiniteMetricSpace FiniteMetricSpace::from_exact(std::vector<std::string> labels,
                                               std::vector<std::vector<Rat>> dist) {
    const std::size_t n = labels.size();
    if (dist.size() != n) throw StructuralError("exact matrix row count mismatch");
    FiniteMetricSpace s;
    s.labels_ = std::move(labels);
    s.dist_.resize(n * n);
    s.exact_.emplace(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (dist[i].size() != n)
            throw StructuralError("exact matrix row " + std::to_string(i) + " size mismatch");
        for (std::size_t j = 0; j < n; ++j) {
            (*s.exact_)[i * n + j] = dist[i][j];
            s.dist_[i * n + j] = dist[i][j].to_double();
        }
    }
    return s;
}

FiniteMetricSpace FiniteMetricSpace::from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("labels") || !doc.contains("dist"))
        throw ParseError("space document must be an object with \"labels\" and \"dist\"");
    const auto& jl = doc["labels"];
    const auto& jd = doc["dist"];
    if (!jl.is_array() || !jd.is_array()) throw ParseError("\"labels\" and \"dist\" must be arrays");

    std::vector<std::string> labels;
    for (const auto& l : jl) {
        if (!l.is_string()) throw ParseError("labels must be strings");
        labels.push_back(l.get<std::string>());
    }

    bool any_string = false;
    for (const auto& row : jd) {
        if (!row.is_array()) throw ParseError("\"dist\" must be a matrix");
        for (const auto& e : row)
            if (e.is_string()) any_string = true;
            else if (!e.is_number()) throw ParseError("matrix entries must be numbers or \"p/q\" strings");
    }

    if (any_string) {
        std::vector<std::vector<Rat>> m;
        for (const auto& row : jd) {
            std::vector<Rat> r;
            for (const auto& e : row) {
                if (e.is_string()) r.push_back(rat_from_string(e.get<std::string>()));
                else if (e.is_number_integer()) r.push_back(Rat::integer(e.get<std::int64_t>()));
                else throw ParseError("exact-mode matrix cannot mix in non-integer floats");
            }
            m.push_back(std::move(r));
        }
        return from_exact(std::move(labels), std::move(m));
    }

    std::vector<std::vector<double>> m;
    for (const auto& row : jd) {
        std::vector<double> r;
        for (const auto& e : row) r.push_back(e.get<double>());
        m.push_back(std::move(r));
    }
    return from_matrix(std::move(labels), std::move(m));
}

FiniteMetricSpace FiniteMetricSpace::from_json_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("invalid JSON");
    return from_json(doc);
}

FiniteMetricSpace FiniteMetricSpace::restrict(std::span<const PointId> points) const {
    FiniteMetricSpace s;
    const std::size_t m = points.size();
    s.labels_.reserve(m);
    for (PointId p : points) s.labels_.push_back(labels_.at(p));
    s.dist_.resize(m * m);
    if (exact_) s.exact_.emplace(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            s.dist_[i * m + j] = dist(points[i], points[j]);
            if (exact_) (*s.exact_)[i * m + j] = dist_exact(points[i], points[j]);
        }
    return s;
}

json FiniteMetricSpace::to_json() const {
    json doc;
    doc["labels"] = labels_;
    json rows = json::array();
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) {
            if (exact_) row.push_back(dist_exact(i, j).to_string());
            else row.push_back(dist(i, j));
        }
        rows.push_back(std::move(row));
    }
    doc["dist"] = std::move(rows);
    return doc;
}

const char* violation_code_name(ViolationCode code) {
    switch (code) {
        case ViolationCode::NonzeroDiagonal: return "nonzero_diagonal";
        case ViolationCode::Asymmetric: return "asymmetric";
        case ViolationCode::NonPositive: return "nonpositive_offdiagonal";
        case ViolationCode::Negative: return "negative_distance";
        case ViolationCode::TriangleViolation: return "triangle_violation";
    }
    return "unknown";
}

json ValidationReport::to_json(const FiniteMetricSpace& space) const {
    json doc;
    doc["valid"] = ok();
    json vs = json::array();
    for (const auto& v : violations) {
        json e;
        e["code"] = violation_code_name(v.code);
        json pts = json::array();
        for (PointId p : v.points) pts.push_back(space.label(p));
        e["points"] = std::move(pts);
        e["lhs"] = v.lhs;
        e["rhs"] = v.rhs;
        vs.push_back(std::move(e));
    }
    doc["violations"] = std::move(vs);
    return doc;
}

ValidationReport validate_metric(const FiniteMetricSpace& space, double tol) {
    ValidationReport report;
    const std::size_t n = space.size();
    const double scale = [&] {
        double m = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m = std::max(m, std::abs(space.dist(i, j)));
        return m > 0 ? m : 1.0;
    }();
    const double eps = tol * scale;

    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(space.dist(i, i)) > eps)
            report.violations.push_back({ViolationCode::NonzeroDiagonal, {i, i, i},
                                         space.dist(i, i), 0.0});
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(space.dist(i, j) - space.dist(j, i)) > eps)
                report.violations.push_back({ViolationCode::Asymmetric, {i, j, j},
                                             space.dist(i, j), space.dist(j, i)});
            if (space.dist(i, j) < -eps)
                report.violations.push_back({ViolationCode::Negative, {i, j, j},
                                             space.dist(i, j), 0.0});
            else if (space.dist(i, j) <= eps)
                report.violations.push_back({ViolationCode::NonPositive, {i, j, j},
                                             space.dist(i, j), 0.0});
        }
    }
    // one witness per (i,k) pair is enough
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || j == k) continue;
                const double lhs = space.dist(i, k);
                const double rhs = space.dist(i, j) + space.dist(j, k);
                if (lhs > rhs + eps) {
                    report.violations.push_back({ViolationCode::TriangleViolation, {i, j, k},
                                                 lhs, rhs});
                    break;
                }
            }
    return report;
}

double diameter(const FiniteMetricSpace& space) {
    const std::size_t n = space.size();
    if (n == 0) throw std::domain_error("diameter of an empty space");
    double d = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) d = std::max(d, space.dist(i, j));
    return d;
}

namespace {

EpsilonNet greedy_net(const FiniteMetricSpace& space, double epsilon) {
    const std::size_t n = space.size();
    std::vector<bool> covered(n, false);
    EpsilonNet net{{}, false};
    std::size_t remaining = n;
    while (remaining > 0) {
        std::size_t best = 0, best_gain = 0;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t gain = 0;
            for (std::size_t p = 0; p < n; ++p)
                if (!covered[p] && space.dist(c, p) <= epsilon) ++gain;
            if (gain > best_gain) { best_gain = gain; best = c; }
        }
        net.centers.push_back(best);
        for (std::size_t p = 0; p < n; ++p)
            if (space.dist(best, p) <= epsilon) {
                if (!covered[p]) --remaining;
                covered[p] = true;
            }
    }
    return net;
}

}  // namespace

EpsilonNet min_epsilon_net(const FiniteMetricSpace& space, double epsilon,
                           std::size_t exact_cutoff) {
    if (space.size() == 0) throw std::domain_error("epsilon net of an empty space");
    if (epsilon <= 0) throw std::domain_error("epsilon must be positive");
    const std::size_t n = space.size();
    if (n > exact_cutoff || n > 25) return greedy_net(space, epsilon);

    // Exact minimum set cover over ball masks, DP over point subsets.
    std::vector<std::uint32_t> ball(n, 0);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t p = 0; p < n; ++p)
            if (space.dist(c, p) <= epsilon) ball[c] |= (1u << p);

    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    const std::uint8_t inf = 255;
    std::vector<std::uint8_t> cost(full + 1u, inf);
    std::vector<std::uint8_t> choice(full + 1u, inf);
    cost[0] = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        // cover the lowest uncovered point with some ball containing it
        const std::uint32_t low = mask & (~mask + 1u);
        for (std::size_t c = 0; c < n; ++c) {
            if (!(ball[c] & low)) continue;
            const std::uint8_t sub = cost[mask & ~ball[c]];
            if (sub != inf && sub + 1 < cost[mask]) {
                cost[mask] = static_cast<std::uint8_t>(sub + 1);
                choice[mask] = static_cast<std::uint8_t>(c);
            }
        }
    }

    EpsilonNet net{{}, true};
    std::uint32_t mask = full;
    while (mask) {
        const std::size_t c = choice[mask];
        net.centers.push_back(c);
        mask &= ~ball[c];
    }
    std::sort(net.centers.begin(), net.centers.end());
    return net;
}

SelfMap::SelfMap(std::vector<PointId> image) : image_(std::move(image)) {
    for (PointId p : image_)
        if (p >= image_.size())
            throw StructuralError("self-map image leaves the domain: index " + std::to_string(p));
}

SelfMap SelfMap::identity(std::size_t n) {
    std::vector<PointId> im(n);
    for (std::size_t i = 0; i < n; ++i) im[i] = i;
    return SelfMap(std::move(im));
}

SelfMap SelfMap::from_json(const json& doc, std::size_t domain_size) {
    if (!doc.is_object() || !doc.contains("image") || !doc["image"].is_array())
        throw ParseError("map document must be an object with an \"image\" array");
    std::vector<PointId> im;
    for (const auto& e : doc["image"]) {
        if (!e.is_number_integer() || e.get<std::int64_t>() < 0)
            throw ParseError("image entries must be nonnegative indices");
        im.push_back(e.get<std::size_t>());
    }
    if (im.size() != domain_size)
        throw StructuralError("map covers " + std::to_string(im.size()) + " points, domain has " +
                              std::to_string(domain_size));
    return SelfMap(std::move(im));
}

SelfMap SelfMap::from_json_text(const std::string& text, std::size_t domain_size) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("invalid JSON");
    return from_json(doc, domain_size);
}

bool SelfMap::is_permutation() const {
    std::vector<bool> seen(image_.size(), false);
    for (PointId p : image_) {
        if (seen[p]) return false;
        seen[p] = true;
    }
    return true;
}

json SelfMap::to_json() const {
    json doc;
    doc["image"] = image_;
    return doc;
}

PointId iterate(const SelfMap& map, PointId x, unsigned long long n) {
    for (unsigned long long i = 0; i < n; ++i) x = map(x);
    return x;
}

}  // namespace metriclab
