#include "expansion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace metriclab {

const char* expansion_tag_name(ExpansionTag tag) {
    switch (tag) {
        case ExpansionTag::NotExpansive: return "NotExpansive";
        case ExpansionTag::Isometry: return "Isometry";
        case ExpansionTag::ProperNotStrict: return "ProperNotStrict";
        case ExpansionTag::StrictNotAnticontraction: return "StrictNotAnticontraction";
        case ExpansionTag::Anticontraction: return "Anticontraction";
    }
    return "unknown";
}

namespace {

json witness_json(const FiniteMetricSpace& space, const PairWitness& w) {
    json doc;
    doc["pair"] = {space.label(w.a), space.label(w.b)};
    doc["before"] = w.before;
    doc["after"] = w.after;
    return doc;
}

void require_classifiable(const FiniteMetricSpace& space) {
    if (space.size() < 2)
        throw std::domain_error("classification needs at least 2 points");
}

}  // namespace

json ExpansionClass::to_json(const FiniteMetricSpace& space) const {
    json doc;
    doc["class"] = expansion_tag_name(tag);
    if (expansion_constant) doc["E"] = *expansion_constant;
    json ws = json::array();
    auto add = [&](const char* kind, const std::optional<PairWitness>& w) {
        if (!w) return;
        json e = witness_json(space, *w);
        e["kind"] = kind;
        ws.push_back(std::move(e));
    };
    add("shrink", shrink_witness);
    add("strict", strict_witness);
    add("equality", equality_witness);
    doc["witnesses"] = std::move(ws);
    return doc;
}

RatioProfile ratio_profile(const FiniteMetricSpace& space, const SelfMap& map) {
    require_classifiable(space);
    const std::size_t n = space.size();
    RatioProfile prof;
    prof.min_ratio = std::numeric_limits<double>::infinity();
    prof.max_ratio = -1;
    prof.max_infinite = false;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const double before = space.dist(a, b);
            const double after = space.dist(map(a), map(b));
            if (before <= 0) {
                // degenerate input; treat ratio as +inf when after > 0
                if (after > 0) prof.max_infinite = true;
                continue;
            }
            const double r = after / before;
            if (r < prof.min_ratio) {
                prof.min_ratio = r;
                prof.argmin = {a, b, before, after};
            }
            if (r > prof.max_ratio) {
                prof.max_ratio = r;
                prof.argmax = {a, b, before, after};
            }
        }
    return prof;
}

ExpansionClass classify_pairs(std::size_t n_points,
                              const std::function<double(PointId, PointId)>& before,
                              const std::function<double(PointId, PointId)>& after,
                              double tol) {
    if (n_points < 2) throw std::domain_error("classification needs at least 2 points");

    ExpansionClass cls;
    bool any_shrink = false, any_strict = false, any_equal = false;
    bool all_raw_strict = true;
    double min_ratio = std::numeric_limits<double>::infinity();

    for (std::size_t a = 0; a < n_points; ++a)
        for (std::size_t b = a + 1; b < n_points; ++b) {
            const double db = before(a, b);
            const double da = after(a, b);
            const PairWitness w{a, b, db, da};
            int cmp;
            if (da < db * (1.0 - tol)) cmp = -1;
            else if (da > db * (1.0 + tol)) cmp = 1;
            else cmp = 0;

            if (cmp < 0) {
                any_shrink = true;
                if (!cls.shrink_witness) cls.shrink_witness = w;
            } else if (cmp > 0) {
                any_strict = true;
                if (!cls.strict_witness) cls.strict_witness = w;
            } else {
                any_equal = true;
                if (!cls.equality_witness) cls.equality_witness = w;
            }
            if (!(da > db)) all_raw_strict = false;
            if (db > 0) min_ratio = std::min(min_ratio, da / db);
        }

    if (any_shrink) {
        cls.tag = ExpansionTag::NotExpansive;
        cls.strict_witness.reset();
        cls.equality_witness.reset();
        return cls;
    }
    cls.shrink_witness.reset();
    if (!any_strict) {
        cls.tag = ExpansionTag::Isometry;
        return cls;
    }
    if (!any_equal) {
        if (min_ratio > 1.0 + tol) {
            cls.tag = ExpansionTag::Anticontraction;
            cls.expansion_constant = min_ratio;
        } else {
            cls.tag = ExpansionTag::StrictNotAnticontraction;
        }
        return cls;
    }
    if (all_raw_strict) {
        cls.tag = ExpansionTag::StrictNotAnticontraction;
        cls.equality_witness.reset();
        return cls;
    }
    cls.tag = ExpansionTag::ProperNotStrict;
    return cls;
}

ExpansionClass classify(const FiniteMetricSpace& space, const SelfMap& map, double tol) {
    require_classifiable(space);
    const std::size_t n = space.size();
    const bool exact = space.exact() && tol == 0.0;
    if (!exact)
        return classify_pairs(
            n, [&](PointId a, PointId b) { return space.dist(a, b); },
            [&](PointId a, PointId b) { return space.dist(map(a), map(b)); }, tol);

    ExpansionClass cls;
    bool any_shrink = false, any_strict = false, any_equal = false;
    bool all_raw_strict = true;
    double min_ratio = std::numeric_limits<double>::infinity();

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const double before = space.dist(a, b);
            const double after = space.dist(map(a), map(b));
            const PairWitness w{a, b, before, after};

            int cmp;  // -1 shrink, 0 equal (within tol), +1 strict growth
            if (exact) {
                const Rat& rb = space.dist_exact(a, b);
                const Rat& ra = space.dist_exact(map(a), map(b));
                cmp = ra < rb ? -1 : (rb < ra ? 1 : 0);
            } else {
                if (after < before * (1.0 - tol)) cmp = -1;
                else if (after > before * (1.0 + tol)) cmp = 1;
                else cmp = 0;
            }

            if (cmp < 0) {
                any_shrink = true;
                if (!cls.shrink_witness) cls.shrink_witness = w;
            } else if (cmp > 0) {
                any_strict = true;
                if (!cls.strict_witness) cls.strict_witness = w;
            } else {
                any_equal = true;
                if (!cls.equality_witness) cls.equality_witness = w;
            }
            if (!(after > before)) all_raw_strict = false;
            if (before > 0) min_ratio = std::min(min_ratio, after / before);
        }

    if (any_shrink) {
        cls.tag = ExpansionTag::NotExpansive;
        cls.strict_witness.reset();
        cls.equality_witness.reset();
        return cls;
    }
    cls.shrink_witness.reset();
    if (!any_strict) {
        cls.tag = ExpansionTag::Isometry;
        return cls;
    }
    if (!any_equal) {
        // strict on every pair; on a finite space the min ratio certifies a
        // uniform constant unless it sits inside the tolerance band of 1
        if (min_ratio > 1.0 + tol) {
            cls.tag = ExpansionTag::Anticontraction;
            cls.expansion_constant = min_ratio;
        } else {
            cls.tag = ExpansionTag::StrictNotAnticontraction;
        }
        return cls;
    }
    if (all_raw_strict) {
        // every pair grows in the raw comparison, but some growth is within
        // tol of equality: strict without a certifiable constant
        cls.tag = ExpansionTag::StrictNotAnticontraction;
        cls.equality_witness.reset();
        return cls;
    }
    cls.tag = ExpansionTag::ProperNotStrict;
    return cls;
}

SurjectivityReport is_surjective(const FiniteMetricSpace& space, const SelfMap& map) {
    std::vector<bool> hit(space.size(), false);
    for (std::size_t x = 0; x < space.size(); ++x) hit[map(x)] = true;
    SurjectivityReport rep;
    for (std::size_t p = 0; p < space.size(); ++p)
        if (!hit[p]) rep.missing.push_back(p);
    rep.surjective = rep.missing.empty();
    return rep;
}

json SurjectivityReport::to_json(const FiniteMetricSpace& space) const {
    json doc;
    doc["surjective"] = surjective;
    json m = json::array();
    for (PointId p : missing) m.push_back(space.label(p));
    doc["missing"] = std::move(m);
    return doc;
}

DensityReport range_density(const FiniteMetricSpace& sample, const SelfMap& map, double epsilon) {
    if (epsilon <= 0) throw std::domain_error("epsilon must be positive");
    const std::size_t n = sample.size();
    DensityReport rep{true, 0, 0.0};
    for (std::size_t p = 0; p < n; ++p) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t x = 0; x < n; ++x) best = std::min(best, sample.dist(p, map(x)));
        if (best > rep.worst_distance) {
            rep.worst_distance = best;
            rep.worst_point = p;
        }
    }
    rep.dense = rep.worst_distance <= epsilon;
    return rep;
}

json DensityReport::to_json(const FiniteMetricSpace& space) const {
    json doc;
    doc["dense"] = dense;
    doc["worst_point"] = space.label(worst_point);
    doc["worst_distance"] = worst_distance;
    return doc;
}

}  // namespace metriclab
