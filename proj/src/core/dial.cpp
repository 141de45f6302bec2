#include "dial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace metriclab::dial {

namespace {

// 2pi = T1 + T2 + T3; T1 and T2 carry 24 bits each, so T1*q and T2*q are
// exact for integer q below ~2^29.
constexpr double kTwoPi1 = 6.2831854820251465;
constexpr double kTwoPi2 = -1.7484555314695172e-07;
constexpr double kTwoPi3 = -6.8604979977715316e-15;
constexpr double kTwoPi = 6.283185307179586;

}  // namespace

double two_pi_residual(long long p, long long q) {
    const double qd = static_cast<double>(q);
    return ((static_cast<double>(p) - kTwoPi1 * qd) - kTwoPi2 * qd) - kTwoPi3 * qd;
}

double reduce_mod_2pi(unsigned long long n) {
    const auto k = static_cast<long long>(static_cast<double>(n) / kTwoPi);
    double r = two_pi_residual(static_cast<long long>(n), k);
    while (r < 0) r += kTwoPi;
    while (r >= kTwoPi) r -= kTwoPi;
    return r;
}

DialPoint dial_point(unsigned long long n) {
    const double a = reduce_mod_2pi(n);
    return {n, a, std::cos(a), std::sin(a)};
}

DialPoint rotate(const DialPoint& p) { return dial_point(p.n + 1); }

double chord(const DialPoint& a, const DialPoint& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

ContinuedFraction continued_fraction(double x, int depth) {
    if (x <= 0) throw std::domain_error("continued fraction requires x > 0");
    if (depth < 1) throw std::domain_error("depth must be positive");
    ContinuedFraction cf;
    cf.truncated = false;
    double v = x;
    long long p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // p1/q1 tracks the previous convergent
    for (int i = 0; i < depth; ++i) {
        const double fl = std::floor(v);
        if (fl > 9.0e15) {  // remainder was effectively zero
            cf.truncated = true;
            break;
        }
        const auto a = static_cast<long long>(fl);
        cf.coefficients.push_back(a);
        const long long p = a * p0 + p1;
        const long long q = a * q0 + q1;
        p1 = p0; q1 = q0; p0 = p; q0 = q;
        cf.convergents.push_back({p, q, std::abs(x * static_cast<double>(q) - static_cast<double>(p))});
        const double frac = v - fl;
        if (frac <= 0) break;  // exact rational, expansion terminates
        // convergent denominators beyond ~1/sqrt(eps) are noise in doubles
        if (static_cast<double>(q) * static_cast<double>(q) > 0.5 / std::numeric_limits<double>::epsilon()) {
            cf.truncated = true;
            break;
        }
        v = 1.0 / frac;
    }
    if (static_cast<int>(cf.coefficients.size()) < depth && !cf.truncated &&
        !cf.coefficients.empty() && cf.convergents.back().error > 0)
        cf.truncated = true;
    return cf;
}

ApproachSequence approach_sequence(unsigned long long target, int count) {
    if (count < 1) throw std::domain_error("count must be positive");
    ApproachSequence seq;
    seq.target = target;
    seq.truncated = false;
    const ContinuedFraction cf = continued_fraction(kTwoPi, 40);
    for (std::size_t k = 1; k + 1 < cf.convergents.size(); ++k) {
        if (cf.coefficients[k + 1] < 2) continue;  // not a strong best approximation
        const auto& c = cf.convergents[k];
        const double err = 2.0 * std::abs(std::sin(0.5 * two_pi_residual(c.p, c.q)));
        seq.indices.push_back(target + static_cast<unsigned long long>(c.p));
        seq.chord_errors.push_back(err);
        if (static_cast<int>(seq.indices.size()) == count) break;
    }
    if (static_cast<int>(seq.indices.size()) < count) seq.truncated = true;
    return seq;
}

json LimitPointReport::to_json() const {
    json doc;
    doc["found"] = found;
    doc["theta"] = theta;
    doc["witnesses"] = witnesses;
    doc["separated_from_integers"] = separated_from_integers;
    doc["cluster_spread"] = cluster_spread;
    return doc;
}

LimitPointReport find_limit_point(double epsilon, unsigned long long N) {
    if (epsilon <= 0) throw std::domain_error("epsilon must be positive");
    if (N < 3) throw std::domain_error("need at least 3 dial points");

    std::vector<std::pair<double, unsigned long long>> pts;  // (angle, index)
    pts.reserve(N);
    for (unsigned long long n = 0; n < N; ++n) pts.emplace_back(reduce_mod_2pi(n), n);
    std::sort(pts.begin(), pts.end());

    // angular radius of a chord-epsilon ball
    const double radius = 2.0 * std::asin(std::min(1.0, epsilon / 2.0));

    auto chord_angle = [](double a, double b) {
        double d = std::abs(a - b);
        if (d > std::numbers::pi) d = 2.0 * std::numbers::pi - d;
        return 2.0 * std::sin(d / 2.0);
    };

    LimitPointReport best{false, 0.0, {}, false, 0.0};
    std::size_t best_count = 0;
    bool best_separated = false;

    const std::size_t sz = pts.size();
    for (std::size_t i = 0; i < sz; ++i) {
        // grow a window (wrapping) while it fits inside one epsilon-ball
        std::vector<std::size_t> window{i};
        double lo = pts[i].first, hi = pts[i].first;
        for (std::size_t step = 1; step < sz; ++step) {
            const std::size_t j = (i + step) % sz;
            double a = pts[j].first;
            // unwrap relative to lo
            while (a < lo) a += 2.0 * std::numbers::pi;
            if (a - lo > 2.0 * radius) break;
            hi = a;
            window.push_back(j);
        }
        if (window.size() < 3) continue;

        // circular mean of the window
        double sx = 0, sy = 0;
        for (std::size_t j : window) {
            sx += std::cos(pts[j].first);
            sy += std::sin(pts[j].first);
        }
        double theta = std::atan2(sy, sx);
        if (theta < 0) theta += 2.0 * std::numbers::pi;

        // keep only witnesses actually within epsilon of e^{i theta}
        std::vector<unsigned long long> wit;
        double spread_hi = -1e300, spread_lo = 1e300;
        for (std::size_t j : window) {
            if (chord_angle(theta, pts[j].first) <= epsilon) {
                wit.push_back(pts[j].second);
                spread_hi = std::max(spread_hi, pts[j].first);
                spread_lo = std::min(spread_lo, pts[j].first);
            }
        }
        if (wit.size() < 3) continue;

        bool separated = true;
        for (unsigned long long k = 0; k <= N; ++k)
            if (chord_angle(theta, reduce_mod_2pi(k)) <= epsilon / 2.0) {
                separated = false;
                break;
            }

        const bool better = (separated && !best_separated) ||
                            (separated == best_separated && wit.size() > best_count);
        if (better) {
            best.found = true;
            best.theta = theta;
            std::sort(wit.begin(), wit.end());
            best.witnesses = wit;
            best.separated_from_integers = separated;
            best.cluster_spread = chord_angle(spread_lo, spread_hi);
            best_count = wit.size();
            best_separated = separated;
        }
    }
    return best;
}

FiniteMetricSpace dial_space(std::size_t N) {
    std::vector<std::string> labels;
    std::vector<DialPoint> pts;
    for (std::size_t n = 0; n < N; ++n) {
        labels.push_back("e^i" + std::to_string(n));
        pts.push_back(dial_point(n));
    }
    std::vector<std::vector<double>> d(N, std::vector<double>(N, 0.0));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) d[i][j] = d[j][i] = chord(pts[i], pts[j]);
    return FiniteMetricSpace::from_matrix(std::move(labels), std::move(d));
}

double non_surjectivity_margin(unsigned long long N) {
    const DialPoint origin = dial_point(0);
    double best = std::numeric_limits<double>::infinity();
    for (unsigned long long n = 1; n <= N; ++n) best = std::min(best, chord(origin, dial_point(n)));
    return best;
}

json DialDensityReport::to_json() const {
    json doc;
    doc["dense"] = dense;
    doc["worst_index"] = worst_index;
    doc["worst_distance"] = worst_distance;
    return doc;
}

DialDensityReport density_check(unsigned long long N, double epsilon) {
    if (epsilon <= 0) throw std::domain_error("epsilon must be positive");
    DialDensityReport rep{true, 0, 0.0};
    std::vector<DialPoint> image;
    image.reserve(N);
    for (unsigned long long m = 1; m <= N; ++m) image.push_back(dial_point(m));
    for (unsigned long long n = 0; n < N; ++n) {
        const DialPoint p = dial_point(n);
        double bestd = std::numeric_limits<double>::infinity();
        for (const auto& q : image) bestd = std::min(bestd, chord(p, q));
        if (bestd > rep.worst_distance) {
            rep.worst_distance = bestd;
            rep.worst_index = n;
        }
    }
    rep.dense = rep.worst_distance <= epsilon;
    return rep;
}

double isometry_max_deviation(std::size_t N) {
    std::vector<DialPoint> pts;
    pts.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) pts.push_back(dial_point(n));
    double worst = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            worst = std::max(worst,
                             std::abs(chord(pts[i + 1], pts[j + 1]) - chord(pts[i], pts[j])));
    return worst;
}

}  // namespace metriclab::dial
