#include "gallery.hpp"

#include <algorithm>
#include <cmath>

#include "dial.hpp"
#include "expansion.hpp"

namespace metriclab::gallery {

SeqPoint::SeqPoint(std::vector<Rat> coords) : coords_(std::move(coords)) {
    while (!coords_.empty() && coords_.back() == Rat::integer(0)) coords_.pop_back();
}

Rat sup_distance(const SeqPoint& x, const SeqPoint& y) {
    const std::size_t n = std::max(x.support(), y.support());
    Rat d = Rat::integer(0);
    for (std::size_t k = 0; k < n; ++k) {
        const Rat diff = (x.coord(k) - y.coord(k)).abs();
        if (d < diff) d = diff;
    }
    return d;
}

SeqPoint right_shift(const SeqPoint& x) {
    std::vector<Rat> c;
    c.reserve(x.support() + 1);
    c.push_back(Rat::integer(0));
    for (const Rat& r : x.coords()) c.push_back(r);
    return SeqPoint(std::move(c));
}

SeqPoint interleave_square(const SeqPoint& x) {
    std::vector<Rat> c;
    c.reserve(2 * x.support());
    for (const Rat& r : x.coords()) {
        c.push_back(r);
        c.push_back(r * r);
    }
    return SeqPoint(std::move(c));
}

double chi_distance(unsigned long long m, unsigned long long n) {
    if (m < 1 || n < 1) throw std::domain_error("chi indices start at 1");
    if (m == n) return 0.0;
    const auto lo = static_cast<double>(std::min(m, n));
    const auto hi = static_cast<double>(std::max(m, n));
    return std::sqrt(2.0 - 2.0 * std::sqrt(lo / hi));
}

unsigned long long chi_scale_map(unsigned long long k, unsigned long long n) {
    if (k < 1) throw std::domain_error("scale factor starts at 1");
    return k * n;
}

unsigned long long chi_square_map(unsigned long long n) { return n * n; }

double chi_square_ratio(unsigned long long n) {
    if (n < 2) throw std::domain_error("ratio needs n >= 2");
    // d(f_{n^4}, f_{n^2}) / d(f_{n^2}, f_n) without forming n^4
    const auto nd = static_cast<double>(n);
    return std::sqrt(2.0 - 2.0 / nd) / std::sqrt(2.0 - 2.0 / std::sqrt(nd));
}

double bounded_metric(double x, double y) {
    const double d = std::abs(x - y);
    return d / (d + 1.0);
}

FiniteMetricSpace chi_space(unsigned long long max_n) {
    const std::size_t n = max_n;
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("f" + std::to_string(i));
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            d[i][j] = d[j][i] = chi_distance(i + 1, j + 1);
    return FiniteMetricSpace::from_matrix(std::move(labels), std::move(d));
}

namespace {

// Exact classification of a rule on a sampled set of sequence points.
ExpansionClass classify_seq_sample(const std::vector<SeqPoint>& sample,
                                   const std::function<SeqPoint(const SeqPoint&)>& map) {
    std::vector<SeqPoint> images;
    images.reserve(sample.size());
    for (const auto& p : sample) images.push_back(map(p));
    return classify_pairs(
        sample.size(),
        [&](PointId a, PointId b) { return sup_distance(sample[a], sample[b]).to_double(); },
        [&](PointId a, PointId b) { return sup_distance(images[a], images[b]).to_double(); },
        0.0);
}

SeqPoint seq(std::initializer_list<Rat> coords) { return SeqPoint(std::vector<Rat>(coords)); }

json run_rotation(const json& params) {
    const auto n = params.value("points", 1000ull);
    json doc;
    doc["space"] = "dial set {e^in} with the chord metric";
    doc["map"] = "counterclockwise rotation by one radian";
    doc["class"] = "Isometry";
    doc["sampled_points"] = n;
    doc["isometry_max_deviation"] = dial::isometry_max_deviation(std::min<std::size_t>(n, 2000));
    doc["non_surjectivity_margin"] = dial::non_surjectivity_margin(n);
    doc["fact"] = "an isometry on a totally bounded space that is not surjective";
    return doc;
}

json run_right_shift(const json&) {
    std::vector<SeqPoint> sample{
        SeqPoint::zero(),
        seq({Rat{1, 1}}),
        seq({Rat{1, 2}}),
        seq({Rat{-2, 3}, Rat{5, 7}}),
        seq({Rat{0, 1}, Rat{3, 2}, Rat{-1, 4}}),
    };
    const auto cls = classify_seq_sample(sample, right_shift);
    json doc;
    doc["space"] = "finitely supported sequences under the sup metric";
    doc["map"] = "right shift (x1,x2,...) -> (0,x1,x2,...)";
    doc["class"] = expansion_tag_name(cls.tag);
    doc["fact"] = "an isometry that is not a proper expansion";
    return doc;
}

json run_interleave_square(const json&) {
    const SeqPoint x = seq({Rat{1, 1}});
    const SeqPoint y = seq({Rat{1, 2}});
    const SeqPoint z = SeqPoint::zero();
    std::vector<SeqPoint> sample{x, y, z};
    const auto cls = classify_seq_sample(sample, interleave_square);

    json doc;
    doc["space"] = "finitely supported sequences under the sup metric";
    doc["map"] = "(x1,x2,...) -> (x1,x1^2,x2,x2^2,...)";
    doc["class"] = expansion_tag_name(cls.tag);
    doc["strict_pair"] = {
        {"before", sup_distance(x, y).to_string()},
        {"after", sup_distance(interleave_square(x), interleave_square(y)).to_string()},
    };
    doc["equality_pair"] = {
        {"before", sup_distance(x, z).to_string()},
        {"after", sup_distance(interleave_square(x), interleave_square(z)).to_string()},
    };
    doc["fact"] = "a proper expansion that is not strict";
    return doc;
}

json run_chi_scale(const json& params) {
    const auto k = params.value("k", 3ull);
    const auto max_n = params.value("max_n", 50ull);
    double worst = 0.0;
    for (unsigned long long m = 1; m <= max_n; ++m)
        for (unsigned long long n = m + 1; n <= max_n; ++n)
            worst = std::max(worst, std::abs(chi_distance(chi_scale_map(k, m), chi_scale_map(k, n)) -
                                             chi_distance(m, n)));
    const auto cls = classify_pairs(
        max_n,
        [](PointId a, PointId b) { return chi_distance(a + 1, b + 1); },
        [k](PointId a, PointId b) {
            return chi_distance(chi_scale_map(k, a + 1), chi_scale_map(k, b + 1));
        },
        0.0);
    json doc;
    doc["space"] = "chi family f_n = sqrt(n) * indicator[0,1/n] in L2(0,inf)";
    doc["map"] = "f_n -> f_{kn}, k = " + std::to_string(k);
    doc["class"] = expansion_tag_name(cls.tag);
    doc["max_deviation"] = worst;
    doc["fact"] = "exactly distance-preserving: the ratio m/n is invariant under k";
    return doc;
}

json run_chi_square(const json& params) {
    const auto max_n = params.value("max_n", 1000000ull);
    bool monotone = true, above_one = true;
    double prev = chi_square_ratio(2);
    for (unsigned long long n = 3; n <= max_n; ++n) {
        const double r = chi_square_ratio(n);
        if (!(r < prev)) monotone = false;
        if (!(r > 1.0)) above_one = false;
        prev = r;
    }
    const auto cls = classify_pairs(
        50, [](PointId a, PointId b) { return chi_distance(a + 1, b + 1); },
        [](PointId a, PointId b) {
            return chi_distance(chi_square_map(a + 1), chi_square_map(b + 1));
        },
        0.0);
    json doc;
    doc["space"] = "chi family f_n = sqrt(n) * indicator[0,1/n] in L2(0,inf)";
    doc["map"] = "f_n -> f_{n^2}";
    doc["sampled_class"] = expansion_tag_name(cls.tag);
    doc["class"] = "StrictNotAnticontraction";
    doc["ratio_monotone_decreasing"] = monotone;
    doc["ratios_above_one"] = above_one;
    doc["ratio_at_max_n"] = prev;
    doc["fact"] = "strict expansion; growth ratios at pairs (n^2, n) tend to 1, so no "
                  "uniform constant exists";
    return doc;
}

json run_doubling_standard(const json&) {
    const double pts[] = {0.0, 1.0, 2.0};
    const auto cls = classify_pairs(
        3, [&](PointId a, PointId b) { return std::abs(pts[a] - pts[b]); },
        [&](PointId a, PointId b) { return std::abs(2 * pts[a] - 2 * pts[b]); }, 0.0);
    json doc;
    doc["space"] = "real line, standard metric (sample {0,1,2})";
    doc["map"] = "x -> 2x";
    doc["class"] = expansion_tag_name(cls.tag);
    if (cls.expansion_constant) doc["E"] = *cls.expansion_constant;
    doc["fact"] = "anticontraction with expansion constant E = 2";
    return doc;
}

json run_doubling_bounded(const json& params) {
    const auto max_x = params.value("max_x", 1000000.0);
    bool monotone = true, above_one = true;
    double prev = 0.0, ratio = 0.0;
    for (double x = 1.0; x <= max_x; x *= 2.0) {
        ratio = bounded_metric(2 * x, 0) / bounded_metric(x, 0);
        if (prev != 0.0 && !(ratio < prev)) monotone = false;
        if (!(ratio > 1.0)) above_one = false;
        prev = ratio;
    }
    json doc;
    doc["space"] = "real line under rho(x,y) = |x-y| / (|x-y| + 1)";
    doc["map"] = "x -> 2x";
    doc["class"] = "StrictNotAnticontraction";
    doc["ratio_at_1"] = bounded_metric(2, 0) / bounded_metric(1, 0);
    doc["ratio_at_max_x"] = ratio;
    doc["ratio_monotone_decreasing"] = monotone;
    doc["ratios_above_one"] = above_one;
    doc["fact"] = "the same doubling map is merely a strict expansion once the line is "
                  "remetrized to a bounded space";
    return doc;
}

}  // namespace

const std::vector<GalleryEntry>& gallery_entries() {
    static const std::vector<GalleryEntry> entries{
        {"rotation", "rotation by one radian on the dial set: nonsurjective isometry"},
        {"right-shift", "right shift on bounded sequences: isometry"},
        {"interleave-square", "coordinate interleave-with-square: proper, not strict"},
        {"chi-scale", "index scaling on the chi family: isometry"},
        {"chi-square", "index squaring on the chi family: strict, not anticontraction"},
        {"doubling-standard", "x -> 2x on the real line: anticontraction, E = 2"},
        {"doubling-bounded", "x -> 2x on the bounded remetrized line: strict only"},
    };
    return entries;
}

json run_gallery_entry(const std::string& name, const json& params) {
    json doc;
    if (name == "rotation") doc = run_rotation(params);
    else if (name == "right-shift") doc = run_right_shift(params);
    else if (name == "interleave-square") doc = run_interleave_square(params);
    else if (name == "chi-scale") doc = run_chi_scale(params);
    else if (name == "chi-square") doc = run_chi_square(params);
    else if (name == "doubling-standard") doc = run_doubling_standard(params);
    else if (name == "doubling-bounded") doc = run_doubling_bounded(params);
    else throw ParseError("unknown gallery entry \"" + name + "\"");
    json out;
    out["entry"] = name;
    for (auto& [k, v] : doc.items()) out[k] = v;
    return out;
}

}  // namespace metriclab::gallery
