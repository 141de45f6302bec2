#pragma once

#include <string>
#include <vector>

#include "metric_space.hpp"
#include "rational.hpp"

namespace metriclab::gallery {

// Finitely supported real sequence (explicit prefix, implicit zero tail).
// Coordinates are exact rationals; equality is exact.
class SeqPoint {
public:
    SeqPoint() = default;
    explicit SeqPoint(std::vector<Rat> coords);
    static SeqPoint zero() { return SeqPoint{}; }

    std::size_t support() const { return coords_.size(); }
    Rat coord(std::size_t k) const {  // 0-based
        return k < coords_.size() ? coords_[k] : Rat::integer(0);
    }
    const std::vector<Rat>& coords() const { return coords_; }

    friend bool operator==(const SeqPoint& a, const SeqPoint& b) {
        return a.coords_ == b.coords_;
    }

private:
    std::vector<Rat> coords_;  // trailing zeros trimmed
};

// sup_k |x_k - y_k|; finite by finite support.
Rat sup_distance(const SeqPoint& x, const SeqPoint& y);

// (x1, x2, ...) -> (0, x1, x2, ...). Isometry under the sup metric.
SeqPoint right_shift(const SeqPoint& x);

// (x1, x2, ...) -> (x1, x1^2, x2, x2^2, ...).
SeqPoint interleave_square(const SeqPoint& x);

// ||f_n - f_m||_2 for f_n = sqrt(n) * indicator of [0, 1/n]:
// 0 for m = n, sqrt(2 - 2*sqrt(min/max)) otherwise.
double chi_distance(unsigned long long m, unsigned long long n);

// index map n -> k*n; exactly distance-preserving (the ratio m/n is
// invariant under k)
unsigned long long chi_scale_map(unsigned long long k, unsigned long long n);

// index map n -> n^2; strict expansion whose growth ratio at the pair
// (n^2, n) tends to 1
unsigned long long chi_square_map(unsigned long long n);

// ratio ||S f_{n^2} - S f_n|| / ||f_{n^2} - f_n|| for S the index-square map
double chi_square_ratio(unsigned long long n);

// |x - y| / (|x - y| + 1): bounded remetrization of the real line.
double bounded_metric(double x, double y);

// Finite sample of the chi family with indices 1..max_n.
FiniteMetricSpace chi_space(unsigned long long max_n);

struct GalleryEntry {
    std::string name;
    std::string description;
};

const std::vector<GalleryEntry>& gallery_entries();

// Runs a named entry with parameters and returns a JSON report pairing the
// construction with the fact it illustrates. Unknown name -> ParseError.
json run_gallery_entry(const std::string& name, const json& params);

}  // namespace metriclab::gallery
