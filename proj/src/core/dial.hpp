#pragma once

#include <cstdint>
#include <vector>

#include "metric_space.hpp"

namespace metriclab::dial {

// Point e^{in} of the dial set, n a nonnegative integer.
struct DialPoint {
    unsigned long long n;
    double angle;  // n reduced mod 2pi into [0, 2pi)
    double x;
    double y;
};

DialPoint dial_point(unsigned long long n);

// Counterclockwise rotation by one radian: index n + 1.
DialPoint rotate(const DialPoint& p);

// |e^{im} - e^{in}| from the coordinates.
double chord(const DialPoint& a, const DialPoint& b);

// n mod 2pi in [0, 2pi), via a three-term split of 2pi so the reduction
// stays accurate for n up to ~1e9.
double reduce_mod_2pi(unsigned long long n);

// Signed residual p - 2pi*q with exact integer products (|q| <= ~5e8).
double two_pi_residual(long long p, long long q);

struct Convergent {
    long long p;
    long long q;
    double error;  // |x*q - p|
};

struct ContinuedFraction {
    std::vector<long long> coefficients;
    std::vector<Convergent> convergents;
    bool truncated;  // depth hit the double-precision exhaustion bound
};

// Standard continued-fraction expansion of x with its convergents.
ContinuedFraction continued_fraction(double x, int depth);

struct ApproachSequence {
    unsigned long long target;
    std::vector<unsigned long long> indices;  // n(k) > target, increasing
    std::vector<double> chord_errors;         // strictly decreasing
    bool truncated;
};

// Indices n(k) = target + p_k with e^{i n(k)} -> e^{i target}. The p_k are
// the strong-best convergent numerators of 2pi: convergents past the integer
// part whose following coefficient is >= 2 (those are best approximations in
// the strong sense, so the chord errors strictly decrease).
ApproachSequence approach_sequence(unsigned long long target, int count);

struct LimitPointReport {
    bool found;
    double theta;                            // circular mean of the witness cluster
    std::vector<unsigned long long> witnesses;
    bool separated_from_integers;            // all e^{ik}, k <= N, farther than eps/2
    double cluster_spread;                   // max pairwise chord among witnesses
    json to_json() const;
};

// Searches the first N dial points for a cluster of >= 3 indices within
// chord epsilon of a common angle theta, preferring clusters whose mean is
// separated from every integer angle by more than epsilon/2.
LimitPointReport find_limit_point(double epsilon, unsigned long long N);

// Finite truncation {e^{i0}, ..., e^{i(N-1)}} with chord distances.
FiniteMetricSpace dial_space(std::size_t N);

// min over 1 <= n <= N of |e^{in} - 1|: the non-surjectivity margin of the
// rotation (1 = e^{i0} is never in the image).
double non_surjectivity_margin(unsigned long long N);

struct DialDensityReport {
    bool dense;
    unsigned long long worst_index;
    double worst_distance;
    json to_json() const;
};

// Every dial point n < N within epsilon of some rotated point e^{im},
// 1 <= m <= N.
DialDensityReport density_check(unsigned long long N, double epsilon);

// max over sampled pairs (m, n) of |chord(m+1, n+1) - chord(m, n)|, with
// chords computed from coordinates. Full pair scan.
double isometry_max_deviation(std::size_t N);

}  // namespace metriclab::dial
