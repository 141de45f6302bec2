#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/expansion.hpp"
#include "core/sparse.hpp"

using namespace metriclab;

TEST_CASE("built-in oracles pass the metric spot check") {
    for (const auto& name : oracle_names()) {
        const auto oracle = make_oracle(name);
        CHECK(oracle_spot_check(oracle, 200, 1e-9));
    }
    CHECK_THROWS_AS(make_oracle("no-such-space"), ParseError);
}

TEST_CASE("greedy scan on the integer line reproduces the hand-built set") {
    const auto oracle = make_oracle("real-line");
    const auto set = greedy_sparse(oracle, 4, 100000, 2.0);
    CHECK(set.complete);
    REQUIRE(set.indices.size() == 4);
    // hand simulation: start 0, then 1; diameter 1 demands d > 2 -> 4;
    // diameter 4 demands d > 8 -> 13
    CHECK(set.indices == std::vector<unsigned long long>({0, 1, 4, 13}));
    // acceptance certificates replay the predicate
    REQUIRE(set.min_new.size() == 2);
    CHECK(set.min_new[0] == 3.0);   // d(4, 1)
    CHECK(set.max_prev[0] == 1.0);  // diam {0, 1}
    CHECK(set.min_new[1] == 9.0);   // d(13, 4)
    CHECK(set.max_prev[1] == 4.0);  // diam {0, 1, 4}
}

TEST_CASE("the shift map on the line set is a certified anticontraction") {
    const auto oracle = make_oracle("real-line");
    const auto set = greedy_sparse(oracle, 4, 100000, 2.0);
    const auto cert = certify_anticontraction(oracle, set);
    CHECK(cert.ok);
    CHECK(cert.E_achieved == 3.0);  // worst interior pair (x_0, x_1): 3/1
    CHECK(cert.worst_a == 0);
    CHECK(cert.worst_b == 1);
    CHECK(cert.E_achieved > set.multiplier);
}

TEST_CASE("a bounded oracle exhausts the scan budget") {
    const auto oracle = make_oracle("bounded-interval");
    const auto set = greedy_sparse(oracle, 5, 20000, 2.0);
    CHECK(!set.complete);
    CHECK(set.indices.size() < 5);  // diameter <= 1 blocks the third point
}

TEST_CASE("unbounded oracles all yield complete certified sets") {
    for (const auto& name : {"real-line", "integer-lattice-sup", "geometric"}) {
        const auto oracle = make_oracle(name);
        const auto set = greedy_sparse(oracle, 5, 200000, 2.0);
        CHECK(set.complete);
        const auto cert = certify_anticontraction(oracle, set);
        CHECK(cert.ok);
        CHECK(cert.E_achieved > 2.0);
    }
}

TEST_CASE("certificates survive an independent replay of the distances") {
    const auto oracle = make_oracle("integer-lattice-sup");
    const auto set = greedy_sparse(oracle, 6, 500000, 2.0);
    REQUIRE(set.complete);
    const auto cert = certify_anticontraction(oracle, set);
    double min_ratio = 1e300;
    const std::size_t interior = set.points.size() - 1;
    for (std::size_t a = 0; a < interior; ++a)
        for (std::size_t b = a + 1; b < interior; ++b) {
            const double before = oracle.distance(set.points[a], set.points[b]);
            const double after = oracle.distance(set.points[a + 1], set.points[b + 1]);
            min_ratio = std::min(min_ratio, after / before);
        }
    CHECK(cert.E_achieved == doctest::Approx(min_ratio).epsilon(1e-12));
}

TEST_CASE("the shift map classifies as an anticontraction on interior pairs") {
    const auto oracle = make_oracle("real-line");
    const auto set = greedy_sparse(oracle, 5, 100000, 2.0);
    REQUIRE(set.complete);
    const std::size_t interior = set.points.size() - 1;
    const auto cls = classify_pairs(
        interior,
        [&](PointId a, PointId b) {
            return oracle.distance(set.points[a], set.points[b]);
        },
        [&](PointId a, PointId b) {
            return oracle.distance(set.points[a + 1], set.points[b + 1]);
        },
        0.0);
    CHECK(cls.tag == ExpansionTag::Anticontraction);
    CHECK(*cls.expansion_constant > 2.0);
}

TEST_CASE("finite restriction of the shift map fixes the last point") {
    const auto oracle = make_oracle("real-line");
    const auto set = greedy_sparse(oracle, 4, 100000, 2.0);
    const auto map = shift_map(set);
    CHECK(map.size() == 4);
    CHECK(map(0) == 1);
    CHECK(map(2) == 3);
    CHECK(map(3) == 3);
}

TEST_CASE("the sparse set as a finite space is a valid metric") {
    const auto oracle = make_oracle("geometric");
    const auto set = greedy_sparse(oracle, 5, 100000, 2.0);
    const auto space = sparse_space(oracle, set);
    CHECK(space.size() == set.points.size());
    CHECK(validate_metric(space, 1e-9).ok());
    for (std::size_t a = 0; a < set.points.size(); ++a)
        for (std::size_t b = 0; b < set.points.size(); ++b)
            CHECK(space.dist(a, b) ==
                  doctest::Approx(oracle.distance(set.points[a], set.points[b])));
}

TEST_CASE("geometric oracle honors its base parameter") {
    const auto oracle = make_oracle("geometric", json{{"base", 5.0}});
    const auto p0 = oracle.point_at(0);
    const auto p2 = oracle.point_at(2);
    CHECK(oracle.distance(p0, p2) == doctest::Approx(25.0 - 1.0));
}

TEST_CASE("lattice enumeration covers the quadrant without repeats") {
    const auto oracle = make_oracle("integer-lattice-sup");
    std::vector<std::vector<double>> seen;
    for (unsigned long long k = 0; k < 100; ++k) {
        const auto p = oracle.point_at(k);
        REQUIRE(p.size() == 2);
        CHECK(p[0] >= 0);
        CHECK(p[1] >= 0);
        for (const auto& q : seen) CHECK(oracle.distance(p, q) > 0);
        seen.push_back(p);
    }
}
