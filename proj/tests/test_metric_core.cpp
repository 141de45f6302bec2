#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/dial.hpp"
#include "core/metric_space.hpp"
#include "core/theorems.hpp"

using namespace metriclab;

namespace {

FiniteMetricSpace two_point() {
    return FiniteMetricSpace::from_matrix({"a", "b"}, {{0, 1}, {1, 0}});
}

FiniteMetricSpace three_point(double ab, double bc, double ac) {
    return FiniteMetricSpace::from_matrix({"a", "b", "c"},
                                          {{0, ab, ac}, {ab, 0, bc}, {ac, bc, 0}});
}

}  // namespace

TEST_CASE("smallest valid metric passes validation") {
    CHECK(validate_metric(two_point(), 1e-9).ok());
}

TEST_CASE("triangle violation is reported with its witness") {
    const auto report = validate_metric(three_point(1, 1, 3), 1e-9);
    REQUIRE(report.violations.size() == 1);
    const auto& v = report.violations[0];
    CHECK(v.code == ViolationCode::TriangleViolation);
    // d(a,c) = 3 > d(a,b) + d(b,c) = 2
    CHECK(v.points[0] == 0);
    CHECK(v.points[2] == 2);
    CHECK(v.lhs == 3.0);
    CHECK(v.rhs == 2.0);
}

TEST_CASE("degenerate triangle is a valid metric") {
    // all 6 ordered triples checked by hand: 1+2=3 holds with equality
    CHECK(validate_metric(three_point(1, 2, 3), 1e-9).ok());
}

TEST_CASE("asymmetry, diagonal, and nonpositive entries are distinct codes") {
    const auto bad = FiniteMetricSpace::from_matrix(
        {"a", "b"}, {{0.5, 1}, {2, 0}});
    const auto report = validate_metric(bad, 1e-9);
    bool diag = false, asym = false;
    for (const auto& v : report.violations) {
        if (v.code == ViolationCode::NonzeroDiagonal) diag = true;
        if (v.code == ViolationCode::Asymmetric) asym = true;
    }
    CHECK(diag);
    CHECK(asym);

    const auto zero = FiniteMetricSpace::from_matrix({"a", "b"}, {{0, 0}, {0, 0}});
    const auto rep2 = validate_metric(zero, 1e-9);
    REQUIRE(rep2.violations.size() == 1);
    CHECK(rep2.violations[0].code == ViolationCode::NonPositive);
}

TEST_CASE("dimension mismatch is a structural error, not an axiom violation") {
    CHECK_THROWS_AS(FiniteMetricSpace::from_matrix({"a", "b"}, {{0, 1}}), StructuralError);
    CHECK_THROWS_AS(
        FiniteMetricSpace::from_matrix({"a", "b"}, {{0, 1, 2}, {1, 0, 2}}), StructuralError);
}

TEST_CASE("json round trip, float and exact modes") {
    const auto s = FiniteMetricSpace::from_json_text(
        R"({"labels": ["a", "b"], "dist": [[0, 1], [1, 0]]})");
    CHECK(s.size() == 2);
    CHECK(!s.exact());
    CHECK(s.dist(0, 1) == 1.0);

    const auto e = FiniteMetricSpace::from_json_text(
        R"({"labels": ["a", "b"], "dist": [["0", "3/4"], ["3/4", "0"]]})");
    CHECK(e.exact());
    CHECK(e.dist_exact(0, 1) == Rat{3, 4});
    const auto back = FiniteMetricSpace::from_json(e.to_json());
    CHECK(back.exact());
    CHECK(back.dist_exact(0, 1) == Rat{3, 4});

    CHECK_THROWS_AS(FiniteMetricSpace::from_json_text("not json"), ParseError);
    CHECK_THROWS_AS(FiniteMetricSpace::from_json_text(R"({"labels": []})"), ParseError);
}

TEST_CASE("diameter") {
    CHECK(diameter(two_point()) == 1.0);
    const auto singleton = FiniteMetricSpace::from_matrix({"a"}, {{0}});
    CHECK(diameter(singleton) == 0.0);
    CHECK_THROWS_AS(diameter(FiniteMetricSpace::from_matrix({}, {})), std::domain_error);

    // truncated sup-metric family: diameter 2 = d(x_1, x_n) for every N >= 2
    for (std::size_t N : {2, 5, 9}) CHECK(diameter(linf_counterexample_space(N)) == 2.0);

    // dial chords never exceed 2
    CHECK(diameter(dial::dial_space(200)) <= 2.0);
}

TEST_CASE("diameter is the max matrix entry and shrinks under restriction") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto space = random_metric_space(rng, 6);
        double max_entry = 0;
        for (std::size_t i = 0; i < space.size(); ++i)
            for (std::size_t j = 0; j < space.size(); ++j)
                max_entry = std::max(max_entry, space.dist(i, j));
        CHECK(diameter(space) == max_entry);

        const std::vector<PointId> subset{0, 2, 4};
        CHECK(diameter(space.restrict(subset)) <= diameter(space));
    }
}

TEST_CASE("epsilon net: whole space within one ball") {
    std::mt19937_64 rng(11);
    const auto space = random_metric_space(rng, 8);
    const auto net = min_epsilon_net(space, diameter(space));
    CHECK(net.optimal);
    CHECK(net.centers.size() == 1);
}

TEST_CASE("epsilon net: separated points each need their own ball") {
    for (std::size_t N : {3, 6, 10}) {
        const auto space = linf_counterexample_space(N);
        const auto net = min_epsilon_net(space, 0.5);
        CHECK(net.optimal);
        CHECK(net.centers.size() == N);  // all pairwise distances exceed 1
    }
}

TEST_CASE("epsilon net on 100 dial points falls back to greedy") {
    const auto space = dial::dial_space(100);
    const auto net = min_epsilon_net(space, 0.25);
    CHECK(!net.optimal);  // above the exact cutoff, flagged as an upper bound
    CHECK(net.centers.size() <= 26);
    // the net must actually cover
    for (std::size_t p = 0; p < space.size(); ++p) {
        double best = 10;
        for (PointId c : net.centers) best = std::min(best, space.dist(c, p));
        CHECK(best <= 0.25);
    }
}

TEST_CASE("net cardinality is non-increasing in epsilon") {
    std::mt19937_64 rng(3);
    const auto space = random_metric_space(rng, 10);
    std::size_t prev = space.size() + 1;
    for (double eps : {1.0, 2.0, 4.0, 8.0, 16.0}) {
        const auto net = min_epsilon_net(space, eps);
        CHECK(net.centers.size() <= prev);
        prev = net.centers.size();
    }
}

TEST_CASE("epsilon net preconditions") {
    CHECK_THROWS_AS(min_epsilon_net(two_point(), 0.0), std::domain_error);
    CHECK_THROWS_AS(min_epsilon_net(FiniteMetricSpace::from_matrix({}, {}), 1.0),
                    std::domain_error);
}

TEST_CASE("self-map construction and iteration") {
    const SelfMap id = SelfMap::identity(4);
    CHECK(iterate(id, 2, 10) == 2);

    const SelfMap cycle({1, 2, 0});
    CHECK(iterate(cycle, 0, 3) == 0);  // cycle order
    CHECK(iterate(cycle, 0, 0) == 0);
    CHECK(cycle.is_permutation());
    CHECK(!SelfMap({0, 0, 1}).is_permutation());

    CHECK_THROWS_AS(SelfMap({0, 3}), StructuralError);
    CHECK_THROWS_AS(SelfMap::from_json_text(R"({"image": [0]})", 2), StructuralError);
    CHECK_THROWS_AS(SelfMap::from_json_text("[", 2), ParseError);
}

TEST_CASE("iterate composes additively") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<std::size_t> pick(0, 5);
    std::vector<PointId> im(6);
    for (auto& p : im) p = pick(rng);
    const SelfMap map(im);
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = pick(rng);
        const auto m = pick(rng) * 3, n = pick(rng) * 2;
        CHECK(iterate(map, x, m + n) == iterate(map, iterate(map, x, m), n));
    }
}
