#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/expansion.hpp"
#include "core/gallery.hpp"
#include "quadrature_oracle.hpp"

using namespace metriclab;
using namespace metriclab::gallery;

TEST_CASE("sequence points trim trailing zeros and compare exactly") {
    const SeqPoint a(std::vector<Rat>{Rat{1, 2}, Rat{0, 1}, Rat{0, 1}});
    const SeqPoint b(std::vector<Rat>{Rat{1, 2}});
    CHECK(a == b);
    CHECK(a.support() == 1);
    CHECK(a.coord(5) == Rat::integer(0));
}

TEST_CASE("sup distance on sequences") {
    const SeqPoint x(std::vector<Rat>{Rat{1, 1}, Rat{-1, 3}});
    const SeqPoint y(std::vector<Rat>{Rat{1, 2}});
    CHECK(sup_distance(x, y) == Rat{1, 2});  // max(|1-1/2|, |-1/3|)
    CHECK(sup_distance(x, x) == Rat::integer(0));
    CHECK(sup_distance(x, SeqPoint::zero()) == Rat{1, 1});
}

TEST_CASE("right shift preserves sup distances exactly") {
    const SeqPoint x(std::vector<Rat>{Rat{2, 3}, Rat{-1, 5}});
    const SeqPoint y(std::vector<Rat>{Rat{1, 7}});
    CHECK(sup_distance(right_shift(x), right_shift(y)) == sup_distance(x, y));
    CHECK(right_shift(x).coord(0) == Rat::integer(0));
    CHECK(right_shift(x).coord(1) == Rat{2, 3});
}

TEST_CASE("interleave-square witness distances are exactly 3/4, 1/2, and 1") {
    const SeqPoint x(std::vector<Rat>{Rat{1, 1}});
    const SeqPoint y(std::vector<Rat>{Rat{1, 2}});
    const SeqPoint z = SeqPoint::zero();

    CHECK(sup_distance(x, y) == Rat{1, 2});
    CHECK(sup_distance(interleave_square(x), interleave_square(y)) == Rat{3, 4});
    CHECK(sup_distance(x, z) == Rat{1, 1});
    CHECK(sup_distance(interleave_square(x), interleave_square(z)) == Rat{1, 1});
}

TEST_CASE("interleave-square never shrinks: |a^2 - b^2| bounded by |a - b| scale") {
    // on sampled rationals in [-1, 1] the interleaved distance is >= the
    // original (the original coordinates are kept verbatim)
    const std::vector<SeqPoint> sample{
        SeqPoint::zero(),
        SeqPoint(std::vector<Rat>{Rat{1, 1}}),
        SeqPoint(std::vector<Rat>{Rat{1, 2}}),
        SeqPoint(std::vector<Rat>{Rat{-1, 3}, Rat{1, 4}}),
        SeqPoint(std::vector<Rat>{Rat{3, 4}, Rat{-1, 2}}),
    };
    for (std::size_t a = 0; a < sample.size(); ++a)
        for (std::size_t b = a + 1; b < sample.size(); ++b)
            CHECK(sup_distance(interleave_square(sample[a]), interleave_square(sample[b])) >=
                  sup_distance(sample[a], sample[b]));
}

TEST_CASE("chi distance closed form matches the quadrature oracle") {
    for (unsigned long long m = 1; m <= 12; ++m)
        for (unsigned long long n = m; n <= 12; ++n)
            CHECK(chi_distance(m, n) ==
                  doctest::Approx(oracle::chi_distance_quadrature(m, n)).epsilon(1e-9));
    // a far-apart spot check
    CHECK(chi_distance(2, 1000) ==
          doctest::Approx(oracle::chi_distance_quadrature(2, 1000)).epsilon(1e-9));
    CHECK_THROWS_AS(chi_distance(0, 3), std::domain_error);
}

TEST_CASE("index scaling preserves chi distances bit-for-bit") {
    for (unsigned long long k : {2ULL, 3ULL, 10ULL})
        for (unsigned long long m = 1; m <= 30; ++m)
            for (unsigned long long n = m + 1; n <= 30; ++n)
                CHECK(chi_distance(chi_scale_map(k, m), chi_scale_map(k, n)) ==
                      chi_distance(m, n));
}

TEST_CASE("index squaring expands strictly but with vanishing margin") {
    // every sampled pair grows
    for (unsigned long long m = 1; m <= 40; ++m)
        for (unsigned long long n = m + 1; n <= 40; ++n)
            CHECK(chi_distance(chi_square_map(m), chi_square_map(n)) > chi_distance(m, n));

    // the (n^2, n) growth ratios decrease strictly toward 1
    double prev = 10;
    for (unsigned long long n : {2ULL, 5ULL, 10ULL, 100ULL, 10000ULL, 1000000ULL}) {
        const double r = chi_square_ratio(n);
        CHECK(r > 1.0);
        CHECK(r < prev);
        prev = r;
    }
    CHECK(chi_square_ratio(1000000) < 1.0 + 1e-3);
    CHECK_THROWS_AS(chi_square_ratio(1), std::domain_error);
}

TEST_CASE("chi ratio agrees with its definition computed the long way") {
    // d(f_{n^4}, f_{n^2}) / d(f_{n^2}, f_n), formed directly while the
    // indices still fit
    for (unsigned long long n : {2ULL, 3ULL, 10ULL, 50ULL}) {
        const double direct = chi_distance(n * n * n * n, n * n) / chi_distance(n * n, n);
        CHECK(chi_square_ratio(n) == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("chi sample space is a valid metric") {
    const auto space = chi_space(30);
    CHECK(space.size() == 30);
    CHECK(validate_metric(space, 1e-9).ok());
}

TEST_CASE("bounded remetrization") {
    CHECK(bounded_metric(0, 0) == 0.0);
    CHECK(bounded_metric(1, 0) == 0.5);
    CHECK(bounded_metric(-3, 1) == 0.8);
    for (double x : {0.5, 10.0, 1e6}) CHECK(bounded_metric(x, 0) < 1.0);

    // doubling under the bounded metric: ratio 4/3 at x = 1, decreasing to 1
    CHECK(bounded_metric(2, 0) / bounded_metric(1, 0) == doctest::Approx(4.0 / 3.0));
    double prev = 2;
    for (double x = 1; x <= 1e6; x *= 10) {
        const double r = bounded_metric(2 * x, 0) / bounded_metric(x, 0);
        CHECK(r > 1.0);
        CHECK(r < prev);
        prev = r;
    }
}

TEST_CASE("gallery catalogue and dispatch") {
    const auto& entries = gallery_entries();
    CHECK(entries.size() == 7);
    for (const auto& e : entries) {
        const auto doc = run_gallery_entry(e.name, json::object());
        CHECK(doc.at("entry") == e.name);
        CHECK(doc.contains("class"));
        CHECK(doc.contains("fact"));
    }
    CHECK_THROWS_AS(run_gallery_entry("nonsense", json::object()), ParseError);
}

TEST_CASE("gallery verdicts") {
    auto cls = [](const char* name) {
        return run_gallery_entry(name, json{{"max_n", 1000}}).at("class").get<std::string>();
    };
    CHECK(cls("rotation") == "Isometry");
    CHECK(cls("right-shift") == "Isometry");
    CHECK(cls("interleave-square") == "ProperNotStrict");
    CHECK(cls("chi-scale") == "Isometry");
    CHECK(cls("chi-square") == "StrictNotAnticontraction");
    CHECK(cls("doubling-standard") == "Anticontraction");
    CHECK(cls("doubling-bounded") == "StrictNotAnticontraction");

    const auto doubling = run_gallery_entry("doubling-standard", json::object());
    CHECK(doubling.at("E") == 2.0);
    // the finite sample of the squaring map uniformly expands, but the family
    // as a whole does not: both verdicts are reported
    const auto square = run_gallery_entry("chi-square", json{{"max_n", 1000}});
    CHECK(square.at("sampled_class") == "Anticontraction");
    CHECK(square.at("ratio_monotone_decreasing") == true);
    CHECK(square.at("ratios_above_one") == true);
}
