#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "metriclab/metriclab.h"

using ojson = nlohmann::ordered_json;

namespace {

// RAII wrappers so failed CHECKs cannot leak handles.
struct Str {
    char* s = nullptr;
    ~Str() { ml_string_free(s); }
    ojson json() const { return ojson::parse(std::string(s)); }
};

struct Space {
    ml_space* h = nullptr;
    ~Space() { ml_space_free(h); }
};

struct Map {
    ml_selfmap* h = nullptr;
    ~Map() { ml_map_free(h); }
};

constexpr const char* kTriangle =
    R"({"labels": ["a", "b", "c"], "dist": [[0, 1, 1], [1, 0, 1], [1, 1, 0]]})";

}  // namespace

TEST_CASE("version string is present") {
    CHECK(std::strlen(ml_version()) > 0);
}

TEST_CASE("space lifecycle and accessors") {
    Space sp;
    REQUIRE(ml_space_from_json(kTriangle, &sp.h) == ML_OK);
    CHECK(ml_space_size(sp.h) == 3);

    double diam = 0;
    CHECK(ml_space_diameter(sp.h, &diam) == ML_OK);
    CHECK(diam == 1.0);

    Str report;
    CHECK(ml_space_validate(sp.h, 1e-9, &report.s) == ML_OK);
    CHECK(report.json().at("valid") == true);
}

TEST_CASE("parse failures set the thread-local error") {
    ml_space* h = nullptr;
    CHECK(ml_space_from_json("definitely not json", &h) == ML_PARSE_ERROR);
    CHECK(std::strlen(ml_last_error()) > 0);
    CHECK(h == nullptr);

    // axiom violations are reported, not rejected
    Space bad;
    REQUIRE(ml_space_from_json(
                R"({"labels": ["a", "b"], "dist": [[0, 1], [2, 0]]})", &bad.h) == ML_OK);
    Str report;
    CHECK(ml_space_validate(bad.h, 1e-9, &report.s) == ML_OK);
    CHECK(report.json().at("valid") == false);
    CHECK(report.json().at("violations").size() > 0);

    // structural breakage is rejected up front
    ml_space* broken = nullptr;
    CHECK(ml_space_from_json(R"({"labels": ["a", "b"], "dist": [[0, 1]]})", &broken) ==
          ML_INVALID_INPUT);
}

TEST_CASE("maps, iteration, and classification") {
    Space sp;
    REQUIRE(ml_space_from_json(kTriangle, &sp.h) == ML_OK);

    Map cycle;
    REQUIRE(ml_map_from_json(sp.h, R"({"image": [1, 2, 0]})", &cycle.h) == ML_OK);
    size_t out = 99;
    CHECK(ml_map_iterate(cycle.h, 0, 3, &out) == ML_OK);
    CHECK(out == 0);
    CHECK(ml_map_iterate(cycle.h, 7, 1, &out) == ML_DOMAIN_ERROR);

    Str cls;
    CHECK(ml_classify(sp.h, cycle.h, 1e-9, &cls.s) == ML_OK);
    CHECK(cls.json().at("class") == "Isometry");

    Map constant;
    REQUIRE(ml_map_from_json(sp.h, R"({"image": [0, 0, 0]})", &constant.h) == ML_OK);
    Str cls2;
    CHECK(ml_classify(sp.h, constant.h, 1e-9, &cls2.s) == ML_OK);
    CHECK(cls2.json().at("class") == "NotExpansive");
    CHECK(cls2.json().at("witnesses").size() > 0);

    Str prof;
    CHECK(ml_ratio_profile(sp.h, constant.h, &prof.s) == ML_OK);
    CHECK(prof.json().at("min_ratio") == 0.0);

    Str surj;
    CHECK(ml_is_surjective(sp.h, constant.h, &surj.s) == ML_OK);
    CHECK(surj.json().at("surjective") == false);
    CHECK(surj.json().at("missing").size() == 2);

    ml_selfmap* out_of_range = nullptr;
    CHECK(ml_map_from_json(sp.h, R"({"image": [0, 1, 5]})", &out_of_range) ==
          ML_INVALID_INPUT);
}

TEST_CASE("exact rational space travels through the C boundary") {
    Space sp;
    REQUIRE(ml_space_from_json(
                R"({"labels": ["x1", "x2", "x3"],
                    "dist": [["0", "2", "2"], ["2", "0", "3/2"], ["2", "3/2", "0"]]})",
                &sp.h) == ML_OK);
    Map id;
    REQUIRE(ml_map_from_json(sp.h, R"({"image": [0, 1, 2]})", &id.h) == ML_OK);
    Str cls;
    CHECK(ml_classify(sp.h, id.h, 0.0, &cls.s) == ML_OK);
    CHECK(cls.json().at("class") == "Isometry");
}

TEST_CASE("enumeration and the compact-space check") {
    Space sp;
    REQUIRE(ml_space_from_json(kTriangle, &sp.h) == ML_OK);

    Str en;
    CHECK(ml_enumerate_expansive(sp.h, "", &en.s) == ML_OK);
    CHECK(en.json().at("expansive_count") == 6);  // the symmetric group of a 3-simplex

    Str rep;
    CHECK(ml_verify_compact_theorem(sp.h, nullptr, &rep.s) == ML_OK);
    CHECK(rep.json().at("all_expansive_are_isometric_bijections") == true);

    // budget refusal surfaces as its own status with the requirement
    // attached; a 13-point space exceeds both the scan budget and the
    // injective-search size cap
    ojson big;
    big["labels"] = ojson::array();
    big["dist"] = ojson::array();
    for (int i = 0; i < 13; ++i) {
        big["labels"].push_back("p" + std::to_string(i));
        ojson row = ojson::array();
        for (int j = 0; j < 13; ++j) row.push_back(i == j ? 0 : 1);
        big["dist"].push_back(row);
    }
    Space big_sp;
    REQUIRE(ml_space_from_json(big.dump().c_str(), &big_sp.h) == ML_OK);
    Str refused;
    const auto st = ml_enumerate_expansive(big_sp.h, R"({"budget": 2})", &refused.s);
    CHECK(st == ML_BUDGET_EXCEEDED);
    CHECK(std::string(ml_last_error()).find("required budget") != std::string::npos);
}

TEST_CASE("recurrence search over the C boundary") {
    Space sp;
    REQUIRE(ml_space_from_json(kTriangle, &sp.h) == ML_OK);
    Map cycle;
    REQUIRE(ml_map_from_json(sp.h, R"({"image": [1, 2, 0]})", &cycle.h) == ML_OK);
    Str rec;
    CHECK(ml_recurrence_search(sp.h, cycle.h, 0, 0.5, 10, &rec.s) == ML_OK);
    CHECK(rec.json().at("found") == true);
    CHECK(rec.json().at("n") == 3);
}

TEST_CASE("dial endpoints") {
    Str p;
    CHECK(ml_dial_point(0, &p.s) == ML_OK);
    CHECK(p.json().at("x") == 1.0);
    CHECK(p.json().at("y") == 0.0);

    Str seq;
    CHECK(ml_dial_approach(0, 3, &seq.s) == ML_OK);
    const auto idx = seq.json().at("indices");
    REQUIRE(idx.size() == 3);
    CHECK(idx[0] == 44);
    CHECK(idx[1] == 333);
    CHECK(idx[2] == 710);

    Str dense;
    CHECK(ml_dial_density(1000, 0.05, &dense.s) == ML_OK);
    CHECK(dense.json().at("dense") == true);
    Str notdense;
    CHECK(ml_dial_density(8, 0.01, &notdense.s) == ML_CHECK_FAILED);

    Str lp;
    CHECK(ml_dial_limit_point(0.01, 5000, &lp.s) == ML_OK);
    CHECK(lp.json().at("found") == true);

    Str cf;
    CHECK(ml_continued_fraction(6.283185307179586, 6, &cf.s) == ML_OK);
    CHECK(cf.json().at("coefficients")[0] == 6);
    CHECK(cf.json().at("coefficients")[1] == 3);
}

TEST_CASE("sparse construction with certificate") {
    Str rep;
    CHECK(ml_sparse_build("real-line", nullptr, 4, 100000, &rep.s) == ML_OK);
    const auto doc = rep.json();
    CHECK(doc.at("indices") == ojson::array({0, 1, 4, 13}));
    CHECK(doc.at("complete") == true);
    CHECK(doc.at("certificate").at("ok") == true);
    CHECK(doc.at("certificate").at("E_achieved") == 3.0);

    Str bounded;
    CHECK(ml_sparse_build("bounded-interval", nullptr, 5, 20000, &bounded.s) ==
          ML_CHECK_FAILED);
    CHECK(bounded.json().at("complete") == false);

    Str none;
    CHECK(ml_sparse_build("no-such-oracle", nullptr, 4, 100, &none.s) == ML_PARSE_ERROR);
}

TEST_CASE("gallery endpoints") {
    Str list;
    CHECK(ml_gallery_list(&list.s) == ML_OK);
    CHECK(list.json().at("entries").size() == 7);

    Str run;
    CHECK(ml_gallery_run("doubling-standard", nullptr, &run.s) == ML_OK);
    CHECK(run.json().at("class") == "Anticontraction");
    CHECK(run.json().at("E") == 2.0);

    CHECK(ml_gallery_run("nope", nullptr, nullptr) == ML_PARSE_ERROR);
}

TEST_CASE("verify suites report per-check results and a stable status") {
    Str rep;
    CHECK(ml_verify("counterexample", R"({"seed": 1})", R"({"n": 5, "n_large": 8})",
                    &rep.s) == ML_OK);
    const auto doc = rep.json();
    CHECK(doc.at("suite") == "counterexample");
    CHECK(doc.at("checks").size() > 0);
    for (const auto& c : doc.at("checks")) CHECK(c.at("passed") == true);

    CHECK(ml_verify("no-such-suite", nullptr, nullptr, nullptr) == ML_PARSE_ERROR);
}

TEST_CASE("identical configs give byte-identical reports") {
    Str a, b;
    REQUIRE(ml_verify("dial", R"({"seed": 42})", R"({"points": 2000})", &a.s) == ML_OK);
    REQUIRE(ml_verify("dial", R"({"seed": 42})", R"({"points": 2000})", &b.s) == ML_OK);
    CHECK(std::string(a.s) == std::string(b.s));
}
