#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqav/report.hpp"

#include <nlohmann/json.hpp>

using namespace sqav;
using nlohmann::json;

TEST_CASE("presets are listed and loadable") {
    auto names = preset_names();
    for (const auto* n : {"dim1", "dim2-square", "dim2-hex", "a3", "i3", "i4", "d4", "e8"})
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
    for (const auto& n : names) {
        auto spec = preset_spec(n);
        CHECK(spec.preset == n);
        CHECK(spec.form().rank() == spec.rank);
    }
    CHECK(preset_spec("e8-sample").preset == "e8");
    CHECK_THROWS_AS(preset_spec("nope"), InvalidArgument);
}

TEST_CASE("form documents") {
    auto spec = parse_form_spec(R"({"gram": [[2, -1], [-1, 2]], "linear": [1, 0],
                                         "units": {"a0": ["3", 2], "b0": [["1/2", 1], [1, "-5"]]}})");
    CHECK(spec.rank == 2);
    CHECK(spec.linear == IntVec{1, 0});
    auto d = spec.data();
    CHECK(d.a0({1, 1}) == 3 * 2 * 1);
    CHECK(d.b0({1, 0}, {1, 0}) == Rational(1, 2));

    CHECK(parse_form_spec(R"({"preset": "dim2-hex"})").preset == "dim2-hex");
    CHECK_THROWS_AS(parse_form_spec("not json"), InvalidArgument);
    CHECK_THROWS_AS(parse_form_spec(R"({"rank": 2})"), InvalidArgument);
    CHECK_THROWS_AS(parse_form_spec(R"({"gram": [[1, 2], [2, 1]]})"), InvalidForm);
    CHECK_THROWS_AS(parse_form_spec(R"({"gram": [[2, 1], [0, 2]]})"), InvalidForm);
    CHECK_THROWS_AS(parse_form_spec(R"({"gram": [[1]], "units": {"a0": ["x"]}})"), InvalidArgument);
    CHECK_THROWS_AS(parse_form_spec(R"({"gram": [[1]], "rank": 2})"), InvalidArgument);
    CHECK_THROWS_WITH_AS(parse_form_spec(R"({"gram": [[1]], "a0": ["2"]})"), doctest::Contains("unknown key 'a0'"),
                         InvalidArgument);
    CHECK_THROWS_AS(parse_form_spec(R"({"gram": [[1]], "units": {"c0": []}})"), InvalidArgument);
    CHECK_THROWS_AS(load_form_spec("/nonexistent/form.json"), InvalidArgument);
}

TEST_CASE("star report contents") {
    auto j = json::parse(star_report(preset_spec("dim2-hex"), true));
    CHECK(j["star"]["counts"] == json::array({1, 6, 6}));
    CHECK(j["star"]["kissing_number"] == 6);
    CHECK(j["quotient"]["counts"] == json::array({1, 3, 2}));
    CHECK(j["quotient"]["euler"] == 0);
    CHECK(j["star"]["relevant_vectors"].size() == 6);

    auto line = json::parse(star_report(preset_spec("dim1"), false));
    CHECK(line["star"]["counts"] == json::array({1, 2}));
}

TEST_CASE("verify reports pass and are deterministic") {
    for (const auto* n : {"dim1", "dim2-square", "dim2-hex", "a3"}) {
        CAPTURE(n);
        auto a = verify_report(preset_spec(n), 2);
        auto b = verify_report(preset_spec(n), 2);
        CHECK(a.passed);
        CHECK(a.json == b.json);
        auto j = json::parse(a.json);
        CHECK(j["summary"]["failed"] == 0);
    }
}

TEST_CASE("verify report uses sampling above the rank limit") {
    auto j = json::parse(verify_report(preset_spec("e8"), 2).json);
    CHECK(j["mode"] == "sampled");
    CHECK(j["samples"].size() >= 20);
    CHECK(j["base_change"] == "6");
}

TEST_CASE("theta and classify reports") {
    auto t = json::parse(theta_report(preset_spec("dim2-square"), 2));
    CHECK(t["theta"]["total"] == 4);
    auto c = json::parse(classify_report(preset_spec("dim2-square")));
    CHECK(c["minimal_base_change"] == "2");
    CHECK(c["strata"]["components"] == 1);
    CHECK(c["primitive_vectors"].size() == 4);
}

TEST_CASE("svg output") {
    auto svg = tiling_svg(preset_spec("dim2-hex"));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg == tiling_svg(preset_spec("dim2-hex")));
    CHECK_THROWS_AS(tiling_svg(preset_spec("a3")), InvalidArgument);
}
