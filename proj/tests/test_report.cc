#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cvx/report.hpp"
#include "cvx/squeeze.hpp"

using namespace cvx;

namespace {
QSet range1(long n) {
    std::vector<Rational> r;
    for (long v = 1; v <= n; ++v) r.emplace_back(v);
    return QSet::of(std::move(r));
}
} // namespace

TEST_CASE("empty table renders as a bare csv header") {
    Table t;
    t.header = {"n", "count"};
    Json config;
    config["seed"] = 0;
    std::string out = render_report("demo", config, Json::object(), t, Format::Csv);
    CHECK(out == "# command = demo\n# seed = 0\nn,count\n");
}

TEST_CASE("csv cells are escaped") {
    Table t;
    t.header = {"a"};
    t.rows.push_back({"x,\"y\""});
    std::string out = render_report("demo", Json::object(), Json::object(), t, Format::Csv);
    CHECK(out.find("\"x,\"\"y\"\"\"") != std::string::npos);
}

TEST_CASE("json reports round-trip and keep stable field order") {
    Json config;
    config["alpha"] = 1;
    config["beta"] = "two";
    Json result;
    result["first"] = 1;
    result["second"] = "2/3";
    std::string out =
        render_report("demo", config, result, std::nullopt, Format::JsonFmt);
    Json back = Json::parse(out);
    CHECK(back["command"] == "demo");
    CHECK(back["config"]["alpha"] == 1);
    CHECK(back["result"]["second"] == "2/3");
    // insertion order is preserved, so repeated rendering is byte-stable
    CHECK(out == render_report("demo", config, result, std::nullopt, Format::JsonFmt));
    auto first = out.find("\"first\"");
    auto second = out.find("\"second\"");
    CHECK(first < second);
}

TEST_CASE("chain report document carries the expected schema") {
    auto rep = theorem1_pipeline(range1(10));
    Json result;
    result["stage1_floor"] = rep.stages[0].floor;
    result["full_sizes"] = {rep.full_sizes[0], rep.full_sizes[1], rep.full_sizes[2]};
    result["comparison"] = bracket_json(rep.comparison);
    std::string out = render_report("theorem1", Json::object(), result, std::nullopt,
                                    Format::JsonFmt);
    Json back = Json::parse(out);
    REQUIRE(back.contains("result"));
    CHECK(back["result"]["stage1_floor"].is_number_integer());
    CHECK(back["result"]["full_sizes"].is_array());
    CHECK(back["result"]["full_sizes"].size() == 3);
    CHECK(back["result"]["comparison"]["lo"].is_string());
    CHECK(back["result"]["comparison"]["hi"].is_string());
    // the bracket endpoints are exact rationals with a decimal rendering
    Rational lo = Rational::from_string(back["result"]["comparison"]["lo"].get<std::string>());
    Rational hi = Rational::from_string(back["result"]["comparison"]["hi"].get<std::string>());
    CHECK(lo <= hi);
    CHECK(hi - lo <= Rational(1, 1000000));
}

TEST_CASE("bracket decimals bracket the exact endpoints") {
    Bracket b{Rational(1, 3), Rational(2, 3)};
    Json j = bracket_json(b);
    CHECK(j["lo_decimal"] == "0.333333");
    CHECK(j["hi_decimal"] == "0.666667");
    Bracket neg{Rational(-2, 3), Rational(-1, 3)};
    Json jn = bracket_json(neg);
    CHECK(jn["lo_decimal"] == "-0.666667");
    CHECK(jn["hi_decimal"] == "-0.333333");
}

TEST_CASE("qset json uses p/q strings") {
    QSet s = QSet::of({Rational(1, 2), Rational(-3)});
    Json j = qset_json(s);
    REQUIRE(j.size() == 2);
    CHECK(j[0] == "-3");
    CHECK(j[1] == "1/2");
}
