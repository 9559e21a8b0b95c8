#include "liecohom/cli.hpp"

#include <doctest.h>

#include <algorithm>

using namespace lc;
using namespace lc::cli;

namespace {

Outcome run_on(const std::string& command, const std::string& catalog_name, Params params = {}, std::string format = "json") {
    Options opt;
    opt.catalog = catalog_name;
    opt.params = std::move(params);
    opt.format = std::move(format);
    return run(command, opt);
}

Outcome run_text(const std::string& command, const std::string& text, std::string format = "json") {
    Options opt;
    opt.input_text = text;
    opt.format = std::move(format);
    return run(command, opt);
}

}  // namespace

TEST_CASE("input documents") {
    auto doc = parse_input(
        "# comment\n"
        "name: kt\n"
        "param: a = 1/2\n"
        "algebra: (0,0,0,a*12)\n"
        "J:\n0 -1 0 0\n1 0 0 0\n0 0 0 -1\n0 0 1 0\n"
        "symplectic: 13+24\n"
        "dcomplex: (+-+-)\n");
    CHECK(doc.name == "kt");
    CHECK(doc.params.at("a") == Scalar::frac(1, 2));
    REQUIRE(doc.J.has_value());
    CHECK(doc.J->size() == 4);
    auto p = build_problem(doc);
    CHECK(p.g.de(4) == Scalar::frac(1, 2) * parse_form("12", 4));
    REQUIRE(p.complex.size() == 1);
    CHECK(p.complex[0].cs.integrable());
    CHECK(p.omega.has_value());
    CHECK(p.dcomplex.has_value());
    auto q = build_problem(doc, {{"a", Scalar(3)}});
    CHECK(q.g.de(4) == Scalar(3) * parse_form("12", 4));

    CHECK_THROWS_AS(build_problem(parse_input("algebra: (0,0\n")), ParseError);
    CHECK_THROWS_AS(parse_input("frobnicate: 1\n"), ParseError);
    CHECK_THROWS_AS(build_problem(parse_input("algebra: (0,0,0,12)\nJ:\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n")),
                    ValidationError);
    CHECK_THROWS_AS(build_problem(parse_input("algebra: (0,0,12,13)\nsymplectic: 12\n")), ValidationError);
}

TEST_CASE("parameters") {
    auto [name, v] = parse_param("s11b=1/2+i");
    CHECK(name == "s11b");
    CHECK(v == Scalar::parse("1/2+i"));
    CHECK_THROWS(parse_param("novalue"));
    CHECK_THROWS(parse_param("x=abc"));
}

TEST_CASE("exit codes") {
    CHECK(run_on("betti", "iwasawa").exit_code == kOk);
    CHECK(run_on("betti", "no_such_entry").exit_code == kUnknown);
    CHECK(run_on("frobnicate", "iwasawa").exit_code == kUnknown);
    CHECK(run_on("betti", "h7", {{"alpha", Scalar(1)}}).exit_code == kValidation);
    CHECK(run_on("hodge", "kt").exit_code == kValidation);
    CHECK(run_text("betti", "algebra: (0,0,0,12,13,24\n").exit_code == kParse);
    CHECK(run_text("betti", "algebra: (0^3,12,14-23,15-34)\n").exit_code == kValidation);
    Options none;
    CHECK(run("betti", none).exit_code == kParse);
}

TEST_CASE("JSON documents are deterministic and self-describing") {
    auto a = run_on("tables", "iwasawa");
    auto b = run_on("tables", "iwasawa");
    REQUIRE(a.exit_code == kOk);
    CHECK(a.output == b.output);
    auto doc = Json::parse(a.output);
    CHECK(doc["schema_version"] == kSchemaVersion);
    CHECK(doc["command"] == "tables");
    CHECK(doc["algebra"]["name"] == "iwasawa");
    CHECK(doc["algebra"]["dimension"] == 6);
    CHECK(doc.dump(2) + "\n" == a.output);
    CHECK(render(doc, "json") == a.output);
    CHECK(render(Json::parse(render(doc, "json")), "json") == a.output);
}

TEST_CASE("markdown output") {
    auto r = run_on("deldelbar", "torus", {{"n", Scalar(2)}}, "md");
    REQUIRE(r.exit_code == kOk);
    CHECK(r.output.find("lemma: true") != std::string::npos);
    auto iw = run_on("deldelbar", "iwasawa", {}, "md");
    CHECK(iw.output.find("lemma: false") != std::string::npos);
    auto betti = run_on("betti", "iwasawa", {}, "md");
    CHECK(betti.output.find("| 1 | 4 | 8 | 10 | 8 | 4 | 1 |") != std::string::npos);
}

TEST_CASE("sweep over the D-complex family") {
    Options opt;
    opt.catalog = "dcx_solv";
    opt.param_name = "t";
    opt.values = {"0", "1/2", "1"};
    opt.format = "json";
    auto r = run("sweep", opt);
    REQUIRE(r.exit_code == kOk);
    auto doc = Json::parse(r.output);
    REQUIRE(doc["points"].size() == 3);
    std::vector<std::pair<int, int>> got;
    for (const auto& p : doc["points"]) {
        for (const auto& st : p["result"]["stages"])
            if (st["k"] == 2) got.push_back({st["h_plus"].get<int>(), st["h_minus"].get<int>()});
    }
    CHECK(got == std::vector<std::pair<int, int>>{{0, 2}, {1, 1}, {1, 1}});
}

TEST_CASE("command list") {
    const auto& names = command_names();
    for (const char* c : {"validate", "betti", "hodge", "bottchern", "aeppli", "varouchas", "frolicher", "deldelbar",
                          "harmonic", "lizhang", "symplectic", "dcomplex", "massey", "tables", "sweep"})
        CHECK(std::find(names.begin(), names.end(), c) != names.end());
}
