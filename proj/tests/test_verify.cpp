#include "doctest.h"
#include "lpcount/verify.hpp"
#include "support.hpp"

using namespace lpcount;
using namespace lpcount::testing;

TEST_CASE("run_verify passes on bundled files") {
    for (const char* file : {"delta2.json", "delta3.json", "delta4.json", "unit_square.json",
                             "unit_cube.json", "rectangle_2x3.json", "trapezoid.json",
                             "prism.json"}) {
        CAPTURE(file);
        HRep h = load_hrep(data_path(file));
        VerifyReport report = run_verify(h, 3);
        CHECK(report.pass);
        CHECK(report.integral);
        CHECK(report.simple);
        CHECK(report.delzant);
        REQUIRE(report.checks.size() == 5);
        for (const auto& check : report.checks) {
            CAPTURE(check.name);
            CHECK(check.pass);
        }
        REQUIRE(report.oracle.size() == 3);
        for (const auto& row : report.oracle) {
            CHECK(row.pass);
        }
    }
}

TEST_CASE("cube boundary polynomial shows the degree-1 gap") {
    HRep cube = load_hrep(data_path("unit_cube.json"));
    VerifyReport report = run_verify(cube, 5);
    CHECK(report.pass);
    CHECK(report.polynomials.boundary ==
          UniPoly({Rational(2), Rational(0), Rational(6)}));  // 6k^2 + 2
    CHECK(report.polynomials.boundary.coefficient(1) == Rational(0));
}

TEST_CASE("run_verify rejects non-Delzant or non-integral input") {
    HRep tri = make_hrep(2, {{0, -1}, {1, 1}, {-1, 1}},
                         {Rational(0), Rational(2), Rational(0)});
    CHECK_THROWS_AS(run_verify(tri, 2), NotDelzantError);
    CHECK_THROWS_AS(run_verify(box({Rational(3, 2), Rational(1)}), 2), NotIntegralError);
    CHECK_THROWS_AS(run_verify(square_pyramid(), 2), NotSimpleError);
    CHECK_THROWS_AS(run_verify(unit_square(), 0), ParseError);
}

TEST_CASE("verification reports are deterministic") {
    HRep h = load_hrep(data_path("delta3.json"));
    VerifyReport a = run_verify(h, 4);
    VerifyReport b = run_verify(h, 4);
    CHECK(verify_to_text(a) == verify_to_text(b));
    CHECK(verify_to_json(a).dump(2) == verify_to_json(b).dump(2));
    CHECK(verify_to_text(a).find("result: pass") != std::string::npos);
}

TEST_CASE("verify text includes the boundary polynomial") {
    HRep h = load_hrep(data_path("delta4.json"));
    VerifyReport report = run_verify(h, 2);
    std::string text = verify_to_text(report);
    CHECK(text.find("boundary: 5/6*k^3 + 25/6*k") != std::string::npos);
    auto doc = verify_to_json(report);
    CHECK(doc["polynomials"]["boundary"]["text"] == "5/6*k^3 + 25/6*k");
    CHECK(doc["polynomials"]["boundary"]["coefficients"] ==
          nlohmann::ordered_json::array({"0", "25/6", "0", "5/6"}));
    CHECK(doc["pass"] == true);
}

TEST_CASE("bundled files parse to the expected combinatorics") {
    HRep cube4 = load_hrep(data_path("cube4.json"));
    CHECK(cube4.dimension == 4);
    CHECK(enumerate_vertices(cube4).vertex_count() == 16);
    HRep prism = load_hrep(data_path("prism.json"));
    CHECK(prism.dimension == 3);
    CHECK(enumerate_vertices(prism).vertex_count() == 6);
}
