#include <algorithm>
#include <cstdlib>

#include "doctest.h"
#include "lpcount/counting.hpp"
#include "support.hpp"

using namespace lpcount;
using namespace lpcount::testing;

namespace {

const std::vector<HRep>& suite() {
    static const std::vector<HRep> shapes = {
        unit_simplex(1), unit_simplex(2), unit_simplex(3),
        unit_simplex(4), unit_square(),   unit_cube(),
        trapezoid(),     box({Rational(2), Rational(3)}),
        product(unit_simplex(2), unit_simplex(1)),
    };
    return shapes;
}

UniPoly poly(std::vector<Rational> ascending) { return UniPoly(std::move(ascending)); }

}  // namespace

TEST_CASE("ehrhart_polynomial examples") {
    CHECK(ehrhart_polynomial(unit_simplex(1)) == poly({Rational(1), Rational(1)}));
    // Brute-force counts 3, 6, 10 at k = 1, 2, 3 fix (k+1)(k+2)/2.
    CHECK(ehrhart_polynomial(unit_simplex(2)) ==
          poly({Rational(1), Rational(3, 2), Rational(1, 2)}));
    CHECK(ehrhart_polynomial(unit_square()) == poly({Rational(1), Rational(2), Rational(1)}));
}

TEST_CASE("interior_polynomial examples") {
    CHECK(interior_polynomial(unit_simplex(1)) == poly({Rational(-1), Rational(1)}));
    CHECK(interior_polynomial(unit_simplex(2)) ==
          poly({Rational(1), Rational(-3, 2), Rational(1, 2)}));
    CHECK(interior_polynomial(unit_square()) == poly({Rational(1), Rational(-2), Rational(1)}));
}

TEST_CASE("boundary_polynomial reproduces the worked simplex values") {
    CHECK(boundary_polynomial(unit_simplex(2)) == poly({Rational(0), Rational(3)}));
    CHECK(boundary_polynomial(unit_simplex(3)) == poly({Rational(2), Rational(0), Rational(2)}));
    CHECK(boundary_polynomial(unit_simplex(4)) ==
          poly({Rational(0), Rational(25, 6), Rational(0), Rational(5, 6)}));
}

TEST_CASE("boundary_polynomial_by_subtraction") {
    CHECK(boundary_polynomial_by_subtraction(unit_simplex(3)) ==
          poly({Rational(2), Rational(0), Rational(2)}));
    CHECK(boundary_polynomial_by_subtraction(unit_simplex(1)) == poly({Rational(2)}));
    CHECK(boundary_polynomial_by_subtraction(unit_square()) == poly({Rational(0), Rational(4)}));
    for (const HRep& h : suite()) {
        CHECK(boundary_polynomial_by_subtraction(h) == boundary_polynomial(h));
    }
}

TEST_CASE("corner-cut square: a Delzant pentagon") {
    // [0,2]^2 with the corner at (2,2) cut by x + y <= 3; area 7/2 and
    // normalized perimeter 7.
    HRep pentagon = make_hrep(2, {{-1, 0}, {0, -1}, {1, 0}, {0, 1}, {1, 1}},
                              {Rational(0), Rational(0), Rational(2), Rational(2), Rational(3)});
    VRep v = enumerate_vertices(pentagon);
    CHECK(v.vertex_count() == 5);
    REQUIRE(is_delzant(pentagon, v));
    CountingPolynomials polys = counting_polynomials(pentagon);
    CHECK(polys.boundary == poly({Rational(0), Rational(7)}));
    CHECK(polys.ehrhart == poly({Rational(1), Rational(7, 2), Rational(7, 2)}));
    CountReport r = count_lattice_points(pentagon, 1);
    CHECK(r.total == 8);
    CHECK(r.boundary == 7);
    CHECK(r.interior == 1);
}

TEST_CASE("pipeline validation errors") {
    // Simple and integral but not Delzant: triangle (0,0), (2,0), (1,1).
    HRep tri = make_hrep(2, {{0, -1}, {1, 1}, {-1, 1}},
                         {Rational(0), Rational(2), Rational(0)});
    CHECK_THROWS_AS(counting_polynomials(tri), NotDelzantError);
    CHECK_THROWS_AS(counting_polynomials(square_pyramid()), NotSimpleError);
    CHECK_THROWS_AS(counting_polynomials(box({Rational(1, 2), Rational(1)})), NotIntegralError);
}

TEST_CASE("count_lattice_points on the worked examples") {
    CountReport tri = count_lattice_points(unit_simplex(2), 1);
    CHECK(tri.total == 3);
    CHECK(tri.boundary == 3);
    CHECK(tri.interior == 0);

    CHECK(count_lattice_points(unit_simplex(3), 2).boundary == 10);
    CHECK(count_lattice_points(unit_simplex(4), 2).boundary == 15);
    CHECK(count_lattice_points(unit_simplex(4), 1).total == 5);

    // Cube boundary counts 8, 26, 56 at k = 1, 2, 3.
    CHECK(count_lattice_points(unit_cube(), 1).boundary == 8);
    CHECK(count_lattice_points(unit_cube(), 2).boundary == 26);
    CHECK(count_lattice_points(unit_cube(), 3).boundary == 56);

    // Non-simple but integral input is fine for brute-force counting.
    CountReport pyramid = count_lattice_points(square_pyramid(), 1);
    CHECK(pyramid.total == 10);
    CHECK(pyramid.boundary == 10);
    CHECK(pyramid.interior == 0);

    CHECK_THROWS_AS(count_lattice_points(unit_square(), 0), ParseError);
    CHECK_THROWS_AS(count_lattice_points(box({Rational(1, 2), Rational(1)}), 1),
                    NotIntegralError);
}

TEST_CASE("count totals split into boundary plus interior") {
    for (const HRep& h : suite()) {
        for (long long k = 1; k <= 4; ++k) {
            CountReport r = count_lattice_points(h, k);
            CHECK(r.total == r.boundary + r.interior);
        }
    }
}

TEST_CASE("quantization_weights") {
    auto tri = quantization_weights(unit_simplex(2), 1, true);
    REQUIRE(tri.size() == 3);
    CHECK(tri[0] == std::vector<long long>{0, 0});
    CHECK(tri[1] == std::vector<long long>{0, 1});
    CHECK(tri[2] == std::vector<long long>{1, 0});

    auto tetra = quantization_weights(unit_simplex(3), 1, true);
    REQUIRE(tetra.size() == 4);
    CHECK(tetra[0] == std::vector<long long>{0, 0, 0});
    CHECK(tetra[3] == std::vector<long long>{1, 0, 0});

    auto interval = quantization_weights(unit_simplex(1), 3, true);
    REQUIRE(interval.size() == 2);
    CHECK(interval[0] == std::vector<long long>{0});
    CHECK(interval[1] == std::vector<long long>{3});

    // Full dilate weights: all ten points of the doubled triangle.
    auto full = quantization_weights(unit_simplex(2), 2, false);
    CHECK(full.size() == 6);
    CHECK(std::is_sorted(full.begin(), full.end()));

    // Weight list length always matches the reported boundary count.
    for (const HRep& h : suite()) {
        CountReport r = count_lattice_points(h, 3, true, true);
        CHECK(static_cast<long long>(r.weights->size()) == r.boundary);
    }
}

TEST_CASE("oracle agreement for k = 1..5 across the suite") {
    for (const HRep& h : suite()) {
        CountingPolynomials polys = counting_polynomials(h);
        for (long long k = 1; k <= 5; ++k) {
            CountReport r = count_lattice_points(h, k);
            CHECK(polys.ehrhart.evaluate(Rational(k)) == Rational(r.total));
            CHECK(polys.interior.evaluate(Rational(k)) == Rational(r.interior));
            CHECK(polys.boundary.evaluate(Rational(k)) == Rational(r.boundary));
        }
    }
}

TEST_CASE("degrees, lacunarity, leading coefficients, reciprocity, integrality") {
    for (const HRep& h : suite()) {
        const int n = h.dimension;
        PipelineOutputs out = run_pipeline(h);
        const auto& polys = out.polynomials;
        CHECK(polys.ehrhart.degree() == n);
        CHECK(polys.boundary.degree() == n - 1);
        for (int j = 1; n - 2 * j >= 0; ++j) {
            CHECK(polys.boundary.coefficient(n - 2 * j) == Rational(0));
        }
        CHECK(polys.boundary.leading_coefficient() == out.boundary_vol);
        UniPoly reflected = polys.ehrhart.reflected();
        if (n % 2 != 0) {
            reflected = -reflected;
        }
        CHECK(reflected == polys.interior);
        for (long long k = 1; k <= 20; ++k) {
            Rational value = polys.boundary.evaluate(Rational(k));
            CHECK(is_integer(value));
            CHECK(value >= 0);
        }
    }
}

TEST_CASE("enumeration cell guard") {
    CHECK(enumeration_cell_guard() == Int(100000000));
    setenv("LPCOUNT_CELL_GUARD", "10", 1);
    CHECK(enumeration_cell_guard() == Int(10));
    CHECK_THROWS_AS(count_lattice_points(unit_cube(), 5), GuardError);
    setenv("LPCOUNT_CELL_GUARD", "bogus", 1);
    CHECK(enumeration_cell_guard() == Int(100000000));
    unsetenv("LPCOUNT_CELL_GUARD");
    CHECK(count_lattice_points(unit_cube(), 5).total == 216);
}
