#include "latlab/bundled_data.hpp"
#include "latlab/census.hpp"
#include "latlab/ledger.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace latlab;

TEST_CASE("linear system dimensions") {
    CHECK(linear_system_dim(SurfaceP2{}, {6, 0}) == 27);
    CHECK(linear_system_dim(SurfaceQuadric{}, {3, 3}) == 15);
    // monomial-count oracle on the quadric: (a+1)(b+1) bidegree monomials
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            CHECK(linear_system_dim(SurfaceQuadric{}, {a, b}) == (a + 1) * (b + 1) - 1);
    CHECK(linear_system_dim(SurfaceFn{1}, {3, 2}) == 17);
    CHECK(linear_system_dim(SurfaceFn{3}, {3, 0}) == 21);
    // oracle on F_n: polynomials sum_i f_i(x) y^i with deg f_i <= b + i*n
    for (int n = 1; n <= 4; ++n)
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b) {
                int monomials = 0;
                for (int i = 0; i <= a; ++i) monomials += b + i * n + 1;
                CHECK(linear_system_dim(SurfaceFn{n}, {a, b}) == monomials - 1);
            }
    CHECK_THROWS_AS(linear_system_dim(SurfaceP2{}, {-1, 0}), domain_error);
}

TEST_CASE("curve genus by adjunction") {
    CHECK(curve_genus(SurfaceP2{}, {6, 0}) == 10);
    CHECK(curve_genus(SurfaceP2{}, {4, 0}) == 3);
    CHECK(curve_genus(SurfaceQuadric{}, {3, 3}) == 4);
    CHECK(curve_genus(SurfaceQuadric{}, {3, 4}) == 6);
    CHECK(curve_genus(SurfaceFn{4}, {2, 0}) == 3);
    SUBCASE("trigonal relation g = 3n + 2b - 2") {
        for (int n = 1; n <= 4; ++n)
            for (int b = 0; b <= 3; ++b)
                CHECK(curve_genus(SurfaceFn{n}, {3, b}) == 3 * n + 2 * b - 2);
    }
    CHECK(curve_genus(SurfaceP2{}, {1, 0}) == 0);
    CHECK_THROWS_AS(curve_genus(SurfaceFn{2}, {0, 3}), domain_error);  // negative genus
}

TEST_CASE("automorphism dimensions") {
    CHECK(aut_dim(SurfaceP2{}) == 8);
    CHECK(aut_dim(SurfaceQuadric{}) == 6);
    CHECK(aut_dim(SurfaceFn{1}) == 6);
    CHECK(aut_dim(SurfaceFn{2}) == 7);  // 3 + (1 + 3)
    CHECK(aut_dim(SurfaceFn{4}) == 9);
}

TEST_CASE("surface names round-trip") {
    for (const char* name : {"P2", "Quadric", "F1", "F4"})
        CHECK(surface_name(parse_surface(name)) == name);
    CHECK_THROWS_AS(parse_surface("P3"), domain_error);
}

TEST_CASE("bundled manifest replays clean") {
    auto entries = parse_manifest_json(bundled::ledger_manifest_json());
    REQUIRE(entries.size() >= 12);
    LedgerReport report = run_manifest(entries);
    for (const auto& line : report.lines) {
        CAPTURE(line.id);
        CAPTURE(line.detail);
        CHECK(line.passed);
    }
    CHECK(report.all_passed);

    SUBCASE("the recorded dimension values appear") {
        // parameter-space dimensions 12, 11, 10, 14 for the four reference
        // constructions
        auto dim_of = [&](const std::string& id) {
            for (const auto& line : report.lines)
                if (line.id == id) return line.dim;
            return -1;
        };
        CHECK(dim_of("m08-06-1-quadric") == 12);
        CHECK(dim_of("m09-03-1-f1") == 11);
        CHECK(dim_of("m10-04-0-f2") == 10);
        CHECK(dim_of("m06-02-0-f3") == 14);
        CHECK(dim_of("m14-02-0-p2") == 6);
    }
    SUBCASE("non-birational covers have the recorded degrees") {
        for (const auto& line : report.lines) {
            if (line.id == "m14-08-1-cover") CHECK(line.degree == Rat(3));
            if (line.id == "m10-10-1-cover") CHECK(line.degree == Rat(6));
        }
    }
}

TEST_CASE("manifest failures are reported, not dropped") {
    std::string json_text = R"([{
        "id": "broken",
        "surface": "P2",
        "systems": [{"class": [6], "codim": 0}],
        "labeling_order": "1",
        "aut_index": 1,
        "lattice_expr": "U + A1^6",
        "expected_order": "1441",
        "expected_degree": "1",
        "expected_r": 1
    }])";
    LedgerReport report = run_manifest(parse_manifest_json(json_text));
    REQUIRE(report.lines.size() == 1);
    CHECK(!report.lines[0].passed);
    CHECK(!report.all_passed);
}

TEST_CASE("census") {
    CensusResult census = nikulin_census();
    CHECK(census.count() == 75);
    SUBCASE("all recorded triples are members") {
        nlohmann::json named = nlohmann::json::parse(bundled::named_invariants_json());
        for (const auto& t : named) {
            InvariantTriple triple{t.at(0).get<int>(), t.at(1).get<int>(),
                                   t.at(2).get<int>()};
            CAPTURE(std::get<0>(triple));
            CAPTURE(std::get<1>(triple));
            CHECK(census.contains(triple));
        }
    }
    SUBCASE("parity violators and out-of-range rows are absent") {
        CHECK(!census.contains({2, 1, 0}));
        CHECK(!census.contains({1, 1, 0}));
        CHECK(!census.contains({6, 6, 0}));
        CHECK(!census.contains({14, 8, 0}));
        CHECK(!census.contains({12, 12, 1}));
    }
    SUBCASE("the Enriques point is present with its lattice") {
        REQUIRE(census.contains({10, 10, 0}));
        CHECK(census.contains({10, 10, 1}));
        CHECK(census.contains({18, 0, 0}));
        CHECK(census.contains({18, 4, 0}));
    }
}
