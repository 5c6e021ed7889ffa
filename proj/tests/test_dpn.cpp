#include "latlab/dpn.hpp"
#include "latlab/expr.hpp"
#include "latlab/ledger.hpp"
#include "latlab/bundled_data.hpp"
#include "latlab/census.hpp"

#include <doctest.h>

using namespace latlab;

namespace {
DpnConfig config(int rho, int comps) {
    DpnConfig c;
    c.rho_y = rho;
    c.components = comps;
    return c;
}
}

TEST_CASE("rank formula") {
    SUBCASE("quartic plus conic with eight nodes") {
        DpnConfig c = config(1, 2);
        c.a_count[1] = 8;
        CHECK(invariant_r(c) == 9);
    }
    SUBCASE("quartic with tangent lines and a D10 point") {
        DpnConfig c = config(1, 3);
        c.a_count[1] = 3;
        c.d_count[10] = 1;
        CHECK(invariant_r(c) == 14);
    }
    SUBCASE("smooth branch curve") { CHECK(invariant_r(config(1, 1)) == 1); }
    SUBCASE("A-series indices pair up") {
        DpnConfig c = config(1, 1);
        c.a_count[3] = 1;  // A3 contributes 2
        c.a_count[4] = 1;  // A4 contributes 2
        CHECK(invariant_r(c) == 5);
    }
}

TEST_CASE("component formula") {
    SUBCASE("D10 adds four components") {
        DpnConfig c = config(1, 3);
        c.d_count[10] = 1;
        CHECK(components_k(c) == 6);
    }
    SUBCASE("E7 with a D4") {
        DpnConfig c = config(1, 3);
        c.e_count[7] = 1;
        c.d_count[4] = 1;
        CHECK(components_k(c) == 6);
    }
    SUBCASE("irreducible nodal sextic") {
        DpnConfig c = config(1, 1);
        c.a_count[1] = 1;
        CHECK(components_k(c) == 0);
    }
}

TEST_CASE("full invariant") {
    SUBCASE("quintic plus transverse line with certificate") {
        DpnConfig c = config(1, 2);
        c.a_count[1] = 5;
        c.delta_certificate = 0;
        DpnInvariant inv = full_invariant(c);
        CHECK(inv.r == 6);
        CHECK(inv.a == 4);
        CHECK(inv.delta == 0);
        CHECK(inv.g == 6);
        CHECK(inv.k == 1);
    }
    SUBCASE("node triangle forces parity one") {
        DpnConfig c = config(1, 3);
        c.a_count[1] = 9;
        c.adjacency_flags = {1};
        DpnInvariant inv = full_invariant(c);
        CHECK(inv.r == 10);
        CHECK(inv.a == 6);
        CHECK(inv.delta == 1);
    }
    SUBCASE("node plus D4 on the quadric") {
        DpnConfig c = config(2, 3);
        c.a_count[1] = 4;
        c.d_count[4] = 1;
        c.adjacency_flags = {2};
        DpnInvariant inv = full_invariant(c);
        CHECK(inv.r == 10);
        CHECK(inv.a == 4);
        CHECK(inv.delta == 1);
    }
    SUBCASE("parity is undecided without flags or certificate") {
        DpnConfig c = config(1, 2);
        c.a_count[1] = 6;
        CHECK(!full_invariant(c).delta.has_value());
    }
    SUBCASE("rule flags only ever set parity one") {
        DpnConfig c = config(1, 3);
        c.a_count[1] = 9;
        c.delta_certificate = 0;  // flags win over the certificate
        c.adjacency_flags = {1};
        CHECK(full_invariant(c).delta == 1);
    }
    SUBCASE("inconsistent counts are rejected") {
        DpnConfig neg_a = config(1, 5);  // five disjoint components: a < 0
        CHECK_THROWS_AS(full_invariant(neg_a), domain_error);
        DpnConfig neg_g = config(1, 1);
        neg_g.a_count[1] = 25;  // r + a exceeds 22: genus would be negative
        CHECK_THROWS_AS(full_invariant(neg_g), domain_error);
    }
}

TEST_CASE("degree check") {
    Lattice l = eval_lattice_expr("U + A1^6").lattice;
    CHECK(degree_check(l, Int(1440)) == Rat(1));
    CHECK(degree_check(l, Int(720)) == Rat(2));
    CHECK(degree_check(eval_lattice_expr("U + E8").lattice, Int(1)) == Rat(1));
    CHECK_THROWS_AS(degree_check(l, Int(0)), domain_error);
}

TEST_CASE("bundled configurations reproduce their recorded invariants") {
    std::vector<DpnInvariant> expected;
    auto configs = parse_dpn_json(bundled::dpn_configs_json(), &expected);
    REQUIRE(configs.size() >= 8);
    for (size_t i = 0; i < configs.size(); ++i) {
        CAPTURE(configs[i].id);
        DpnInvariant inv = full_invariant(configs[i]);
        CHECK(inv == expected[i]);
    }
}

TEST_CASE("bundled configurations land inside the census") {
    std::vector<DpnInvariant> expected;
    auto configs = parse_dpn_json(bundled::dpn_configs_json(), &expected);
    CensusResult census = nikulin_census();
    for (const auto& c : configs) {
        DpnInvariant inv = full_invariant(c);
        CAPTURE(c.id);
        CHECK(inv.a == inv.r - 2 * inv.k);
        CHECK(inv.a >= 0);
        CHECK((inv.r + inv.a) % 2 == 0);
        REQUIRE(inv.delta.has_value());
        CHECK(census.contains({inv.r, inv.a, *inv.delta}));
    }
}

TEST_CASE("config validation") {
    DpnConfig c = config(1, 1);
    c.d_count[3] = 1;  // D3 is not a valid configuration entry
    CHECK_THROWS_AS(invariant_r(c), domain_error);
    DpnConfig c2 = config(1, 0);
    CHECK_THROWS_AS(invariant_r(c2), domain_error);
    CHECK_THROWS_AS(parse_dpn_json(R"([{"rho_y":1,"components":1,
        "singularities":[{"type":"F","index":4}]}])", nullptr),
                    domain_error);
}
