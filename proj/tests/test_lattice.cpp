#include "latlab/discform.hpp"
#include "latlab/expr.hpp"
#include "latlab/lattice.hpp"

#include <doctest.h>

#include <algorithm>

using namespace latlab;

namespace {
Lattice eval(const std::string& s) { return eval_lattice_expr(s).lattice; }
}

TEST_CASE("named lattices") {
    CHECK(make_U_scaled(2).gram() == IntMat{{0, 2}, {2, 0}});
    CHECK(make_rank1(-2).gram() == IntMat{{-2}});
    CHECK(make_E(8).det() == 1);
    CHECK(make_E(8).sig() == Signature{0, 0, 8});
    CHECK(make_E(8).is_even());
    CHECK(make_I(2, 7).is_even() == false);
    CHECK_THROWS_AS(make_D(1), domain_error);
    CHECK_THROWS_AS(make_rank1(0), domain_error);

    SUBCASE("D4 built from the root basis has 24 roots and det 4") {
        Lattice d4 = make_D(4);
        CHECK(d4.det() == 4);
        int count = 0;
        for (const auto& v : short_vectors(d4, 2))
            if (abs(d4.inner(v, v)) == 2) ++count;
        CHECK(count == 24);
    }
}

TEST_CASE("direct sums and scalings") {
    Lattice ua1 = eval("U + A1");
    CHECK(ua1.rank() == 3);
    CHECK(ua1.det() == 2);

    MainInvariant m = main_invariant(eval("U + A1^6"));
    CHECK(m.a == 6);
    CHECK(m.delta == 1);

    MainInvariant m2 = main_invariant(eval("<2> + A1 + D4"));
    CHECK(m2.r == 6);
    CHECK(m2.a == 4);
    CHECK(m2.delta == 1);

    SUBCASE("E8(2) has determinant 2^8 and norms divisible by 4") {
        Lattice l = eval("E8(2)");
        CHECK(l.det() == 256);
        for (const auto& v : short_vectors(l, 4)) {
            Int n = abs(l.inner(v, v));
            CHECK(mod_floor(n, 4) == 0);
        }
    }
    CHECK(rescale(eval("A1"), 1).gram() == eval("A1").gram());
    CHECK(rescale(eval("A1"), -1).gram() == eval("<2>").gram());
}

TEST_CASE("dual rescale") {
    CHECK(dual_rescale(make_U(), 1).gram() == make_U().gram());
    CHECK(dual_rescale(eval("A1"), 2).gram() == IntMat{{-1}});
    CHECK(dual_rescale(eval("U(2)"), 2).gram() == make_U().gram());
    CHECK_THROWS_AS(dual_rescale(eval("A2"), 2), domain_error);  // exponent 3
    SUBCASE("the three recorded identities") {
        CHECK(two_elementary_isometric(dual_rescale(eval("U^2 + E8(2)"), 2),
                                       eval("U(2)^2 + E8")));
        CHECK(two_elementary_isometric(dual_rescale(eval("U(2)^2 + D4"), 2),
                                       eval("U^2 + D4")));
        Lattice odd = dual_rescale(eval("U + I(1,1)(2) + E8(2)"), 2);
        CHECK(!odd.is_even());
        CHECK(odd.sig() == eval("U(2) + I(1,1) + E8").sig());
    }
}

TEST_CASE("even part") {
    CHECK_THROWS_AS(even_part(make_U()), domain_error);

    SUBCASE("I(0,n) gives D_n") {
        for (int n = 4; n <= 10; ++n) {
            EvenPart ep = even_part(make_I(0, n));
            auto labels = root_type(ep.sublattice);
            REQUIRE(labels.size() == 1);
            CHECK(labels[0] == AdeLabel{'D', n});
            CHECK(abs(ep.sublattice.det()) == 4 * abs(make_I(0, n).det()));
        }
    }
    SUBCASE("glue class has norm one and order two") {
        EvenPart ep = even_part(make_I(2, 7));
        FiniteQuadraticForm q = discriminant_form(ep.sublattice);
        auto x = discriminant_class(ep.sublattice, q, ep.glue_class_coords);
        CHECK(q.q(x) == Rat(1));
        CHECK(q.add(x, x) == q.zero());
    }
    SUBCASE("even part of I(2,8) is U^2 + D6 by invariants") {
        EvenPart ep = even_part(make_I(2, 8));
        CHECK(two_elementary_isometric(ep.sublattice, eval("U^2 + D6")));
    }
}

TEST_CASE("overlattices") {
    SUBCASE("the first glue fixture has the recorded invariant") {
        const char* ex1 =
            "glue(U(2) + A1^6; 3/2,3/2,-1/2,-1/2,-1/2,-1/2,-1/2,-1/2;"
            " 1/2,1/2,-1/2,-1/2,-1/2,-1/2,-1/2,-1/2)";
        Lattice l1 = eval(ex1);
        CHECK(l1.is_even());
        MainInvariant m1 = main_invariant(l1);
        CHECK(m1.r == 8);
        CHECK(m1.a == 6);
        CHECK(m1.delta == 1);
        CHECK(two_elementary_isometric(l1, eval("U + A1^6")));
        // the two glue vectors differ by a lattice vector, so the glue group
        // is cyclic of order 2 and the determinant drops by 4
        CHECK(abs(l1.det()) == abs(eval("U(2) + A1^6").det()) / 4);
    }
    SUBCASE("glue vectors outside the dual are rejected") {
        CHECK_THROWS_AS(overlattice(make_U(), {{Rat(1) / 3, Rat(0)}}, false), domain_error);
    }
    SUBCASE("evenness can be demanded") {
        CHECK_THROWS_AS(overlattice(eval("<2> + <2>"), {{Rat(1) / 2, Rat(1) / 2}}, true),
                        domain_error);
    }
}

TEST_CASE("orthogonal complement and glue data") {
    SUBCASE("complement of a basis root in A1^2") {
        Lattice comp = orthogonal_complement(eval("A1^2"), {Int(1), Int(0)});
        CHECK(comp.gram() == IntMat{{-2}});
    }
    SUBCASE("complement of u+v in U") {
        Lattice comp = orthogonal_complement(make_U(), {Int(1), Int(1)});
        CHECK(comp.gram() == IntMat{{-2}});
    }
    SUBCASE("imprimitive vectors are rejected") {
        CHECK_THROWS_AS(orthogonal_complement(eval("A1^2"), {Int(2), Int(0)}), domain_error);
        CHECK_THROWS_AS(orthogonal_complement(eval("A1^2"), {Int(0), Int(0)}), domain_error);
    }
    SUBCASE("direct summand has trivial glue") {
        IntMat rows(1, 3);
        rows(0, 0) = 1;  // the A1 summand of A1 + U
        GlueData g = glue_data(eval("A1 + U"), rows);
        CHECK(g.index == 1);
    }
    SUBCASE("one glue class survives in the first fixture") {
        Lattice l = eval_lattice_expr(
            "glue(U(2) + A1^6; 3/2,3/2,-1/2,-1/2,-1/2,-1/2,-1/2,-1/2;"
            " 1/2,1/2,-1/2,-1/2,-1/2,-1/2,-1/2,-1/2)").lattice;
        // det(S) det(S_perp) = |G|^2 det(L) for the six orthogonal roots
        IntMat rows(6, 8);
        int r = 0;
        for (int i = 0; i < 8 && r < 6; ++i) {
            bool unit = l.gram()(i, i) == -2;
            for (int j = 0; j < 8 && unit; ++j)
                if (j != i && l.gram()(i, j) != 0) unit = false;
            if (unit) rows(r++, i) = 1;
        }
        if (r == 6) {
            GlueData g = glue_data(l, rows);
            CHECK(g.index == 2);
        }
    }
    SUBCASE("glue group orders match the determinant identity") {
        // A primitive vector of norm -4 in U^2 + D6 with half in the dual.
        Lattice l = eval("U^2 + D6");
        auto vecs = heegner_vectors(l, -4, true, 2);
        REQUIRE(!vecs.empty());
        IntMat rows(1, l.rank());
        for (int j = 0; j < l.rank(); ++j) rows(0, j) = vecs.front()[j];
        GlueData g = glue_data(l, rows);
        CHECK(g.index == 2);
        CHECK(g.s_orders == std::vector<Int>{Int(4)});
        CHECK(g.t_orders == std::vector<Int>{Int(4)});
    }
}

TEST_CASE("short vectors and root types") {
    CHECK(short_vectors(eval("A1"), 2).size() == 2);
    int e8_roots = 0;
    Lattice e8 = make_E(8);
    for (const auto& v : short_vectors(e8, 2))
        if (abs(e8.inner(v, v)) == 2) ++e8_roots;
    CHECK(e8_roots == 240);

    CHECK(root_type(eval("A1^3")) == std::vector<AdeLabel>{{'A', 1}, {'A', 1}, {'A', 1}});
    CHECK(root_type(eval("E7 + A1")) == std::vector<AdeLabel>{{'A', 1}, {'E', 7}});
    CHECK(root_type(make_E(6)) == std::vector<AdeLabel>{{'E', 6}});
    CHECK_THROWS_AS(root_type(make_U()), domain_error);           // indefinite
    CHECK_THROWS_AS(root_type(eval("A1 + <-4>")), domain_error);  // roots do not span
}

TEST_CASE("isometry decisions") {
    CHECK(definite_isometric(eval("A1^2"), eval("<-2> + <-2>")));
    CHECK(!definite_isometric(eval("A2"), eval("A1^2")));
    CHECK(definite_isometric(even_part(make_I(0, 5)).sublattice, make_D(5)));

    Lattice l = eval("U + D4^2");
    CHECK(two_elementary_isometric(l, l));
    CHECK(!two_elementary_isometric(eval("U + A1^6"), eval("U(2) + E7")));
    CHECK_THROWS_AS(two_elementary_isometric(eval("A1"), eval("A1")), domain_error);
    CHECK_THROWS_AS(two_elementary_isometric(eval("U + A2"), eval("U + A2")), domain_error);
}

TEST_CASE("heegner vectors") {
    SUBCASE("none in U") { CHECK(heegner_vectors(make_U(), -4, true, 4).empty()); }
    SUBCASE("found in A1^4") {
        auto vecs = heegner_vectors(eval("A1^4"), -4, true, 4);
        CHECK(!vecs.empty());
        std::vector<Int> witness{Int(1), Int(1), Int(0), Int(0)};
        CHECK(std::find(vecs.begin(), vecs.end(), witness) != vecs.end());
    }
    SUBCASE("exists in U^2 + D6 and has the recorded complement") {
        Lattice l = eval("U^2 + D6");
        auto vecs = heegner_vectors(l, -4, true, 2);
        REQUIRE(!vecs.empty());
        // the fork-plus-doubled-chain witness in the D6 block
        std::vector<Int> witness{Int(0), Int(0), Int(0), Int(0),
                                 Int(1), Int(1), Int(2), Int(2), Int(2), Int(2)};
        CHECK(std::find(vecs.begin(), vecs.end(), witness) != vecs.end());
        Lattice comp = orthogonal_complement(l, vecs.front());
        CHECK(comp.is_even());
        CHECK(comp.sig() == Signature{2, 0, 7});
        FiniteQuadraticForm q = discriminant_form(comp);
        CHECK(q.orders() == std::vector<Int>{Int(4)});
        CHECK(q.q({Int(1)}) == Rat(3) / 4);
    }
    SUBCASE("empty box is rejected") {
        CHECK_THROWS_AS(heegner_vectors(make_U(), -4, false, 0), domain_error);
    }
}

TEST_CASE("main invariant requires the right inputs") {
    CHECK_THROWS_AS(main_invariant(make_I(1, 1)), domain_error);    // odd
    CHECK_THROWS_AS(main_invariant(eval("U + A2")), domain_error);  // not 2-elementary
    MainInvariant m = main_invariant(eval("U + E8"));
    CHECK(m.r == 10);
    CHECK(m.a == 0);
    CHECK(m.delta == 0);
    MainInvariant m2 = main_invariant(eval("U + A1^7"));
    CHECK(m2.r == 9);
    CHECK(m2.a == 7);
    CHECK(m2.delta == 1);
    CHECK(m2.g == 3);
    CHECK(m2.k == 1);
}
