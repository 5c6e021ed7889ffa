#include "latlab/discform.hpp"
#include "latlab/expr.hpp"
#include "latlab/lattice.hpp"

#include <doctest.h>

#include <algorithm>

using namespace latlab;

namespace {
FiniteQuadraticForm disc(const std::string& s) {
    return discriminant_form(eval_lattice_expr(s).lattice);
}
}

TEST_CASE("discriminant forms of small lattices") {
    SUBCASE("A1") {
        FiniteQuadraticForm q = disc("A1");
        CHECK(q.orders() == std::vector<Int>{Int(2)});
        CHECK(q.q({Int(1)}) == Rat(3) / 2);  // -1/2 mod 2Z
    }
    SUBCASE("D5 has a Z/4 generator of norm -5/4") {
        FiniteQuadraticForm q = disc("D5");
        CHECK(q.orders() == std::vector<Int>{Int(4)});
        CHECK(q.q({Int(1)}) == Rat(3) / 4);  // -5/4 mod 2Z
    }
    SUBCASE("U(2) is the u block") {
        FiniteQuadraticForm q = disc("U(2)");
        CHECK(q.orders() == std::vector<Int>(2, Int(2)));
        // both generators isotropic, pairing 1/2: oracle evaluation of the
        // scaled dual Gram (1/2) * [[0,1],[1,0]]
        FiniteQuadraticForm::Element e{Int(1), Int(0)}, f{Int(0), Int(1)};
        CHECK(q.q(e) == Rat(0));
        CHECK(q.q(f) == Rat(0));
        CHECK(q.b(e, f) == Rat(1) / 2);
        CHECK(q.q(q.add(e, f)) == Rat(1));
        auto blocks = block_decomposition(q);
        CHECK(blocks == std::vector<Block>{Block::u});
    }
    SUBCASE("D4 is the v block with all norms one") {
        FiniteQuadraticForm q = disc("D4");
        CHECK(q.length() == 2);
        CHECK(q.parity() == 0);
        int ones = 0;
        for (const auto& e : q.elements())
            if (q.q(e) == Rat(1)) ++ones;
        CHECK(ones == 3);
        CHECK(block_decomposition(q) == std::vector<Block>{Block::v});
    }
    SUBCASE("rank-1 blocks") {
        CHECK(block_decomposition(disc("<2>")) == std::vector<Block>{Block::w_plus});
        CHECK(block_decomposition(disc("A1")) == std::vector<Block>{Block::w_minus});
        auto mixed = block_decomposition(disc("<2> + A1"));
        std::sort(mixed.begin(), mixed.end());
        CHECK(mixed == std::vector<Block>{Block::w_plus, Block::w_minus});
    }
    SUBCASE("degenerate lattices are rejected") {
        CHECK_THROWS_AS(discriminant_form(Lattice(IntMat{{0}})), domain_error);
    }
}

TEST_CASE("length and parity") {
    CHECK(disc("U + A1^6").length() == 6);
    CHECK(disc("U + A1^6").parity() == 1);
    CHECK(disc("E8").length() == 0);
    CHECK(disc("E8").parity() == 0);
    CHECK(disc("D4").length() == 2);
    CHECK(disc("D4").parity() == 0);
    CHECK(disc("U(2) + D4^2").parity() == 0);
    CHECK(!disc("D5").is_two_elementary());
}

TEST_CASE("gauss signatures") {
    CHECK(gauss_signature(disc("<2>")) == 1);
    CHECK(gauss_signature(disc("E8")) == 0);
    CHECK(gauss_signature(disc("U + A1^6")) == 2);  // signature 1-7 = -6
    CHECK(gauss_signature(disc("D6")) == 2);
    CHECK(gauss_signature(disc("E8(2)")) == 0);
    SUBCASE("matches the block signature on 2-elementary forms") {
        for (const char* expr : {"U + A1^6", "U(2) + E7", "U + D4^2", "<2>^2 + <-2>^5",
                                 "U(2)^2 + E8", "U + U(2) + A1^4"}) {
            FiniteQuadraticForm q = disc(expr);
            CHECK(gauss_signature(q) == block_signature(q));
        }
    }
}

TEST_CASE("isometry group orders") {
    struct Row {
        const char* expr;
        long long order;
    };
    const Row rows[] = {
        {"U + A1^6", 1440},   {"U + D4^2", 72},   {"U(2) + E7", 2},
        {"U + E8 + D4", 6},   {"U + A1^5", 120},  {"U + D4 + A1^2", 12},
        {"U + A1^4", 24},     {"U(2) + D4", 120}, {"U(2) + E7 + A1", 8},
        {"U + D4 + A1^4", 1152},
    };
    for (const Row& row : rows) {
        GroupOrder order = isometry_group_order(disc(row.expr));
        CHECK(order.value == Int(row.order));
        CHECK(order.derivation == OrderDerivation::both_agree);
    }
    SUBCASE("generic path handles Z/4 groups") {
        GroupOrder order = isometry_group_order(disc("D5"));
        CHECK(order.value == 2);
        CHECK(order.derivation == OrderDerivation::brute_force);
    }
    SUBCASE("closed form covers groups past the brute-force bound") {
        GroupOrder order = isometry_group_order(disc("U + A1^9"));
        CHECK(order.value == Int(348364800));
        CHECK(order.derivation == OrderDerivation::closed_form);
    }
    SUBCASE("no path for large non-2-elementary groups") {
        // <1024> has cyclic discriminant of order 1024
        CHECK_THROWS_AS(isometry_group_order(disc("<1024>")), domain_error);
    }
}

TEST_CASE("classical orders") {
    CHECK(classical_order(ClassicalFamily::OPlus, 2) == 72);
    CHECK(classical_order(ClassicalFamily::OMinus, 2) == 120);
    CHECK(classical_order(ClassicalFamily::Sp, 2) == 720);
    CHECK(classical_order(ClassicalFamily::Sp, 3) == 1451520);
    CHECK(classical_order(ClassicalFamily::OPlus, 3) == 40320);
    CHECK(classical_order(ClassicalFamily::OMinus, 3) == 51840);
    SUBCASE("Weyl identities") {
        CHECK(classical_order(ClassicalFamily::Weyl, 6) ==
              classical_order(ClassicalFamily::OMinus, 3));
        CHECK(classical_order(ClassicalFamily::Weyl, 7) ==
              2 * classical_order(ClassicalFamily::Sp, 3));
        CHECK(classical_order(ClassicalFamily::Weyl, 8) ==
              2 * classical_order(ClassicalFamily::OPlus, 4));
        Int w5 = classical_order(ClassicalFamily::Weyl, 5);
        CHECK(w5 == Int(16) * 120);
    }
    CHECK_THROWS_AS(classical_order(ClassicalFamily::Weyl, 4), domain_error);
}

TEST_CASE("closed form matches brute force across all block combinations") {
    // Build every orthogonal sum u^p v^q (w+)^s (w-)^t of length <= 6
    // synthetically and compare the two order paths.
    FiniteQuadraticForm u = disc("U(2)");
    FiniteQuadraticForm v = disc("D4");
    FiniteQuadraticForm wp = disc("<2>");
    FiniteQuadraticForm wm = disc("A1");
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            for (int s = 0; s <= 6; ++s)
                for (int t = 0; t <= 6; ++t) {
                    int len = 2 * (p + q) + s + t;
                    if (len == 0 || len > 6) continue;
                    FiniteQuadraticForm form;
                    bool first = true;
                    auto append = [&](const FiniteQuadraticForm& b, int count) {
                        for (int i = 0; i < count; ++i) {
                            form = first ? b : direct_sum(form, b);
                            first = false;
                        }
                    };
                    append(u, p);
                    append(v, q);
                    append(wp, s);
                    append(wm, t);
                    CAPTURE(p);
                    CAPTURE(q);
                    CAPTURE(s);
                    CAPTURE(t);
                    GroupOrder order = isometry_group_order(form);
                    CHECK(order.derivation == OrderDerivation::both_agree);
                }
}

TEST_CASE("norm-one elements, orbits, stabilizers") {
    SUBCASE("six in the Enriques-side block, one orbit") {
        FiniteQuadraticForm q = disc("U(2)^2 + E8");
        auto ones = norm_one_elements(q);
        REQUIRE(ones.size() == 6);
        auto parts = orbits(q, ones);
        CHECK(parts.size() == 1);
        CHECK(stabilizer_order(q, ones[0]) == 12);
    }
    SUBCASE("three in U^2 + D4, one orbit, group S3") {
        FiniteQuadraticForm q = disc("U^2 + D4");
        auto ones = norm_one_elements(q);
        REQUIRE(ones.size() == 3);
        CHECK(orbits(q, ones).size() == 1);
        CHECK(isometry_group_order(q).value == 6);
    }
    SUBCASE("none in E8") { CHECK(norm_one_elements(disc("E8")).empty()); }
    SUBCASE("zero is stabilized by everything") {
        FiniteQuadraticForm q = disc("U + A1^4");
        CHECK(stabilizer_order(q, q.zero()) == isometry_group_order(q).value);
    }
}

TEST_CASE("block decomposition invariants") {
    for (const char* expr :
         {"U(2)", "D4", "<2> + A1", "U + A1^6", "U(2)^2 + E8", "E8(2)", "U + U(2) + A1^4"}) {
        FiniteQuadraticForm q = disc(expr);
        auto blocks = block_decomposition(q);
        int len = 0, sigma = 0;
        bool has_w = false;
        for (Block b : blocks) {
            switch (b) {
                case Block::u: len += 2; break;
                case Block::v: len += 2; sigma += 4; break;
                case Block::w_plus: len += 1; sigma += 1; has_w = true; break;
                case Block::w_minus: len += 1; sigma -= 1; has_w = true; break;
            }
        }
        CHECK(len == q.length());
        CHECK(((sigma % 8) + 8) % 8 == gauss_signature(q));
        CHECK(has_w == (q.parity() == 1));
    }
}

TEST_CASE("classes of vectors outside the dual are rejected") {
    Lattice l = eval_lattice_expr("A1^2").lattice;
    FiniteQuadraticForm q = discriminant_form(l);
    CHECK_THROWS_AS(discriminant_class(l, q, {Rat(1) / 3, Rat(0)}), domain_error);
    // a dual vector maps to its residue tuple
    auto cls = discriminant_class(l, q, {Rat(1) / 2, Rat(1) / 2});
    CHECK(q.q(cls) == q.q(q.add(cls, q.zero())));
}

TEST_CASE("direct sums of forms and odd-lattice flag") {
    FiniteQuadraticForm sum = direct_sum(disc("U(2)"), disc("A1"));
    CHECK(sum.length() == 3);
    CHECK(sum.parity() == 1);
    CHECK(disc("I(1,1)").from_odd_lattice());
    CHECK(disc("U").trivial());
}
