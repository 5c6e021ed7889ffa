#include "latlab/verify.hpp"

#include "latlab/bundled_data.hpp"
#include "latlab/census.hpp"
#include "latlab/discform.hpp"
#include "latlab/expr.hpp"
#include "latlab/ledger.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <sstream>

namespace latlab {

namespace {

void check(VerifySection& section, const std::string& name, bool ok,
           const std::string& detail = "") {
    section.checks.push_back({name, ok, ok ? "" : detail});
}

template <class Fn>
void checked(VerifySection& section, const std::string& name, Fn&& fn) {
    try {
        fn();
    } catch (const std::exception& ex) {
        section.checks.push_back({name, false, std::string("error: ") + ex.what()});
    }
}

Lattice eval(const std::string& expr) { return eval_lattice_expr(expr).lattice; }

std::string show_inv(const MainInvariant& m) {
    std::ostringstream s;
    s << "(" << m.r << "," << m.a << "," << m.delta << ")";
    return s.str();
}

}  // namespace

VerifySection verify_group_orders() {
    VerifySection s{"group-order table", {}};
    struct Row {
        const char* expr;
        long long order;
    };
    static const Row rows[] = {
        {"U + A1^6", 1440},        {"U + D4^2", 72},
        {"U(2) + E7", 2},          {"U + E8 + D4", 6},
        {"U + A1^7", 40320},       {"U + A1^5", 120},
        {"U + D4 + A1^2", 12},     {"U + U(2) + A1^6", 2903040},
        {"U + U(2) + A1^4", 1920}, {"<2>^2 + <-2>^5", 51840},
        {"U(2)^2 + A1^2", 1440},   {"U(2)^2 + A1", 72},
        {"U + U(2) + A1^3", 120},  {"U(2)^2 + E8", 72},
    };
    for (const Row& row : rows) {
        checked(s, row.expr, [&] {
            GroupOrder order = isometry_group_order(discriminant_form(eval(row.expr)));
            std::ostringstream detail;
            detail << "got " << order.value;
            check(s, std::string(row.expr) + " -> " + std::to_string(row.order),
                  order.value == Int(row.order), detail.str());
        });
    }
    checked(s, "norm-one orbit of U(2)^2 + E8", [&] {
        FiniteQuadraticForm q = discriminant_form(eval("U(2)^2 + E8"));
        auto ones = norm_one_elements(q);
        check(s, "six norm-one elements", ones.size() == 6,
              "got " + std::to_string(ones.size()));
        auto parts = orbits(q, ones);
        check(s, "single orbit of size six", parts.size() == 1 && parts[0].size() == 6, "");
        Int stab = stabilizer_order(q, ones[0]);
        check(s, "stabilizer order 12", stab == 12, "got stabilizer " + stab.str());
        Int total = isometry_group_order(q).value;
        check(s, "orbit times stabilizer equals group order",
              stab * Int(ones.size()) == total, "");
    });
    return s;
}

VerifySection verify_glue_constructions() {
    VerifySection s{"overlattice glue constructions", {}};
    struct Row {
        int index;
        MainInvariant expected;
        const char* model;
    };
    auto inv = [](int r, int a, int delta) {
        MainInvariant m;
        m.n_plus = 1;
        m.n_minus = r - 1;
        m.r = r;
        m.a = a;
        m.delta = delta;
        m.hyperbolic = true;
        m.g = 11 - (r + a) / 2;
        m.k = (r - a) / 2;
        return m;
    };
    const Row rows[] = {
        {1, inv(8, 6, 1), "U + A1^6"},
        {2, inv(9, 3, 1), "U(2) + E7"},
        {3, inv(10, 4, 0), "U + D4^2"},
        {4, inv(14, 2, 0), "U + E8 + D4"},
    };
    for (const Row& row : rows) {
        std::string name = "glue fixture " + std::to_string(row.index);
        checked(s, name, [&] {
            Lattice l = eval(bundled::example_expr(row.index));
            check(s, name + " is even", l.is_even(), "");
            MainInvariant m = main_invariant(l);
            check(s, name + " has invariant " + show_inv(row.expected), m == row.expected,
                  "got " + show_inv(m));
            Lattice model = eval(row.model);
            check(s, name + std::string(" is isometric to ") + row.model,
                  two_elementary_isometric(l, model), "");
        });
    }
    return s;
}

VerifySection verify_even_parts() {
    VerifySection s{"even-part identities", {}};
    // Root type of the even part of the odd definite lattices.
    for (int n = 4; n <= 10; ++n) {
        std::string name = "even part of I(0," + std::to_string(n) + ") has root type D" +
                           std::to_string(n);
        checked(s, name, [&] {
            EvenPart ep = even_part(make_I(0, n));
            auto labels = root_type(ep.sublattice);
            bool ok = labels.size() == 1 && labels[0] == AdeLabel{'D', n};
            check(s, name, ok, "got " + format_ade(labels));
            check(s, name + ": index two in the determinant",
                  abs(ep.sublattice.det()) == 4 * abs(make_I(0, n).det()), "");
        });
    }
    checked(s, "even part of I(0,5) isometric to D5", [&] {
        EvenPart ep = even_part(make_I(0, 5));
        check(s, "even part of I(0,5) isometric to D5",
              definite_isometric(ep.sublattice, make_D(5)), "");
    });

    checked(s, "even part of I(2,8)", [&] {
        EvenPart ep = even_part(make_I(2, 8));
        Lattice model = eval("U^2 + D6");
        check(s, "even part of I(2,8) isometric to U^2 + D6",
              two_elementary_isometric(ep.sublattice, model), "");
        FiniteQuadraticForm q = discriminant_form(ep.sublattice);
        auto x = discriminant_class(ep.sublattice, q, ep.glue_class_coords);
        check(s, "glue class of I(2,8) has norm one", q.q(x) == Rat(1),
              "q(x) = " + q.q(x).str());
        Int stab = stabilizer_order(q, x);
        Int total = isometry_group_order(q).value;
        check(s, "glue class of I(2,8) fixed by the whole isometry group", stab == total,
              "stabilizer " + stab.str() + " of " + total.str());
    });

    checked(s, "even part of I(2,7)", [&] {
        EvenPart ep = even_part(make_I(2, 7));
        Lattice model = eval("U^2 + D5");
        // Z/4 discriminants sit outside the 2-elementary uniqueness statement;
        // certify through signature and the full discriminant form instead.
        check(s, "even part of I(2,7) has signature (2,7)",
              ep.sublattice.sig() == Signature{2, 0, 7}, "");
        FiniteQuadraticForm q = discriminant_form(ep.sublattice);
        FiniteQuadraticForm qm = discriminant_form(model);
        check(s, "even part of I(2,7) has discriminant Z/4",
              q.orders() == std::vector<Int>{Int(4)}, "");
        bool q_match = qm.orders() == q.orders() && q.q({Int(1)}) == qm.q({Int(1)});
        check(s, "even part of I(2,7) matches the discriminant form of U^2 + D5", q_match,
              "q(gen) = " + q.q({Int(1)}).str());
        auto x = discriminant_class(ep.sublattice, q, ep.glue_class_coords);
        check(s, "glue class of I(2,7) is the order-two element", x == FiniteQuadraticForm::Element{Int(2)},
              "");
        check(s, "glue class of I(2,7) has norm one", q.q(x) == Rat(1), "q(x) = " + q.q(x).str());
    });

    checked(s, "even part of I(2,6)", [&] {
        EvenPart ep = even_part(make_I(2, 6));
        Lattice model = eval("U^2 + D4");
        check(s, "even part of I(2,6) isometric to U^2 + D4",
              two_elementary_isometric(ep.sublattice, model), "");
        FiniteQuadraticForm q = discriminant_form(ep.sublattice);
        auto ones = norm_one_elements(q);
        check(s, "exactly three norm-one elements", ones.size() == 3,
              "got " + std::to_string(ones.size()));
        auto parts = orbits(q, ones);
        check(s, "norm-one elements form one orbit", parts.size() == 1, "");
        auto x = discriminant_class(ep.sublattice, q, ep.glue_class_coords);
        check(s, "glue class of I(2,6) has norm one", q.q(x) == Rat(1), "");
    });

    checked(s, "even part of U(2) + I(1,1) + E8", [&] {
        EvenPart ep = even_part(eval("U(2) + I(1,1) + E8"));
        Lattice model = eval("U(2)^2 + E8");
        check(s, "even part of U(2) + I(1,1) + E8 isometric to U(2)^2 + E8",
              two_elementary_isometric(ep.sublattice, model), "");
        FiniteQuadraticForm q = discriminant_form(ep.sublattice);
        auto x = discriminant_class(ep.sublattice, q, ep.glue_class_coords);
        check(s, "glue class has norm one", q.q(x) == Rat(1), "");
    });
    return s;
}

VerifySection verify_dual_rescale() {
    VerifySection s{"dual-rescale identities", {}};
    struct Row {
        const char* from;
        const char* to;
    };
    const Row rows[] = {
        {"U^2 + E8(2)", "U(2)^2 + E8"},
        {"U(2)^2 + D4", "U^2 + D4"},
    };
    for (const Row& row : rows) {
        std::string name = std::string("dual2(") + row.from + ") isometric to " + row.to;
        checked(s, name, [&] {
            Lattice l = dual_rescale(eval(row.from), 2);
            check(s, name, two_elementary_isometric(l, eval(row.to)), "");
        });
    }
    checked(s, "dual2(U + I(1,1)(2) + E8(2)) matches U(2) + I(1,1) + E8", [&] {
        // The right-hand side is odd, so compare through even parts and the
        // glue class: both must be U(2)^2 + E8 with a norm-one class, and all
        // norm-one classes lie in a single orbit.
        Lattice l = dual_rescale(eval("U + I(1,1)(2) + E8(2)"), 2);
        Lattice r = eval("U(2) + I(1,1) + E8");
        check(s, "rescaled dual is odd", !l.is_even(), "");
        check(s, "signatures agree", l.sig() == r.sig(), "");
        EvenPart el = even_part(l);
        EvenPart er = even_part(r);
        check(s, "even parts isometric",
              two_elementary_isometric(el.sublattice, er.sublattice), "");
        FiniteQuadraticForm ql = discriminant_form(el.sublattice);
        FiniteQuadraticForm qr = discriminant_form(er.sublattice);
        auto xl = discriminant_class(el.sublattice, ql, el.glue_class_coords);
        auto xr = discriminant_class(er.sublattice, qr, er.glue_class_coords);
        check(s, "glue classes have norm one", ql.q(xl) == Rat(1) && qr.q(xr) == Rat(1), "");
        auto parts = orbits(ql, norm_one_elements(ql));
        check(s, "norm-one classes form a single orbit", parts.size() == 1, "");
    });
    // Involution property on a ten-lattice catalog.
    const char* catalog[] = {"U",           "U(2)",      "A1",          "<2>",
                             "D4",          "E8(2)",     "U + A1^2",    "U + D4",
                             "U(2)^2 + E8", "U^2 + E8(2)"};
    for (const char* expr : catalog) {
        std::string name = std::string("dual2 involution on ") + expr;
        checked(s, name, [&] {
            Lattice l = eval(expr);
            Lattice back = dual_rescale(dual_rescale(l, 2), 2);
            bool ok = l.is_indefinite() ? two_elementary_isometric(back, l)
                                        : definite_isometric(back, l);
            check(s, name, ok, "");
        });
    }
    return s;
}

VerifySection verify_heegner() {
    VerifySection s{"Heegner vector and complement", {}};
    checked(s, "U^2 + D6", [&] {
        Lattice l = eval("U^2 + D6");
        auto vecs = heegner_vectors(l, -4, /*half_in_dual=*/true, /*box=*/2);
        check(s, "a (-4)-vector with half in the dual exists", !vecs.empty(), "");
        if (vecs.empty()) return;
        const auto& v = vecs.front();
        Lattice comp = orthogonal_complement(l, v);
        check(s, "complement is even", comp.is_even(), "");
        check(s, "complement has signature (2,7)", comp.sig() == Signature{2, 0, 7}, "");
        FiniteQuadraticForm q = discriminant_form(comp);
        check(s, "complement discriminant is Z/4", q.orders() == std::vector<Int>{Int(4)},
              "");
        Rat qv = q.q({Int(1)});
        check(s, "generator norm is 3/4 mod 2Z", qv == Rat(3) / 4 || qv == Rat(11) / 4 - 2,
              "q(gen) = " + qv.str());
        IntMat rows(1, l.rank());
        for (int j = 0; j < l.rank(); ++j) rows(0, j) = v[j];
        GlueData glue = glue_data(l, rows);
        check(s, "glue group has order two", glue.index == 2, "index " + glue.index.str());
    });
    checked(s, "no such vector in U", [&] {
        auto vecs = heegner_vectors(make_U(), -4, /*half_in_dual=*/true, /*box=*/4);
        check(s, "U contains no primitive (-4)-vector with half in the dual", vecs.empty(),
              "");
    });
    checked(s, "A1^4 contains one", [&] {
        auto vecs = heegner_vectors(eval("A1^4"), -4, /*half_in_dual=*/true, /*box=*/4);
        check(s, "A1^4 contains a (-4)-vector with half in the dual", !vecs.empty(), "");
    });
    return s;
}

VerifySection verify_dpn_manifest() {
    VerifySection s{"DPN invariant calculator", {}};
    checked(s, "bundled configurations", [&] {
        std::vector<DpnInvariant> expected;
        auto configs = parse_dpn_json(bundled::dpn_configs_json(), &expected);
        check(s, "at least eight configurations", configs.size() >= 8, "");
        for (size_t i = 0; i < configs.size(); ++i) {
            DpnInvariant inv = full_invariant(configs[i]);
            bool ok = inv == expected[i];
            std::ostringstream detail;
            detail << "got (" << inv.r << "," << inv.a << ","
                   << (inv.delta ? std::to_string(*inv.delta) : std::string("?")) << ") g="
                   << inv.g << " k=" << inv.k;
            check(s, "config " + configs[i].id, ok, detail.str());
        }
    });
    return s;
}

VerifySection verify_ledger_manifest() {
    VerifySection s{"period-map ledger", {}};
    checked(s, "bundled manifest", [&] {
        auto entries = parse_manifest_json(bundled::ledger_manifest_json());
        check(s, "at least twelve entries", entries.size() >= 12, "");
        LedgerReport report = run_manifest(entries);
        for (const auto& line : report.lines)
            check(s, "entry " + line.id, line.passed, line.detail);
    });
    return s;
}

VerifySection verify_census() {
    VerifySection s{"census of main invariants", {}};
    checked(s, "census", [&] {
        CensusResult census = nikulin_census();
        check(s, "census counts 75 members", census.count() == 75,
              "got " + std::to_string(census.count()));
        nlohmann::json named = nlohmann::json::parse(bundled::named_invariants_json());
        std::vector<InvariantTriple> missing;
        for (const auto& t : named) {
            InvariantTriple triple{t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()};
            if (!census.contains(triple)) missing.push_back(triple);
        }
        std::ostringstream detail;
        for (const auto& [r, a, d] : missing)
            detail << "(" << r << "," << a << "," << d << ") ";
        check(s, "census contains every recorded invariant", missing.empty(),
              "missing: " + detail.str());
        check(s, "(2,1,0) is not a member (parity)", !census.contains({2, 1, 0}), "");
        check(s, "(1,1,0) is not a member", !census.contains({1, 1, 0}), "");
        // Certificates must reproduce their keys.
        bool certs_ok = true;
        std::string bad;
        for (const auto& [triple, cert] : census.members) {
            auto [r, a, d] = triple;
            Lattice plus = eval(cert.plus_expr);
            Lattice minus = eval(cert.minus_expr);
            FiniteQuadraticForm qp = discriminant_form(plus);
            FiniteQuadraticForm qm = discriminant_form(minus);
            bool ok = plus.sig() == Signature{1, 0, r - 1} &&
                      minus.sig() == Signature{2, 0, 20 - r} && plus.is_even() &&
                      minus.is_even() && qp.is_two_elementary() && qm.is_two_elementary() &&
                      qp.length() == a && qm.length() == a && qp.parity() == d &&
                      qm.parity() == d;
            if (ok) {
                // Milgram consistency across the pair: signatures sum to 0 mod 8.
                int sum = (block_signature(qp) + block_signature(qm)) % 8;
                ok = (sum == 0);
            }
            if (!ok && bad.empty())
                bad = "(" + std::to_string(r) + "," + std::to_string(a) + "," +
                      std::to_string(d) + ")";
            certs_ok = certs_ok && ok;
        }
        check(s, "every certificate reproduces its invariant", certs_ok,
              "first failure at " + bad);
    });
    return s;
}

VerifySection verify_property_suites() {
    VerifySection s{"property suites", {}};

    const char* catalog[] = {"U",       "U(2)",     "A1",          "<2>",       "<-2>",
                             "A2",      "A3",       "D4",          "D5",        "D6",
                             "D8",      "E6",       "E7",          "E8",        "E8(2)",
                             "U + A1",  "U + D4",   "U(2) + E7",   "U + A1^6",  "U + E8",
                             "U^2 + D6"};

    checked(s, "Milgram congruence on the catalog", [&] {
        bool all = true;
        std::string bad;
        for (const char* expr : catalog) {
            Lattice l = eval(expr);
            if (!l.is_even()) continue;
            Signature sig = l.sig();
            int expected = ((sig.n_plus - sig.n_minus) % 8 + 8) % 8;
            int got = gauss_signature(discriminant_form(l));
            if (got != expected) {
                all = false;
                if (bad.empty()) bad = expr;
            }
        }
        check(s, "Milgram congruence on the catalog", all, "first failure: " + bad);
    });

    checked(s, "Milgram congruence on random overlattices", [&] {
        std::mt19937 rng(20260809);
        const char* bases[] = {"U + A1^2", "U(2) + A1^2", "U + D4", "A1^4",
                               "U(2) + D4", "U + A1^4",   "<2> + A1^3"};
        int built = 0;
        bool all = true;
        for (int trial = 0; trial < 400 && built < 100; ++trial) {
            Lattice base = eval(bases[rng() % std::size(bases)]);
            FiniteQuadraticForm q = discriminant_form(base);
            auto elems = q.elements();
            std::vector<FiniteQuadraticForm::Element> isotropic;
            for (const auto& e : elems)
                if (q.q(e) == Rat(0) && e != q.zero()) isotropic.push_back(e);
            if (isotropic.empty()) continue;
            const auto& pick = isotropic[rng() % isotropic.size()];
            // lift the class to dual coordinates through the generators
            std::vector<Rat> coords(base.rank(), Rat(0));
            for (int g = 0; g < q.generator_count(); ++g)
                for (int j = 0; j < base.rank(); ++j)
                    coords[j] += Rat(pick[g]) * q.generator_coords(g)[j];
            Lattice over = overlattice(base, {coords}, /*require_even=*/true);
            Signature sig = over.sig();
            int expected = ((sig.n_plus - sig.n_minus) % 8 + 8) % 8;
            if (gauss_signature(discriminant_form(over)) != expected) all = false;
            ++built;
        }
        check(s, "Milgram congruence on random overlattices", all && built == 100,
              built == 100 ? "" : "only built " + std::to_string(built));
    });

    checked(s, "determinant equals discriminant order", [&] {
        bool all = true;
        std::string bad;
        for (const char* expr : catalog) {
            Lattice l = eval(expr);
            if (abs(l.det()) != discriminant_form(l).group_order()) {
                all = false;
                if (bad.empty()) bad = expr;
            }
        }
        check(s, "determinant equals discriminant order", all, "first failure: " + bad);
    });

    checked(s, "brute-force/closed-form agreement up to length 7", [&] {
        const char* forms[] = {"<2>",       "A1",          "U(2)",        "<2> + A1",
                               "U + A1^3",  "U + A1^4",    "U + A1^5",    "U(2) + D4",
                               "U + D4^2",  "U + A1^6",    "U + A1^7",    "<2>^2 + <-2>^5",
                               "U + D4 + A1^3", "U + D4 + A1^5", "U(2) + D4^2"};
        bool all = true;
        std::string bad;
        for (const char* expr : forms) {
            FiniteQuadraticForm q = discriminant_form(eval(expr));
            if (!q.is_two_elementary() || q.length() > 7) continue;
            GroupOrder order = isometry_group_order(q);
            if (order.derivation != OrderDerivation::both_agree) {
                all = false;
                if (bad.empty()) bad = expr;
            }
        }
        check(s, "brute-force/closed-form agreement up to length 7", all,
              "first failure: " + bad);
    });

    checked(s, "Weyl-group order identities", [&] {
        bool ok = classical_order(ClassicalFamily::Weyl, 6) ==
                      classical_order(ClassicalFamily::OMinus, 3) &&
                  classical_order(ClassicalFamily::Weyl, 7) ==
                      2 * classical_order(ClassicalFamily::Sp, 3) &&
                  classical_order(ClassicalFamily::Weyl, 8) ==
                      2 * classical_order(ClassicalFamily::OPlus, 4) &&
                  classical_order(ClassicalFamily::Weyl, 5) == Int(16) * 120;
        check(s, "Weyl-group order identities", ok, "");
    });

    checked(s, "parse/print round trip", [&] {
        std::mt19937 rng(97);
        auto random_expr = [&](auto&& self, int depth) -> ExprPtr {
            auto e = std::make_shared<LatticeExpr>();
            int pick = depth > 2 ? int(rng() % 6) : int(rng() % 8);
            switch (pick) {
                case 0: e->kind = LatticeExpr::Kind::atom_U; break;
                case 1:
                    e->kind = LatticeExpr::Kind::atom_rank1;
                    e->k = int(rng() % 7) - 3;
                    if (e->k == 0) e->k = 2;
                    break;
                case 2:
                    e->kind = LatticeExpr::Kind::atom_A;
                    e->n = 1 + int(rng() % 8);
                    break;
                case 3:
                    e->kind = LatticeExpr::Kind::atom_D;
                    e->n = 4 + int(rng() % 6);
                    break;
                case 4:
                    e->kind = LatticeExpr::Kind::atom_E;
                    e->n = 6 + int(rng() % 3);
                    break;
                case 5:
                    e->kind = LatticeExpr::Kind::atom_I;
                    e->m = int(rng() % 3);
                    e->n = 1 + int(rng() % 3);
                    break;
                case 6: {
                    e->kind = LatticeExpr::Kind::sum;
                    int terms = 2 + int(rng() % 2);
                    for (int i = 0; i < terms; ++i)
                        e->children.push_back(self(self, depth + 1));
                    break;
                }
                default: {
                    e->kind = rng() % 2 ? LatticeExpr::Kind::repeat : LatticeExpr::Kind::scale;
                    e->k = (e->kind == LatticeExpr::Kind::repeat) ? 2 + int(rng() % 3)
                                                                  : 2 + int(rng() % 3);
                    e->children.push_back(self(self, depth + 1));
                    break;
                }
            }
            return e;
        };
        bool all = true;
        for (int i = 0; i < 200 && all; ++i) {
            ExprPtr e = random_expr(random_expr, 0);
            std::string text = print_lattice_expr(e);
            if (print_lattice_expr(parse_lattice_expr(text)) != text) all = false;
        }
        check(s, "parse/print round trip (200 trees)", all, "");
    });

    return s;
}

VerifyReport verify_all() {
    VerifyReport report;
    report.sections.push_back(verify_group_orders());
    report.sections.push_back(verify_glue_constructions());
    report.sections.push_back(verify_even_parts());
    report.sections.push_back(verify_dual_rescale());
    report.sections.push_back(verify_heegner());
    report.sections.push_back(verify_dpn_manifest());
    report.sections.push_back(verify_ledger_manifest());
    report.sections.push_back(verify_census());
    report.sections.push_back(verify_property_suites());
    return report;
}

}  // namespace latlab
