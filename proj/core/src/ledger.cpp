#include "latlab/ledger.hpp"

#include "latlab/expr.hpp"
#include "latlab/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace latlab {

Surface parse_surface(const std::string& name) {
    if (name == "P2") return SurfaceP2{};
    if (name == "Quadric") return SurfaceQuadric{};
    if (name.size() >= 2 && name[0] == 'F') {
        int n = std::stoi(name.substr(1));
        require(n >= 0 && n <= 12, "F_n surface index out of range");
        return SurfaceFn{n};
    }
    throw domain_error("unknown surface: " + name);
}

std::string surface_name(const Surface& s) {
    if (std::holds_alternative<SurfaceP2>(s)) return "P2";
    if (std::holds_alternative<SurfaceQuadric>(s)) return "Quadric";
    return "F" + std::to_string(std::get<SurfaceFn>(s).n);
}

int linear_system_dim(const Surface& s, const CurveClass& c) {
    if (std::holds_alternative<SurfaceP2>(s)) {
        require(c.a >= 0, "negative degree");
        return (c.a + 1) * (c.a + 2) / 2 - 1;
    }
    if (std::holds_alternative<SurfaceQuadric>(s)) {
        require(c.a >= 0 && c.b >= 0, "negative bidegree");
        return (c.a + 1) * (c.b + 1) - 1;
    }
    int n = std::get<SurfaceFn>(s).n;
    require(c.a >= 0 && c.b >= 0, "negative class");
    return (c.a + 1) * (c.a * n + 2 * c.b + 2) / 2 - 1;
}

namespace {

// Intersection matrix and canonical class per surface, in a rank <= 2 basis.
struct PicardData {
    IntMat gram;
    std::vector<Int> canonical;
    std::vector<Int> embed(const CurveClass& c, const Surface& s) const {
        if (std::holds_alternative<SurfaceP2>(s)) return {Int(c.a)};
        return {Int(c.a), Int(c.b)};
    }
};

PicardData picard_data(const Surface& s) {
    if (std::holds_alternative<SurfaceP2>(s)) return {IntMat{{1}}, {Int(-3)}};
    if (std::holds_alternative<SurfaceQuadric>(s)) return {IntMat{{0, 1}, {1, 0}}, {Int(-2), Int(-2)}};
    int n = std::get<SurfaceFn>(s).n;
    // Basis (S, F) with S = section + n*fiber: S^2 = n, S.F = 1, F^2 = 0;
    // the canonical class is -2S + (n-2)F.
    return {IntMat{{Int(n), Int(1)}, {Int(1), Int(0)}}, {Int(-2), Int(n - 2)}};
}

}  // namespace

int curve_genus(const Surface& s, const CurveClass& c) {
    PicardData pic = picard_data(s);
    std::vector<Int> v = pic.embed(c, s);
    Lattice lat(pic.gram);
    Int self = lat.inner(v, v);
    Int with_k = lat.inner(v, pic.canonical);
    Int two_g = self + with_k + 2;
    require(two_g >= 0 && two_g % 2 == 0, "negative or fractional genus");
    return int(two_g / 2);
}

int aut_dim(const Surface& s) {
    if (std::holds_alternative<SurfaceP2>(s)) return 8;
    if (std::holds_alternative<SurfaceQuadric>(s)) return 6;
    return std::get<SurfaceFn>(s).n + 5;
}

int moduli_dim(const LedgerEntry& e) {
    int dim = 0;
    for (const auto& sys : e.systems) {
        switch (sys.kind) {
            case SystemEntry::Kind::linear: dim += linear_system_dim(e.surface, sys.cls); break;
            case SystemEntry::Kind::point: dim += 2; break;
            case SystemEntry::Kind::pencil: dim += 1; break;
        }
        dim -= sys.codim;
    }
    return dim - aut_dim(e.surface);
}

LedgerReport run_manifest(const std::vector<LedgerEntry>& entries) {
    LedgerReport report;
    report.lines.resize(entries.size());
    parallel_for(int(entries.size()), [&](int i) {
        const LedgerEntry& e = entries[size_t(i)];
        LedgerLine line;
        line.id = e.id;
        line.note = e.note;
        std::ostringstream detail;
        try {
            Lattice l = eval_lattice_expr(e.lattice_expr).lattice;
            GroupOrder order = isometry_group_order(discriminant_form(l));
            line.order = order.value;
            switch (order.derivation) {
                case OrderDerivation::brute_force: line.order_derivation = "brute_force"; break;
                case OrderDerivation::closed_form: line.order_derivation = "closed_form"; break;
                case OrderDerivation::both_agree: line.order_derivation = "both_agree"; break;
            }
            Int cover = e.labeling_order * e.aut_index;
            line.degree = Rat(order.value) / Rat(cover);
            line.dim = moduli_dim(e);
            line.expected_dim = 20 - e.expected_r;

            bool ok = true;
            if (order.value != e.expected_order) {
                ok = false;
                detail << "order " << order.value << " != expected " << e.expected_order << "; ";
            }
            if (!is_integral(line.degree)) {
                ok = false;
                detail << "degree " << line.degree << " is not integral; ";
            } else if (num(line.degree) != e.expected_degree) {
                ok = false;
                detail << "degree " << num(line.degree) << " != expected " << e.expected_degree
                       << "; ";
            }
            if (line.dim != line.expected_dim) {
                ok = false;
                detail << "dimension " << line.dim << " != 20 - r = " << line.expected_dim << "; ";
            }
            line.passed = ok;
        } catch (const std::exception& ex) {
            line.passed = false;
            detail << "error: " << ex.what();
        }
        line.detail = detail.str();
        report.lines[size_t(i)] = std::move(line);
    });
    std::sort(report.lines.begin(), report.lines.end(),
              [](const LedgerLine& a, const LedgerLine& b) { return a.id < b.id; });
    report.all_passed =
        std::all_of(report.lines.begin(), report.lines.end(), [](const LedgerLine& l) {
            return l.passed;
        });
    return report;
}

std::vector<LedgerEntry> parse_manifest_json(const std::string& json_text) {
    nlohmann::json doc = nlohmann::json::parse(json_text);
    require(doc.is_array(), "manifest must be a JSON array");
    std::vector<LedgerEntry> out;
    for (const auto& j : doc) {
        LedgerEntry e;
        e.id = j.at("id").get<std::string>();
        e.surface = parse_surface(j.at("surface").get<std::string>());
        for (const auto& sj : j.at("systems")) {
            SystemEntry sys;
            std::string kind = sj.value("kind", std::string("linear"));
            if (kind == "linear") {
                sys.kind = SystemEntry::Kind::linear;
                const auto& cls = sj.at("class");
                sys.cls.a = cls.at(0).get<int>();
                sys.cls.b = cls.size() > 1 ? cls.at(1).get<int>() : 0;
            } else if (kind == "point") {
                sys.kind = SystemEntry::Kind::point;
            } else if (kind == "pencil") {
                sys.kind = SystemEntry::Kind::pencil;
            } else {
                throw domain_error("unknown system kind: " + kind);
            }
            sys.codim = sj.value("codim", 0);
            e.systems.push_back(sys);
        }
        e.labeling_order = Int(j.at("labeling_order").get<std::string>());
        e.aut_index = j.value("aut_index", 1);
        e.lattice_expr = j.at("lattice_expr").get<std::string>();
        e.expected_order = Int(j.at("expected_order").get<std::string>());
        e.expected_degree = Int(j.value("expected_degree", std::string("1")));
        e.expected_r = j.at("expected_r").get<int>();
        e.note = j.value("note", std::string());
        require(e.labeling_order >= 1 && e.expected_degree >= 1,
                "manifest entry with non-positive cover or degree");
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<DpnConfig> parse_dpn_json(const std::string& json_text,
                                      std::vector<DpnInvariant>* expected) {
    nlohmann::json doc = nlohmann::json::parse(json_text);
    if (!doc.is_array()) doc = nlohmann::json::array({doc});
    std::vector<DpnConfig> out;
    if (expected) expected->clear();
    for (const auto& j : doc) {
        DpnConfig c;
        c.id = j.value("id", std::string());
        c.rho_y = j.at("rho_y").get<int>();
        c.components = j.at("components").get<int>();
        for (const auto& sj : j.value("singularities", nlohmann::json::array())) {
            std::string type = sj.at("type").get<std::string>();
            int index = sj.at("index").get<int>();
            int count = sj.value("count", 1);
            if (type == "A")
                c.a_count[index] += count;
            else if (type == "D")
                c.d_count[index] += count;
            else if (type == "E")
                c.e_count[index] += count;
            else
                throw domain_error("singularity type must be A, D or E");
        }
        for (const auto& f : j.value("adjacency_flags", nlohmann::json::array()))
            c.adjacency_flags.push_back(f.get<int>());
        if (j.contains("delta_certificate"))
            c.delta_certificate = j.at("delta_certificate").get<int>();
        c.note = j.value("note", std::string());
        if (expected) {
            DpnInvariant inv;
            if (j.contains("expected")) {
                const auto& ej = j.at("expected");
                inv.r = ej.at("r").get<int>();
                inv.a = ej.at("a").get<int>();
                if (ej.contains("delta")) inv.delta = ej.at("delta").get<int>();
                inv.g = ej.at("g").get<int>();
                inv.k = ej.at("k").get<int>();
            }
            expected->push_back(inv);
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace latlab
