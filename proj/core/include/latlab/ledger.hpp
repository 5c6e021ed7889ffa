#pragma once

#include "latlab/discform.hpp"
#include "latlab/dpn.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace latlab {

/// Ambient rational surfaces of the period-map constructions.
struct SurfaceP2 {};
struct SurfaceQuadric {};
struct SurfaceFn { int n; };
using Surface = std::variant<SurfaceP2, SurfaceQuadric, SurfaceFn>;

Surface parse_surface(const std::string& name);  // "P2", "Quadric", "F0".."F9"
std::string surface_name(const Surface& s);

/// Curve class on a surface: degree d on P2, bidegree (a,b) on the quadric,
/// (a,b) against the section-plus-fiber basis on F_n.
struct CurveClass {
    int a = 0, b = 0;  // P2 uses a = d, b ignored
};

/// dim |L| = h^0 - 1 for an effective class.
int linear_system_dim(const Surface& s, const CurveClass& c);

/// Arithmetic genus by adjunction on the surface's Picard lattice.
int curve_genus(const Surface& s, const CurveClass& c);

/// Dimension of the automorphism group: 8, 6, n+5.
int aut_dim(const Surface& s);

/// One parameter-counting contribution to a moduli dimension check.
struct SystemEntry {
    enum class Kind { linear, point, pencil } kind = Kind::linear;
    CurveClass cls;   // for linear systems
    int codim = 0;    // incidence conditions imposed on this factor
};

/// One period-map verification record.
struct LedgerEntry {
    std::string id;
    Surface surface;
    std::vector<SystemEntry> systems;
    Int labeling_order = 1;   ///< degree of the labeling cover
    int aut_index = 1;        ///< [Aut(Y) : identity component], 2 for the quadric
    std::string lattice_expr;
    Int expected_order = 0;
    Int expected_degree = 1;
    int expected_r = 0;
    std::string note;
};

/// Parameter count: sum of system dims minus codims minus aut_dim.
int moduli_dim(const LedgerEntry& e);

struct LedgerLine {
    std::string id;
    bool passed = false;
    Int order = 0;
    std::string order_derivation;
    Rat degree;
    int dim = 0;
    int expected_dim = 0;
    std::string note;
    std::string detail;
};

struct LedgerReport {
    std::vector<LedgerLine> lines;  ///< sorted by entry id
    bool all_passed = false;
};

/// Replays every entry: |O(D)| of the lattice expression, the degree
/// |O(D)| / (labeling * aut_index) against the expected one, and the
/// dimension check dim = 20 - r. Entries run in parallel.
LedgerReport run_manifest(const std::vector<LedgerEntry>& entries);

std::vector<LedgerEntry> parse_manifest_json(const std::string& json_text);
std::vector<DpnConfig> parse_dpn_json(const std::string& json_text,
                                      std::vector<DpnInvariant>* expected = nullptr);

}  // namespace latlab
