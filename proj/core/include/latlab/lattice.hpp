#pragma once

#include "latlab/exact_linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latlab {

/// An integral lattice: free Z-module with a symmetric integer Gram matrix.
/// Values are immutable after construction.
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(IntMat gram, std::string name = "");

    int rank() const { return gram_.rows(); }
    const IntMat& gram() const { return gram_; }
    const std::string& name() const { return name_; }

    Int det() const;                 ///< determinant of the Gram matrix
    bool degenerate() const { return det() == 0; }
    Signature sig() const;           ///< (n_plus, n_zero, n_minus)
    bool is_even() const;            ///< every diagonal entry even
    bool is_definite() const;
    bool is_indefinite() const;

    /// (v, w) for integer coordinate vectors in this basis.
    Int inner(const std::vector<Int>& v, const std::vector<Int>& w) const;
    Rat inner(const std::vector<Rat>& v, const std::vector<Rat>& w) const;

private:
    IntMat gram_;
    std::string name_;
};

// --- named lattices ---------------------------------------------------------

/// U, U(k), <k>, A_n, D_n (n>=2), E6/E7/E8, I(m,n). Root lattices are
/// negative definite (roots have norm -2), matching the K3-side convention.
Lattice make_U();
Lattice make_U_scaled(const Int& k);         // U(k)
Lattice make_rank1(const Int& k);            // <k>
Lattice make_A(int n);
Lattice make_D(int n);
Lattice make_E(int n);                       // n in {6,7,8}
Lattice make_I(int m, int n);                // diag(1 x m, -1 x n)

// --- constructions ----------------------------------------------------------

Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice rescale(const Lattice& l, const Int& k);

/// Gram of the dual basis scaled by k; requires k * gram^{-1} integral.
Lattice dual_rescale(const Lattice& l, const Int& k);

/// Even part of an odd lattice: the index-2 kernel of v -> (v,v) mod 2,
/// together with the rational coordinates (in the even part's basis) of an
/// odd-norm vector whose class in the discriminant group gives back L.
struct EvenPart {
    Lattice sublattice;
    std::vector<Rat> glue_class_coords;  ///< odd vector in sublattice basis
};
EvenPart even_part(const Lattice& l);

/// Finite-index overlattice generated by L and rational glue vectors
/// (coordinates in the basis of L, required to lie in the dual lattice).
Lattice overlattice(const Lattice& l, const std::vector<std::vector<Rat>>& glue,
                    bool require_even);

/// Saturated orthogonal complement of a primitive vector of nonzero norm.
Lattice orthogonal_complement(const Lattice& l, const std::vector<Int>& v);

/// Saturated orthogonal complement of a primitive sublattice given by rows.
Lattice orthogonal_complement(const Lattice& l, const IntMat& sub_rows);

/// Glue data of a primitive sublattice S in L: the graph subgroup
/// G = L/(S + S_perp) projected to both discriminant groups.
struct GlueData {
    Int index;                                ///< |G| = [L : S + S_perp]
    IntMat complement_rows;                   ///< basis of S_perp in L coords
    // For each generator of L: its class in D_S and in D_{S_perp}, written in
    // the canonical SNF generator tuples of the two discriminant groups.
    std::vector<std::vector<Int>> class_in_s;
    std::vector<std::vector<Int>> class_in_t;
    std::vector<Int> s_orders;                ///< elementary divisors of D_S
    std::vector<Int> t_orders;
};
GlueData glue_data(const Lattice& l, const IntMat& sub_rows);

// --- invariants -------------------------------------------------------------

/// Main invariant of an even lattice with 2-elementary discriminant group.
struct MainInvariant {
    int n_plus = 0, n_minus = 0;
    int r = 0;        ///< rank
    int a = 0;        ///< length of the discriminant group
    int delta = 0;    ///< 0 iff all discriminant q-values are integral
    bool hyperbolic = false;  ///< signature (1, r-1)
    int g = 0, k = 0;          ///< 11-(r+a)/2 and (r-a)/2, when hyperbolic
    bool operator==(const MainInvariant&) const = default;
};
MainInvariant main_invariant(const Lattice& l);

/// Isometry decision for even indefinite lattices with 2-elementary
/// discriminant: the class is determined by signature, length and parity.
bool two_elementary_isometric(const Lattice& a, const Lattice& b);

/// Isometry decision for definite lattices of rank <= 12, by backtracking
/// over short-vector images of a basis.
bool definite_isometric(const Lattice& a, const Lattice& b);

/// All nonzero vectors v with |(v,v)| <= bound in a definite lattice of
/// rank <= 12 (exact branch-and-bound; both signs are returned).
std::vector<std::vector<Int>> short_vectors(const Lattice& l, const Int& bound);

/// A-D-E decomposition of the norm-(-2) root system of a definite lattice.
/// Components must span the lattice and match a recognized type.
struct AdeLabel {
    char series;  // 'A', 'D', 'E'
    int n;
    bool operator==(const AdeLabel&) const = default;
    auto operator<=>(const AdeLabel&) const = default;
};
std::vector<AdeLabel> root_type(const Lattice& l);

/// Primitive vectors of the given norm inside a coefficient box, optionally
/// restricted to v with v/2 in the dual lattice.
std::vector<std::vector<Int>> heegner_vectors(const Lattice& l, const Int& norm,
                                              bool half_in_dual, int box = 4);

std::string format_ade(const std::vector<AdeLabel>& labels);

}  // namespace latlab
