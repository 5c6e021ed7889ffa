#pragma once

#include "latlab/lattice.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace latlab {

/// Finite quadratic form (D, q) on a finite abelian group, presented by the
/// canonical SNF generators of D = L_dual / L. q takes values in Q/2Z with
/// canonical representatives in [0,2); the bilinear form b in Q/Z with
/// representatives in [0,1).
class FiniteQuadraticForm {
public:
    FiniteQuadraticForm() = default;
    FiniteQuadraticForm(std::vector<Int> orders, std::vector<std::vector<Rat>> gen_coords,
                        std::vector<Rat> q_gen, std::vector<std::vector<Rat>> b_gen,
                        bool from_odd_lattice);

    const std::vector<Int>& orders() const { return orders_; }
    int generator_count() const { return int(orders_.size()); }
    Int group_order() const;
    bool trivial() const { return orders_.empty(); }
    /// q-values on odd lattices are representative-dependent mod 2Z; the flag
    /// records that the usual even-lattice convention was applied anyway.
    bool from_odd_lattice() const { return from_odd_; }

    /// Rational coordinates of generator i in the source lattice basis.
    const std::vector<Rat>& generator_coords(int i) const { return gen_coords_[i]; }

    /// Element = tuple of residues against orders(). Canonicalized mod orders.
    using Element = std::vector<Int>;
    Element zero() const { return Element(orders_.size(), 0); }
    Element canonical(Element e) const;
    Element add(const Element& x, const Element& y) const;
    Element neg(const Element& x) const;

    Rat q(const Element& x) const;           ///< in [0,2)
    Rat b(const Element& x, const Element& y) const;  ///< in [0,1)

    /// All group elements, mixed-radix order. Guarded to |D| <= 4096.
    std::vector<Element> elements() const;

    bool is_two_elementary() const;
    int length() const;                       ///< number of generators (a)
    int parity() const;                       ///< delta: 0 iff q(D) subset Z

    /// Orthogonal sum.
    friend FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& a,
                                          const FiniteQuadraticForm& b);

private:
    std::vector<Int> orders_;                  // elementary divisors > 1
    std::vector<std::vector<Rat>> gen_coords_; // in source lattice basis
    std::vector<Rat> q_;                       // q on generators, in [0,2)
    std::vector<std::vector<Rat>> b_;          // b on generator pairs, in [0,1)
    bool from_odd_ = false;
};

/// Discriminant form of a nondegenerate lattice, generators canonicalized by
/// the SNF transform of the Gram matrix.
FiniteQuadraticForm discriminant_form(const Lattice& l);

/// Class of a dual-lattice vector (rational coordinates in the lattice
/// basis) in the discriminant group, as a canonical generator tuple.
FiniteQuadraticForm::Element discriminant_class(const Lattice& l,
                                                const FiniteQuadraticForm& form,
                                                const std::vector<Rat>& coords);

/// Gauss-Milgram signature mod 8, computed by the complex Gauss sum. This is
/// the only floating-point computation in the library.
int gauss_signature(const FiniteQuadraticForm& q, double tolerance = 1e-6,
                    double snap_radius = 1e-3);

enum class OrderDerivation { brute_force, closed_form, both_agree };

struct GroupOrder {
    Int value;
    OrderDerivation derivation;
};

/// Order of the isometry group O(q). Brute-force backtracking counts for
/// |D| <= 256; 2-elementary forms additionally get the classified closed-form
/// order, and the two paths must agree.
GroupOrder isometry_group_order(const FiniteQuadraticForm& q);

enum class ClassicalFamily { Sp, OPlus, OMinus, Weyl };

/// |Sp(2n,2)|, |O^+-(2n,2)|, or |W_d| for d = 5..8.
Int classical_order(ClassicalFamily family, int n);

/// All x with q(x) = 1 in Q/2Z.
std::vector<FiniteQuadraticForm::Element> norm_one_elements(const FiniteQuadraticForm& q);

/// Orbit partition of the given elements under O(q); each orbit is a list of
/// indices into the input.
std::vector<std::vector<int>> orbits(const FiniteQuadraticForm& q,
                                     const std::vector<FiniteQuadraticForm::Element>& elems);

/// Order of the stabilizer of x in O(q).
Int stabilizer_order(const FiniteQuadraticForm& q, const FiniteQuadraticForm::Element& x);

/// Standard blocks of 2-elementary forms.
enum class Block : std::uint8_t { u, v, w_plus, w_minus };

/// Decomposition of a nondegenerate 2-elementary form into standard blocks
/// (not canonical; length, parity and Gauss signature are preserved).
std::vector<Block> block_decomposition(const FiniteQuadraticForm& q);

/// Exact Gauss signature of a 2-elementary form via its block decomposition
/// (u -> 0, v -> 4, w+ -> 1, w- -> -1, summed mod 8).
int block_signature(const FiniteQuadraticForm& q);

std::string block_name(Block b);

}  // namespace latlab
