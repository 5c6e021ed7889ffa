#pragma once

#include "latlab/lattice.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace latlab {

/// Abstract syntax: atoms U, U(k), <k>, A_n, D_n, E6/E7/E8, I(m,n); operators
/// + (direct sum), ^n (repetition), (k) postfix scaling; functions dual2(.),
/// evenpart(.), glue(. ; vectors). '^' binds tighter than '+', scaling binds
/// tighter than '^'.
struct LatticeExpr;
using ExprPtr = std::shared_ptr<const LatticeExpr>;

struct LatticeExpr {
    enum class Kind { atom_U, atom_rank1, atom_A, atom_D, atom_E, atom_I,
                      sum, repeat, scale, dual2, evenpart, glue };
    Kind kind;
    Int k = 0;            // <k>, U(k) scale, repetition count, scale factor
    int m = 0, n = 0;     // A/D/E index, I(m,n)
    std::vector<ExprPtr> children;
    std::vector<std::vector<Rat>> glue_vectors;
};

struct ParseError : domain_error {
    ParseError(const std::string& what, size_t position)
        : domain_error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    size_t position;
};

/// Parse an expression; throws ParseError with the offending position.
ExprPtr parse_lattice_expr(const std::string& text);

/// Canonical printer; parse(print(e)) reproduces the tree.
std::string print_lattice_expr(const ExprPtr& e);

struct EvalResult {
    Lattice lattice;
    /// Set when the top-level node is evenpart(.): the discriminant class of
    /// the odd vector, as rational coordinates in the result's basis.
    std::optional<std::vector<Rat>> evenpart_class;
};

/// Evaluate to a concrete lattice. Total rank is capped at 26.
EvalResult eval_lattice_expr(const ExprPtr& e);

/// Convenience: parse then evaluate.
EvalResult eval_lattice_expr(const std::string& text);

}  // namespace latlab
