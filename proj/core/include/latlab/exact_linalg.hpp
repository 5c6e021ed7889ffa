#pragma once

#include "latlab/matrix.hpp"

namespace latlab {

struct SmithDecomposition {
    IntMat u;  ///< unimodular row transform
    IntMat d;  ///< diagonal, d(i,i) >= 0, d(i,i) | d(i+1,i+1)
    IntMat v;  ///< unimodular column transform; u*m*v == d
    int rank = 0;
};

/// Smith normal form with transforms. Pivots are normalized nonnegative and
/// satisfy the divisibility chain; downstream equality tests rely on this
/// canonical form.
SmithDecomposition smith_normal_form(const IntMat& m);

/// Row-style Hermite normal form: echelon over Z, pivots positive, entries
/// above each pivot reduced into [0, pivot). Zero rows are dropped.
IntMat hermite_normal_form(const IntMat& m);

/// Basis of {x : x*m = 0} as rows, saturated (the SNF of the stacked basis
/// has all pivots 1). Rows are HNF-reduced for determinism.
IntMat integer_kernel(const IntMat& m);

struct Signature {
    int n_plus = 0, n_zero = 0, n_minus = 0;
    bool operator==(const Signature&) const = default;
};

/// Sylvester inertia of a symmetric integer matrix, computed by exact
/// rational congruence diagonalization. No floating point.
Signature signature(const IntMat& gram);

/// Exact determinant (Bareiss fraction-free elimination).
Int determinant(const IntMat& m);

/// Inverse of a nonsingular integer matrix over Q.
RatMat rational_inverse(const IntMat& m);

/// Rank over Q.
int rational_rank(const IntMat& m);

}  // namespace latlab
