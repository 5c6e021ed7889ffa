#include "latlab/exact_linalg.hpp"

#include <algorithm>

namespace latlab {

namespace {

// Position of the entry with smallest nonzero |value| in m[t.., t..], or
// {-1,-1} when the submatrix is zero.
std::pair<int, int> smallest_pivot(const IntMat& m, int t) {
    int bi = -1, bj = -1;
    Int best = 0;
    for (int i = t; i < m.rows(); ++i)
        for (int j = t; j < m.cols(); ++j) {
            if (m(i, j) == 0) continue;
            Int a = abs(m(i, j));
            if (bi < 0 || a < best) {
                best = a;
                bi = i;
                bj = j;
            }
        }
    return {bi, bj};
}

// Row-style Hermite reduction with a tracked unimodular transform
// (u * input = result). Zero rows sink to the bottom; entries above each
// pivot are reduced, which keeps intermediate growth under control when the
// reduction is alternated with its transpose.
void hermite_in_place(IntMat& h, IntMat& u) {
    int row = 0;
    for (int col = 0; col < h.cols() && row < h.rows(); ++col) {
        while (true) {
            int best = -1;
            Int babs = 0;
            for (int i = row; i < h.rows(); ++i) {
                if (h(i, col) == 0) continue;
                Int a = abs(h(i, col));
                if (best < 0 || a < babs) {
                    best = i;
                    babs = a;
                }
            }
            if (best < 0) break;
            h.swap_rows(row, best);
            u.swap_rows(row, best);
            bool cleared = true;
            for (int i = row + 1; i < h.rows(); ++i) {
                if (h(i, col) == 0) continue;
                Int q = floor_div(h(i, col), h(row, col));
                h.add_row(i, row, -q);
                u.add_row(i, row, -q);
                if (h(i, col) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (row < h.rows() && h(row, col) != 0) {
            if (h(row, col) < 0) {
                h.scale_row(row, -1);
                u.scale_row(row, -1);
            }
            for (int i = 0; i < row; ++i) {
                Int q = floor_div(h(i, col), h(row, col));
                if (q != 0) {
                    h.add_row(i, row, -q);
                    u.add_row(i, row, -q);
                }
            }
            ++row;
        }
    }
}

bool is_diagonal_staircase(const IntMat& m) {
    int n = std::min(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i != j && m(i, j) != 0) return false;
    for (int i = 0; i + 1 < n; ++i)
        if (m(i, i) == 0 && m(i + 1, i + 1) != 0) return false;
    return true;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMat& m) {
    SmithDecomposition s;
    s.d = m;
    s.u = IntMat::identity(m.rows());
    s.v = IntMat::identity(m.cols());
    IntMat& d = s.d;

    // Phase 1: diagonalize by alternating row and column Hermite reductions.
    // Each pass performs exact Euclidean steps, so the gcd content of the
    // leading positions strictly drops until the matrix is diagonal; the
    // interleaved off-pivot reduction keeps entries from exploding.
    for (int pass = 0; pass < 16 * (m.rows() + m.cols() + 1); ++pass) {
        if (is_diagonal_staircase(d)) break;
        hermite_in_place(d, s.u);
        if (is_diagonal_staircase(d)) break;
        IntMat dt = d.transposed();
        IntMat vt = s.v.transposed();
        hermite_in_place(dt, vt);
        d = dt.transposed();
        s.v = vt.transposed();
    }
    require(is_diagonal_staircase(d), "Smith reduction did not converge");

    // Phase 2: enforce the divisibility chain on the diagonal. The matrix is
    // diagonal here, so every step is a bounded 2x2 manipulation.
    const int n = std::min(m.rows(), m.cols());
    for (int t = 0; t < n; ++t) {
        auto [pi, pj] = smallest_pivot(d, t);
        if (pi < 0) break;
        d.swap_rows(t, pi);
        s.u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        s.v.swap_cols(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < d.rows(); ++i) {
                if (d(i, t) == 0) continue;
                Int q = floor_div(d(i, t), d(t, t));
                d.add_row(i, t, -q);
                s.u.add_row(i, t, -q);
                if (d(i, t) != 0) {
                    d.swap_rows(t, i);
                    s.u.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < d.cols(); ++j) {
                if (d(t, j) == 0) continue;
                Int q = floor_div(d(t, j), d(t, t));
                d.add_col(j, t, -q);
                s.v.add_col(j, t, -q);
                if (d(t, j) != 0) {
                    d.swap_cols(t, j);
                    s.v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (!dirty) {
                for (int i = t + 1; i < d.rows() && !dirty; ++i)
                    for (int j = t + 1; j < d.cols() && !dirty; ++j)
                        if (d(i, j) % d(t, t) != 0) {
                            d.add_row(t, i, 1);
                            s.u.add_row(t, i, 1);
                            dirty = true;
                        }
            }
        }
        if (d(t, t) < 0) {
            d.scale_row(t, -1);
            s.u.scale_row(t, -1);
        }
        s.rank = t + 1;
    }
    return s;
}

IntMat hermite_normal_form(const IntMat& m) {
    IntMat h = m;
    IntMat u = IntMat::identity(m.rows());
    hermite_in_place(h, u);
    int nonzero = 0;
    for (int i = 0; i < h.rows(); ++i) {
        bool all_zero = true;
        for (int j = 0; j < h.cols(); ++j)
            if (h(i, j) != 0) all_zero = false;
        if (!all_zero) ++nonzero;
    }
    IntMat out(nonzero, h.cols());
    int r = 0;
    for (int i = 0; i < h.rows(); ++i) {
        bool all_zero = true;
        for (int j = 0; j < h.cols(); ++j)
            if (h(i, j) != 0) all_zero = false;
        if (all_zero) continue;
        for (int j = 0; j < h.cols(); ++j) out(r, j) = h(i, j);
        ++r;
    }
    return out;
}

IntMat integer_kernel(const IntMat& m) {
    SmithDecomposition s = smith_normal_form(m);
    // Rows of U past the rank satisfy row * m = 0 and span a saturated
    // sublattice since U is unimodular.
    int k = m.rows() - s.rank;
    IntMat ker(k, m.rows());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < m.rows(); ++j) ker(i, j) = s.u(s.rank + i, j);
    return hermite_normal_form(ker);
}

Signature signature(const IntMat& gram) {
    require(gram.is_symmetric(), "signature requires a symmetric matrix");
    RatMat a = to_rational(gram);
    const int n = a.rows();
    Signature sig;
    for (int k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            int jd = -1, jo = -1;
            for (int j = k + 1; j < n; ++j) {
                if (a(j, j) != 0 && jd < 0) jd = j;
                if (a(k, j) != 0 && jo < 0) jo = j;
            }
            if (jd >= 0) {
                a.swap_rows(k, jd);
                a.swap_cols(k, jd);
            } else if (jo >= 0) {
                // Zero diagonal with off-diagonal coupling: a(k,k) becomes
                // 2*a(k,jo) after the symmetric row/column addition.
                a.add_row(k, jo, 1);
                a.add_col(k, jo, 1);
            } else {
                ++sig.n_zero;
                continue;
            }
        }
        Rat piv = a(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rat f = -a(i, k) / piv;
            a.add_row(i, k, f);
            a.add_col(i, k, f);
        }
        if (piv > 0)
            ++sig.n_plus;
        else
            ++sig.n_minus;
    }
    return sig;
}

Int determinant(const IntMat& m) {
    require(m.rows() == m.cols(), "determinant requires a square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

RatMat rational_inverse(const IntMat& m) {
    require(m.rows() == m.cols(), "inverse requires a square matrix");
    const int n = m.rows();
    RatMat a = to_rational(m);
    RatMat inv = RatMat::identity(n);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (a(i, k) != 0) {
                p = i;
                break;
            }
        require(p >= 0, "matrix is singular");
        a.swap_rows(k, p);
        inv.swap_rows(k, p);
        Rat piv = a(k, k);
        for (int j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rat f = a(i, k);
            a.add_row(i, k, -f);
            inv.add_row(i, k, -f);
        }
    }
    return inv;
}

int rational_rank(const IntMat& m) { return smith_normal_form(m).rank; }

}  // namespace latlab
