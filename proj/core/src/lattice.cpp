#include "latlab/lattice.hpp"

#include "latlab/discform.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace latlab {

Lattice::Lattice(IntMat gram, std::string name) : gram_(std::move(gram)), name_(std::move(name)) {
    require(gram_.rows() == gram_.cols(), "Gram matrix must be square");
    require(gram_.is_symmetric(), "Gram matrix must be symmetric");
}

Int Lattice::det() const { return determinant(gram_); }

Signature Lattice::sig() const { return signature(gram_); }

bool Lattice::is_even() const {
    for (int i = 0; i < rank(); ++i)
        if (mod_floor(gram_(i, i), 2) != 0) return false;
    return true;
}

bool Lattice::is_definite() const {
    Signature s = sig();
    return s.n_zero == 0 && (s.n_plus == 0 || s.n_minus == 0) && rank() > 0;
}

bool Lattice::is_indefinite() const {
    Signature s = sig();
    return s.n_plus > 0 && s.n_minus > 0;
}

Int Lattice::inner(const std::vector<Int>& v, const std::vector<Int>& w) const {
    require(int(v.size()) == rank() && int(w.size()) == rank(), "vector length mismatch");
    Int s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < rank(); ++j) s += v[i] * gram_(i, j) * w[j];
    }
    return s;
}

Rat Lattice::inner(const std::vector<Rat>& v, const std::vector<Rat>& w) const {
    require(int(v.size()) == rank() && int(w.size()) == rank(), "vector length mismatch");
    Rat s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < rank(); ++j) s += v[i] * Rat(gram_(i, j)) * w[j];
    }
    return s;
}

// --- named lattices ---------------------------------------------------------

namespace {
constexpr int kMaxNamedRank = 24;
}

Lattice make_U() { return Lattice(IntMat{{0, 1}, {1, 0}}, "U"); }

Lattice make_U_scaled(const Int& k) {
    require(k != 0, "U(k) needs k != 0");
    std::ostringstream n;
    n << "U(" << k << ")";
    return Lattice(IntMat{{0, k}, {k, 0}}, n.str());
}

Lattice make_rank1(const Int& k) {
    require(k != 0, "<k> needs k != 0");
    std::ostringstream n;
    n << "<" << k << ">";
    return Lattice(IntMat{{k}}, n.str());
}

Lattice make_A(int n) {
    require(n >= 1 && n <= kMaxNamedRank, "A_n needs 1 <= n <= 24");
    IntMat g(n, n);
    for (int i = 0; i < n; ++i) {
        g(i, i) = -2;
        if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = 1;
    }
    return Lattice(std::move(g), "A" + std::to_string(n));
}

Lattice make_D(int n) {
    require(n >= 2 && n <= kMaxNamedRank, "D_n needs 2 <= n <= 24");
    // Root basis d1 = e1+e2, d2 = -e1+e2, d_i = -e_{i-1}+e_i inside I(0,n),
    // negated convention. The fork is d1, d2 attached to d3.
    IntMat g(n, n);
    for (int i = 0; i < n; ++i) g(i, i) = -2;
    if (n >= 3) {
        g(0, 2) = g(2, 0) = 1;
        g(1, 2) = g(2, 1) = 1;
        for (int i = 2; i + 1 < n; ++i) g(i, i + 1) = g(i + 1, i) = 1;
    }
    return Lattice(std::move(g), "D" + std::to_string(n));
}

Lattice make_E(int n) {
    require(n == 6 || n == 7 || n == 8, "E_n needs n in {6,7,8}");
    // Chain 1-2-...-(n-1) with node n attached to vertex 3 (negated).
    IntMat g(n, n);
    for (int i = 0; i < n; ++i) g(i, i) = -2;
    for (int i = 0; i + 2 < n; ++i) g(i, i + 1) = g(i + 1, i) = 1;
    g(2, n - 1) = g(n - 1, 2) = 1;
    return Lattice(std::move(g), "E" + std::to_string(n));
}

Lattice make_I(int m, int n) {
    require(m >= 0 && n >= 0 && m + n >= 1 && m + n <= kMaxNamedRank,
            "I(m,n) needs 1 <= m+n <= 24");
    IntMat g(m + n, m + n);
    for (int i = 0; i < m; ++i) g(i, i) = 1;
    for (int i = m; i < m + n; ++i) g(i, i) = -1;
    std::ostringstream name;
    name << "I(" << m << "," << n << ")";
    return Lattice(std::move(g), name.str());
}

// --- constructions ----------------------------------------------------------

Lattice direct_sum(const Lattice& a, const Lattice& b) {
    IntMat g(a.rank() + b.rank(), a.rank() + b.rank());
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < a.rank(); ++j) g(i, j) = a.gram()(i, j);
    for (int i = 0; i < b.rank(); ++i)
        for (int j = 0; j < b.rank(); ++j) g(a.rank() + i, a.rank() + j) = b.gram()(i, j);
    std::string name;
    if (!a.name().empty() && !b.name().empty()) name = a.name() + " + " + b.name();
    return Lattice(std::move(g), name);
}

Lattice rescale(const Lattice& l, const Int& k) {
    require(k != 0, "rescale needs k != 0");
    IntMat g = l.gram();
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) g(i, j) *= k;
    std::string name;
    if (!l.name().empty()) {
        std::ostringstream n;
        n << "(" << l.name() << ")(" << k << ")";
        name = n.str();
    }
    return Lattice(std::move(g), name);
}

Lattice dual_rescale(const Lattice& l, const Int& k) {
    require(k > 0, "dual rescale needs k > 0");
    require(!l.degenerate(), "dual rescale needs a nondegenerate lattice");
    RatMat inv = rational_inverse(l.gram());
    IntMat g(l.rank(), l.rank());
    for (int i = 0; i < l.rank(); ++i)
        for (int j = 0; j < l.rank(); ++j) {
            Rat e = Rat(k) * inv(i, j);
            require(is_integral(e),
                    "dual rescale is not integral: k is smaller than the discriminant exponent");
            g(i, j) = num(e);
        }
    std::string name;
    if (!l.name().empty()) {
        std::ostringstream n;
        n << "dual" << k << "(" << l.name() << ")";
        name = n.str();
    }
    return Lattice(std::move(g), name);
}

namespace {

// Gram of the sublattice spanned by rational rows B: B * G * B^T.
IntMat induced_gram(const Lattice& l, const std::vector<std::vector<Rat>>& rows,
                    const char* what) {
    const int k = int(rows.size());
    IntMat g(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            Rat e = l.inner(rows[i], rows[j]);
            require(is_integral(e), std::string(what) + ": pairing is not integral");
            g(i, j) = g(j, i) = num(e);
        }
    return g;
}

std::vector<Rat> to_rat_vec(const std::vector<Int>& v) {
    std::vector<Rat> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

}  // namespace

EvenPart even_part(const Lattice& l) {
    require(!l.is_even(), "lattice is already even");
    const int n = l.rank();
    std::vector<int> odd;
    for (int i = 0; i < n; ++i)
        if (mod_floor(l.gram()(i, i), 2) != 0) odd.push_back(i);

    // Kernel of x -> sum of x_i over odd-diagonal indices, mod 2.
    IntMat rows(n, n);
    int r = 0;
    for (int i = 0; i < n; ++i)
        if (mod_floor(l.gram()(i, i), 2) == 0) rows(r++, i) = 1;
    rows(r, odd[0]) = 2;
    ++r;
    for (size_t t = 1; t < odd.size(); ++t) {
        rows(r, odd[0]) = 1;
        rows(r, odd[t]) = 1;
        ++r;
    }
    IntMat basis = hermite_normal_form(rows);
    require(basis.rows() == n, "even part basis extraction failed");

    std::vector<std::vector<Rat>> rrows(n);
    for (int i = 0; i < n; ++i) rrows[i] = to_rat_vec(basis.row(i));
    Lattice sub(induced_gram(l, rrows, "even part"));

    // The odd generator e_{odd[0]}, written in the even-part basis.
    IntMat basis_sq(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) basis_sq(i, j) = basis(i, j);
    RatMat binv = rational_inverse(basis_sq);
    std::vector<Rat> x(n);
    for (int j = 0; j < n; ++j) x[j] = binv(odd[0], j);
    return EvenPart{std::move(sub), std::move(x)};
}

Lattice overlattice(const Lattice& l, const std::vector<std::vector<Rat>>& glue,
                    bool require_even) {
    const int n = l.rank();
    for (const auto& v : glue) {
        require(int(v.size()) == n, "glue vector length mismatch");
        // Membership in the dual lattice: integral pairing with every basis vector.
        for (int j = 0; j < n; ++j) {
            Rat p = 0;
            for (int i = 0; i < n; ++i) p += v[i] * Rat(l.gram()(i, j));
            require(is_integral(p), "glue vector does not lie in the dual lattice");
        }
    }
    Int d = 1;
    for (const auto& v : glue)
        for (const auto& c : v) d = lcm(d, den(c));

    IntMat stack(n + int(glue.size()), n);
    for (int i = 0; i < n; ++i) stack(i, i) = d;
    for (size_t g = 0; g < glue.size(); ++g)
        for (int j = 0; j < n; ++j) {
            Rat scaled = glue[g][j] * Rat(d);
            stack(n + int(g), j) = num(scaled);
        }
    IntMat basis = hermite_normal_form(stack);
    require(basis.rows() == n, "overlattice basis extraction failed");

    std::vector<std::vector<Rat>> rows(n);
    for (int i = 0; i < n; ++i) {
        rows[i].resize(n);
        for (int j = 0; j < n; ++j) rows[i][j] = Rat(basis(i, j)) / Rat(d);
    }
    Lattice result(induced_gram(l, rows, "overlattice"));
    if (require_even)
        require(result.is_even(), "overlattice violates the requested evenness");
    return result;
}

Lattice orthogonal_complement(const Lattice& l, const std::vector<Int>& v) {
    require(int(v.size()) == l.rank(), "vector length mismatch");
    Int g = 0;
    for (const auto& c : v) g = gcd(g, c);
    require(g != 0, "orthogonal complement of the zero vector");
    require(g == 1, "vector is imprimitive; saturate it first");
    require(l.inner(v, v) != 0, "orthogonal complement needs a vector of nonzero norm");
    IntMat rows(1, l.rank());
    for (int j = 0; j < l.rank(); ++j) rows(0, j) = v[j];
    return orthogonal_complement(l, rows);
}

Lattice orthogonal_complement(const Lattice& l, const IntMat& sub_rows) {
    // x in the complement iff x . (G * S^T) = 0.
    IntMat pair = sub_rows * l.gram();  // k x n
    IntMat ker = integer_kernel(pair.transposed());
    std::vector<std::vector<Rat>> rows(ker.rows());
    for (int i = 0; i < ker.rows(); ++i) rows[i] = to_rat_vec(ker.row(i));
    return Lattice(induced_gram(l, rows, "orthogonal complement"));
}

GlueData glue_data(const Lattice& l, const IntMat& sub_rows) {
    require(sub_rows.cols() == l.rank(), "sublattice row length mismatch");
    {
        SmithDecomposition s = smith_normal_form(sub_rows);
        require(s.rank == sub_rows.rows(), "sublattice rows are dependent");
        for (int i = 0; i < s.rank; ++i)
            require(s.d(i, i) == 1, "sublattice is not primitive");
    }
    GlueData out;
    IntMat trows_mat = integer_kernel((sub_rows * l.gram()).transposed());
    out.complement_rows = trows_mat;

    auto side = [&](const IntMat& rows) {
        std::vector<std::vector<Rat>> rr(rows.rows());
        for (int i = 0; i < rows.rows(); ++i) rr[i] = to_rat_vec(rows.row(i));
        return Lattice(induced_gram(l, rr, "glue data"));
    };
    Lattice s_lat = side(sub_rows);
    Lattice t_lat = side(trows_mat);
    require(!s_lat.degenerate() && !t_lat.degenerate(),
            "glue data needs nondegenerate sublattice and complement");

    FiniteQuadraticForm ds = discriminant_form(s_lat);
    FiniteQuadraticForm dt = discriminant_form(t_lat);
    out.s_orders = ds.orders();
    out.t_orders = dt.orders();

    // Class of the projection of a lattice generator e_i: as an element of
    // S_dual it is determined by its pairings with the S-basis.
    auto project_class = [&](const Lattice& side_lat, const IntMat& rows,
                             const FiniteQuadraticForm& form, int gen) {
        std::vector<Rat> pairings(rows.rows());
        for (int i = 0; i < rows.rows(); ++i) {
            Rat p = 0;
            for (int j = 0; j < l.rank(); ++j) p += Rat(rows(i, j)) * Rat(l.gram()(j, gen));
            pairings[i] = p;
        }
        // Solve side_gram * c = pairings for the S-basis coordinates of the
        // projection, then take its discriminant class.
        RatMat inv = rational_inverse(side_lat.gram());
        std::vector<Rat> coords(rows.rows(), Rat(0));
        for (int i = 0; i < rows.rows(); ++i)
            for (int j = 0; j < rows.rows(); ++j) coords[i] += inv(i, j) * pairings[j];
        return discriminant_class(side_lat, form, coords);
    };

    Int order = 1;
    {
        // |G|^2 * det(L) = det(S) * det(T) up to sign.
        Int lhs = s_lat.det() * t_lat.det();
        Int rhs = l.det();
        require(rhs != 0 && lhs % rhs == 0, "glue index is not integral");
        Int q = abs(lhs / rhs);
        Int idx = 1;
        while (idx * idx < q) ++idx;
        require(idx * idx == q, "glue index is not a perfect square");
        order = idx;
    }
    out.index = order;

    for (int gen = 0; gen < l.rank(); ++gen) {
        out.class_in_s.push_back(project_class(s_lat, sub_rows, ds, gen));
        out.class_in_t.push_back(project_class(t_lat, trows_mat, dt, gen));
    }
    return out;
}

MainInvariant main_invariant(const Lattice& l) {
    require(l.is_even(), "main invariant needs an even lattice");
    require(!l.degenerate(), "main invariant needs a nondegenerate lattice");
    FiniteQuadraticForm q = discriminant_form(l);
    require(q.is_two_elementary(), "discriminant group is not 2-elementary");
    MainInvariant inv;
    Signature s = l.sig();
    inv.n_plus = s.n_plus;
    inv.n_minus = s.n_minus;
    inv.r = l.rank();
    inv.a = q.length();
    inv.delta = q.parity();
    inv.hyperbolic = (s.n_plus == 1 && s.n_minus == inv.r - 1);
    if (inv.hyperbolic) {
        inv.g = 11 - (inv.r + inv.a) / 2;
        inv.k = (inv.r - inv.a) / 2;
    }
    return inv;
}

bool two_elementary_isometric(const Lattice& a, const Lattice& b) {
    for (const Lattice* l : {&a, &b}) {
        require(l->is_even(), "isometry test needs even lattices");
        require(l->is_indefinite(),
                "definite inputs must use the definite isometry test");
    }
    FiniteQuadraticForm qa = discriminant_form(a);
    FiniteQuadraticForm qb = discriminant_form(b);
    require(qa.is_two_elementary() && qb.is_two_elementary(),
            "isometry test needs 2-elementary discriminant groups");
    return a.sig() == b.sig() && qa.length() == qb.length() && qa.parity() == qb.parity();
}

// --- short vectors and definite isometry -------------------------------------

namespace {

struct Ldl {
    RatMat l;             // unit lower-triangular
    std::vector<Rat> d;   // positive pivots
};

Ldl ldl_decompose(const IntMat& gram_pos) {
    const int n = gram_pos.rows();
    RatMat a = to_rational(gram_pos);
    Ldl out;
    out.l = RatMat::identity(n);
    out.d.assign(n, Rat(0));
    for (int j = 0; j < n; ++j) {
        Rat dj = a(j, j);
        for (int k = 0; k < j; ++k) dj -= out.l(j, k) * out.l(j, k) * out.d[k];
        require(dj > 0, "short vector enumeration needs a definite lattice");
        out.d[j] = dj;
        for (int i = j + 1; i < n; ++i) {
            Rat v = a(i, j);
            for (int k = 0; k < j; ++k) v -= out.l(i, k) * out.l(j, k) * out.d[k];
            out.l(i, j) = v / dj;
        }
    }
    return out;
}

// Enumerate x != 0 with x^T Q x <= bound for positive definite Q, in the
// completed-squares form sum_i d_i (x_i + sum_{j>i} l_ji x_j)^2.
void enumerate_short(const Ldl& dec, const Int& bound,
                     std::vector<std::vector<Int>>& out) {
    const int n = int(dec.d.size());
    std::vector<Int> x(n, 0);

    // depth runs from the last coordinate down to 0
    std::function<void(int, const Rat&)> rec = [&](int i, const Rat& remaining) {
        // center c_i = sum_{j>i} l(j,i) x_j
        Rat c = 0;
        for (int j = i + 1; j < n; ++j) c += dec.l(j, i) * Rat(x[j]);
        // scan integers around -c while d_i (x_i + c)^2 <= remaining
        Rat neg_c = -c;
        Int center = floor_div(num(neg_c), den(neg_c));
        for (int dir = 0; dir < 2; ++dir) {
            Int xi = dir == 0 ? center : center + 1;
            while (true) {
                Rat t = Rat(xi) + c;
                Rat used = dec.d[i] * t * t;
                if (used > remaining) break;
                x[i] = xi;
                if (i == 0) {
                    bool nonzero = false;
                    for (const auto& v : x)
                        if (v != 0) nonzero = true;
                    if (nonzero) out.push_back(x);
                } else {
                    rec(i - 1, remaining - used);
                }
                if (dir == 0)
                    --xi;
                else
                    ++xi;
            }
        }
        x[i] = 0;
    };
    if (n > 0 && bound >= 0) rec(n - 1, Rat(bound));
}

}  // namespace

std::vector<std::vector<Int>> short_vectors(const Lattice& l, const Int& bound) {
    require(l.is_definite(), "short vectors need a definite lattice");
    require(l.rank() <= 12, "short vectors support rank <= 12");
    bool neg = l.sig().n_minus > 0;
    IntMat q = l.gram();
    if (neg)
        for (int i = 0; i < q.rows(); ++i)
            for (int j = 0; j < q.cols(); ++j) q(i, j) = -q(i, j);
    Ldl dec = ldl_decompose(q);
    std::vector<std::vector<Int>> out;
    enumerate_short(dec, bound, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AdeLabel> root_type(const Lattice& l) {
    require(l.is_definite(), "root type needs a definite lattice");
    require(l.rank() <= 12, "root type supports rank <= 12");
    auto vecs = short_vectors(l, 2);
    std::vector<std::vector<Int>> roots;
    for (auto& v : vecs)
        if (abs(l.inner(v, v)) == 2) roots.push_back(std::move(v));

    // Components of the graph on roots (both signs), edges where the pairing
    // is nonzero.
    const int m = int(roots.size());
    std::vector<int> comp(m, -1);
    int ncomp = 0;
    for (int s = 0; s < m; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y = 0; y < m; ++y) {
                if (comp[y] >= 0) continue;
                if (l.inner(roots[x], roots[y]) != 0) {
                    comp[y] = ncomp;
                    stack.push_back(y);
                }
            }
        }
        ++ncomp;
    }

    std::vector<AdeLabel> labels;
    int total_rank = 0;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> idx;
        for (int i = 0; i < m; ++i)
            if (comp[i] == c) idx.push_back(i);
        IntMat span(int(idx.size()), l.rank());
        for (size_t i = 0; i < idx.size(); ++i)
            for (int j = 0; j < l.rank(); ++j) span(int(i), j) = roots[idx[i]][j];
        int rk = rational_rank(span);
        int count = int(idx.size());
        total_rank += rk;
        AdeLabel lab{};
        if (count == rk * (rk + 1))
            lab = {'A', rk};
        else if (rk >= 4 && count == 2 * rk * (rk - 1))
            lab = {'D', rk};
        else if (rk == 6 && count == 72)
            lab = {'E', 6};
        else if (rk == 7 && count == 126)
            lab = {'E', 7};
        else if (rk == 8 && count == 240)
            lab = {'E', 8};
        else
            throw domain_error("root component does not match a recognized A-D-E type");
        labels.push_back(lab);
    }
    require(total_rank == l.rank(), "roots do not span the lattice");
    std::sort(labels.begin(), labels.end());
    return labels;
}

std::string format_ade(const std::vector<AdeLabel>& labels) {
    std::ostringstream s;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) s << " + ";
        s << labels[i].series << labels[i].n;
    }
    return s.str();
}

bool definite_isometric(const Lattice& a, const Lattice& b) {
    require(a.is_definite() && b.is_definite(), "definite isometry test needs definite inputs");
    require(a.rank() <= 12 && b.rank() <= 12, "definite isometry test supports rank <= 12");
    require((a.sig().n_plus > 0) == (b.sig().n_plus > 0),
            "definite isometry test needs matching sign");
    if (a.rank() != b.rank() || a.det() != b.det()) return false;

    Int max_norm = 0;
    for (int i = 0; i < a.rank(); ++i) {
        Int v = abs(a.gram()(i, i));
        if (v > max_norm) max_norm = v;
    }
    auto candidates = short_vectors(b, max_norm);

    const int n = a.rank();
    std::vector<std::vector<Int>> image(n);
    std::function<bool(int)> rec = [&](int level) -> bool {
        if (level == n) return true;
        for (const auto& cand : candidates) {
            if (b.inner(cand, cand) != a.gram()(level, level)) continue;
            bool ok = true;
            for (int j = 0; j < level && ok; ++j)
                if (b.inner(image[j], cand) != a.gram()(j, level)) ok = false;
            if (!ok) continue;
            image[level] = cand;
            if (rec(level + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

std::vector<std::vector<Int>> heegner_vectors(const Lattice& l, const Int& norm,
                                              bool half_in_dual, int box) {
    require(box >= 1, "empty coefficient box");
    const int n = l.rank();

    // When v/2 must lie in the dual, v mod 2 is constrained to the kernel of
    // the Gram matrix over F2; enumerate those classes and fill in even parts.
    std::vector<std::vector<int>> classes;
    if (half_in_dual) {
        IntMat g2(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g2(i, j) = mod_floor(l.gram()(i, j), 2);
        // F2 kernel by Gaussian elimination on the transpose action x*G = 0.
        std::vector<std::vector<int>> rows(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) rows[i][j] = int(g2(i, j));
        std::vector<std::vector<int>> basis;  // kernel basis vectors
        {
            std::vector<std::vector<int>> id(n, std::vector<int>(n, 0));
            for (int i = 0; i < n; ++i) id[i][i] = 1;
            int r = 0;
            for (int c = 0; c < n && r < n; ++c) {
                int p = -1;
                for (int i = r; i < n; ++i)
                    if (rows[i][c]) {
                        p = i;
                        break;
                    }
                if (p < 0) continue;
                std::swap(rows[p], rows[r]);
                std::swap(id[p], id[r]);
                for (int i = 0; i < n; ++i) {
                    if (i == r || !rows[i][c]) continue;
                    for (int j = 0; j < n; ++j) rows[i][j] ^= rows[r][j];
                    for (int j = 0; j < n; ++j) id[i][j] ^= id[r][j];
                }
                ++r;
            }
            for (int i = r; i < n; ++i) basis.push_back(id[i]);
        }
        const int k = int(basis.size());
        for (int mask = 0; mask < (1 << k); ++mask) {
            std::vector<int> cls(n, 0);
            for (int b = 0; b < k; ++b)
                if (mask & (1 << b))
                    for (int j = 0; j < n; ++j) cls[j] ^= basis[b][j];
            classes.push_back(cls);
        }
    } else {
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> cls(n);
            for (int j = 0; j < n; ++j) cls[j] = (mask >> j) & 1;
            classes.push_back(cls);
        }
    }

    // Machine-int DFS with an incremental quadratic form; coefficients and
    // Gram entries stay far from overflow at rank <= 26 and |c| <= box.
    std::vector<std::vector<std::int64_t>> g64(n, std::vector<std::int64_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g64[i][j] = std::int64_t(l.gram()(i, j));
    const std::int64_t target = std::int64_t(norm);

    std::vector<std::vector<Int>> out;
    std::vector<std::int64_t> v(n, 0);
    std::vector<std::int64_t> partial(n + 1, 0);  // norm of prefix v[0..j)
    for (const auto& cls : classes) {
        std::function<void(int)> rec = [&](int j) {
            if (j == n) {
                if (partial[n] != target) return;
                std::int64_t g = 0;
                for (auto c : v) g = std::gcd(g, c < 0 ? -c : c);
                if (g != 1) return;
                std::vector<Int> w(n);
                for (int i = 0; i < n; ++i) w[i] = v[i];
                out.push_back(std::move(w));
                return;
            }
            for (std::int64_t c = -box; c <= box; ++c) {
                if (((c % 2) + 2) % 2 != cls[j]) continue;
                std::int64_t cross = 0;
                for (int i = 0; i < j; ++i) cross += g64[i][j] * v[i];
                v[j] = c;
                partial[j + 1] = partial[j] + g64[j][j] * c * c + 2 * c * cross;
                rec(j + 1);
            }
            v[j] = 0;
        };
        rec(0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace latlab
