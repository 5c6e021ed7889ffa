#include "latlab/discform.hpp"

#include "latlab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numeric>

namespace latlab {

namespace {
constexpr std::int64_t kMaxEnumeration = 4096;  // 2^12
constexpr std::int64_t kMaxBruteGroup = 256;    // 2^8
}  // namespace

FiniteQuadraticForm::FiniteQuadraticForm(std::vector<Int> orders,
                                         std::vector<std::vector<Rat>> gen_coords,
                                         std::vector<Rat> q_gen,
                                         std::vector<std::vector<Rat>> b_gen,
                                         bool from_odd_lattice)
    : orders_(std::move(orders)),
      gen_coords_(std::move(gen_coords)),
      q_(std::move(q_gen)),
      b_(std::move(b_gen)),
      from_odd_(from_odd_lattice) {
    for (auto& v : q_) v = mod_canonical(v, Rat(2));
    for (auto& row : b_)
        for (auto& v : row) v = mod_canonical(v, Rat(1));
}

Int FiniteQuadraticForm::group_order() const {
    Int n = 1;
    for (const auto& d : orders_) n *= d;
    return n;
}

FiniteQuadraticForm::Element FiniteQuadraticForm::canonical(Element e) const {
    for (size_t i = 0; i < e.size(); ++i) e[i] = mod_floor(e[i], orders_[i]);
    return e;
}

FiniteQuadraticForm::Element FiniteQuadraticForm::add(const Element& x, const Element& y) const {
    Element r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = mod_floor(x[i] + y[i], orders_[i]);
    return r;
}

FiniteQuadraticForm::Element FiniteQuadraticForm::neg(const Element& x) const {
    Element r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = mod_floor(-x[i], orders_[i]);
    return r;
}

Rat FiniteQuadraticForm::q(const Element& x) const {
    Rat s = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        s += Rat(x[i] * x[i]) * q_[i];
        for (size_t j = i + 1; j < x.size(); ++j)
            s += Rat(2 * x[i] * x[j]) * b_[i][j];
    }
    return mod_canonical(s, Rat(2));
}

Rat FiniteQuadraticForm::b(const Element& x, const Element& y) const {
    Rat s = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < y.size(); ++j) {
            if (y[j] == 0) continue;
            // b(g_i, g_i) = q(g_i) mod Z
            Rat bij = (i == j) ? mod_canonical(q_[i], Rat(1)) : b_[i][j];
            s += Rat(x[i] * y[j]) * bij;
        }
    }
    return mod_canonical(s, Rat(1));
}

std::vector<FiniteQuadraticForm::Element> FiniteQuadraticForm::elements() const {
    require(group_order() <= kMaxEnumeration, "discriminant group too large to enumerate");
    std::vector<Element> out;
    Element cur = zero();
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == orders_.size()) {
            out.push_back(cur);
            return;
        }
        for (Int v = 0; v < orders_[i]; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
        cur[i] = 0;
    };
    rec(0);
    return out;
}

bool FiniteQuadraticForm::is_two_elementary() const {
    for (const auto& d : orders_)
        if (d != 2) return false;
    return true;
}

int FiniteQuadraticForm::length() const { return int(orders_.size()); }

int FiniteQuadraticForm::parity() const {
    for (const auto& v : q_)
        if (!is_integral(v)) return 1;
    // Generators integral does not settle mixed terms for non-2-elementary
    // groups; check all elements when feasible.
    if (is_two_elementary()) return 0;
    for (const auto& e : elements())
        if (!is_integral(q(e))) return 1;
    return 0;
}

FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
    std::vector<Int> orders = a.orders_;
    orders.insert(orders.end(), b.orders_.begin(), b.orders_.end());
    std::vector<Rat> q = a.q_;
    q.insert(q.end(), b.q_.begin(), b.q_.end());
    const int na = a.generator_count(), nb = b.generator_count();
    std::vector<std::vector<Rat>> bil(na + nb, std::vector<Rat>(na + nb, Rat(0)));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) bil[i][j] = a.b_[i][j];
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) bil[na + i][na + j] = b.b_[i][j];
    std::vector<std::vector<Rat>> coords(na + nb);  // coordinates lose meaning across sums
    return FiniteQuadraticForm(std::move(orders), std::move(coords), std::move(q),
                               std::move(bil), a.from_odd_ || b.from_odd_);
}

FiniteQuadraticForm discriminant_form(const Lattice& l) {
    require(!l.degenerate(), "discriminant form needs a nondegenerate lattice");
    const int n = l.rank();
    SmithDecomposition s = smith_normal_form(l.gram());
    // D_L = Z^n / G Z^n; the class of the standard generator i corresponds to
    // the dual vector (1/d_i) * (column i of V) in lattice coordinates.
    std::vector<Int> orders;
    std::vector<std::vector<Rat>> gens;
    for (int i = 0; i < n; ++i) {
        Int d = s.d(i, i);
        if (d == 1) continue;
        orders.push_back(d);
        // The class of the generator only depends on the column mod d; the
        // reduced representative keeps coordinates small and canonical. For
        // even lattices q is unchanged mod 2Z; for odd lattices the recorded
        // flag marks the representative-dependence anyway.
        std::vector<Rat> g(n);
        for (int j = 0; j < n; ++j) g[j] = Rat(mod_floor(s.v(j, i), d)) / Rat(d);
        gens.push_back(std::move(g));
    }
    const int a = int(orders.size());
    std::vector<Rat> qv(a);
    std::vector<std::vector<Rat>> bv(a, std::vector<Rat>(a, Rat(0)));
    for (int i = 0; i < a; ++i) {
        qv[i] = mod_canonical(l.inner(gens[i], gens[i]), Rat(2));
        for (int j = 0; j < a; ++j)
            if (i != j) bv[i][j] = mod_canonical(l.inner(gens[i], gens[j]), Rat(1));
    }
    return FiniteQuadraticForm(std::move(orders), std::move(gens), std::move(qv),
                               std::move(bv), !l.is_even());
}

FiniteQuadraticForm::Element discriminant_class(const Lattice& l,
                                                const FiniteQuadraticForm& form,
                                                const std::vector<Rat>& coords) {
    // Pairing vector m = G * coords must be integral (coords in L_dual), and
    // the class in Z^n / G Z^n is read off through the SNF row transform.
    const int n = l.rank();
    require(int(coords.size()) == n, "coordinate length mismatch");
    std::vector<Int> m(n);
    for (int i = 0; i < n; ++i) {
        Rat p = 0;
        for (int j = 0; j < n; ++j) p += Rat(l.gram()(i, j)) * coords[j];
        require(is_integral(p), "vector does not lie in the dual lattice");
        m[i] = num(p);
    }
    SmithDecomposition s = smith_normal_form(l.gram());
    FiniteQuadraticForm::Element cls;
    for (int i = 0; i < n; ++i) {
        if (s.d(i, i) == 1) continue;
        Int t = 0;
        for (int j = 0; j < n; ++j) t += s.u(i, j) * m[j];
        cls.push_back(mod_floor(t, s.d(i, i)));
    }
    return form.canonical(cls);
}

int gauss_signature(const FiniteQuadraticForm& form, double tolerance, double snap_radius) {
    Int order = form.group_order();
    require(order <= kMaxEnumeration, "Gauss sum limited to |D| <= 4096");
    std::complex<double> sum = 0;
    constexpr double pi = 3.14159265358979323846;
    for (const auto& e : form.elements()) {
        Rat qe = form.q(e);
        double angle = pi * double(num(qe)) / double(den(qe));
        sum += std::polar(1.0, angle);
    }
    double root = std::sqrt(double(order));
    double mag = std::abs(sum);
    require(std::abs(mag - root) <= snap_radius * root + tolerance,
            "Gauss sum magnitude mismatch: degenerate form");
    double sigma = std::arg(sum) * 8.0 / (2.0 * pi);
    double snapped = std::round(sigma);
    require(std::abs(sigma - snapped) <= std::max(snap_radius, tolerance) * 8.0,
            "Gauss sum angle does not snap to an eighth");
    int result = int(snapped) % 8;
    return result < 0 ? result + 8 : result;
}

// --- isometry group machinery -------------------------------------------------

namespace {

// Compact tables for backtracking over a small group. Elements are indexed in
// mixed radix against the generator orders; q is stored in units of
// 1/(2*lcm^2) of an integer so comparisons are integral.
struct GroupTables {
    std::vector<std::int64_t> radix;     // orders as machine ints
    std::int64_t size = 1;
    std::vector<std::int64_t> q;         // q * scale, canonical in [0, 2*scale)
    std::int64_t scale = 1;              // common denominator for q and 2b
    std::vector<std::int64_t> pair;      // 2*b(x,y)*scale in [0, 2*scale), size^2
    std::vector<std::int64_t> order_of;  // element order
    std::vector<std::vector<std::int64_t>> by_q;  // element indices per q value

    std::int64_t index_of(const FiniteQuadraticForm::Element& e) const {
        std::int64_t idx = 0;
        for (size_t i = 0; i < radix.size(); ++i)
            idx = idx * radix[i] + std::int64_t(e[i]);
        return idx;
    }
    std::int64_t pair2(std::int64_t x, std::int64_t y) const { return pair[x * size + y]; }
};

GroupTables build_tables(const FiniteQuadraticForm& form) {
    GroupTables t;
    Int lcm_orders = 1;
    for (const auto& d : form.orders()) {
        t.radix.push_back(std::int64_t(d));
        t.size *= std::int64_t(d);
        lcm_orders = lcm(lcm_orders, d);
    }
    require(t.size <= kMaxBruteGroup, "group too large for isometry tables");
    // q has denominator dividing 2*lcm^2; b has denominator dividing lcm^2.
    Int scale = 2 * lcm_orders * lcm_orders;
    t.scale = std::int64_t(scale);
    const std::int64_t two_scale = 2 * t.scale;

    auto elems = form.elements();
    t.q.resize(t.size);
    t.order_of.resize(t.size);
    t.pair.assign(size_t(t.size) * t.size, 0);
    for (const auto& e : elems) {
        std::int64_t idx = t.index_of(e);
        Rat qe = form.q(e);
        t.q[idx] = std::int64_t(num(qe * Rat(scale)));  // exact: scale clears denominators
        Int o = 1;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) o = lcm(o, form.orders()[i] / gcd(form.orders()[i], e[i]));
        t.order_of[idx] = std::int64_t(o);
    }
    for (const auto& x : elems) {
        std::int64_t ix = t.index_of(x);
        for (const auto& y : elems) {
            std::int64_t iy = t.index_of(y);
            if (iy < ix) continue;
            Rat be = form.b(x, y);
            std::int64_t v = std::int64_t(num(Rat(2) * be * Rat(scale))) % two_scale;
            t.pair[ix * t.size + iy] = v;
            t.pair[iy * t.size + ix] = v;
        }
    }
    std::map<std::int64_t, std::vector<std::int64_t>> grouping;
    for (std::int64_t i = 0; i < t.size; ++i) grouping[t.q[i]].push_back(i);
    for (auto& [qv, idxs] : grouping) t.by_q.push_back(std::move(idxs));
    return t;
}

// Counts isometries of the form, optionally with a fixed-image constraint:
// elements x (by index decomposition over generators) must map to y. The
// search assigns images of the SNF generators with q, pairing and order
// pruning; pairings of candidate images are recomputed from the tables.
class IsometryCounter {
public:
    IsometryCounter(const FiniteQuadraticForm& form, const GroupTables& t)
        : form_(form), t_(t), a_(form.generator_count()) {
        elems_ = form_.elements();
        image_.resize(a_);
        gen_idx_.resize(a_);
        for (int g = 0; g < a_; ++g) {
            FiniteQuadraticForm::Element e = form_.zero();
            e[g] = 1;
            gen_idx_[g] = t_.index_of(e);
        }
    }

    // constraint: pair (x, y) of group elements; phi(x) must equal y. The
    // constraint is applied as soon as the last generator in the support of
    // x has been assigned.
    void add_constraint(const FiniteQuadraticForm::Element& x,
                        const FiniteQuadraticForm::Element& y) {
        int last = -1;
        for (int i = 0; i < a_; ++i)
            if (x[i] != 0) last = i;
        if (last < 0) {
            // phi(0) = 0 always; a nonzero target is unsatisfiable
            if (form_.canonical(y) != form_.zero()) impossible_ = true;
            return;
        }
        constraints_.push_back({x, y, last});
    }

    // early_exit: stop after the first completed isometry.
    Int count(bool early_exit = false) {
        if (impossible_) return 0;
        count_ = 0;
        early_exit_ = early_exit;
        done_ = false;
        rec(0);
        return count_;
    }

    // Candidates for the image of the first generator; the search below the
    // first level is independent per candidate, so workers may split here.
    std::vector<std::int64_t> first_level_candidates() const {
        std::vector<std::int64_t> out;
        if (a_ == 0) return out;
        const std::int64_t gen = gen_idx_[0];
        for (const auto& bucket : t_.by_q) {
            if (bucket.empty() || t_.q[bucket.front()] != t_.q[gen]) continue;
            for (std::int64_t cand : bucket)
                if (t_.radix[0] % t_.order_of[cand] == 0) out.push_back(cand);
        }
        return out;
    }

    Int count_with_first(std::int64_t first) {
        if (impossible_) return 0;
        count_ = 0;
        early_exit_ = false;
        done_ = false;
        image_[0] = first;
        if (constraints_settled(0)) rec(1);
        return count_;
    }

private:
    void rec(int level) {
        if (done_) return;
        if (level == a_) {
            ++count_;
            if (early_exit_) done_ = true;
            return;
        }
        const std::int64_t gen = gen_idx_[level];
        const std::int64_t want_q = t_.q[gen];
        const std::int64_t want_ord = t_.radix[level];
        for (const auto& bucket : t_.by_q) {
            if (bucket.empty() || t_.q[bucket.front()] != want_q) continue;
            for (std::int64_t cand : bucket) {
                if (want_ord % t_.order_of[cand] != 0) continue;
                bool ok = true;
                for (int j = 0; j < level; ++j)
                    if (t_.pair2(image_[j], cand) != t_.pair2(gen_idx_[j], gen)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                image_[level] = cand;
                if (constraints_settled(level)) rec(level + 1);
                if (done_) return;
            }
        }
    }

    // Check every constraint whose support is fully assigned at this level.
    bool constraints_settled(int level) const {
        for (const auto& c : constraints_) {
            if (c.last_support != level) continue;
            if (apply_partial(c.x, level) != t_.index_of(c.y)) return false;
        }
        return true;
    }

    std::int64_t apply_partial(const FiniteQuadraticForm::Element& x, int level) const {
        FiniteQuadraticForm::Element img = form_.zero();
        for (int i = 0; i <= level; ++i) {
            if (x[i] == 0) continue;
            const auto& target = elems_[size_t(image_[i])];
            for (int j = 0; j < a_; ++j)
                img[j] = mod_floor(img[j] + x[i] * target[j], form_.orders()[j]);
        }
        return t_.index_of(img);
    }

    const FiniteQuadraticForm& form_;
    const GroupTables& t_;
    int a_;
    std::vector<FiniteQuadraticForm::Element> elems_;
    std::vector<std::int64_t> image_;
    std::vector<std::int64_t> gen_idx_;
    struct Constraint {
        FiniteQuadraticForm::Element x, y;
        int last_support;
    };
    std::vector<Constraint> constraints_;
    bool impossible_ = false;
    Int count_ = 0;
    bool early_exit_ = false;
    bool done_ = false;
};

Int brute_force_order(const FiniteQuadraticForm& form) {
    if (form.trivial()) return 1;
    GroupTables t = build_tables(form);
    IsometryCounter counter(form, t);
    auto first = counter.first_level_candidates();
    int workers = std::min(worker_count(), int(first.size()));
    if (workers <= 1 || first.size() < 8) return counter.count();
    // split the first branching level across workers; the total is an exact
    // integer independent of the schedule
    std::vector<Int> partial(first.size());
    parallel_for(int(first.size()), [&](int i) {
        IsometryCounter local(form, t);
        partial[size_t(i)] = local.count_with_first(first[size_t(i)]);
    });
    Int total = 0;
    for (const auto& p : partial) total += p;
    return total;
}

}  // namespace

Int classical_order(ClassicalFamily family, int n) {
    require(n >= 0, "classical order needs n >= 0");
    auto pow2 = [](int e) {
        Int r = 1;
        for (int i = 0; i < e; ++i) r *= 2;
        return r;
    };
    switch (family) {
        case ClassicalFamily::Sp: {
            // |Sp(2n,2)| = 2^{n^2} prod_{i=1..n} (4^i - 1)
            Int r = pow2(n * n);
            Int four = 1;
            for (int i = 1; i <= n; ++i) {
                four *= 4;
                r *= four - 1;
            }
            return r;
        }
        case ClassicalFamily::OPlus:
        case ClassicalFamily::OMinus: {
            if (n == 0) return 1;
            // |O^eps(2n,2)| = 2^{n^2-n+1} (2^n - eps) prod_{i=1..n-1} (4^i - 1)
            Int r = pow2(n * n - n + 1);
            Int t = pow2(n);
            Int eps_term = (family == ClassicalFamily::OPlus) ? Int(t - 1) : Int(t + 1);
            r *= eps_term;
            Int four = 1;
            for (int i = 1; i <= n - 1; ++i) {
                four *= 4;
                r *= four - 1;
            }
            return r;
        }
        case ClassicalFamily::Weyl: {
            require(n >= 5 && n <= 8, "Weyl orders tabulated for d = 5..8");
            static const Int table[4] = {Int(1920), Int(51840), Int(2903040), Int(696729600)};
            return table[n - 5];
        }
    }
    throw domain_error("unsupported classical family");
}

namespace {

// Classified orders of O(q) for nondegenerate 2-elementary q, keyed by
// (length, parity, Gauss signature mod 8).
std::optional<Int> two_elementary_closed_form(int a, int delta, int sigma) {
    sigma = ((sigma % 8) + 8) % 8;
    if (a == 0) return Int(1);
    if (delta == 0) {
        if (a % 2 != 0) return std::nullopt;
        if (sigma == 0) return classical_order(ClassicalFamily::OPlus, a / 2);
        if (sigma == 4) return classical_order(ClassicalFamily::OMinus, a / 2);
        return std::nullopt;
    }
    if (a % 2 == 1) {
        if (a == 1) return Int(1);
        if (sigma == 1 || sigma == 7)
            return classical_order(ClassicalFamily::OPlus, (a - 1) / 2);
        if (sigma == 3 || sigma == 5)
            return classical_order(ClassicalFamily::OMinus, (a - 1) / 2);
        return std::nullopt;
    }
    // delta = 1, a even
    if (sigma == 2 || sigma == 6)
        return Int(2) * classical_order(ClassicalFamily::Sp, (a - 2) / 2);
    Int two_pow = 1;
    for (int i = 0; i < a - 2; ++i) two_pow *= 2;
    if (sigma == 0) return two_pow * classical_order(ClassicalFamily::OPlus, (a - 2) / 2);
    if (sigma == 4) return two_pow * classical_order(ClassicalFamily::OMinus, (a - 2) / 2);
    return std::nullopt;
}

}  // namespace

GroupOrder isometry_group_order(const FiniteQuadraticForm& q) {
    std::optional<Int> closed;
    if (q.is_two_elementary())
        closed = two_elementary_closed_form(q.length(), q.parity(), block_signature(q));

    if (q.group_order() <= kMaxBruteGroup) {
        Int brute = brute_force_order(q);
        if (closed) {
            require(*closed == brute,
                    "closed-form and brute-force isometry orders disagree");
            return GroupOrder{brute, OrderDerivation::both_agree};
        }
        return GroupOrder{brute, OrderDerivation::brute_force};
    }
    require(closed.has_value(),
            "group exceeds the brute-force bound and matches no classified normal form");
    return GroupOrder{*closed, OrderDerivation::closed_form};
}

std::vector<FiniteQuadraticForm::Element> norm_one_elements(const FiniteQuadraticForm& q) {
    std::vector<FiniteQuadraticForm::Element> out;
    for (const auto& e : q.elements())
        if (q.q(e) == Rat(1)) out.push_back(e);
    return out;
}

Int stabilizer_order(const FiniteQuadraticForm& q, const FiniteQuadraticForm::Element& x) {
    if (q.trivial()) return 1;
    GroupTables t = build_tables(q);
    IsometryCounter counter(q, t);
    counter.add_constraint(x, x);
    return counter.count();
}

std::vector<std::vector<int>> orbits(const FiniteQuadraticForm& q,
                                     const std::vector<FiniteQuadraticForm::Element>& elems) {
    const int n = int(elems.size());
    std::vector<int> comp(n, -1);
    GroupTables t = build_tables(q);
    auto related = [&](int i, int j) {
        IsometryCounter counter(q, t);
        counter.add_constraint(elems[i], elems[j]);
        return counter.count(/*early_exit=*/true) > 0;
    };
    int nc = 0;
    for (int i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        comp[i] = nc;
        for (int j = i + 1; j < n; ++j)
            if (comp[j] < 0 && related(i, j)) comp[j] = nc;
        ++nc;
    }
    std::vector<std::vector<int>> out(nc);
    for (int i = 0; i < n; ++i) out[comp[i]].push_back(i);
    return out;
}

// --- block decomposition ------------------------------------------------------

namespace {

// F2 vector with q in {0, 1/2, 1, 3/2} encoded in halves mod 4 and b in
// halves mod 2.
struct F2Form {
    int n;
    std::vector<int> q;                 // q(g_i) in units of 1/2 mod 4
    std::vector<std::vector<int>> b;    // 2*b(g_i,g_j) mod 2
    int q_of(const std::vector<int>& x) const {
        int s = 0;
        for (int i = 0; i < n; ++i) {
            if (!x[i]) continue;
            s += q[i];
            for (int j = i + 1; j < n; ++j)
                if (x[j]) s += 2 * b[i][j];
        }
        return ((s % 4) + 4) % 4;
    }
    int b_of(const std::vector<int>& x, const std::vector<int>& y) const {
        int s = 0;
        for (int i = 0; i < n; ++i) {
            if (!x[i]) continue;
            for (int j = 0; j < n; ++j) {
                if (!y[j]) continue;
                s += (i == j) ? (q[i] % 2) : b[i][j];
            }
        }
        return s % 2;
    }
};

}  // namespace

std::vector<Block> block_decomposition(const FiniteQuadraticForm& form) {
    require(form.is_two_elementary(), "block decomposition needs a 2-elementary form");
    const int n = form.length();
    F2Form f;
    f.n = n;
    f.q.resize(n);
    f.b.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        FiniteQuadraticForm::Element gi = form.zero();
        gi[i] = 1;
        Rat qi = form.q(gi);
        f.q[i] = int(num(qi * 2));  // in {0,1,2,3}
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            FiniteQuadraticForm::Element gj = form.zero();
            gj[j] = 1;
            f.b[i][j] = int(num(form.b(gi, gj) * 2));
        }
    }

    // Working basis: vectors over F2 in terms of the original generators.
    std::vector<std::vector<int>> basis(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) basis[i][i] = 1;

    auto add_vec = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> r(n);
        for (int i = 0; i < n; ++i) r[i] = a[i] ^ b[i];
        return r;
    };

    std::vector<Block> blocks;
    while (!basis.empty()) {
        // 1) some combination with half-integer q splits off a w block;
        //    search current span (it is small: <= 2^12 combinations).
        int m = int(basis.size());
        std::vector<int> found;
        for (std::int64_t mask = 1; mask < (std::int64_t(1) << m); ++mask) {
            std::vector<int> x(n, 0);
            for (int b = 0; b < m; ++b)
                if (mask & (std::int64_t(1) << b)) x = add_vec(x, basis[b]);
            int qx = f.q_of(x);
            if (qx % 2 == 1) {
                found = x;
                break;
            }
        }
        if (!found.empty()) {
            blocks.push_back(f.q_of(found) == 1 ? Block::w_plus : Block::w_minus);
            // complement: y -> y + b(y,x)/b(x,x) x, with b(x,x) = 1/2
            std::vector<std::vector<int>> next;
            for (const auto& y : basis) {
                std::vector<int> z = f.b_of(y, found) ? add_vec(y, found) : y;
                next.push_back(z);
            }
            // drop x from the span: keep an independent subset of next of size m-1
            basis.clear();
            std::vector<std::vector<int>> echelon;
            for (const auto& z : next) {
                std::vector<int> v = z;
                for (const auto& e : echelon) {
                    int lead = -1;
                    for (int i = 0; i < n; ++i)
                        if (e[i]) {
                            lead = i;
                            break;
                        }
                    if (lead >= 0 && v[lead]) v = add_vec(v, e);
                }
                bool nonzero = false;
                for (int i = 0; i < n; ++i)
                    if (v[i]) nonzero = true;
                if (nonzero) {
                    echelon.push_back(v);
                    basis.push_back(z);
                    if (int(basis.size()) == m - 1) break;
                }
            }
            continue;
        }
        // 2) all q integral on the span: split a hyperbolic pair (u or v).
        require(int(basis.size()) >= 2, "block decomposition failed: odd remainder");
        std::vector<int> x = basis[0];
        std::vector<int> y;
        for (size_t i = 1; i < basis.size(); ++i)
            if (f.b_of(x, basis[i])) {
                y = basis[i];
                break;
            }
        require(!y.empty(), "block decomposition failed: degenerate span");
        // normalize so q(x), q(y) agree: values are 0 or 1 here
        if (f.q_of(x) != f.q_of(y)) {
            if (f.q_of(x) == 0)
                y = add_vec(x, y);
            else
                x = add_vec(x, y);
        }
        blocks.push_back(f.q_of(x) == 0 ? Block::u : Block::v);
        std::vector<std::vector<int>> next;
        for (const auto& z : basis) {
            std::vector<int> v = z;
            if (f.b_of(v, y)) v = add_vec(v, x);
            if (f.b_of(v, x)) v = add_vec(v, y);
            next.push_back(v);
        }
        int m2 = int(basis.size());
        basis.clear();
        std::vector<std::vector<int>> echelon;
        for (const auto& z : next) {
            std::vector<int> v = z;
            for (const auto& e : echelon) {
                int lead = -1;
                for (int i = 0; i < n; ++i)
                    if (e[i]) {
                        lead = i;
                        break;
                    }
                if (lead >= 0 && v[lead]) v = add_vec(v, e);
            }
            bool nonzero = false;
            for (int i = 0; i < n; ++i)
                if (v[i]) nonzero = true;
            if (nonzero) {
                echelon.push_back(v);
                basis.push_back(z);
                if (int(basis.size()) == m2 - 2) break;
            }
        }
    }
    return blocks;
}

int block_signature(const FiniteQuadraticForm& q) {
    int s = 0;
    for (Block b : block_decomposition(q)) {
        switch (b) {
            case Block::u: break;
            case Block::v: s += 4; break;
            case Block::w_plus: s += 1; break;
            case Block::w_minus: s -= 1; break;
        }
    }
    return ((s % 8) + 8) % 8;
}

std::string block_name(Block b) {
    switch (b) {
        case Block::u: return "u";
        case Block::v: return "v";
        case Block::w_plus: return "w+";
        case Block::w_minus: return "w-";
    }
    return "?";
}

}  // namespace latlab
