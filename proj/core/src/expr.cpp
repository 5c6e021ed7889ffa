#include "latlab/expr.hpp"

#include <cctype>
#include <sstream>

namespace latlab {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    ExprPtr parse() {
        ExprPtr e = sum();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    Int integer() {
        skip_ws();
        size_t start = pos_;
        bool negative = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            negative = s_[pos_] == '-';
            ++pos_;
        }
        size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected an integer");
        }
        Int value(s_.substr(digits, pos_ - digits));
        return negative ? Int(-value) : value;
    }

    Rat rational() {
        Int n = integer();
        if (eat('/')) {
            Int d = integer();
            if (d == 0) fail("zero denominator");
            return Rat(n) / Rat(d);
        }
        return Rat(n);
    }

    bool keyword(const char* kw) {
        skip_ws();
        size_t len = std::string(kw).size();
        if (s_.compare(pos_, len, kw) == 0) {
            pos_ += len;
            return true;
        }
        return false;
    }

    ExprPtr sum() {
        std::vector<ExprPtr> terms{term()};
        while (eat('+')) terms.push_back(term());
        if (terms.size() == 1) return terms[0];
        auto e = std::make_shared<LatticeExpr>();
        e->kind = LatticeExpr::Kind::sum;
        e->children = std::move(terms);
        return e;
    }

    ExprPtr term() {
        ExprPtr base = postfix();
        if (eat('^')) {
            Int count = integer();
            if (count <= 0) fail("repetition count must be positive");
            auto e = std::make_shared<LatticeExpr>();
            e->kind = LatticeExpr::Kind::repeat;
            e->k = count;
            e->children = {base};
            return e;
        }
        return base;
    }

    // primary followed by any number of (k) scalings
    ExprPtr postfix() {
        ExprPtr e = primary();
        while (peek('(')) {
            size_t save = pos_;
            expect('(');
            skip_ws();
            // only an integer in parentheses is a scaling; otherwise restore
            if (pos_ < s_.size() &&
                (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) {
                Int k = integer();
                if (!eat(')')) {
                    pos_ = save;
                    break;
                }
                if (k == 0) fail("scaling by zero");
                auto scaled = std::make_shared<LatticeExpr>();
                scaled->kind = LatticeExpr::Kind::scale;
                scaled->k = k;
                scaled->children = {e};
                e = scaled;
            } else {
                pos_ = save;
                break;
            }
        }
        return e;
    }

    ExprPtr primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (keyword("dual2(")) return func(LatticeExpr::Kind::dual2);
        if (keyword("evenpart(")) return func(LatticeExpr::Kind::evenpart);
        if (keyword("glue(")) return glue();
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = sum();
            expect(')');
            return e;
        }
        if (c == '<') {
            ++pos_;
            Int k = integer();
            expect('>');
            if (k == 0) fail("<0> is degenerate");
            auto e = std::make_shared<LatticeExpr>();
            e->kind = LatticeExpr::Kind::atom_rank1;
            e->k = k;
            return e;
        }
        if (c == 'U') {
            ++pos_;
            auto e = std::make_shared<LatticeExpr>();
            e->kind = LatticeExpr::Kind::atom_U;
            return e;
        }
        if (c == 'A' || c == 'D' || c == 'E') {
            ++pos_;
            Int n = integer();
            auto e = std::make_shared<LatticeExpr>();
            e->n = int(n);
            if (c == 'A') {
                if (n < 1 || n > 24) fail("A_n needs 1 <= n <= 24");
                e->kind = LatticeExpr::Kind::atom_A;
            } else if (c == 'D') {
                if (n < 2 || n > 24) fail("D_n needs 2 <= n <= 24");
                e->kind = LatticeExpr::Kind::atom_D;
            } else {
                if (n != 6 && n != 7 && n != 8) fail("E_n needs n in {6,7,8}");
                e->kind = LatticeExpr::Kind::atom_E;
            }
            return e;
        }
        if (c == 'I') {
            ++pos_;
            expect('(');
            Int m = integer();
            expect(',');
            Int n = integer();
            expect(')');
            if (m < 0 || n < 0 || m + n < 1 || m + n > 24) fail("I(m,n) needs 1 <= m+n <= 24");
            auto e = std::make_shared<LatticeExpr>();
            e->kind = LatticeExpr::Kind::atom_I;
            e->m = int(m);
            e->n = int(n);
            return e;
        }
        fail("unknown lattice atom");
    }

    ExprPtr func(LatticeExpr::Kind kind) {
        ExprPtr inner = sum();
        expect(')');
        auto e = std::make_shared<LatticeExpr>();
        e->kind = kind;
        e->children = {inner};
        return e;
    }

    ExprPtr glue() {
        ExprPtr base = sum();
        auto e = std::make_shared<LatticeExpr>();
        e->kind = LatticeExpr::Kind::glue;
        e->children = {base};
        while (eat(';')) {
            std::vector<Rat> vec{rational()};
            while (eat(',')) vec.push_back(rational());
            e->glue_vectors.push_back(std::move(vec));
        }
        expect(')');
        if (e->glue_vectors.empty()) fail("glue(...) needs at least one vector");
        return e;
    }

    const std::string& s_;
    size_t pos_ = 0;
};

void print_rec(const ExprPtr& e, std::ostream& out, int parent_prec) {
    using K = LatticeExpr::Kind;
    // precedence: sum 0, repeat 1, scale 2, primaries 3
    switch (e->kind) {
        case K::atom_U: out << "U"; return;
        case K::atom_rank1: out << "<" << e->k << ">"; return;
        case K::atom_A: out << "A" << e->n; return;
        case K::atom_D: out << "D" << e->n; return;
        case K::atom_E: out << "E" << e->n; return;
        case K::atom_I: out << "I(" << e->m << "," << e->n << ")"; return;
        case K::sum: {
            bool paren = parent_prec > 0;
            if (paren) out << "(";
            for (size_t i = 0; i < e->children.size(); ++i) {
                if (i) out << " + ";
                print_rec(e->children[i], out, 1);
            }
            if (paren) out << ")";
            return;
        }
        case K::repeat: {
            print_rec(e->children[0], out, 2);
            out << "^" << e->k;
            return;
        }
        case K::scale: {
            print_rec(e->children[0], out, 3);
            out << "(" << e->k << ")";
            return;
        }
        case K::dual2:
            out << "dual2(";
            print_rec(e->children[0], out, 0);
            out << ")";
            return;
        case K::evenpart:
            out << "evenpart(";
            print_rec(e->children[0], out, 0);
            out << ")";
            return;
        case K::glue: {
            out << "glue(";
            print_rec(e->children[0], out, 0);
            for (const auto& v : e->glue_vectors) {
                out << "; ";
                for (size_t i = 0; i < v.size(); ++i) {
                    if (i) out << ",";
                    out << num(v[i]);
                    if (den(v[i]) != 1) out << "/" << den(v[i]);
                }
            }
            out << ")";
            return;
        }
    }
}

constexpr int kMaxExprRank = 26;

}  // namespace

ExprPtr parse_lattice_expr(const std::string& text) { return Parser(text).parse(); }

std::string print_lattice_expr(const ExprPtr& e) {
    std::ostringstream out;
    print_rec(e, out, 0);
    return out.str();
}

EvalResult eval_lattice_expr(const ExprPtr& e) {
    using K = LatticeExpr::Kind;
    EvalResult res;
    switch (e->kind) {
        case K::atom_U: res.lattice = make_U(); break;
        case K::atom_rank1: res.lattice = make_rank1(e->k); break;
        case K::atom_A: res.lattice = make_A(e->n); break;
        case K::atom_D: res.lattice = make_D(e->n); break;
        case K::atom_E: res.lattice = make_E(e->n); break;
        case K::atom_I: res.lattice = make_I(e->m, e->n); break;
        case K::sum: {
            Lattice acc = eval_lattice_expr(e->children[0]).lattice;
            for (size_t i = 1; i < e->children.size(); ++i)
                acc = direct_sum(acc, eval_lattice_expr(e->children[i]).lattice);
            res.lattice = std::move(acc);
            break;
        }
        case K::repeat: {
            Lattice base = eval_lattice_expr(e->children[0]).lattice;
            require(Int(base.rank()) * e->k <= kMaxExprRank,
                    "expression exceeds the rank cap of 26");
            Lattice acc = base;
            for (Int i = 1; i < e->k; ++i) acc = direct_sum(acc, base);
            res.lattice = std::move(acc);
            break;
        }
        case K::scale:
            res.lattice = rescale(eval_lattice_expr(e->children[0]).lattice, e->k);
            break;
        case K::dual2:
            res.lattice = dual_rescale(eval_lattice_expr(e->children[0]).lattice, 2);
            break;
        case K::evenpart: {
            EvenPart ep = even_part(eval_lattice_expr(e->children[0]).lattice);
            res.lattice = std::move(ep.sublattice);
            res.evenpart_class = std::move(ep.glue_class_coords);
            break;
        }
        case K::glue:
            res.lattice = overlattice(eval_lattice_expr(e->children[0]).lattice,
                                      e->glue_vectors, /*require_even=*/false);
            break;
    }
    require(res.lattice.rank() <= kMaxExprRank, "expression exceeds the rank cap of 26");
    return res;
}

EvalResult eval_lattice_expr(const std::string& text) {
    return eval_lattice_expr(parse_lattice_expr(text));
}

}  // namespace latlab
