#include "latlab/census.hpp"

#include "latlab/discform.hpp"
#include "latlab/expr.hpp"

#include <functional>
#include <sstream>

namespace latlab {

const std::vector<std::string>& census_block_catalog() {
    static const std::vector<std::string> catalog = {
        "<2>", "<-2>", "U", "U(2)", "D4", "D6", "D8",
        "E7", "E8", "E8(2)", "I(1,1)(2)", "D4(2)",
    };
    return catalog;
}

namespace {

struct BlockData {
    std::string expr;
    int rank;
    int n_plus;
    int a;
    int delta;
    bool two_elementary;
};

const std::vector<BlockData>& block_data() {
    static const std::vector<BlockData> data = [] {
        std::vector<BlockData> out;
        for (const auto& expr : census_block_catalog()) {
            Lattice l = eval_lattice_expr(expr).lattice;
            BlockData d;
            d.expr = expr;
            d.rank = l.rank();
            d.n_plus = l.sig().n_plus;
            FiniteQuadraticForm q = discriminant_form(l);
            d.two_elementary = q.is_two_elementary();
            d.a = d.two_elementary ? q.length() : 0;
            d.delta = d.two_elementary ? q.parity() : 0;
            out.push_back(std::move(d));
        }
        return out;
    }();
    return data;
}

// For each (rank, n_plus) target, the achievable (a, delta) pairs with one
// witness multiset each. Filled once by a DFS over the catalog; blocks whose
// own discriminant is not 2-elementary can never appear in a certificate.
struct SideKey {
    int rank, n_plus;
    bool operator<(const SideKey& o) const {
        return rank != o.rank ? rank < o.rank : n_plus < o.n_plus;
    }
};

using WitnessMap = std::map<std::pair<int, int>, std::string>;  // (a, delta) -> expr

const std::map<SideKey, WitnessMap>& side_table() {
    static const std::map<SideKey, WitnessMap> table = [] {
        std::map<SideKey, WitnessMap> out;
        const auto& blocks = block_data();
        const int max_rank = 21;  // L_minus at r = 1
        std::vector<int> counts(blocks.size(), 0);

        std::function<void(size_t, int, int, int, int)> rec = [&](size_t i, int rank,
                                                                  int pos, int a, int delta) {
            if (rank > 0) {
                WitnessMap& wm = out[SideKey{rank, pos}];
                auto key = std::make_pair(a, delta);
                if (!wm.count(key)) {
                    std::ostringstream s;
                    bool first = true;
                    for (size_t b = 0; b < blocks.size(); ++b) {
                        if (!counts[b]) continue;
                        if (!first) s << " + ";
                        first = false;
                        s << blocks[b].expr;
                        if (counts[b] > 1) s << "^" << counts[b];
                    }
                    wm[key] = s.str();
                }
            }
            if (i == blocks.size()) return;
            rec(i + 1, rank, pos, a, delta);
            const BlockData& bd = blocks[i];
            if (!bd.two_elementary) return;  // would leave the 2-elementary class
            int c = 1;
            while (rank + c * bd.rank <= max_rank && pos + c * bd.n_plus <= 2) {
                counts[i] = c;
                rec(i + 1, rank + c * bd.rank, pos + c * bd.n_plus,
                    a + c * bd.a, delta | bd.delta);
                ++c;
            }
            counts[i] = 0;
        };
        rec(0, 0, 0, 0, 0);
        return out;
    }();
    return table;
}

}  // namespace

CensusResult nikulin_census(int max_r) {
    CensusResult result;
    const auto& table = side_table();
    for (int r = 1; r <= max_r; ++r) {
        auto plus_it = table.find(SideKey{r, 1});
        auto minus_it = table.find(SideKey{22 - r, 2});
        if (plus_it == table.end() || minus_it == table.end()) continue;
        for (const auto& [key, plus_expr] : plus_it->second) {
            auto m = minus_it->second.find(key);
            if (m == minus_it->second.end()) continue;
            result.members[{r, key.first, key.second}] =
                CensusCertificate{plus_expr, m->second};
        }
    }
    return result;
}

}  // namespace latlab
