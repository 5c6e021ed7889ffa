#pragma once

#include "latlab/lattice.hpp"

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace latlab {

using InvariantTriple = std::tuple<int, int, int>;  // (r, a, delta)

struct CensusCertificate {
    std::string plus_expr;   ///< hyperbolic side, signature (1, r-1)
    std::string minus_expr;  ///< transcendental side, signature (2, 20-r)
};

struct CensusResult {
    std::map<InvariantTriple, CensusCertificate> members;
    int count() const { return int(members.size()); }
    bool contains(const InvariantTriple& t) const { return members.count(t) > 0; }
};

/// Constructive census of main invariants: a triple (r, a, delta) is admitted
/// exactly when both an even 2-elementary lattice of signature (1, r-1) and
/// one of signature (2, 20-r) with the same length and parity exist as direct
/// sums over the block catalog. Certificates record one witness per side.
CensusResult nikulin_census(int max_r = 20);

/// The block catalog used by the census search, as expression strings.
const std::vector<std::string>& census_block_catalog();

}  // namespace latlab
