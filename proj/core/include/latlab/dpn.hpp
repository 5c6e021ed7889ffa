#pragma once

#include "latlab/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace latlab {

/// Singularity configuration of a bi-anticanonical curve on a rational
/// surface: counts of A_n / D_n / E_n points plus the adjacency facts that
/// the parity rules consume. Rules are numbered 1-4:
///   1: three components pairwise meeting in nodes,
///   2: two components whose intersection carries a node and a D4 point,
///   3: two components sharing a tangent at a D_2n point and meeting in a node,
///   4: a component with a node of its own.
struct DpnConfig {
    std::string id;
    int rho_y = 1;                 ///< Picard number of the ambient surface
    int components = 1;            ///< k0, number of curve components
    std::map<int, int> a_count;    ///< A_n -> count (n >= 1)
    std::map<int, int> d_count;    ///< D_n -> count (n >= 4)
    std::map<int, int> e_count;    ///< E_n -> count (n in {6,7,8})
    std::vector<int> adjacency_flags;         ///< subset of {1,2,3,4}
    std::optional<int> delta_certificate;     ///< externally supplied parity
    std::string note;
};

struct DpnInvariant {
    int r = 0;
    int a = 0;
    std::optional<int> delta;  ///< empty when undecidable from the data
    int g = 0;
    int k = 0;
    bool operator==(const DpnInvariant&) const = default;
};

/// rho(Y) + sum_l l(a_{2l-1}+a_{2l}) + sum_m 2m(d_{2m}+d_{2m+1}) + 4e6+7e7+8e8.
int invariant_r(const DpnConfig& c);

/// k with k+1 = k0 + sum_m (m-1)(d_{2m}+d_{2m+1}) + e6 + 3e7 + 4e8.
int components_k(const DpnConfig& c);

/// Full invariant; delta = 1 when any adjacency rule fires, otherwise taken
/// from the certificate, otherwise left undecided.
DpnInvariant full_invariant(const DpnConfig& c);

/// |O(D_L)| / cover_degree as an exact rational.
Rat degree_check(const Lattice& l, const Int& cover_degree);

}  // namespace latlab
