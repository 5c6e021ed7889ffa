#include "latlab/dpn.hpp"

#include "latlab/discform.hpp"

#include <algorithm>

namespace latlab {

namespace {

void validate(const DpnConfig& c) {
    require(c.components >= 1, "component count must be >= 1");
    for (const auto& [n, cnt] : c.a_count)
        require(n >= 1 && cnt >= 0, "A_n needs n >= 1 and count >= 0");
    for (const auto& [n, cnt] : c.d_count)
        require(n >= 4 && cnt >= 0, "D_n needs n >= 4 and count >= 0");
    for (const auto& [n, cnt] : c.e_count)
        require((n == 6 || n == 7 || n == 8) && cnt >= 0, "E_n needs n in {6,7,8}");
    for (int f : c.adjacency_flags)
        require(f >= 1 && f <= 4, "adjacency rule ids are 1..4");
    if (c.delta_certificate)
        require(*c.delta_certificate == 0 || *c.delta_certificate == 1,
                "delta certificate must be 0 or 1");
}

}  // namespace

int invariant_r(const DpnConfig& c) {
    validate(c);
    int r = c.rho_y;
    for (const auto& [n, cnt] : c.a_count) r += ((n + 1) / 2) * cnt;
    for (const auto& [n, cnt] : c.d_count) r += 2 * (n / 2) * cnt;
    for (const auto& [n, cnt] : c.e_count) {
        if (n == 6) r += 4 * cnt;
        if (n == 7) r += 7 * cnt;
        if (n == 8) r += 8 * cnt;
    }
    return r;
}

int components_k(const DpnConfig& c) {
    validate(c);
    int kp1 = c.components;
    for (const auto& [n, cnt] : c.d_count) kp1 += (n / 2 - 1) * cnt;
    for (const auto& [n, cnt] : c.e_count) {
        if (n == 6) kp1 += cnt;
        if (n == 7) kp1 += 3 * cnt;
        if (n == 8) kp1 += 4 * cnt;
    }
    require(kp1 >= 1, "inconsistent configuration: k+1 < 1");
    return kp1 - 1;
}

DpnInvariant full_invariant(const DpnConfig& c) {
    DpnInvariant inv;
    inv.r = invariant_r(c);
    inv.k = components_k(c);
    inv.a = inv.r - 2 * inv.k;
    require(inv.a >= 0, "derived length a is negative");
    require((inv.r + inv.a) % 2 == 0 && inv.r + inv.a <= 22,
            "derived genus is negative or fractional");
    inv.g = 11 - (inv.r + inv.a) / 2;
    if (!c.adjacency_flags.empty())
        inv.delta = 1;  // any rule firing forces parity 1; flags never clear it
    else if (c.delta_certificate)
        inv.delta = *c.delta_certificate;
    return inv;
}

Rat degree_check(const Lattice& l, const Int& cover_degree) {
    require(cover_degree >= 1, "cover degree must be >= 1");
    GroupOrder order = isometry_group_order(discriminant_form(l));
    return Rat(order.value) / Rat(cover_degree);
}

}  // namespace latlab
