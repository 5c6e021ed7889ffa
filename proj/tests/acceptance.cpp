// Acceptance suite: replays every recorded verification family and prints one
// pass/fail line per criterion. Exit status 0 only when everything holds.
#include "latlab/verify.hpp"

#include <chrono>
#include <cstdio>

int main() {
    using clock = std::chrono::steady_clock;
    struct Criterion {
        const char* label;
        latlab::VerifySection (*run)();
    };
    const Criterion criteria[] = {
        {"criterion 1: discriminant isometry-group order table", latlab::verify_group_orders},
        {"criterion 2: overlattice glue constructions", latlab::verify_glue_constructions},
        {"criterion 3: even-part identities", latlab::verify_even_parts},
        {"criterion 4: dual-rescale identities", latlab::verify_dual_rescale},
        {"criterion 5: Heegner vector and complement", latlab::verify_heegner},
        {"criterion 6: DPN invariant calculator", latlab::verify_dpn_manifest},
        {"criterion 7: period-map ledger", latlab::verify_ledger_manifest},
        {"criterion 8: census of 75 main invariants", latlab::verify_census},
        {"criterion 9: property suites", latlab::verify_property_suites},
    };

    int failures = 0;
    auto t0 = clock::now();
    for (const Criterion& c : criteria) {
        auto start = clock::now();
        latlab::VerifySection section = c.run();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start);
        bool ok = section.passed();
        std::printf("%-4s %s  [%lld ms, %zu checks]\n", ok ? "PASS" : "FAIL", c.label,
                    (long long)ms.count(), section.checks.size());
        if (!ok) {
            ++failures;
            for (const auto& chk : section.checks)
                if (!chk.passed)
                    std::printf("       %s: %s\n", chk.name.c_str(), chk.detail.c_str());
        }
    }
    auto total = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0);
    std::printf("%d of 9 criteria passed in %lld ms\n", 9 - failures,
                (long long)total.count());
    return failures == 0 ? 0 : 1;
}
