#pragma once

#include <string>
#include <vector>

namespace latlab {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifySection {
    std::string title;
    std::vector<CheckResult> checks;
    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

struct VerifyReport {
    std::vector<VerifySection> sections;
    bool all_passed() const {
        for (const auto& s : sections)
            if (!s.passed()) return false;
        return true;
    }
};

// Each section replays one family of recorded identities against the exact
// machinery; together they form the full bundled verification run.
VerifySection verify_group_orders();
VerifySection verify_glue_constructions();
VerifySection verify_even_parts();
VerifySection verify_dual_rescale();
VerifySection verify_heegner();
VerifySection verify_dpn_manifest();
VerifySection verify_ledger_manifest();
VerifySection verify_census();
VerifySection verify_property_suites();

VerifyReport verify_all();

}  // namespace latlab
