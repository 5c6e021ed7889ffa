#pragma once

namespace latlab::bundled {

// Fixture files shipped with the library, embedded at configure time from
// the data/ directory.
const char* ledger_manifest_json();
const char* dpn_configs_json();
const char* named_invariants_json();
const char* example_expr(int index);  // 1..4

}  // namespace latlab::bundled
