// Acceptance gate: runs the ten top-level correctness checks with the full
// configuration and prints one PASS/FAIL line per criterion.
#include <cstdio>
#include <functional>
#include <vector>
#include "eis/selfcheck.hpp"

int main() {
    using namespace eis;
    SelfcheckConfig cfg;   // defaults = full acceptance configuration
    std::vector<std::function<CheckResult()>> checks{
        [&] { return check_classical_level1(); },
        [&] { return check_orbit_oracle(cfg); },
        [&] { return check_dimension_table(cfg); },
        [&] { return check_series_roundtrip(cfg); },
        [&] { return check_constant_term_matrix(cfg); },
        [&] { return check_weight2_and_rationality(cfg); },
        [&] { return check_hecke_action(cfg); },
        [&] { return check_nebentypus(cfg); },
        [&] { return check_partial_zeta_numeric(cfg); },
        [&] { return check_level_inclusion(cfg); },
    };
    bool ok = true;
    long n = 0;
    for (const auto& run : checks) {
        ++n;
        CheckResult r = run();
        std::printf("criterion %ld: %s — %s: %s\n", n, r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.detail.c_str());
        std::fflush(stdout);
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
