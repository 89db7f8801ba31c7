#pragma once
#include <functional>
#include <string>
#include <vector>
#include "eis/characters.hpp"

namespace eis {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// tuning knobs; defaults reproduce the full acceptance configuration
struct SelfcheckConfig {
    long orbit_max_level = 24;
    long dim_max_level = 16;
    long roundtrip_max_level = 16;
    long hecke_max_level = 12;
    long neben_max_level = 12;
    long zeta_max_level = 12;
    long inclusion_max_level = 12;
    long zeta_partial_limit = 1000000;
};

CheckResult check_classical_level1();
CheckResult check_orbit_oracle(const SelfcheckConfig& cfg);
CheckResult check_dimension_table(const SelfcheckConfig& cfg);
CheckResult check_series_roundtrip(const SelfcheckConfig& cfg);
CheckResult check_constant_term_matrix(const SelfcheckConfig& cfg);
CheckResult check_weight2_and_rationality(const SelfcheckConfig& cfg);
CheckResult check_hecke_action(const SelfcheckConfig& cfg);
CheckResult check_nebentypus(const SelfcheckConfig& cfg);
CheckResult check_partial_zeta_numeric(const SelfcheckConfig& cfg);
CheckResult check_level_inclusion(const SelfcheckConfig& cfg);

// all ten in order
std::vector<CheckResult> run_selfcheck(const SelfcheckConfig& cfg);

} // namespace eis
