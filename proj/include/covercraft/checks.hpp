#pragma once

#include <string>
#include <vector>

#include "covercraft/tables.hpp"

namespace covercraft {

struct CheckResult {
    std::string name;
    bool pass{false};
    std::string detail;  // first counterexample on failure, summary on success
};

// Property suites shared by the `selfcheck` command and the acceptance
// harness. Grid bounds are pinned here and nowhere else.

CheckResult check_cohomology_engine();          // oracle / Serre / Riemann-Roch / effectivity
CheckResult check_intersection_properties();    // bilinearity and symmetry
CheckResult check_base_point_free_properties(); // bpf => no C0 fixed part
CheckResult check_algebra_embeddings();         // candidates embed into valid algebra data
CheckResult check_p2_classification(const ExpectedTables& tables);
CheckResult check_bidouble_tables(const ExpectedTables& tables);   // e <= 3, m <= 20
CheckResult check_z4_tables(const ExpectedTables& tables);         // e <= 3, m <= 20
CheckResult check_irregularity_values();        // q by cohomology vs the per-case value
CheckResult check_a1_counts();                  // 4(r+1) / 4(r+4), always D1.D2
CheckResult check_nonexistence();               // simple cyclic, Veronese parity, Z4 D1 != 0
CheckResult check_global_consistency(const ExpectedTables& tables);
CheckResult check_ruling_swap_closure();        // S(1,1) swap closure and links
CheckResult check_unboundedness();              // q and p_g grow without bound
CheckResult check_branch_existence();           // reduced-member certificates per case
CheckResult check_mutation_sensitivity(const ExpectedTables& tables);

std::vector<CheckResult> run_all_checks(const ExpectedTables& tables);

}  // namespace covercraft
