#pragma once

#include <string>
#include <vector>

namespace cpq::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // failure context, empty on success
};

using Suite = std::vector<CheckResult>;

/// Identity suites, one per module. `ell` bounds the most expensive rank
/// where a rank range applies; each check clamps to the ranges its source
/// statement is quoted for.
Suite scalar_suite();
Suite combinatorics_suite();
Suite grassmann_suite(int ell_max);
Suite uqsl_suite(int ell_max);
Suite spectra_suite(int ell_max);
Suite sphere_suite(int ell_max);

Suite run_suite(const std::string& name, int ell_max);
bool all_passed(const Suite& s);

} // namespace cpq::verify
