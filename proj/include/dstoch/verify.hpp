#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dstoch {

struct CheckResult {
    std::string name;
    bool passed = false;
    bool skipped = false;  // out of range for the requested max-n; counts as passed
    std::string detail;
};

struct VerifyOptions {
    int max_n = 4;          // cap for the enumeration-heavy checks
    std::uint64_t seed = 1; // seed for the sampled checks
    // Deliberately fails the named check; used to exercise the reporting
    // path. Empty in normal operation.
    std::string inject_failure;
};

// Runs the whole identity/reproduction suite: counting, catalogs, rank law,
// ideal families, meet/join identities, lattice laws, absorption,
// irreducibility, D-witnesses, and closure. Pure-counting checks always run
// to their full range; everything that enumerates matrices is clipped at
// max_n.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace dstoch
