#ifndef CMACR_SELFTEST_HPP
#define CMACR_SELFTEST_HPP

#include <string>
#include <vector>

// Built-in oracle cross-checks runnable from the CLI: the binary closed forms
// against the exhaustive channel oracle, the grid optimizer against a dense
// brute-force grid, and the region-containment suite.

namespace cmacr {

struct SelftestOptions {
    bool verbose = false;
    // Fault-injection hook: offsets the closed-form entropy inside the binary
    // check so a broken toolchain or a perturbed build is caught.
    double perturb_hb = 0.0;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    double elapsed_s = 0.0;
    std::string detail;
};

std::vector<CheckResult> run_selftest(const SelftestOptions& opt);

}  // namespace cmacr

#endif
