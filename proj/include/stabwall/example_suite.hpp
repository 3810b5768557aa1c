#pragma once

#include "stabwall/slice.hpp"

namespace stabwall {

// Reproduction of the rank-one worked example family: on the K3 surface with
// Pic = ZH, (H^2) = n+2 (n even), the ideal-sheaf class (1, 0, -n) and the
// exponential class e^{-2H} span a wall that passes through
// (-1, t^2 = 2/(H^2)), and the surrounding Mukai-vector ledger (the rank-one
// wall-crossing triangles, the spherical class (n/2+2, -H, 1) and the
// isotropic class (n/2+1, H, 1)) balances exactly.
struct ExampleSuiteResult {
    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Check> checks;
    Wall wall;
    bool all_pass;
};

ExampleSuiteResult run_example_suite(const Int& n);

}  // namespace stabwall
