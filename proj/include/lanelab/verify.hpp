// verify.hpp -- the invariant and acceptance check suite.
#pragma once

#include <string>
#include <vector>

namespace lanelab::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs every check; quick mode shrinks the randomized counts and grids.
std::vector<CheckResult> run_suite(bool quick);

}  // namespace lanelab::verify
