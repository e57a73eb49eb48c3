// acceptance_main.cpp -- runs the full invariant/acceptance suite and prints
// one PASS/FAIL line per check.

#include <cstring>
#include <iostream>

#include "lanelab/verify.hpp"

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    const auto results = lanelab::verify::run_suite(quick);
    int failed = 0;
    for (const auto& c : results) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " -- " << c.detail << "\n";
        if (!c.pass) ++failed;
    }
    if (failed) {
        std::cout << "FAILED " << failed << " of " << results.size() << " checks\n";
        return 1;
    }
    std::cout << "all " << results.size() << " checks passed\n";
    return 0;
}
