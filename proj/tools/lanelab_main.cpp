// lanelab_main.cpp -- CLI entry point.

#include <string>
#include <vector>

#include "lanelab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lanelab::cli::run(args);
}
