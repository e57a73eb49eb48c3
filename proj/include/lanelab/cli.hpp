// cli.hpp -- command-line surface and the sweep engine.
#pragma once

#include <string>
#include <vector>

#include "lanelab/csvio.hpp"

namespace lanelab::cli {

// Full command dispatch; argv excludes the program name.
// Exit codes: 0 success, 1 check failure or numerical error, 2 usage errors.
int run(const std::vector<std::string>& argv);

// Critical-dimension rows for every input row (crossed with n_values when
// non-empty), evaluated with up to `jobs` workers; output is assembled in
// input order and is byte-identical for any job count.
std::string sweep_to_string(const std::vector<csvio::SweepRow>& rows,
                            const std::vector<double>& n_values, int jobs);

}  // namespace lanelab::cli
