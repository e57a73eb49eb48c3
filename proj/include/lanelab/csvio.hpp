// csvio.hpp -- CSV conventions shared by the CLI: header row, comma
// separator, '#' comment lines, 17-significant-digit scientific notation.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lanelab::csvio {

// One number, 17 significant digits, scientific notation.
std::string num(double x);
// Empty string for an absent value.
std::string num(const std::optional<double>& x);

struct SweepRow {
    double p = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
};

// Parses "p,alpha,beta" CSV text: header required, '#' lines skipped,
// each row validated (p > 1, alpha > -4, beta >= 0).  Throws ParseError
// with the 1-based line number.
std::vector<SweepRow> parse_sweep(const std::string& text);

}  // namespace lanelab::csvio
