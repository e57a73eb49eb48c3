// csvio.cpp

#include "lanelab/csvio.hpp"

#include <cstdio>
#include <sstream>

#include "lanelab/errors.hpp"

namespace lanelab::csvio {

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", x);
    return buf;
}

std::string num(const std::optional<double>& x) { return x ? num(*x) : std::string(); }

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<SweepRow> parse_sweep(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!have_header) {
            const auto cells = split(t);
            if (cells.size() != 3 || trim(cells[0]) != "p" || trim(cells[1]) != "alpha" ||
                trim(cells[2]) != "beta")
                throw ParseError(line_no, "expected header 'p,alpha,beta'");
            have_header = true;
            continue;
        }
        const auto cells = split(t);
        if (cells.size() != 3) throw ParseError(line_no, "expected 3 columns");
        SweepRow row;
        auto parse_cell = [&](const std::string& cell, const char* name) {
            try {
                std::size_t used = 0;
                const double v = std::stod(trim(cell), &used);
                if (used != trim(cell).size()) throw std::invalid_argument("trailing junk");
                return v;
            } catch (...) {
                throw ParseError(line_no, std::string("column ") + name + ": not a number");
            }
        };
        row.p = parse_cell(cells[0], "p");
        row.alpha = parse_cell(cells[1], "alpha");
        row.beta = parse_cell(cells[2], "beta");
        if (!(row.p > 1.0)) throw ParseError(line_no, "column p: must be > 1");
        if (!(row.alpha > -4.0)) throw ParseError(line_no, "column alpha: must be > -4");
        if (!(row.beta >= 0.0)) throw ParseError(line_no, "column beta: must be >= 0");
        rows.push_back(row);
    }
    if (!have_header) throw ParseError(line_no, "missing header 'p,alpha,beta'");
    return rows;
}

}  // namespace lanelab::csvio
