#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lanelab/cli.hpp"
#include "lanelab/csvio.hpp"
#include "lanelab/errors.hpp"

using namespace lanelab;

TEST_CASE("csv number formatting") {
    CHECK(csvio::num(1.0) == "1.0000000000000000e+00");
    CHECK(csvio::num(std::optional<double>{}) == "");
    // 17 significant digits round-trip
    const double x = 18.159295506634052;
    CHECK(std::stod(csvio::num(x)) == x);
}

TEST_CASE("sweep file parsing") {
    const auto rows = csvio::parse_sweep("p,alpha,beta\n3,0,0\n");
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].p == 3.0);

    CHECK_THROWS_AS(csvio::parse_sweep("p,alpha,beta\n0.5,0,0\n"), ParseError);
    try {
        csvio::parse_sweep("p,alpha,beta\n0.5,0,0\n");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }

    const auto with_comment = csvio::parse_sweep(
        "# sweep input\np,alpha,beta\n3,0,0\n# midway comment\n2,1,0.5\n");
    CHECK(with_comment.size() == 2);

    CHECK_THROWS_AS(csvio::parse_sweep("a,b,c\n1,2,3\n"), ParseError);
    CHECK_THROWS_AS(csvio::parse_sweep("p,alpha,beta\n3,0\n"), ParseError);
    CHECK_THROWS_AS(csvio::parse_sweep("p,alpha,beta\n3,zzz,0\n"), ParseError);
}

TEST_CASE("sweep engine is deterministic across job counts") {
    std::vector<csvio::SweepRow> rows;
    for (double p : {2.0, 3.0, 5.0})
        for (double b : {0.0, 1.0}) rows.push_back({p, 0.0, b});
    const std::string s1 = cli::sweep_to_string(rows, {10.0, 12.0}, 1);
    const std::string s3 = cli::sweep_to_string(rows, {10.0, 12.0}, 3);
    CHECK(s1 == s3);
    CHECK(s1.rfind("p,alpha,beta,N,regime,bracket_lo,bracket_hi,n_crit,cowan,fazly", 0) == 0);
    // one header + 6 rows x 2 N values
    CHECK(std::count(s1.begin(), s1.end(), '\n') == 13);

    const std::string flat = cli::sweep_to_string(rows, {}, 2);
    CHECK(flat.rfind("p,alpha,beta,bracket_lo,bracket_hi,n_crit,cowan,fazly", 0) == 0);
    CHECK(std::count(flat.begin(), flat.end(), '\n') == 7);
}

TEST_CASE("cli subcommands") {
    CHECK(cli::run({"critdim", "--p", "3", "--alpha", "0", "--beta", "0"}) == 0);
    CHECK(cli::run({"classify", "--N", "8", "--p", "3", "--alpha", "0", "--beta", "0"}) == 0);
    CHECK(cli::run({"nonsense"}) == 2);
    CHECK(cli::run({"critdim", "--p", "0.5", "--alpha", "0", "--beta", "0"}) == 2);
    CHECK(cli::run({"sweep", "--input", "/nonexistent/file.csv", "--output", "-"}) == 1);
}

TEST_CASE("cli shoot writes a readable dump") {
    const std::string path = "/tmp/lanelab_test_shoot.csv";
    CHECK(cli::run({"shoot", "--N", "12", "--p", "3", "--alpha", "0", "--beta", "0", "--a",
                    "1", "--b", "0.1", "--r-max", "2", "--points", "64", "--out", path}) == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str().find("termination") != std::string::npos);
    CHECK(buf.str().find("r,f_k0,fp_k0,fpp_k0") != std::string::npos);
    std::remove(path.c_str());
}
