#include <doctest.h>

#include <sstream>

#include "polarcg/cli.hpp"
#include "polarcg/table.hpp"

using namespace polarcg;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run_command(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("cg command") {
    const auto stretched =
        run({"cg", "--j1", "1/2", "--j2", "1/2", "--j3", "1", "--m1", "1/2", "--m2", "1/2"});
    CHECK(stretched.code == 0);
    CHECK(stretched.out == "1\n");

    const auto with_decimal = run({"cg", "--j1", "1/2", "--j2", "1/2", "--j3", "1", "--m1",
                                   "1/2", "--m2", "-1/2", "--decimal", "6"});
    CHECK(with_decimal.code == 0);
    CHECK(with_decimal.out == "(1/1)*sqrt(1/2)\n0.707107\n");
}

TEST_CASE("threej command") {
    const auto result = run({"threej", "--row", "1,1,0", "--m", "0,0,0"});
    CHECK(result.code == 0);
    CHECK(result.out == "-(1/1)*sqrt(1/3)\n");
}

TEST_CASE("sixj and ninej commands") {
    const auto six = run({"sixj", "--top", "1/2,1/2,1", "--bottom", "1/2,1/2,1"});
    CHECK(six.code == 0);
    CHECK(six.out == "1/6\n");

    // {1/2 1/2 1; 1/2 1/2 1; 1 1 0} = -1/(3 sqrt(9)) {1/2 1/2 1; 1/2 1/2 1} = -1/18
    const auto nine =
        run({"ninej", "--row1", "1/2,1/2,1", "--row2", "1/2,1/2,1", "--row3", "1,1,0"});
    CHECK(nine.code == 0);
    CHECK(nine.out == "-1/18\n");
}

TEST_CASE("passage command") {
    const auto abs_route = run({"passage", "--j1", "1/2", "--m1", "1/2", "--j2", "1/2", "--m2",
                                "1/2", "--j3", "1", "--route", "abs"});
    CHECK(abs_route.code == 0);
    CHECK(abs_route.out == "1\n");

    const auto printed = run({"passage", "--j1", "1/2", "--m1", "1/2", "--j2", "1/2", "--m2",
                              "1/2", "--j3", "1", "--route", "signed", "--phase-convention",
                              "printed"});
    CHECK(printed.code == 0);
}

TEST_CASE("bad input produces exit code 2 and a diagnostic") {
    const auto bad_value =
        run({"cg", "--j1", "x", "--j2", "1/2", "--j3", "1", "--m1", "1/2", "--m2", "1/2"});
    CHECK(bad_value.code == 2);
    CHECK(bad_value.err.find("half-integer") != std::string::npos);

    const auto bad_triangle =
        run({"cg", "--j1", "1/2", "--j2", "1/2", "--j3", "3", "--m1", "1/2", "--m2", "1/2"});
    CHECK(bad_triangle.code == 2);
    CHECK(bad_triangle.err.find("triangle") != std::string::npos);

    const auto bad_m =
        run({"cg", "--j1", "1/2", "--j2", "1/2", "--j3", "1", "--m1", "3/2", "--m2", "-1/2"});
    CHECK(bad_m.code == 2);

    const auto no_sub = run({});
    CHECK(no_sub.code == 2);
}

TEST_CASE("table command determinism and format parity") {
    const auto csv1 = run({"table", "--what", "cg", "--max-2j", "2", "--format", "csv"});
    const auto csv2 = run({"table", "--what", "cg", "--max-2j", "2", "--format", "csv"});
    CHECK(csv1.code == 0);
    CHECK(csv1.out == csv2.out);

    const auto threaded =
        run({"table", "--what", "cg", "--max-2j", "2", "--format", "csv", "--threads", "4"});
    CHECK(threaded.out == csv1.out);

    const auto json = run({"table", "--what", "cg", "--max-2j", "2", "--format", "json"});
    CHECK(json.code == 0);
    // same value strings in both formats
    CHECK(json.out.find("(1/1)*sqrt(1/2)") != std::string::npos);
    CHECK(csv1.out.find("(1/1)*sqrt(1/2)") != std::string::npos);

    // single row at max-2j 0
    const auto trivial = run({"table", "--what", "cg", "--max-2j", "0"});
    CHECK(trivial.out ==
          "two_j1,two_j2,two_j3,two_m1,two_m2,two_m3,value,value_squared\n0,0,0,0,0,0,1,1\n");

    // every row's squared value is a plain rational
    std::istringstream rows(csv1.out);
    std::string line;
    std::getline(rows, line); // header
    long count = 0;
    while (std::getline(rows, line)) {
        const std::string squared = line.substr(line.rfind(',') + 1);
        CHECK(squared.find("sqrt") == std::string::npos);
        ++count;
    }
    CHECK(count > 10);
}

TEST_CASE("gf-expand fixture dumps") {
    const auto gf3j = run({"gf-expand", "--which", "3j", "--degree", "3"});
    CHECK(gf3j.code == 0);
    CHECK(gf3j.out.find("\"vars\"") != std::string::npos);

    const auto gfcg = run({"gf-expand", "--which", "cg", "--degree", "2", "--j3", "1", "--am1",
                           "1/2", "--am2", "1/2"});
    CHECK(gfcg.code == 0);
    CHECK(gfcg.out.find("\"integral\"") != std::string::npos);

    const auto gfrec = run({"gf-expand", "--which", "recoupling", "--degree", "5"});
    CHECK(gfrec.code == 0);
    CHECK(gfrec.out.find("al3") != std::string::npos);

    const auto missing = run({"gf-expand", "--which", "cg", "--degree", "2"});
    CHECK(missing.code == 2);
}

TEST_CASE("verify command") {
    const auto small = run({"verify", "orthogonality", "--max-2j", "2"});
    CHECK(small.code == 0);
    CHECK(small.out.find("suite orthogonality") != std::string::npos);

    const auto unknown = run({"verify", "bogus"});
    CHECK(unknown.code == 2);

    const auto reconcile = run({"verify", "reconcile", "--max-2j", "2"});
    CHECK(reconcile.code == 0);
}
