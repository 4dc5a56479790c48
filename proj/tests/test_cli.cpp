#include <doctest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = popstack::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("sort") {
  CHECK(run({"sort", "--machine", "popstack", "463152"}).out == "413625\n");
  CHECK(run({"sort", "--machine", "popstack", "1 2 3"}).out == "1 2 3\n");
  CHECK(run({"sort", "--machine", "stack", "463152"}).out == "413256\n");
  CHECK(run({"sort", "--machine", "stack", "4,6,3,1,5,2"}).out == "4 1 3 2 5 6\n");
  CHECK(run({"sort", "--machine", "popstack", "--passes", "3", "463152"}).out == "123456\n");
  CHECK(run({"sort", "--machine", "flip", "110010"}).out == "101001\n");
  CHECK(run({"sort", "--machine", "popstack", "--k", "3", "463152"}).out == "100101\n");
  CHECK(run({"sort", "--machine", "flip", "--k", "3", "463152"}).out == "101001\n");
}

TEST_CASE("trace") {
  const auto r = run({"trace", "--machine", "popstack", "231"});
  CHECK(r.code == 0);
  CHECK(r.out == "0: 231\n1: 213\n2: 123\n");
  CHECK(run({"trace", "--machine", "popstack", "--passes", "1", "2 3 1"}).out ==
        "0: 2 3 1\n1: 2 1 3\n");
  CHECK(run({"trace", "--machine", "flip", "10"}).out == "0: 10\n1: 01\n");
}

TEST_CASE("reach") {
  CHECK(run({"reach", "--machine", "tumble", "110010"}).out ==
        "001101\n011001\n100101\n101001\n");
  CHECK(run({"reach", "--machine", "tumble", "--k", "3", "463152"}).out ==
        "001101\n011001\n100101\n101001\n");
  CHECK(run({"reach", "--machine", "stack", "231"}).out == "132\n213\n231\n312\n321\n");
  CHECK(run({"reach", "--machine", "popstack", "231"}).out == "132\n213\n231\n321\n");
  CHECK(run({"reach", "--machine", "popstack", "--count-only", "231"}).out == "4\n");
  CHECK(run({"reach", "--machine", "stack", "--passes", "0", "231"}).out == "231\n");
}

TEST_CASE("verify exit codes") {
  const auto ok = run({"verify", "theorem", "--n", "6", "--jobs", "2"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("status: pass") != std::string::npos);
  const auto json = run({"verify", "staircase", "--n", "4", "--format", "json"});
  CHECK(json.code == 0);
  CHECK(json.out.find("\"failures\": []") != std::string::npos);
  CHECK(run({"verify", "--list"}).out.find("worst-tumble") != std::string::npos);
  CHECK(run({"verify", "bogus"}).code == 2);
  CHECK(run({"verify", "theorem", "--n", "99"}).code == 2);
  CHECK(run({"verify", "staircase", "--format", "csv"}).code == 2);
}

TEST_CASE("count and histogram") {
  CHECK(run({"count", "--machine", "stack", "--n", "4", "--passes", "2"}).out ==
        "n,t,machine,count\n1,2,stack,1\n2,2,stack,2\n3,2,stack,6\n4,2,stack,22\n");
  CHECK(run({"count", "--machine", "popstack", "--n", "3", "--passes", "1", "--series"}).out ==
        "n,t,machine,count\n1,1,popstack,1\n2,1,popstack,2\n3,1,popstack,4\n");
  CHECK(run({"count", "--machine", "popstack", "--n", "2"}).out ==
        "n,t,machine,count\n1,0,popstack,1\n2,0,popstack,1\n2,1,popstack,2\n");
  CHECK(run({"histogram", "--machine", "popstack", "--n", "3"}).out ==
        "n,passes,count\n3,0,1\n3,1,3\n3,2,2\n");
  CHECK(run({"histogram", "--n", "5", "--sequence"}).out ==
        "n,passes,count\n1,0,1\n2,1,1\n3,2,2\n4,3,8\n5,4,32\n");
  const auto j1 = run({"histogram", "--n", "7", "--jobs", "1"});
  const auto j4 = run({"histogram", "--n", "7", "--jobs", "4"});
  CHECK(j1.out == j4.out);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"sort"}).code == 2);
  CHECK(run({"sort", "1 1 2"}).code == 2);
  CHECK(run({"sort", ""}).code == 2);
  CHECK(run({"sort", "--machine", "tumble", "10"}).code == 2);
  CHECK(run({"sort", "--machine", "flip", "231"}).code == 2);
  CHECK(run({"sort", "--machine", "stack", "0101"}).code == 2);
  CHECK(run({"sort", "--machine", "warp", "12"}).code == 2);
  CHECK(run({"count", "--machine", "flip", "--n", "3"}).code == 2);
  CHECK(run({"histogram", "--n", "3", "--jobs", "0"}).code == 2);
  const auto r = run({"sort", "--machine", "popstack", "1 2 2"});
  CHECK_FALSE(r.err.empty());
}
