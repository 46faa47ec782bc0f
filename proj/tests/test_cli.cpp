#include "debell/cli.hpp"

#include "doctest.h"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "debell");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = debell::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented invocations") {
  CHECK(run({"stirling", "--n", "5", "--k", "3", "--alpha", "0", "--beta", "1", "--gamma", "0"}).out == "25\n");
  CHECK(run({"rderange", "--k", "2", "--r", "2"}).out == "2\n");
  CHECK(run({"bell", "--n", "3", "--r", "0", "--lambda", "1", "--x", "1", "--alpha", "0", "--beta", "1", "--gamma",
             "0"})
            .out == "5\n");
}

TEST_CASE("routes agree through the CLI") {
  const std::vector<std::string> p{"--n", "5", "--alpha", "1", "--beta", "2", "--gamma", "3/2", "--x", "2", "--r", "1"};
  auto with = [&](std::string cmd, std::vector<std::string> extra) {
    std::vector<std::string> a{cmd};
    a.insert(a.end(), p.begin(), p.end());
    a.insert(a.end(), extra.begin(), extra.end());
    return run(a);
  };
  const std::string egf = with("bell", {}).out;
  for (const char* route : {"lambda1", "closed", "convolution"}) CHECK(with("bell", {"--route", route}).out == egf);
  CHECK(with("omega", {"--route", "egf"}).out == with("omega", {}).out);
  CHECK(run({"stirling", "--n", "6", "--k", "2", "--alpha", "1/2", "--beta", "3", "--gamma", "-1", "--route", "egf"})
            .out == run({"stirling", "--n", "6", "--k", "2", "--alpha", "1/2", "--beta", "3", "--gamma", "-1"}).out);
  CHECK(run({"rderange", "--k", "5", "--r", "2", "--route", "rec", "--s", "1"}).out ==
        run({"rderange", "--k", "5", "--r", "2"}).out);
  CHECK(run({"rderange", "--k", "4", "--route", "closed"}).out == "9\n");
}

TEST_CASE("output formats") {
  const auto j = run({"bell", "--n", "3", "--format", "json"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["command"] == "bell");
  CHECK(doc["value"] == "5");
  CHECK(doc["n"] == "3");
  const auto c = run({"rderange", "--k", "2", "--r", "2", "--format", "csv"});
  CHECK(c.out == "k,r,route,value\n2,2,egf,2\n");
  CHECK(run({"bell", "--n", "4", "--alpha", "1/3", "--beta", "2/3", "--gamma", "1", "--x", "1/2"}).out ==
        run({"bell", "--n", "4", "--alpha", "1/3", "--beta", "2/3", "--gamma", "1", "--x", "1/2"}).out);
}

TEST_CASE("table") {
  const auto t = run({"table", "--max-n", "4", "--r", "1"});
  CHECK(t.code == 0);
  CHECK(t.out == "n,value\n0,0\n1,1\n2,3\n3,16\n4,113\n");
}

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "--family", "ordered", "--n", "3"}).out == "13\n");
  CHECK(run({"enumerate", "--family", "r-derangements", "--k", "2", "--r", "2", "--list"}).out ==
        "(1,3)(2,4)\n(1,4)(2,3)\n2\n");
  CHECK(run({"enumerate", "--family", "set-partitions", "--n", "12"}).code == 1);
}

TEST_CASE("asymp") {
  const auto a = run({"asymp", "--n", "1", "--m", "0", "--gamma", "1", "--deltas", "10,100"});
  CHECK(a.code == 0);
  CHECK(a.out == "delta,estimate,exact,rel_error,status\n10,10,10,0,ok\n100,100,100,0,ok\n");
}

TEST_CASE("verify") {
  const auto v = run({"verify", "--claims", "T5", "--max-n", "3", "--alpha", "0", "--lambda", "1", "--format", "csv"});
  CHECK(v.code == 0);
  CHECK(v.out.rfind("claim,alpha", 0) == 0);
  CHECK(v.out.find("UNEQUAL") == std::string::npos);
  const auto s = run({"verify", "--claims", "T33", "--max-n", "3", "--alpha", "0", "--summary"});
  CHECK(s.code == 0);
  CHECK(nlohmann::json::parse(s.out).contains("T33"));
  CHECK(run({"verify", "--claims", "BOGUS"}).code == 2);
}

TEST_CASE("--out writes a file") {
  const std::string path = "cli_test_out.txt";
  CHECK(run({"rderange", "--k", "3", "--r", "1", "--out", path}).out.empty());
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == "9\n");
  std::remove(path.c_str());
}

TEST_CASE("errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"bell"}).code == 2);
  const auto bad = run({"bell", "--n", "2", "--alpha", "1/0"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"bell", "--n", "2", "--format", "yaml"}).code == 2);
  CHECK(run({"stirling", "--n", "2", "--k", "1", "--beta", "0", "--route", "egf"}).code == 1);
  CHECK(run({"bell", "--n", "2", "--lambda", "2", "--route", "lambda1"}).code == 1);
  CHECK(run({"rderange", "--k", "2", "--r", "2", "--s", "3", "--route", "rec"}).code == 1);
}
