#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = qlab::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("expand") {
    auto r = run({"expand", "f2/f1^2", "--order", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 2 4 8 14 24\n");
    CHECK(run({"expand", "q", "--order", "3"}).out == "0 1 0\n");
    CHECK(run({"expand", "prefA", "--order", "9"}).out == "1 -1 1 -1 2 -3 4 -5 7\n");
    CHECK(run({"expand", "pbar", "--order", "6", "--mod", "4"}).out == "1 2 0 0 2 0\n");
    CHECK(run({"expand", "modd:-2:1", "--order", "10"}).out == "0 1 2 4 4 6 8 8 8 13\n");
    CHECK(run({"expand", "coeff:1:1", "--order", "5"}).out == "0 1 2 0 -4\n");
    r = run({"expand", "f1", "--order", "3", "--format", "csv"});
    CHECK(r.out == "n,value\n0,1\n1,-1\n2,-1\n");
    r = run({"expand", "f1", "--order", "3", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["coeffs"] == nlohmann::json::array({1, -1, -1}));
    CHECK(j["order"] == 3);
  }

  TEST_CASE("expand errors") {
    auto r = run({"expand", "q^"});
    CHECK(r.code == 2);
    CHECK(r.err.find("offset 2") != std::string::npos);
    CHECK(run({"expand", "zeta(q)"}).code == 2);
    CHECK(run({"expand", "1/q"}).code == 2);
    CHECK(run({"expand", "q", "--format", "xml"}).code != 0);
    CHECK(run({}).code != 0);
  }

  TEST_CASE("modd") {
    CHECK(run({"modd", "-a", "-2", "-t", "1", "-n", "9"}).out == "13\n");
    CHECK(run({"modd", "-a", "0", "-t", "1", "-n", "13"}).out == "2\n");
    const auto r = run({"modd", "-a", "1", "-t", "2", "-n", "4", "--method", "all"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 1 1\n");
    CHECK(run({"modd", "-a", "2", "-t", "1", "-n", "9", "--method", "direct"}).out == "13\n");
    CHECK(run({"modd", "-a", "2", "-t", "1", "-n", "3", "--method", "explicit"}).code == 2);
    CHECK(run({"modd", "-a", "3", "-t", "1", "-n", "3", "--method", "direct"}).code == 2);
  }

  TEST_CASE("verify") {
    auto r = run({"verify", "--family", "vm2A-3", "--budget", "5000"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "pass");
    CHECK(j["ranges"]["max_arg"] == 5000);
    r = run({"verify", "--family", "ovc*", "--budget", "2000"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
    r = run({"verify", "--family", "vm2A-1", "--j", "3..4", "--budget", "3000"});
    CHECK(nlohmann::json::parse(r.out)["ranges"]["J"] == nlohmann::json::array({3, 4}));
    CHECK(run({"verify", "--family", "nope"}).code == 2);
    CHECK(run({"verify", "--family", "c1-3", "--budget", "10"}).code == 2);
  }

  TEST_CASE("lemmas") {
    const auto r = run({"lemmas", QLAB_FIXTURES, "--order", "100"});
    CHECK(r.code == 0);
    CHECK(r.out.find("16/16 pass") != std::string::npos);
    CHECK(run({"lemmas", "/nonexistent.qx"}).code == 2);
  }

  TEST_CASE("table and list") {
    auto r = run({"table", "--seq", "prefA", "--n", "0..23", "--mod", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n,value\n0,1\n1,1\n2,1\n", 0) == 0);
    CHECK(r.out.find("\n13,0\n") != std::string::npos);
    CHECK(run({"table", "--seq", "pbar", "--n", "3..5"}).out == "n,value\n3,8\n4,14\n5,24\n");
    CHECK(run({"table", "--seq", "pbar", "--n", "5..3"}).code == 2);
    r = run({"list"});
    CHECK(r.code == 0);
    CHECK(r.out.find("62 families") != std::string::npos);
    CHECK(r.out.find("vm2A-3\t") != std::string::npos);
  }

  TEST_CASE("thread flag") {
    CHECK(run({"--threads", "1", "expand", "q", "--order", "2"}).out == "0 1\n");
  }
}
