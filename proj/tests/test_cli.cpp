#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gfkit/cli.hpp"
#include "gfkit/json_io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = gfkit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify exit codes") {
  const auto r = run({"verify", "67", "--n-max", "20"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ID67 [n_max=20]: PASS (21 instances)") != std::string::npos);

  const auto all = run({"verify", "all", "--n-max", "12"});
  CHECK(all.code == 0);
  for (auto id : gfkit::kAllIdentities) {
    CHECK(all.out.find(std::string(gfkit::to_string(id)) + " [") != std::string::npos);
  }

  const auto json = run({"verify", "85R", "--n-max", "5", "--format", "json"});
  REQUIRE(json.code == 0);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j.at("identity") == "ID85R");
  CHECK(j.at("pass") == true);
  CHECK(j.at("failures").empty());
  CHECK(j.at("range").at("n_max") == 5);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"table", "stirling3"}).code == 2);
  CHECK(run({"verify", "99"}).code == 2);
  CHECK(run({"table", "F", "--m", "1/0"}).code == 2);
  CHECK(run({"table", "F", "--m", "abc"}).code == 2);
  CHECK(run({"remainder", "exp"}).code == 2);  // --r missing
  CHECK(run({"remainder", "sin", "--r", "1"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"series", "exp", "--format", "yaml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("computation errors exit 1") {
  const auto r = run({"table", "howard-A", "--r", "0"});
  CHECK(r.code == 1);
  CHECK(r.err.find("r >= 1") != std::string::npos);
  CHECK(run({"table", "rstirling2", "--r", "1/2"}).code == 1);
}

TEST_CASE("table output") {
  const auto text = run({"table", "stirling2", "--m-max", "5"});
  CHECK(text.code == 0);
  CHECK(text.out.find("STIRLING2(4, 2) = 7\n") != std::string::npos);

  const auto csv = run({"table", "stirling2", "--m-max", "5", "--format", "csv"});
  CHECK(csv.out.find("\n4,2,7\n") != std::string::npos);

  const auto f = run({"table", "F", "--r", "1/3", "--m", "1/2", "--k-max", "3", "--format", "json"});
  REQUIRE(f.code == 0);
  const auto arr = nlohmann::json::parse(f.out);
  REQUIRE(arr.size() == 4);
  CHECK(arr[0].at("indices") == nlohmann::json::parse(R"(["1/3", 0, "1/2", 0])"));
  CHECK(arr[0].at("value") == "1");
  CHECK(arr[2].at("value") == "127/144");
}

TEST_CASE("table JSON round-trips through the entry schema") {
  for (const char* family : {"stirling1", "bernoulli", "howard-S", "howard-A", "rstirling2", "Q"}) {
    CAPTURE(family);
    const auto r = run({"table", family, "--k-max", "6", "--m-max", "3", "--r", "1", "--t", "2/3",
                        "--m", "-1/2", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto arr = nlohmann::json::parse(r.out);
    REQUIRE(!arr.empty());
    for (const auto& row : arr) {
      const gfkit::SequenceEntry e = gfkit::entry_from_json(row);
      CHECK(gfkit::to_json(e) == row);
    }
  }
  CHECK_THROWS_AS(gfkit::entry_from_json(nlohmann::json::parse(R"({"family":"NOPE","indices":[],"value":"1"})")),
                  gfkit::ParseError);
  CHECK_THROWS_AS(gfkit::entry_from_json(nlohmann::json::parse(R"({"family":"BERNOULLI"})")),
                  gfkit::ParseError);
}

TEST_CASE("remainder and series output") {
  const auto r = run({"remainder", "exp", "--r", "1", "--order", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 + 1/3*x + 1/12*x^2 + 1/60*x^3 (order 3)\n");

  const auto l = run({"remainder", "log", "--r", "1", "--order", "3", "--format", "json"});
  CHECK(l.out == "{\"coeffs\":[\"1\",\"-2/3\",\"1/2\",\"-2/5\"],\"order\":3}\n");
  const auto back = gfkit::series_from_json(nlohmann::json::parse(l.out));
  CHECK(back.order() == 3);
  CHECK(back[3] == gfkit::Rational::parse("-2/5"));

  const auto shifted = run({"remainder", "log1p-over-x", "--r", "0", "--order", "3"});
  CHECK(shifted.out == "1 + -2/3*x + 1/2*x^2 + -2/5*x^3 (order 3)\n");

  const auto deflt = run({"remainder", "exp", "--r", "0"});
  CHECK(deflt.out.find("(order 64)") != std::string::npos);

  CHECK(run({"series", "log-geometric", "--order", "3"}).out == "0 + 1*x + 1/2*x^2 + 1/3*x^3 (order 3)\n");
  CHECK(run({"series", "monomial", "--c", "-3/4", "--degree", "2", "--order", "2"}).out ==
        "0 + 0*x + -3/4*x^2 (order 2)\n");
  CHECK(run({"series", "geometric-pow", "--r", "2", "--order", "3", "--format", "csv"}).out ==
        "0,1\n1,2\n2,3\n3,4\n");
}

TEST_CASE("output is deterministic and --out writes a file") {
  const std::vector<std::string> args{"table", "howard-s", "--r", "1", "--m-max", "3", "--k-max", "9"};
  CHECK(run(args).out == run(args).out);

  const std::string path = "gfkit_cli_test_out.txt";
  auto with_out = args;
  with_out.insert(with_out.end(), {"--out", path});
  const auto r = run(with_out);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream contents;
  contents << in.rdbuf();
  CHECK(contents.str() == run(args).out);
  std::remove(path.c_str());

  CHECK(run({"table", "bernoulli", "--out", "/nonexistent-dir/x.txt"}).code == 1);
}
