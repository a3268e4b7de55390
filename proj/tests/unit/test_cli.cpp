#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "arbor/cli.hpp"
#include "arbor/tree.hpp"

using namespace arbor;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string temp_json(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("enumerate") {
    const Run r = run({"trees", "enumerate", "--vertices", "5"});
    CHECK(r.code == kExitOk);
    const auto out = lines(r.out);
    CHECK(out.size() == 9);
    for (const auto& l : out) CHECK(Tree::parse(l).code() == l);
    CHECK(lines(run({"trees", "enumerate", "--edges", "2"}).out).size() == 2);
  }

  TEST_CASE("antipode example") {
    const Run r = run({"hopf", "antipode", "--variant", "H_sigma", "[[[]]]"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "−[[[]]] + 2·[[]]·[[]]\n");
  }

  TEST_CASE("omega table") {
    const Run r = run({"characters", "table", "--name", "omega", "--max-vertices", "5", "--format", "csv"});
    CHECK(r.code == kExitOk);
    const auto out = lines(r.out);
    REQUIRE(out.size() == 18);
    CHECK(out[0] == "tree,sigma,omega,omega/sigma");
    CHECK(out[17] == "[[][][][]],24,-1/30,-1/720");
  }

  TEST_CASE("json output parses") {
    const Run r = run({"hopf", "coproduct", "--variant", "CK", "[[]]", "--format", "json"});
    CHECK(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["arity"] == 2);
    CHECK(j["terms"].size() == 3);
  }

  TEST_CASE("stats on several forests") {
    const Run r = run({"trees", "stats", "[[][]]", "[[]]·[]", "--format", "csv"});
    CHECK(r.code == kExitOk);
    CHECK(lines(r.out).size() == 3);
    CHECK(lines(r.out)[1] == "[[][]],3,2,2,3,1");
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"trees", "enumerate", "--vertices", "10"}).code == kExitUsage);
    CHECK(run({"hopf", "coproduct", "[["}).code == kExitUsage);
    CHECK(run({"hopf", "coproduct", "--variant", "X", "[]"}).code == kExitUsage);
    CHECK(run({"verify", "nosuch"}).code == kExitUsage);
    CHECK(run({"trees", "enumerate", "--format", "xml"}).code == kExitUsage);
    CHECK(run({"bseries", "verify-substitution", "--field", "y", "--alpha", "/nonexistent.json"}).code == kExitUsage);
  }

  TEST_CASE("expensive degrees warn") {
    const Run r = run({"trees", "enumerate", "--vertices", "7"});
    CHECK(r.code == kExitOk);
    CHECK(r.err.find("warning") != std::string::npos);
  }

  TEST_CASE("qshuffle commands") {
    CHECK(run({"qshuffle", "qsh", "2", "2", "--r", "1"}).out == "6\n");
    CHECK(run({"qshuffle", "lambda", "[[][]]"}).out == "2x^3 + x^2\n");
  }

  TEST_CASE("prelie commands") {
    CHECK(run({"prelie", "graft", "[]", "[[]]", "--normalized"}).out == "[[[]]] + [[][]]\n");
    CHECK(run({"prelie", "magnus", "--max-vertices", "3"}).out == "[] − 1/2·[[]] + 1/3·[[[]]] + 1/12·[[][]]\n");
  }

  TEST_CASE("verification subcommands") {
    const Run r = run({"verify", "trees", "--max-degree", "4"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(run({"characters", "verify", "chv", "--max-degree", "3"}).code == kExitOk);
    CHECK(run({"hopf", "verify-coassoc", "--variant", "CK", "--max-degree", "4"}).code == kExitOk);
  }

  TEST_CASE("bseries checks") {
    const std::string alpha = temp_json("arbor_alpha.json", R"({"[]": "1", "[[]]": "1/2", "[[][]]": -3})");
    Run r = run({"bseries", "verify-substitution", "--dim", "1", "--field", "y^2", "--order", "4", "--alpha", alpha});
    CHECK(r.code == kExitOk);
    r = run({"bseries", "verify-composition", "--dim", "2", "--field", "y1*y2", "--field", "y1^2 - y2", "--order", "3",
             "--alpha", alpha, "--format", "json"});
    CHECK(r.code == kExitOk);
    CHECK(nlohmann::json::parse(r.out)["ok"] == true);
    const std::string bad = temp_json("arbor_bad.json", R"({"[]": "2"})");
    CHECK(run({"bseries", "verify-substitution", "--field", "y", "--alpha", bad}).code == kExitUsage);
  }
}
