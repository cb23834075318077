#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nearcurve/cli.hpp"
#include "nearcurve/config.hpp"

using namespace nearcurve;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "nearcurve-cli-test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << content;
  return path;
}

const char* kLine = R"({"degree": 1, "coefficients": ["0", "1/2"], "X": "2", "delta": "0"})";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("count") {
    const auto cfg = scratch("line.json", kLine);
    const Outcome o = invoke({"count", "--config", cfg.string()});
    REQUIRE(o.code == 0);
    const Json j = Json::parse(o.out);
    CHECK(j.at("S") == 2);
    CHECK(j.at("points").size() == 2);

    const Outcome lines = invoke({"count", "--config", cfg.string(), "--jsonl"});
    REQUIRE(lines.code == 0);
    CHECK(std::count(lines.out.begin(), lines.out.end(), '\n') == 2);
  }

  TEST_CASE("congruence") {
    const Outcome o = invoke({"congruence", "--poly", "0,0,1/4", "--interval", "0:7"});
    REQUIRE(o.code == 0);
    const Json j = Json::parse(o.out);
    CHECK(j.at("W") == 4);
    CHECK(j.at("q") == "4");
  }

  TEST_CASE("approx") {
    const Outcome o = invoke({"approx", "--alpha", "sqrt:2", "--smax", "12"});
    REQUIRE(o.code == 0);
    const Json j = Json::parse(o.out);
    CHECK(j.at("best").at("r") == "17");
    CHECK(j.at("best").at("s") == "12");

    const Outcome b = invoke({"approx", "--alpha", "sqrt:2", "--badly", "--c1", "1/3", "--degree", "1", "--s-range", "1:100"});
    REQUIRE(b.code == 0);
    CHECK(Json::parse(b.out).at("verdict") == "PASS");
  }

  TEST_CASE("fit and decompose from points") {
    const Outcome f = invoke({"fit", "--points", "1:1,2:4,3:9,4:7,5:25", "--degree", "2"});
    REQUIRE(f.code == 0);
    CHECK(Json::parse(f.out).at("R") == 4);

    const Outcome d = invoke({"decompose", "--points", "2:1,4:2,6:3,8:4", "--degree", "1"});
    REQUIRE(d.code == 0);
    const Json j = Json::parse(d.out);
    CHECK(j.at("decomposition").at("groups").at(0).at("kind") == "MAJOR_ARC");
  }

  TEST_CASE("verify round trip") {
    const auto cfg = scratch("line-verify.json", kLine);
    const auto report = std::filesystem::temp_directory_path() / "nearcurve-cli-test" / "report.json";
    REQUIRE(invoke({"verify", "--config", cfg.string(), "--out", report.string()}).code == 0);
    const Outcome again = invoke({"verify", "--config", report.string()});
    REQUIRE(again.code == 0);
    std::ifstream in(report);
    std::stringstream first;
    first << in.rdbuf();
    CHECK(first.str() == again.out);
  }

  TEST_CASE("exit codes") {
    CHECK(invoke({"count"}).code == exit_code::input);
    CHECK(invoke({"bogus"}).code == exit_code::input);
    CHECK(invoke({"congruence", "--poly", "1/0", "--interval", "0:3"}).code == exit_code::input);
    CHECK(invoke({"count", "--config", "/nonexistent/file.json"}).code == exit_code::input);
    const auto bad = scratch("bad-delta.json", R"({"degree": 1, "coefficients": ["0", "1"], "X": "2", "delta": "1/2"})");
    CHECK(invoke({"count", "--config", bad.string()}).code == exit_code::input);
    const auto wide = scratch(
        "wide.json",
        R"({"degree": 1, "mode": "interval", "coefficients": ["[-1/1000,1/1000]", "1"], "X": "2", "delta": "0"})");
    const Outcome o = invoke({"count", "--config", wide.string()});
    CHECK(o.code == exit_code::certification);
    CHECK(!o.err.empty());
    CHECK(invoke({"approx", "--alpha", "[9/10,11/10]", "--smax", "5"}).code == exit_code::certification);
    // a gap violation on hand-made points is an invariant failure
    CHECK(invoke({"decompose", "--points", "0:0,1:0,2:1", "--degree", "1", "--delta", "1/1000"}).code ==
          exit_code::invariant);
  }
}
