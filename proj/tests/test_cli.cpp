#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
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
  const int code = toric::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("toric_cli_test_" + name);
  std::ofstream(path) << text;
  return path;
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("cli ucd") {
  auto r = run({"ucd", "7", "4", "--minimal"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "[8,12,13,14,17,18,22,23,24]"));
  CHECK(contains(r.out, "count: 9"));
  CHECK(contains(run({"ucd", "13", "3", "--minimal"}).out, "[15,18,21,24,26,27,29,30,32,33,35,36]"));
  auto e = run({"ucd", "5", "1", "--procedure"});
  CHECK(contains(e.out, "procedure: []"));
  CHECK(contains(e.out, "count: 0"));
  CHECK(contains(run({"ucd", "7", "4", "--mirror"}).out, "[1,2,3,7,8,11,12,13,17]"));
  CHECK(run({"ucd", "1", "4"}).code == 2);
  CHECK(run({"ucd", "7", "x"}).code == 2);
  CHECK(run({"ucd", "7", "4", "--procedure", "--minimal"}).code == 2);
  CHECK(run({"ucd", "7", "4", "--frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("cli verify exit codes") {
  CHECK(run({"verify", "6", "4"}).code == 0);
  CHECK(run({"verify", "7", "4"}).code == 0);
  const auto empty = temp_file("empty.json", "[]");
  CHECK(run({"verify", "3", "2", "--plan", empty.string()}).code == 1);
  CHECK(run({"verify", "9", "7", "--budget", "10"}).code == 3);
  const auto bad = temp_file("bad.json", "{\"positions\": [3, 1]}");
  CHECK(run({"verify", "3", "2", "--plan", bad.string()}).code == 2);
  const auto far = temp_file("far.json", "[99]");
  CHECK(run({"verify", "3", "2", "--plan", far.string()}).code == 2);
  CHECK(run({"verify", "3", "2", "--plan", "/nonexistent/plan.json"}).code == 2);
  CHECK(run({"verify", "3", "2", "--budget", "0"}).code == 2);
}

TEST_CASE("cli plans round trip through json") {
  for (auto flags : std::vector<std::vector<std::string>>{{}, {"--procedure"}, {"--mirror"}}) {
    std::vector<std::string> args{"ucd", "5", "3", "--json"};
    args.insert(args.end(), flags.begin(), flags.end());
    auto r = run(args);
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["p"] == 5);
    CHECK(j["unknotting_number"] == 4);
    const auto path = temp_file("plan.json", r.out);
    // the procedure data is not enough to unknot K(5,3)
    CHECK(run({"verify", "5", "3", "--plan", path.string()}).code == (flags.size() && flags[0] == "--procedure" ? 1 : 0));
  }
  const auto wrong = temp_file("wrong.json", run({"ucd", "5", "2", "--json"}).out);
  CHECK(run({"verify", "5", "3", "--plan", wrong.string()}).code == 2);
}

TEST_CASE("cli certificates") {
  const auto cert = std::filesystem::temp_directory_path() / "toric_cli_test_cert.txt";
  std::filesystem::remove(cert);
  CHECK(run({"verify", "5", "3", "--emit-certificate", cert.string()}).code == 0);
  REQUIRE(std::filesystem::exists(cert));
  auto r = run({"verify", "5", "3", "--certificate", cert.string(), "--crossing-budget", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "checked"));
  CHECK(run({"verify", "5", "2", "--certificate", cert.string()}).code == 2);
  const auto junk = temp_file("junk_cert.txt", "start 2 : 1\nrotate 0\n");
  CHECK(run({"verify", "5", "3", "--certificate", junk.string()}).code == 2);
}

TEST_CASE("cli invariant") {
  CHECK(run({"invariant", "alexander", "--braid", "1 1 1", "--strands", "2"}).out == "t^2 - t + 1\n");
  CHECK(run({"invariant", "jones", "--braid", "1", "--strands", "2"}).out == "1\n");
  auto hopf = run({"invariant", "jones", "--braid", "1 1", "--strands", "2"});
  CHECK(hopf.code == 0);
  CHECK(hopf.out != "-t^(1/2) - t^(-1/2)\n");
  CHECK(run({"invariant", "alexander", "--braid", "1 1 1", "--strands", "2", "--canonical"}).out ==
        "1*t^0 + -1*t^1 + 1*t^2\n");
  auto j = nlohmann::json::parse(run({"invariant", "jones", "--braid", "1 1", "--strands", "2", "--json"}).out);
  CHECK(j["kind"] == "jones");
  CHECK(run({"invariant", "jones", "--braid", "1 q", "--strands", "2"}).code == 2);
  CHECK(run({"invariant", "jones", "--braid", "3", "--strands", "2"}).code == 2);
  CHECK(run({"invariant", "jones", "--braid", "1 1 1", "--strands", "2", "--budget", "2"}).code == 2);
  CHECK(run({"invariant", "signature", "--braid", "1", "--strands", "2"}).code == 2);
}

TEST_CASE("cli render") {
  auto a = run({"render", "7", "4", "--highlight", "minimal"});
  CHECK(a.code == 0);
  CHECK(a.out == run({"render", "7", "4", "--highlight", "minimal"}).out);
  std::size_t glyphs = 0, flipped = 0;
  for (auto pos = a.out.find("<g class=\"crossing"); pos != std::string::npos; pos = a.out.find("<g class=\"crossing", pos + 1)) {
    ++glyphs;
    flipped += a.out.compare(pos, 27, "<g class=\"crossing flipped\"") == 0;
  }
  CHECK(glyphs == 24);
  CHECK(flipped == 9);
  const auto path = std::filesystem::temp_directory_path() / "toric_cli_test.svg";
  CHECK(run({"render", "2", "3", "--highlight", "none", "-o", path.string()}).code == 0);
  CHECK(std::filesystem::file_size(path) > 0);
  CHECK(run({"render", "2", "3", "-o", "/nonexistent/dir/out.svg"}).code == 2);
  CHECK(run({"render", "2", "3", "--highlight", "all"}).code == 2);
}

TEST_CASE("cli parity") {
  auto r = run({"parity", "7", "4"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "MUKD1 as a set equals minimal [8,12,13,14,17,18,22,23,24]"));
  auto printed = run({"parity", "7", "4", "--as-printed"});
  CHECK(contains(printed.out, "-14"));
  CHECK(contains(printed.out, "invalid"));
  CHECK_FALSE(contains(printed.out, "corrected"));
  auto corrected = run({"parity", "7", "4", "--corrected"});
  CHECK(contains(corrected.out, "[1,2,3,7,8,11,12,13,17]"));
  CHECK(contains(corrected.out, "CertifiedTrivialUnlink"));
  CHECK(run({"parity", "6", "4"}).code == 2);
}

TEST_CASE("cli table") {
  auto r = run({"table", "--pmax", "4", "--qmax", "4", "--threads", "3"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 1 + 3 * 4);
  CHECK(lines[1].rfind("2,1,", 0) == 0);
  CHECK(lines.back().rfind("4,4,4,", 0) == 0);
  for (std::size_t k = 1; k < lines.size(); ++k) CHECK(contains(lines[k], "CertifiedTrivialUnlink"));
  CHECK(r.out == run({"table", "--pmax", "4", "--qmax", "4", "--threads", "1"}).out);
  CHECK(run({"table", "--pmin", "1"}).code == 2);
}
