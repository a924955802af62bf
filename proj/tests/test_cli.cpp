#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "polyzeta/cache.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args, const std::string& cache_dir = "") {
  std::string cmd;
  if (!cache_dir.empty()) cmd += "MZV_CACHE_DIR=" + cache_dir + " ";
  cmd += std::string(PZ_MZV_PATH) + " " + args + " 2>/dev/null";
  std::FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = ::pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (!out.empty() && out.back() == '\n') out.pop_back();
  return {code, out};
}

std::string temp_dir(const char* tag) {
  std::string t = std::string("/tmp/mzv_test_") + tag + "_XXXXXX";
  std::vector<char> buf(t.begin(), t.end());
  buf.push_back('\0');
  REQUIRE(::mkdtemp(buf.data()) != nullptr);
  return std::string(buf.data());
}

}  // namespace

TEST_CASE("zeta subcommand computes and reports") {
  auto r = run("zeta 2 --digits 30 --no-cache");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1.644934066848226436472415166646");

  auto r13 = run("zeta 1 3 --digits 20 --no-cache");
  CHECK(r13.exit_code == 0);
  CHECK(r13.out == "0.27058080842778454788");
}

TEST_CASE("alternative methods through the CLI") {
  auto direct = run("zeta 2 --method direct --digits 4 --no-cache");
  CHECK(direct.exit_code == 0);
  CHECK(direct.out.substr(0, 6) == "1.6449");
  auto cone = run("zeta 3 --method cor12 --digits 20 --no-cache");
  CHECK(cone.out == run("zeta 3 --digits 20 --no-cache").out);
  auto rho = run("zeta 2 --method lemma20-rho --digits 6 --no-cache");
  CHECK(rho.exit_code == 0);
  CHECK(rho.out.substr(0, 8) == "1.644934");
}

TEST_CASE("exit codes") {
  CHECK(run("zeta 1 --digits 10 --no-cache").exit_code == 3);   // divergent
  CHECK(run("zeta 2 --method bogus --no-cache").exit_code == 2);  // parse
  CHECK(run("zeta 0 --no-cache").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("zeta 2 3 --method cor12 --no-cache").exit_code == 4);  // depth-one only
  CHECK(run("zeta 2 --method thm7-rho --digits 20 --no-cache").exit_code == 4);
  CHECK(run("zeta 2 --digits 10 --max-weight 1 --no-cache").exit_code == 4);
}

TEST_CASE("transform subcommand") {
  CHECK(run("transform box ab").out == "2*aa + 2*ab");
  CHECK(run("transform nabla ab").out == "-3*aa");
  CHECK(run("transform sigma abb").out == "aab");
  CHECK(run("transform sigmaprime ab").out == "-aa - ab");
  CHECK(run("transform frobnicate ab").exit_code == 2);
}

TEST_CASE("regularize subcommand") {
  auto r = run("regularize b ba");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "b^0: -ab\nb^1: a");
  auto r2 = run("regularize ab aa");
  CHECK(r2.out == "a^2 b^0: 1/2*1");
  CHECK(run("regularize q aa").exit_code == 2);
}

TEST_CASE("zeta-reg subcommand") {
  auto r = run("zeta-reg ba --digits 20 --no-cache");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "-1.64493406684822643647");
  auto rp = run("zeta-reg a --pm + --digits 10 --no-cache");
  CHECK(rp.exit_code == 0);
  CHECK(rp.out == "0.0000000000 + 3.1415926536i");
}

TEST_CASE("json output schema") {
  auto r = run("zeta 2 --digits 20 --json --no-cache");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  const std::vector<std::string> keys{"digits",     "elapsed_ms", "error_bound",
                                      "input",      "method",     "point",
                                      "terms_used", "value"};
  REQUIRE(j.is_object());
  CHECK(j.size() == keys.size());
  for (const auto& k : keys) CHECK(j.contains(k));
  CHECK(j["input"] == "2");
  CHECK(j["method"] == "thm7-half");
  CHECK(j["point"] == "half");
  CHECK(j["digits"] == 20);
  CHECK(j["value"] == "1.64493406684822643647");
  CHECK(j["terms_used"].is_number_integer());
  CHECK(j["elapsed_ms"].is_number());
  // the certified bound is at or below the requested tolerance
  std::string bound = j["error_bound"].get<std::string>();
  CHECK(bound.find("e-") != std::string::npos);
}

TEST_CASE("cache round-trips and is append-only") {
  std::string dir = temp_dir("cache");
  auto first = run("zeta 2 --digits 15 --json", dir);
  REQUIRE(first.exit_code == 0);
  auto j1 = nlohmann::json::parse(first.out);

  auto second = run("zeta 2 --digits 15 --json", dir);
  auto j2 = nlohmann::json::parse(second.out);
  CHECK(j2["value"] == j1["value"]);
  CHECK(j2["error_bound"] == j1["error_bound"]);
  CHECK(j2["terms_used"] == 0);  // served from the cache

  // a request for more digits misses (exact-key lookup) and recomputes
  auto more = run("zeta 2 --digits 18 --json", dir);
  auto j3 = nlohmann::json::parse(more.out);
  CHECK(j3["terms_used"] != 0);

  std::ifstream in(dir + "/cache.jsonl");
  std::string line;
  int lines = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++lines;
  CHECK(lines == 2);

  // corrupt lines are skipped, valid ones still served
  {
    std::ofstream app(dir + "/cache.jsonl", std::ios::app);
    app << "{this is not json\n";
  }
  auto third = run("zeta 2 --digits 15 --json", dir);
  auto j4 = nlohmann::json::parse(third.out);
  CHECK(j4["value"] == j1["value"]);
  CHECK(j4["terms_used"] == 0);
}

TEST_CASE("concurrent cache writers both land") {
  std::string dir = temp_dir("conc");
  auto writer = [&](const char* args) {
    auto r = run(args, dir);
    CHECK(r.exit_code == 0);
  };
  std::thread t1(writer, "zeta 2 --digits 12");
  std::thread t2(writer, "zeta 3 --digits 12");
  t1.join();
  t2.join();
  polyzeta::ResultCache cache{dir};
  CHECK(cache.get("thm7-half", "2", "half", 12).has_value());
  CHECK(cache.get("thm7-half", "3", "half", 12).has_value());
}

TEST_CASE("verify subcommand") {
  auto r = run("verify group --seed 42 --trials 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run("verify bogus").exit_code == 2);
}
