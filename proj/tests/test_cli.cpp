#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "hpfold/json_io.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(HPFOLD_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t count_substr(const std::string& hay, const std::string& needle) {
  std::size_t c = 0, pos = 0;
  while ((pos = hay.find(needle, pos)) != std::string::npos) {
    ++c;
    pos += needle.size();
  }
  return c;
}

}  // namespace

TEST_CASE("family emits generated objects") {
  CHECK(run("family S 2").out == "PHPPHP\n");
  CHECK(run("family F 2").out == "EESWWN\n");
  CHECK(run("family Z 8").out == "HPHPHPHPPHPHPHPH\n");
  CHECK(run("family Zstd 1").out == "ESW\n");
  CHECK(run("family PHP 1").out == "PHPPHPPHPPHP\n");

  const RunResult js = run("family S 2 --format json");
  CHECK(js.exit_code == 0);
  const json j = json::parse(js.out);
  CHECK(j.at("labels") == "PHPPHP");
  CHECK(j.at("topology") == "closed");

  CHECK(run("family S 0").exit_code == 2);
  CHECK(run("family Q 3").exit_code == 2);
}

TEST_CASE("enumerate prints search results as json") {
  const RunResult s2 = run("enumerate --chain PHPPHP --closed");
  CHECK(s2.exit_code == 0);
  {
    const json j = json::parse(s2.out);
    CHECK(j.at("optimum") == 1);
    CHECK(j.at("class_count") == 1);
    // round trip through the documented schema
    hpfold::SearchResult r = j.get<hpfold::SearchResult>();
    CHECK(r.optimum == 1);
    CHECK(r.chain.labels == "PHPPHP");
    CHECK(json(r).at("class_count") == 1);
  }

  const RunResult hp = run("enumerate --chain HP");
  CHECK(json::parse(hp.out).at("optimum") == 0);
  CHECK(json::parse(hp.out).at("class_count") == 1);

  const RunResult php = run("enumerate --chain PHPPHPPHPPHP --open --store-limit 64");
  const json j = json::parse(php.out);
  CHECK(j.at("optimum") == 4);
  CHECK(j.at("class_count") == 1);

  CHECK(run("enumerate --chain HPX").exit_code == 2);
  CHECK(run("enumerate").exit_code == 2);  // missing required option
  CHECK(run("enumerate --chain " + std::string(70, 'H')).exit_code == 3);

  const RunResult text = run("enumerate --chain HPPH --format text");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("optimum 1") != std::string::npos);
  CHECK(text.out.find("class_count 1") != std::string::npos);
}

TEST_CASE("quotient flag is exposed") {
  const RunResult on = run("enumerate --chain HPHPPHPH --open");
  const RunResult off = run("enumerate --chain HPHPPHPH --open --no-quotient-automorphisms");
  CHECK(json::parse(on.out).at("class_count") == 1);
  CHECK(json::parse(off.out).at("class_count") == 2);
}

TEST_CASE("survey subcommand") {
  const RunResult one = run("survey 1");
  CHECK(one.exit_code == 0);
  const json j = json::parse(one.out);
  CHECK(j.at("unique_count") == 2);
  CHECK(j.at("total_count") == 2);
  CHECK(j.at("cursor") == 2);
  CHECK(j.at("topology") == "open");
  CHECK(j.at("engine_version") == hpfold::kEngineVersion);

  const RunResult text = run("survey 4 --format text");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("total 16") != std::string::npos);

  // corrupt checkpoint -> exit 4
  const fs::path bad = fs::temp_directory_path() / "hpfold_cli_bad.ckpt";
  std::ofstream(bad) << "junk";
  CHECK(run("survey 4 --checkpoint " + bad.string()).exit_code == 4);
  fs::remove(bad);

  // interrupt with --max-chains, then resume to completion
  const fs::path ckpt = fs::temp_directory_path() / "hpfold_cli_resume.ckpt";
  fs::remove(ckpt);
  const RunResult part =
      run("survey 6 --checkpoint " + ckpt.string() + " --max-chains 20 --block-size 8");
  CHECK(part.exit_code == 0);
  CHECK(json::parse(part.out).at("cursor") == 20);
  const RunResult full = run("survey 6 --checkpoint " + ckpt.string());
  CHECK(full.exit_code == 0);
  const json done = json::parse(full.out);
  CHECK(done.at("cursor") == 64);
  CHECK(done.at("unique_count") == json::parse(run("survey 6").out).at("unique_count"));
  fs::remove(ckpt);

  CHECK(run("survey 0").exit_code == 2);
  CHECK(run("survey 25").exit_code == 3);
}

TEST_CASE("render subcommand") {
  const RunResult ascii = run("render --chain PHPPHP --closed --folding EESWWN --format ascii");
  CHECK(ascii.exit_code == 0);
  CHECK(ascii.out ==
        "P-H-P\n"
        "| : |\n"
        "P-H-P\n");

  const RunResult svg = run("render --family Zstd --k 4 --format svg");
  CHECK(svg.exit_code == 0);
  CHECK(svg.out.rfind("<svg", 0) == 0);
  CHECK(count_substr(svg.out, "<circle") == 16);
  CHECK(count_substr(svg.out, "class=\"chain\"") == 15);
  CHECK(count_substr(svg.out, "class=\"bond\"") == 7);

  const fs::path out = fs::temp_directory_path() / "hpfold_cli_render.svg";
  CHECK(run("render --family F --k 3 --format svg --out " + out.string()).exit_code == 0);
  CHECK(fs::exists(out));
  fs::remove(out);

  CHECK(run("render --chain HPH --folding EW").exit_code == 2);
  CHECK(run("render --chain HPH").exit_code == 2);
}

TEST_CASE("verify suites") {
  const RunResult sk = run("verify sk");
  CHECK(sk.exit_code == 0);
  CHECK(count_substr(sk.out, "[FAIL]") == 0);
  CHECK(count_substr(sk.out, "[ ok ]") == 21);  // 3 claims x 7 values of k

  CHECK(run("verify php").exit_code == 0);
  CHECK(run("verify z-odd").exit_code == 0);
  CHECK(run("verify nonsense").exit_code == 2);
}

TEST_CASE("help exits zero") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("enumerate --help").exit_code == 0);
}
