#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "hpfold/families.hpp"
#include "hpfold/json_io.hpp"
#include "hpfold/search.hpp"
#include "hpfold/survey.hpp"

using namespace hpfold;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() /
          ("hpfold_test_" + std::to_string(::getpid()) + "_" +
           std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(dir);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  std::string file(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("binary-counter order, H=0 P=1, last character least significant") {
  CHECK(chain_from_index(3, 0, Topology::open).labels == "HHH");
  CHECK(chain_from_index(3, 1, Topology::open).labels == "HHP");
  CHECK(chain_from_index(3, 2, Topology::open).labels == "HPH");
  CHECK(chain_from_index(3, 6, Topology::open).labels == "PPH");
  CHECK(chain_from_index(3, 7, Topology::open).labels == "PPP");
}

TEST_CASE("tiny sweeps") {
  const SurveyRecord one = sweep(1, Topology::open);
  CHECK(one.total_count == 2);
  CHECK(one.unique_count == 2);  // both single-node chains have the empty folding only
  CHECK(one.complete());
  CHECK(one.percentage == doctest::Approx(100.0));

  const SurveyRecord two = sweep(2, Topology::open);
  CHECK(two.unique_count == 4);

  CHECK_THROWS_AS(sweep(0, Topology::open), input_error);
  CHECK_THROWS_AS(sweep(25, Topology::open), limit_error);
  CHECK_THROWS_AS(sweep(5, Topology::closed), input_error);  // closed needs even n
}

TEST_CASE("sweep tallies agree with the oracle") {
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t expected = 0;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i)
      if (naive_oracle(chain_from_index(n, i, Topology::open)).class_count == 1) ++expected;
    CHECK(sweep(n, Topology::open).unique_count == expected);
  }
  // a closed sweep as well
  std::uint64_t expected = 0;
  for (std::uint64_t i = 0; i < (1u << 6); ++i)
    if (naive_oracle(chain_from_index(6, i, Topology::closed)).class_count == 1) ++expected;
  CHECK(sweep(6, Topology::closed).unique_count == expected);
}

TEST_CASE("sweep is invariant to worker count and block size") {
  const SurveyRecord base = sweep(8, Topology::open);
  SweepOptions four;
  four.workers = 4;
  four.block_size = 37;
  const SurveyRecord alt = sweep(8, Topology::open, four);
  CHECK(alt.unique_count == base.unique_count);
  CHECK(alt.total_count == base.total_count);
}

TEST_CASE("interrupted sweeps resume from checkpoints deterministically") {
  TempDir tmp;
  const std::string ckpt = tmp.file("sweep8.ckpt");
  const SurveyRecord base = sweep(8, Topology::open);

  SweepOptions part;
  part.checkpoint_path = ckpt;
  part.block_size = 16;
  part.max_chains = 100;
  const SurveyRecord first = sweep(8, Topology::open, part);
  CHECK_FALSE(first.complete());
  CHECK(first.cursor == 100);
  CHECK(fs::exists(ckpt));

  // resume a few more chains, then to completion
  part.max_chains = 37;
  const SurveyRecord second = sweep(8, Topology::open, part);
  CHECK(second.cursor == 137);

  part.max_chains = 0;
  const SurveyRecord done = sweep(8, Topology::open, part);
  CHECK(done.complete());
  CHECK(done.unique_count == base.unique_count);

  // completed checkpoints short-circuit
  const SurveyRecord again = sweep(8, Topology::open, part);
  CHECK(again.complete());
  CHECK(again.unique_count == base.unique_count);
}

TEST_CASE("corrupt and mismatched checkpoints are rejected") {
  TempDir tmp;

  {  // garbage magic
    const std::string path = tmp.file("garbage.ckpt");
    std::ofstream(path) << "this is not a checkpoint";
    SweepOptions so;
    so.checkpoint_path = path;
    CHECK_THROWS_AS(sweep(4, Topology::open, so), checkpoint_error);
  }

  {  // wrong n
    const std::string path = tmp.file("wrongn.ckpt");
    SweepOptions so;
    so.checkpoint_path = path;
    (void)sweep(4, Topology::open, so);
    CHECK_THROWS_AS(sweep(5, Topology::open, so), checkpoint_error);
  }

  {  // wrong topology
    const std::string path = tmp.file("wrongtopo.ckpt");
    SweepOptions so;
    so.checkpoint_path = path;
    (void)sweep(4, Topology::open, so);
    CHECK_THROWS_AS(sweep(4, Topology::closed, so), checkpoint_error);
  }

  {  // truncated body
    const std::string path = tmp.file("trunc.ckpt");
    SweepOptions so;
    so.checkpoint_path = path;
    (void)sweep(4, Topology::open, so);
    const auto size = fs::file_size(path);
    fs::resize_file(path, size - 7);
    CHECK_THROWS_AS(sweep(4, Topology::open, so), checkpoint_error);
  }
}

TEST_CASE("detail csv") {
  TempDir tmp;
  const std::string csv = tmp.file("detail.csv");
  SweepOptions so;
  so.csv_path = csv;
  (void)sweep(4, Topology::open, so);

  std::ifstream in(csv);
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,chain,optimum,class_count");
  std::vector<std::string> rows;
  while (std::getline(in, line))
    if (!line.empty()) rows.push_back(line);
  REQUIRE(rows.size() == 16);
  // spot-check one row against the oracle
  const Chain c = chain_from_index(4, 5, Topology::open);  // HPHP
  const SearchResult o = naive_oracle(c);
  CHECK(rows[5] == "4," + c.labels + "," + std::to_string(o.optimum) + "," +
                       std::to_string(o.class_count));
}

TEST_CASE("unique examples: none at 3 and 5, present elsewhere") {
  CHECK(find_unique_examples(3, 10).empty());
  CHECK(find_unique_examples(5, 10).empty());
  for (int n : {1, 2, 4, 6, 7, 8}) {
    CAPTURE(n);
    const auto ex = find_unique_examples(n, 2);
    CHECK_FALSE(ex.empty());
    for (const Chain& c : ex) CHECK(is_unique(c));
  }
  CHECK(find_unique_examples(6, 1).size() == 1);
}

TEST_CASE("survey record json round trip") {
  using nlohmann::json;
  const SurveyRecord rec = sweep(5, Topology::open);
  const SurveyRecord back = json(rec).get<SurveyRecord>();
  CHECK(back.n == rec.n);
  CHECK(back.topology == rec.topology);
  CHECK(back.unique_count == rec.unique_count);
  CHECK(back.total_count == rec.total_count);
  CHECK(back.percentage == rec.percentage);
  CHECK(back.cursor == rec.cursor);
  CHECK(back.engine_version == kEngineVersion);
}

TEST_CASE("odd zigzag verification table") {
  const auto table = verify_odd_Z(7);
  REQUIRE(table.size() == 4);
  CHECK(table[0] == std::pair<int, std::uint64_t>{1, 1});
  CHECK(table[1] == std::pair<int, std::uint64_t>{3, 1});
  CHECK(table[2] == std::pair<int, std::uint64_t>{5, 2});
  CHECK(table[3] == std::pair<int, std::uint64_t>{7, 2});
}
