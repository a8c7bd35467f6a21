#include "hpfold/survey.hpp"

#include <chrono>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <thread>

#include "hpfold/families.hpp"

namespace hpfold {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxSweepN = 24;

// --------------------------------------------------------------------------
// Checkpoint file layout (little-endian, fixed width; see README for the
// byte-exact table):
//   header (28 bytes): magic "HPSWEEP1" | version u32 | n u32 |
//                      topology u8 (0 open, 1 closed) | 3 zero bytes |
//                      cursor u64
//   body: cursor records of 20 bytes each, record i describing chain i:
//                      index u64 | optimum i32 | class_count u64
// Flushes write the whole file to "<path>.tmp" and rename it into place.
// --------------------------------------------------------------------------

constexpr char kMagic[8] = {'H', 'P', 'S', 'W', 'E', 'E', 'P', '1'};
constexpr std::uint32_t kVersion = 1;
constexpr std::size_t kHeaderSize = 28;
constexpr std::size_t kRecordSize = 20;

struct SweepRec {
  std::uint64_t index = 0;
  std::int32_t optimum = 0;
  std::uint64_t class_count = 0;
};

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint32_t get_u32(const char* p) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(p[i])) << (8 * i);
  return v;
}

std::uint64_t get_u64(const char* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(p[i])) << (8 * i);
  return v;
}

void write_checkpoint(const std::string& path, int n, Topology topo,
                      const std::vector<SweepRec>& records) {
  std::string blob;
  blob.reserve(kHeaderSize + kRecordSize * records.size());
  blob.append(kMagic, sizeof(kMagic));
  put_u32(blob, kVersion);
  put_u32(blob, static_cast<std::uint32_t>(n));
  blob.push_back(topo == Topology::closed ? 1 : 0);
  blob.append(3, '\0');
  put_u64(blob, records.size());
  for (const SweepRec& r : records) {
    put_u64(blob, r.index);
    put_u32(blob, static_cast<std::uint32_t>(r.optimum));
    put_u64(blob, r.class_count);
  }

  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw checkpoint_error("cannot write checkpoint file " + tmp);
    out.write(blob.data(), static_cast<std::streamsize>(blob.size()));
    if (!out) throw checkpoint_error("short write to checkpoint file " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw checkpoint_error("cannot rename checkpoint into place: " + ec.message());
}

std::vector<SweepRec> read_checkpoint(const std::string& path, int n, Topology topo,
                                      std::uint64_t total) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw checkpoint_error("cannot open checkpoint file " + path);
  std::string blob((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  if (blob.size() < kHeaderSize) throw checkpoint_error("checkpoint too short");
  if (std::memcmp(blob.data(), kMagic, sizeof(kMagic)) != 0)
    throw checkpoint_error("checkpoint has a bad magic header");
  if (get_u32(blob.data() + 8) != kVersion)
    throw checkpoint_error("checkpoint version mismatch");
  if (get_u32(blob.data() + 12) != static_cast<std::uint32_t>(n))
    throw checkpoint_error("checkpoint was written for a different n");
  const char t = blob[16];
  if (t != (topo == Topology::closed ? 1 : 0))
    throw checkpoint_error("checkpoint was written for a different topology");
  if (blob[17] != 0 || blob[18] != 0 || blob[19] != 0)
    throw checkpoint_error("checkpoint has nonzero padding");
  const std::uint64_t cursor = get_u64(blob.data() + 20);
  if (cursor > total) throw checkpoint_error("checkpoint cursor exceeds 2^n");
  if (blob.size() != kHeaderSize + kRecordSize * cursor)
    throw checkpoint_error("checkpoint size disagrees with its cursor");

  std::vector<SweepRec> records;
  records.reserve(cursor);
  for (std::uint64_t i = 0; i < cursor; ++i) {
    const char* p = blob.data() + kHeaderSize + kRecordSize * i;
    SweepRec r;
    r.index = get_u64(p);
    r.optimum = static_cast<std::int32_t>(get_u32(p + 8));
    r.class_count = get_u64(p + 12);
    if (r.index != i) throw checkpoint_error("checkpoint records are out of order");
    records.push_back(r);
  }
  return records;
}

}  // namespace

Chain chain_from_index(int n, std::uint64_t index, Topology topology) {
  std::string labels(static_cast<std::size_t>(n), 'H');
  for (int i = 0; i < n; ++i)
    if ((index >> (n - 1 - i)) & 1) labels[static_cast<std::size_t>(i)] = 'P';
  return parse_chain(labels, topology);
}

SurveyRecord sweep(int n, Topology topology, const SweepOptions& options) {
  if (n < 1) throw input_error("sweep needs n >= 1");
  if (n > kMaxSweepN)
    throw limit_error("sweep is capped at n = " + std::to_string(kMaxSweepN));
  if (topology == Topology::closed && (n < 4 || n % 2 != 0))
    throw input_error("closed sweeps need even n >= 4");
  if (options.block_size < 1) throw input_error("block_size must be positive");
  if (options.workers < 1) throw input_error("workers must be at least 1");

  const auto t0 = Clock::now();
  const std::uint64_t total = std::uint64_t{1} << n;

  std::vector<SweepRec> records;
  const bool checkpointing = !options.checkpoint_path.empty();
  if (checkpointing && std::filesystem::exists(options.checkpoint_path))
    records = read_checkpoint(options.checkpoint_path, n, topology, total);

  std::uint64_t processed_this_run = 0;
  while (records.size() < total) {
    if (options.max_chains && processed_this_run >= options.max_chains) break;
    std::uint64_t blk = std::min<std::uint64_t>(options.block_size, total - records.size());
    if (options.max_chains)
      blk = std::min<std::uint64_t>(blk, options.max_chains - processed_this_run);

    const std::uint64_t base = records.size();
    std::vector<SweepRec> block(blk);
    const auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
      SearchOptions so;
      so.store_limit = 0;
      for (std::uint64_t i = lo; i < hi; ++i) {
        const Chain chain = chain_from_index(n, base + i, topology);
        const SearchResult r = enumerate_optimal(chain, so);
        block[i] = SweepRec{base + i, r.optimum, r.class_count};
      }
    };

    const int nworkers =
        static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(options.workers), blk));
    if (nworkers <= 1) {
      run_range(0, blk);
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < nworkers; ++w) {
        const std::uint64_t lo = blk * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(nworkers);
        const std::uint64_t hi =
            blk * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(nworkers);
        threads.emplace_back(run_range, lo, hi);
      }
      for (auto& th : threads) th.join();
    }

    records.insert(records.end(), block.begin(), block.end());
    processed_this_run += blk;
    if (checkpointing) write_checkpoint(options.checkpoint_path, n, topology, records);
    if (options.progress) options.progress(records.size(), total);
  }

  SurveyRecord rec;
  rec.n = n;
  rec.topology = topology;
  rec.total_count = total;
  rec.cursor = records.size();
  for (const SweepRec& r : records)
    if (r.class_count == 1) ++rec.unique_count;
  rec.percentage = records.empty()
                       ? 0.0
                       : 100.0 * static_cast<double>(rec.unique_count) /
                             static_cast<double>(records.size());
  rec.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();

  if (rec.complete() && !options.csv_path.empty()) {
    std::ofstream csv(options.csv_path, std::ios::trunc);
    if (!csv) throw input_error("cannot write CSV file " + options.csv_path);
    csv << "n,chain,optimum,class_count\n";
    for (const SweepRec& r : records)
      csv << n << ',' << chain_from_index(n, r.index, topology).labels << ',' << r.optimum
          << ',' << r.class_count << '\n';
  }
  return rec;
}

std::vector<Chain> find_unique_examples(int n, std::size_t limit, Topology topology) {
  if (n < 1) throw input_error("find_unique_examples needs n >= 1");
  if (n > kMaxSweepN)
    throw limit_error("find_unique_examples is capped at n = " + std::to_string(kMaxSweepN));
  std::vector<Chain> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i < total && out.size() < limit; ++i) {
    Chain chain = chain_from_index(n, i, topology);
    if (is_unique(chain)) out.push_back(std::move(chain));
  }
  return out;
}

std::vector<std::pair<int, std::uint64_t>> verify_odd_Z(int k_max) {
  std::vector<std::pair<int, std::uint64_t>> out;
  SearchOptions so;
  so.store_limit = 0;
  for (int k = 1; k <= k_max; k += 2)
    out.emplace_back(k, enumerate_optimal(gen_Z(k), so).class_count);
  return out;
}

}  // namespace hpfold
