#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hpfold/core.hpp"
#include "hpfold/search.hpp"

namespace hpfold {

/// Exhaustive sweeps walk every length-n HP string in binary-counter order
/// with H = 0 and P = 1 (the last character is the least significant bit).
Chain chain_from_index(int n, std::uint64_t index, Topology topology);

struct SweepOptions {
  int workers = 1;
  /// Chains per processed block; a checkpoint is flushed after each block.
  std::uint64_t block_size = 256;
  /// Checkpoint file (binary format documented in the README). Empty
  /// disables checkpointing. An existing file resumes the sweep.
  std::string checkpoint_path;
  /// Per-chain detail CSV (n, chain, optimum, class_count), written once
  /// the sweep completes. Empty disables it.
  std::string csv_path;
  /// Stop after processing this many chains in this run (0 = no cap). The
  /// checkpoint stays valid, so a later run resumes where this one left off.
  std::uint64_t max_chains = 0;
  /// Optional progress callback (chains done, chains total).
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

struct SurveyRecord {
  int n = 0;
  Topology topology = Topology::open;
  std::uint64_t unique_count = 0;
  std::uint64_t total_count = 0;
  double percentage = 0.0;  // 100 * unique / total over the completed range
  std::string engine_version = kEngineVersion;
  double elapsed_s = 0.0;
  std::uint64_t cursor = 0;  // chains processed; == total_count when complete

  bool complete() const { return cursor == total_count; }
};

/// Tallies chains with unique optimal foldings over all 2^n labelings.
/// Resumable and deterministic: identical tallies from any checkpoint and
/// for any worker count. Throws checkpoint_error on corrupt checkpoints.
SurveyRecord sweep(int n, Topology topology, const SweepOptions& options = {});

/// First `limit` chains (binary-counter order) with a unique optimum.
std::vector<Chain> find_unique_examples(int n, std::size_t limit,
                                        Topology topology = Topology::open);

/// (k, class_count) for Z_k over odd k = 1, 3, ..., k_max.
std::vector<std::pair<int, std::uint64_t>> verify_odd_Z(int k_max);

}  // namespace hpfold
