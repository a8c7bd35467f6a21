#pragma once

#include <cstdint>
#include <vector>

#include "hpfold/core.hpp"

namespace hpfold {

struct SearchOptions {
  /// Maximum number of canonical representatives retained; counting always
  /// continues past it.
  std::size_t store_limit = 16;
  /// Prefix depth at which the search tree is split into independent tasks.
  /// 0 picks a small automatic depth when workers > 1, else no split.
  int parallel_split_depth = 0;
  /// Quotient classes by label-preserving chain automorphisms (reversal for
  /// palindromic open chains; necklace symmetries for closed chains) in
  /// addition to the 8 lattice isometries. On by default: two foldings that
  /// draw the same picture with the chain read in different directions count
  /// as one class. Turn off to count labeled embeddings only.
  bool quotient_chain_automorphisms = true;
  /// Branch-and-bound pruning with an admissible contact overestimate.
  bool use_pruning = true;
  int workers = 1;
};

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t branches_pruned = 0;
  double wall_time_s = 0.0;
};

struct SearchResult {
  Chain chain;
  int optimum = 0;
  std::uint64_t class_count = 0;
  std::vector<Folding> representatives;  // canonical, all attain the optimum
  SearchStats stats;
};

/// Exact optimum and exact number of isometry classes of optimal foldings,
/// by complete symmetry-reduced enumeration (first step pinned to E, first
/// turn pinned to N) with admissible pruning.
SearchResult enumerate_optimal(const Chain& chain, const SearchOptions& options = {});

/// Reference implementation: plain depth-first enumeration of every
/// self-avoiding folding whose first step is E, no pruning, classes
/// collected by canonicalizing each optimal folding into a set (under the
/// same class notion as enumerate_optimal's default). Throws limit_error
/// when the chain exceeds max_length.
SearchResult naive_oracle(const Chain& chain, int max_length = 14,
                          bool quotient_chain_automorphisms = true);

/// True iff the chain has exactly one class of optimal foldings.
bool is_unique(const Chain& chain, const SearchOptions& options = {});

/// Label-preserving chain automorphisms as index permutations, identity
/// excluded (reversal for palindromic open chains; necklace rotations and
/// reflections for closed chains).
std::vector<std::vector<int>> chain_automorphisms(const Chain& chain);

/// Canonical form of a folding's class: the least dihedral-canonical image
/// over the chain's automorphisms (just canonicalize() when the quotient is
/// off or the chain has no symmetry).
Folding class_canonical(const Chain& chain, const Folding& folding,
                        bool quotient_chain_automorphisms = true);

/// True iff two foldings of the chain lie in the same class.
bool same_optimal_class(const Chain& chain, const Folding& a, const Folding& b,
                        bool quotient_chain_automorphisms = true);

}  // namespace hpfold
