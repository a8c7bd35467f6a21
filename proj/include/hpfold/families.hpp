#pragma once

#include <vector>

#include "hpfold/core.hpp"

namespace hpfold {

/// Closed chain P (HP)^u P (HP)^d with u = ceil(k/2), d = floor(k/2).
/// Length 2k+2, exactly two P-P edges.
Chain gen_S(int k);

/// The two-sided staircase folding of gen_S(k):
///   even k: E (ES)^d W (WN)^u,  odd k: E (ES)^d S (WN)^u.
/// Valid and closed, with exactly k-1 contacts.
Folding gen_F(int k);

/// Open chain (HP)^u (PH)^d with u = ceil(k/2), d = floor(k/2); length 2k.
Chain gen_Z(int k);

/// The standard folding of gen_Z(2j): (ES)^j W (WN)^(j-1). Its missing-bond
/// report is exactly 4 external and 0 internal.
Folding standard_Z_embedding(int j);

/// Chain (PHP)^(4k), open or closed; length 12k with 4k H nodes.
Chain gen_PHP(int k, Topology topology);

/// A set of lattice points whose unit-adjacency pairs form a tree.
struct LatticeTree {
  std::vector<Point> nodes;                    // canonical: sorted, first at origin
  std::vector<std::pair<int, int>> edges;      // index pairs i < j, sorted

  int size() const { return static_cast<int>(nodes.size()); }
  friend bool operator==(const LatticeTree&, const LatticeTree&) = default;
};

/// Validates connectivity, unit edges and the tree edge count; throws
/// input_error on malformed input.
LatticeTree make_lattice_tree(std::vector<Point> nodes,
                              std::vector<std::pair<int, int>> edges);

/// Inflates a k-node lattice tree into a folding of gen_PHP(k, topology):
/// the tree is scaled by 4, each node becomes a 4-cycle of H nodes, tree
/// edges become paired chain bridges, and every remaining P-P pair closes
/// with an outward bump (the open case leaves the last pair open). The
/// result has exactly 4k contacts forming k disjoint 4-cycles.
Folding tree_to_folding(const LatticeTree& tree, Topology topology);

/// All k-node lattice trees up to translation (canonical form: translate
/// the lexicographically least point to the origin, sort the points).
/// Includes the 2^(k-1) north/east staircase paths. Brute force, k <= 8.
std::vector<LatticeTree> enumerate_lattice_trees(int k);

}  // namespace hpfold
