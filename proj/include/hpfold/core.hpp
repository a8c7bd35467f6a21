#pragma once

// Core data model for the square-lattice HP chain engine: chains, direction
// foldings, lattice embeddings, contact (bond) graphs, missing-bond
// accounting, and canonical forms under the dihedral symmetries of the grid.
//
// Conventions fixed here and relied on everywhere else:
//   * E = (+1,0), N = (0,+1), W = (-1,0), S = (0,-1); node 0 sits at the
//     origin of every embedding.
//   * Direction order E < N < W < S defines all folding comparisons; the
//     canonical form of a folding is the least of its 8 dihedral images
//     under that order.
//   * Node labels are never permuted by an isometry; chain symmetries
//     (reversal, cyclic rotation) are a separate, optional quotient handled
//     by the search layer.

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hpfold {

inline constexpr const char* kEngineVersion = "1.0.0";

/// Invalid user input (bad characters, malformed foldings, bad parameters).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Request exceeds a configured resource bound (e.g. brute-force scale caps).
struct limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Checkpoint file is missing fields, corrupt, or inconsistent with the run.
struct checkpoint_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Topology : std::uint8_t { open, closed };

std::string_view topology_name(Topology t);
Topology topology_from_name(std::string_view name);

struct Point {
  int x = 0;
  int y = 0;
  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }

/// Directions in canonical comparison order.
enum class Dir : std::uint8_t { E = 0, N = 1, W = 2, S = 3 };

constexpr Point dir_offset(Dir d) {
  constexpr std::array<Point, 4> k{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
  return k[static_cast<std::size_t>(d)];
}

constexpr char dir_char(Dir d) { return "ENWS"[static_cast<std::size_t>(d)]; }
Dir dir_from_char(char c);  // throws input_error on anything but E/N/W/S

/// Quarter turn counterclockwise. With the E<N<W<S coding this is +1 mod 4.
constexpr Dir rotate_ccw(Dir d) {
  return static_cast<Dir>((static_cast<std::uint8_t>(d) + 1) & 3);
}

/// Reflection across the x axis: E and W fixed, N and S swapped.
constexpr Dir mirror_x(Dir d) {
  constexpr std::array<std::uint8_t, 4> k{0, 3, 2, 1};
  return static_cast<Dir>(k[static_cast<std::size_t>(d)]);
}

constexpr Dir opposite(Dir d) {
  return static_cast<Dir>((static_cast<std::uint8_t>(d) + 2) & 3);
}

/// A labeled HP chain. `labels` holds 'H'/'P' in chain order.
struct Chain {
  std::string labels;
  Topology topology = Topology::open;

  int size() const { return static_cast<int>(labels.size()); }
  bool is_h(int i) const { return labels[static_cast<std::size_t>(i)] == 'H'; }
  int h_count() const;
  /// Steps in a folding of this chain: n-1 for open walks, n for polygons.
  int step_count() const {
    return topology == Topology::closed ? size() : size() - 1;
  }

  friend bool operator==(const Chain&, const Chain&) = default;
};

/// Validates chain invariants; throws input_error.
void validate(const Chain& chain);

/// Builds a Chain from text, rejecting bad characters and closed chains of
/// odd or too-short length.
Chain parse_chain(std::string_view text, Topology topology);

/// A folding as a direction string over ENWS. Validity (self-avoidance,
/// closure) is checked by embed()/walk_points(), not stored here.
struct Folding {
  std::string steps;

  int size() const { return static_cast<int>(steps.size()); }
  Dir dir(int i) const { return dir_from_char(steps[static_cast<std::size_t>(i)]); }

  friend bool operator==(const Folding&, const Folding&) = default;
};

/// Checks characters only; geometric validity is embed()'s job.
Folding parse_folding(std::string_view text);

using Embedding = std::vector<Point>;

/// Places the walk on the lattice with node 0 at the origin. Throws
/// input_error on self-intersection, on closed walks that do not return to
/// the origin, and on step counts that are impossible for the topology.
/// Returns one point per chain node (for closed walks the final step is
/// consumed by the return-to-origin check).
Embedding walk_points(const Folding& folding, Topology topology);

/// walk_points() plus the chain/folding length agreement check.
Embedding embed(const Chain& chain, const Folding& folding);

/// True when nodes i and j share a chain edge (cyclic for closed chains).
bool chain_adjacent(int i, int j, int n, Topology topology);

/// The set of H-H contacts of an embedded chain: unordered node pairs that
/// are unit-distance in the embedding but not adjacent along the chain.
struct BondGraph {
  std::vector<std::pair<int, int>> contacts;  // i < j, sorted

  int count() const { return static_cast<int>(contacts.size()); }
  friend bool operator==(const BondGraph&, const BondGraph&) = default;
};

BondGraph contacts(const Chain& chain, const Folding& folding);

/// Upper bound on the contact count: h+1 for open chains, h for closed,
/// where h is the number of H nodes.
int max_contact_bound(const Chain& chain);

/// All 8 dihedral images of a folding (rotations and reflections acting
/// pointwise on the direction string). Image 0 is the folding itself.
std::array<Folding, 8> dihedral_images(const Folding& folding);

/// Strict ordering of direction strings under E < N < W < S.
bool folding_less(const Folding& a, const Folding& b);

/// Lexicographically least dihedral image under the order E < N < W < S.
/// Idempotent and constant on isometry orbits. Throws on invalid foldings.
Folding canonicalize(const Folding& folding, Topology topology);

/// True iff the two foldings are in the same dihedral orbit. Throws
/// input_error on length mismatch.
bool isometric(const Folding& a, const Folding& b, Topology topology);

enum class Wall : std::uint8_t { N, S, E, W };
char wall_char(Wall w);

/// Missing-bond accounting for one H node. A neighbor slot is missing when
/// it holds neither a chain-adjacent node nor an H node; each missing bond
/// is internal or external relative to the embedding's bounding box, and
/// external ones record the wall they emanate from (at a bounding-box
/// corner, the wall the bond is perpendicular to).
struct MissingBondEntry {
  int node = 0;
  int bond_degree = 0;
  int internal_missing = 0;
  int external_missing = 0;
  std::vector<Wall> walls;  // one entry per external missing bond

  int missing() const { return internal_missing + external_missing; }
  friend bool operator==(const MissingBondEntry&, const MissingBondEntry&) = default;
};

struct MissingBondReport {
  std::vector<MissingBondEntry> nodes;  // H nodes in chain order
  int total_internal = 0;
  int total_external = 0;

  int total_missing() const { return total_internal + total_external; }
  friend bool operator==(const MissingBondReport&, const MissingBondReport&) = default;
};

MissingBondReport missing_bonds(const Chain& chain, const Folding& folding);

enum class BondGraphKind : std::uint8_t {
  acyclic_path,          // empty graph, or a single path
  disjoint_even_cycles,  // every component is an even cycle
  other,
};

struct BondGraphShape {
  BondGraphKind kind = BondGraphKind::acyclic_path;
  std::vector<int> component_sizes;  // node counts, ascending

  friend bool operator==(const BondGraphShape&, const BondGraphShape&) = default;
};

BondGraphShape bond_graph_shape(const BondGraph& bonds);

}  // namespace hpfold
