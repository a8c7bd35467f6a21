#include "hpfold/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>
#include <unordered_set>

namespace hpfold {

namespace {

inline std::uint64_t point_key(Point p) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x)) << 32) |
         static_cast<std::uint32_t>(p.y);
}

inline std::uint8_t dir_rank(char c) {
  switch (c) {
    case 'E': return 0;
    case 'N': return 1;
    case 'W': return 2;
    case 'S': return 3;
    default: throw input_error(std::string("invalid direction character '") + c + "'");
  }
}

// Direction strings compared by rank, not by ASCII ('S' < 'W' canonically).
bool rank_less(const std::string& a, const std::string& b) {
  const std::size_t m = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint8_t ra = dir_rank(a[i]), rb = dir_rank(b[i]);
    if (ra != rb) return ra < rb;
  }
  return a.size() < b.size();
}

}  // namespace

std::string_view topology_name(Topology t) {
  return t == Topology::closed ? "closed" : "open";
}

Topology topology_from_name(std::string_view name) {
  if (name == "open") return Topology::open;
  if (name == "closed") return Topology::closed;
  throw input_error("unknown topology \"" + std::string(name) + "\"");
}

Dir dir_from_char(char c) { return static_cast<Dir>(dir_rank(c)); }

int Chain::h_count() const {
  return static_cast<int>(std::count(labels.begin(), labels.end(), 'H'));
}

void validate(const Chain& chain) {
  if (chain.labels.empty()) throw input_error("chain must have at least one node");
  for (char c : chain.labels) {
    if (c != 'H' && c != 'P')
      throw input_error(std::string("invalid chain character '") + c + "' (want H or P)");
  }
  if (chain.topology == Topology::closed) {
    const int n = chain.size();
    if (n < 4 || n % 2 != 0)
      throw input_error("closed chain length must be even and at least 4, got " +
                        std::to_string(n));
  }
}

Chain parse_chain(std::string_view text, Topology topology) {
  Chain chain{std::string(text), topology};
  validate(chain);
  return chain;
}

Folding parse_folding(std::string_view text) {
  for (char c : text) dir_rank(c);
  return Folding{std::string(text)};
}

Embedding walk_points(const Folding& folding, Topology topology) {
  const int steps = folding.size();
  if (topology == Topology::closed) {
    if (steps < 4 || steps % 2 != 0)
      throw input_error("closed folding needs an even step count of at least 4");
  }
  const int n = topology == Topology::closed ? steps : steps + 1;

  Embedding pts;
  pts.reserve(static_cast<std::size_t>(n));
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(static_cast<std::size_t>(n) * 2);

  Point p{0, 0};
  pts.push_back(p);
  seen.insert(point_key(p));
  for (int t = 0; t < steps; ++t) {
    p = p + dir_offset(folding.dir(t));
    if (topology == Topology::closed && t == steps - 1) {
      if (p != Point{0, 0})
        throw input_error("closed folding does not return to its start");
      break;
    }
    if (!seen.insert(point_key(p)).second)
      throw input_error("folding is not self-avoiding (revisits a lattice point)");
    pts.push_back(p);
  }
  return pts;
}

Embedding embed(const Chain& chain, const Folding& folding) {
  validate(chain);
  if (folding.size() != chain.step_count())
    throw input_error("folding has " + std::to_string(folding.size()) +
                      " steps but the chain needs " + std::to_string(chain.step_count()));
  return walk_points(folding, chain.topology);
}

bool chain_adjacent(int i, int j, int n, Topology topology) {
  const int d = std::abs(i - j);
  if (d == 1) return true;
  return topology == Topology::closed && d == n - 1;
}

BondGraph contacts(const Chain& chain, const Folding& folding) {
  const Embedding pts = embed(chain, folding);
  const int n = chain.size();

  std::unordered_map<std::uint64_t, int> at;
  at.reserve(static_cast<std::size_t>(n) * 2);
  for (int i = 0; i < n; ++i) at.emplace(point_key(pts[static_cast<std::size_t>(i)]), i);

  BondGraph g;
  for (int i = 0; i < n; ++i) {
    if (!chain.is_h(i)) continue;
    // Probe E and N only, so each unordered adjacent pair is seen once.
    for (Dir d : {Dir::E, Dir::N}) {
      const auto it = at.find(point_key(pts[static_cast<std::size_t>(i)] + dir_offset(d)));
      if (it == at.end()) continue;
      const int j = it->second;
      if (!chain.is_h(j)) continue;
      if (chain_adjacent(i, j, n, chain.topology)) continue;
      g.contacts.emplace_back(std::min(i, j), std::max(i, j));
    }
  }
  std::sort(g.contacts.begin(), g.contacts.end());
  return g;
}

int max_contact_bound(const Chain& chain) {
  validate(chain);
  const int h = chain.h_count();
  return chain.topology == Topology::open ? h + 1 : h;
}

std::array<Folding, 8> dihedral_images(const Folding& folding) {
  // Tables over direction ranks for rot^r and rot^r * mirror_x.
  std::array<std::array<std::uint8_t, 4>, 8> map{};
  for (int m = 0; m < 2; ++m) {
    for (int r = 0; r < 4; ++r) {
      for (int d = 0; d < 4; ++d) {
        Dir g = static_cast<Dir>(d);
        if (m) g = mirror_x(g);
        for (int k = 0; k < r; ++k) g = rotate_ccw(g);
        map[static_cast<std::size_t>(m * 4 + r)][static_cast<std::size_t>(d)] =
            static_cast<std::uint8_t>(g);
      }
    }
  }

  std::array<Folding, 8> out;
  for (int t = 0; t < 8; ++t) {
    std::string s = folding.steps;
    for (char& c : s)
      c = dir_char(static_cast<Dir>(map[static_cast<std::size_t>(t)][dir_rank(c)]));
    out[static_cast<std::size_t>(t)] = Folding{std::move(s)};
  }
  return out;
}

bool folding_less(const Folding& a, const Folding& b) { return rank_less(a.steps, b.steps); }

Folding canonicalize(const Folding& folding, Topology topology) {
  (void)walk_points(folding, topology);  // validity gate
  const auto images = dihedral_images(folding);
  const Folding* best = &images[0];
  for (const Folding& f : images)
    if (rank_less(f.steps, best->steps)) best = &f;
  return *best;
}

bool isometric(const Folding& a, const Folding& b, Topology topology) {
  if (a.size() != b.size())
    throw input_error("cannot compare foldings of different lengths");
  return canonicalize(a, topology) == canonicalize(b, topology);
}

char wall_char(Wall w) { return "NSEW"[static_cast<std::size_t>(w)]; }

MissingBondReport missing_bonds(const Chain& chain, const Folding& folding) {
  const Embedding pts = embed(chain, folding);
  const int n = chain.size();

  std::unordered_map<std::uint64_t, int> at;
  at.reserve(static_cast<std::size_t>(n) * 2);
  for (int i = 0; i < n; ++i) at.emplace(point_key(pts[static_cast<std::size_t>(i)]), i);

  int minx = pts[0].x, maxx = pts[0].x, miny = pts[0].y, maxy = pts[0].y;
  for (const Point& p : pts) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }

  MissingBondReport report;
  for (int i = 0; i < n; ++i) {
    if (!chain.is_h(i)) continue;
    MissingBondEntry e;
    e.node = i;
    for (int d = 0; d < 4; ++d) {
      const Point w = pts[static_cast<std::size_t>(i)] + dir_offset(static_cast<Dir>(d));
      const auto it = at.find(point_key(w));
      if (it != at.end()) {
        const int j = it->second;
        if (chain_adjacent(i, j, n, chain.topology)) continue;  // chain edge
        if (chain.is_h(j)) {
          ++e.bond_degree;
          continue;
        }
        // A non-adjacent P neighbor still blocks the slot: missing bond.
      }
      if (w.x > maxx) {
        ++e.external_missing;
        e.walls.push_back(Wall::E);
      } else if (w.x < minx) {
        ++e.external_missing;
        e.walls.push_back(Wall::W);
      } else if (w.y > maxy) {
        ++e.external_missing;
        e.walls.push_back(Wall::N);
      } else if (w.y < miny) {
        ++e.external_missing;
        e.walls.push_back(Wall::S);
      } else {
        ++e.internal_missing;
      }
    }
    report.total_internal += e.internal_missing;
    report.total_external += e.external_missing;
    report.nodes.push_back(std::move(e));
  }
  return report;
}

BondGraphShape bond_graph_shape(const BondGraph& bonds) {
  BondGraphShape shape;
  if (bonds.contacts.empty()) return shape;  // trivially a path, zero components

  std::unordered_map<int, std::vector<int>> adj;
  for (const auto& [a, b] : bonds.contacts) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  std::unordered_set<int> visited;
  bool all_even_cycles = true;
  int components = 0;
  bool single_path = true;

  for (const auto& [start, _] : adj) {
    if (visited.count(start)) continue;
    ++components;
    std::vector<int> stack{start};
    visited.insert(start);
    int comp_nodes = 0, comp_degree_sum = 0, comp_maxdeg = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++comp_nodes;
      const auto& nb = adj[v];
      comp_degree_sum += static_cast<int>(nb.size());
      comp_maxdeg = std::max(comp_maxdeg, static_cast<int>(nb.size()));
      for (int w : nb)
        if (visited.insert(w).second) stack.push_back(w);
    }
    const int comp_edges = comp_degree_sum / 2;
    const bool is_path = comp_edges == comp_nodes - 1 && comp_maxdeg <= 2;
    const bool is_even_cycle =
        comp_edges == comp_nodes && comp_maxdeg == 2 && comp_nodes % 2 == 0;
    if (!is_path) single_path = false;
    if (!is_even_cycle) all_even_cycles = false;
    shape.component_sizes.push_back(comp_nodes);
  }
  std::sort(shape.component_sizes.begin(), shape.component_sizes.end());

  if (components == 1 && single_path) {
    shape.kind = BondGraphKind::acyclic_path;
  } else if (all_even_cycles) {
    shape.kind = BondGraphKind::disjoint_even_cycles;
  } else {
    shape.kind = BondGraphKind::other;
  }
  return shape;
}

}  // namespace hpfold
