#include "hpfold/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

namespace hpfold {

namespace {

std::string repeated(std::string_view unit, int times) {
  std::string out;
  out.reserve(unit.size() * static_cast<std::size_t>(times));
  for (int i = 0; i < times; ++i) out += unit;
  return out;
}

void require_positive(int k, const char* what) {
  if (k < 1) throw input_error(std::string(what) + " requires a positive parameter");
}

}  // namespace

Chain gen_S(int k) {
  require_positive(k, "gen_S");
  const int u = (k + 1) / 2, d = k / 2;
  return parse_chain("P" + repeated("HP", u) + "P" + repeated("HP", d), Topology::closed);
}

Folding gen_F(int k) {
  require_positive(k, "gen_F");
  const int u = (k + 1) / 2, d = k / 2;
  const std::string middle = k % 2 == 0 ? "W" : "S";
  return parse_folding("E" + repeated("ES", d) + middle + repeated("WN", u));
}

Chain gen_Z(int k) {
  require_positive(k, "gen_Z");
  const int u = (k + 1) / 2, d = k / 2;
  return parse_chain(repeated("HP", u) + repeated("PH", d), Topology::open);
}

Folding standard_Z_embedding(int j) {
  require_positive(j, "standard_Z_embedding");
  return parse_folding(repeated("ES", j) + "W" + repeated("WN", j - 1));
}

Chain gen_PHP(int k, Topology topology) {
  require_positive(k, "gen_PHP");
  return parse_chain(repeated("PHP", 4 * k), topology);
}

LatticeTree make_lattice_tree(std::vector<Point> nodes,
                              std::vector<std::pair<int, int>> edges) {
  const int k = static_cast<int>(nodes.size());
  if (k < 1) throw input_error("lattice tree needs at least one node");
  {
    std::set<Point> distinct(nodes.begin(), nodes.end());
    if (static_cast<int>(distinct.size()) != k)
      throw input_error("lattice tree nodes must be distinct");
  }
  if (static_cast<int>(edges.size()) != k - 1)
    throw input_error("lattice tree on " + std::to_string(k) + " nodes needs exactly " +
                      std::to_string(k - 1) + " edges");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= k || a == b) throw input_error("lattice tree edge index out of range");
    const Point d = nodes[static_cast<std::size_t>(b)] - nodes[static_cast<std::size_t>(a)];
    if (std::abs(d.x) + std::abs(d.y) != 1)
      throw input_error("lattice tree edges must join unit-distance points");
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
  }
  if (reached != k) throw input_error("lattice tree is not connected");
  std::sort(edges.begin(), edges.end());
  return LatticeTree{std::move(nodes), std::move(edges)};
}

namespace {

// Gadget geometry for tree_to_folding. Each tree node at position q owns a
// unit square of H nodes with base 4q; its corners in counterclockwise
// order are c0=base, c1=base+(1,0), c2=base+(1,1), c3=base+(0,1). The four
// side transitions S: c0->c1, E: c1->c2, N: c2->c3, W: c3->c0 each carry
// two P nodes, either as a bump outside the square or as half of a bridge
// pair toward the neighboring gadget.
struct GadgetWalk {
  // CCW side order S, E, N, W expressed over Dir.
  static constexpr std::array<Dir, 4> kSides{Dir::S, Dir::E, Dir::N, Dir::W};

  const std::vector<std::array<int, 4>>& neighbor;   // per node, per Dir: child or -1
  const std::vector<Point>& pos;
  std::vector<Point> walk;

  static Dir next_side(Dir s) {
    switch (s) {
      case Dir::S: return Dir::E;
      case Dir::E: return Dir::N;
      case Dir::N: return Dir::W;
      default: return Dir::S;
    }
  }

  Point base(int v) const { return {4 * pos[static_cast<std::size_t>(v)].x,
                                    4 * pos[static_cast<std::size_t>(v)].y}; }

  Point corner_start(int v, Dir side) const {
    const Point b = base(v);
    switch (side) {
      case Dir::S: return b;
      case Dir::E: return b + Point{1, 0};
      case Dir::N: return b + Point{1, 1};
      default: return b + Point{0, 1};
    }
  }

  Point corner_end(int v, Dir side) const { return corner_start(v, next_side(side)); }

  void transition(int v, Dir side) {
    const Point a = corner_start(v, side);
    const Point b = corner_end(v, side);
    const Point o = dir_offset(side);
    const int child = neighbor[static_cast<std::size_t>(v)][static_cast<std::size_t>(side)];
    if (child < 0) {
      walk.push_back(a + o);
      walk.push_back(b + o);
      walk.push_back(b);
      return;
    }
    // Bridge out, full boundary of the subtree, bridge back.
    walk.push_back(a + o);
    walk.push_back(a + o + o);
    walk.push_back(a + o + o + o);  // child's entry corner
    Dir s = next_side(opposite(side));
    for (int i = 0; i < 3; ++i) {
      transition(child, s);
      s = next_side(s);
    }
    const Point c = corner_start(child, opposite(side));
    walk.push_back(c - o);
    walk.push_back(c - o - o);
    walk.push_back(b);
  }
};

}  // namespace

Folding tree_to_folding(const LatticeTree& tree, Topology topology) {
  // Re-validate: callers may hand-build trees.
  const LatticeTree t = make_lattice_tree(tree.nodes, tree.edges);
  const int k = t.size();

  std::vector<std::array<int, 4>> neighbor(static_cast<std::size_t>(k), {-1, -1, -1, -1});
  for (const auto& [a, b] : t.edges) {
    const Point d = t.nodes[static_cast<std::size_t>(b)] - t.nodes[static_cast<std::size_t>(a)];
    for (int di = 0; di < 4; ++di) {
      if (dir_offset(static_cast<Dir>(di)) == d) {
        neighbor[static_cast<std::size_t>(a)][static_cast<std::size_t>(di)] = b;
        neighbor[static_cast<std::size_t>(b)][static_cast<std::size_t>(opposite(static_cast<Dir>(di)))] = a;
      }
    }
  }

  GadgetWalk gw{neighbor, t.nodes, {}};
  gw.walk.reserve(static_cast<std::size_t>(12 * k + 1));
  const int root = 0;
  gw.walk.push_back(gw.corner_start(root, Dir::S));
  for (Dir side : GadgetWalk::kSides) gw.transition(root, side);
  gw.walk.pop_back();  // closing corner duplicates the start

  // The boundary walk reads (H P P)^(4k); the chain wants (P H P)^(4k), so
  // start one node earlier in the cycle.
  const std::size_t total = gw.walk.size();
  std::vector<Point> pts(total);
  for (std::size_t i = 0; i < total; ++i) pts[i] = gw.walk[(i + total - 1) % total];

  const std::size_t steps = topology == Topology::closed ? total : total - 1;
  std::string s;
  s.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const Point d = pts[(i + 1) % total] - pts[i];
    for (int di = 0; di < 4; ++di)
      if (dir_offset(static_cast<Dir>(di)) == d) s.push_back(dir_char(static_cast<Dir>(di)));
  }
  return Folding{std::move(s)};
}

std::vector<LatticeTree> enumerate_lattice_trees(int k) {
  require_positive(k, "enumerate_lattice_trees");
  if (k > 8) throw limit_error("lattice tree enumeration is capped at 8 nodes");

  using PointSet = std::vector<Point>;  // sorted, canonical translation
  const auto canonical = [](PointSet s) {
    std::sort(s.begin(), s.end());
    const Point o = s.front();
    for (Point& p : s) p = p - o;
    return s;
  };

  std::set<PointSet> level{canonical({Point{0, 0}})};
  for (int size = 2; size <= k; ++size) {
    std::set<PointSet> grown;
    for (const PointSet& s : level) {
      for (const Point& p : s) {
        for (int di = 0; di < 4; ++di) {
          const Point q = p + dir_offset(static_cast<Dir>(di));
          if (std::binary_search(s.begin(), s.end(), q)) continue;
          PointSet t = s;
          t.push_back(q);
          grown.insert(canonical(std::move(t)));
        }
      }
    }
    level = std::move(grown);
  }

  std::vector<LatticeTree> out;
  for (const PointSet& s : level) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        const Point d = s[static_cast<std::size_t>(j)] - s[static_cast<std::size_t>(i)];
        if (std::abs(d.x) + std::abs(d.y) == 1) edges.emplace_back(i, j);
      }
    }
    if (static_cast<int>(edges.size()) != k - 1) continue;  // adjacency has a cycle
    out.push_back(make_lattice_tree(s, std::move(edges)));
  }
  return out;
}

}  // namespace hpfold
