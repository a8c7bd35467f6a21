#include "hpfold/json_io.hpp"

namespace hpfold {

using nlohmann::json;

void to_json(json& j, const Chain& c) {
  j = json{{"labels", c.labels}, {"topology", topology_name(c.topology)}};
}

void from_json(const json& j, Chain& c) {
  c = parse_chain(j.at("labels").get<std::string>(),
                  topology_from_name(j.at("topology").get<std::string>()));
}

void to_json(json& j, const Folding& f) { j = json{{"steps", f.steps}}; }

void from_json(const json& j, Folding& f) {
  f = parse_folding(j.at("steps").get<std::string>());
}

void to_json(json& j, const BondGraph& g) { j = json{{"contacts", g.contacts}}; }

void from_json(const json& j, BondGraph& g) {
  g.contacts = j.at("contacts").get<std::vector<std::pair<int, int>>>();
}

void to_json(json& j, const MissingBondEntry& e) {
  std::string walls;
  for (Wall w : e.walls) walls.push_back(wall_char(w));
  j = json{{"node", e.node},
           {"bond_degree", e.bond_degree},
           {"internal_missing", e.internal_missing},
           {"external_missing", e.external_missing},
           {"walls", walls}};
}

void from_json(const json& j, MissingBondEntry& e) {
  e.node = j.at("node").get<int>();
  e.bond_degree = j.at("bond_degree").get<int>();
  e.internal_missing = j.at("internal_missing").get<int>();
  e.external_missing = j.at("external_missing").get<int>();
  e.walls.clear();
  for (char c : j.at("walls").get<std::string>()) {
    switch (c) {
      case 'N': e.walls.push_back(Wall::N); break;
      case 'S': e.walls.push_back(Wall::S); break;
      case 'E': e.walls.push_back(Wall::E); break;
      case 'W': e.walls.push_back(Wall::W); break;
      default: throw input_error(std::string("invalid wall character '") + c + "'");
    }
  }
}

void to_json(json& j, const MissingBondReport& r) {
  j = json{{"nodes", r.nodes},
           {"total_internal", r.total_internal},
           {"total_external", r.total_external}};
}

void from_json(const json& j, MissingBondReport& r) {
  r.nodes = j.at("nodes").get<std::vector<MissingBondEntry>>();
  r.total_internal = j.at("total_internal").get<int>();
  r.total_external = j.at("total_external").get<int>();
}

void to_json(json& j, const BondGraphShape& s) {
  const char* kind = s.kind == BondGraphKind::acyclic_path ? "acyclic_path"
                     : s.kind == BondGraphKind::disjoint_even_cycles
                         ? "disjoint_even_cycles"
                         : "other";
  j = json{{"kind", kind}, {"component_sizes", s.component_sizes}};
}

void to_json(json& j, const SearchResult& r) {
  json reps = json::array();
  for (const Folding& f : r.representatives) reps.push_back(f.steps);
  j = json{{"chain", r.chain},
           {"optimum", r.optimum},
           {"class_count", r.class_count},
           {"representatives", reps},
           {"stats",
            {{"nodes_expanded", r.stats.nodes_expanded},
             {"branches_pruned", r.stats.branches_pruned},
             {"wall_time_s", r.stats.wall_time_s}}}};
}

void from_json(const json& j, SearchResult& r) {
  r.chain = j.at("chain").get<Chain>();
  r.optimum = j.at("optimum").get<int>();
  r.class_count = j.at("class_count").get<std::uint64_t>();
  r.representatives.clear();
  for (const auto& s : j.at("representatives"))
    r.representatives.push_back(parse_folding(s.get<std::string>()));
  const auto& st = j.at("stats");
  r.stats.nodes_expanded = st.at("nodes_expanded").get<std::uint64_t>();
  r.stats.branches_pruned = st.at("branches_pruned").get<std::uint64_t>();
  r.stats.wall_time_s = st.at("wall_time_s").get<double>();
}

void to_json(json& j, const SurveyRecord& r) {
  j = json{{"n", r.n},
           {"topology", topology_name(r.topology)},
           {"unique_count", r.unique_count},
           {"total_count", r.total_count},
           {"percentage", r.percentage},
           {"engine_version", r.engine_version},
           {"elapsed_s", r.elapsed_s},
           {"cursor", r.cursor}};
}

void from_json(const json& j, SurveyRecord& r) {
  r.n = j.at("n").get<int>();
  r.topology = topology_from_name(j.at("topology").get<std::string>());
  r.unique_count = j.at("unique_count").get<std::uint64_t>();
  r.total_count = j.at("total_count").get<std::uint64_t>();
  r.percentage = j.at("percentage").get<double>();
  r.engine_version = j.at("engine_version").get<std::string>();
  r.elapsed_s = j.at("elapsed_s").get<double>();
  r.cursor = j.at("cursor").get<std::uint64_t>();
}

void to_json(json& j, const LatticeTree& t) {
  json nodes = json::array();
  for (const Point& p : t.nodes) nodes.push_back(json::array({p.x, p.y}));
  j = json{{"nodes", nodes}, {"edges", t.edges}};
}

void from_json(const json& j, LatticeTree& t) {
  std::vector<Point> nodes;
  for (const auto& p : j.at("nodes"))
    nodes.push_back(Point{p.at(0).get<int>(), p.at(1).get<int>()});
  auto edges = j.at("edges").get<std::vector<std::pair<int, int>>>();
  t = make_lattice_tree(std::move(nodes), std::move(edges));
}

}  // namespace hpfold
