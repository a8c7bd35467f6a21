#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "hpfold/core.hpp"
#include "hpfold/families.hpp"
#include "hpfold/json_io.hpp"
#include "hpfold/render.hpp"
#include "test_util.hpp"

using namespace hpfold;
namespace tu = hpfold::testutil;

TEST_CASE("parse_chain accepts valid chains and rejects bad ones") {
  const Chain s2 = parse_chain("PHPPHP", Topology::closed);
  CHECK(s2.size() == 6);
  CHECK(s2.h_count() == 2);
  CHECK(s2 == gen_S(2));

  CHECK(parse_chain("H", Topology::open).size() == 1);

  CHECK_THROWS_AS(parse_chain("HPH", Topology::closed), input_error);  // odd closed
  CHECK_THROWS_AS(parse_chain("HP", Topology::closed), input_error);   // too short
  CHECK_THROWS_AS(parse_chain("", Topology::open), input_error);
  CHECK_THROWS_AS(parse_chain("HPX", Topology::open), input_error);
  CHECK_THROWS_AS(parse_chain("hp", Topology::open), input_error);
}

TEST_CASE("embed places walks and rejects invalid ones") {
  const Embedding pts = embed(gen_S(2), gen_F(2));  // EESWWN
  const Embedding want{{0, 0}, {1, 0}, {2, 0}, {2, -1}, {1, -1}, {0, -1}};
  CHECK(pts == want);

  CHECK(embed(parse_chain("HH", Topology::open), parse_folding("E")) ==
        Embedding{{0, 0}, {1, 0}});

  // immediate reversal revisits the origin
  CHECK_THROWS_AS(embed(parse_chain("HHH", Topology::open), parse_folding("EW")), input_error);
  // closed walk that does not return
  CHECK_THROWS_AS(walk_points(parse_folding("EENN"), Topology::closed), input_error);
  // length mismatch
  CHECK_THROWS_AS(embed(parse_chain("HH", Topology::open), parse_folding("EE")), input_error);
  // single node, empty folding
  CHECK(embed(parse_chain("H", Topology::open), Folding{""}) == Embedding{{0, 0}});
}

TEST_CASE("contacts finds qualifying pairs only") {
  CHECK(contacts(gen_S(2), gen_F(2)).contacts ==
        std::vector<std::pair<int, int>>{{1, 4}});
  CHECK(contacts(parse_chain("PPPPPP", Topology::closed), gen_F(2)).count() == 0);
  // one 4-cycle for the 12-node pinwheel
  const BondGraph g = contacts(gen_PHP(1, Topology::closed), parse_folding("ESENENWNWSWS"));
  CHECK(g.count() == 4);
  CHECK(bond_graph_shape(g).kind == BondGraphKind::disjoint_even_cycles);
  CHECK(bond_graph_shape(g).component_sizes == std::vector<int>{4});
}

TEST_CASE("max_contact_bound follows the degree argument") {
  CHECK(max_contact_bound(gen_Z(8)) == 9);       // open, h = 8
  CHECK(max_contact_bound(gen_S(2)) == 2);       // closed, h = 2
  CHECK(max_contact_bound(parse_chain("PPP", Topology::open)) == 1);  // vacuous
}

TEST_CASE("canonicalize picks the least dihedral image") {
  CHECK(canonicalize(parse_folding("N"), Topology::open).steps == "E");

  const Folding f = parse_folding("EESWWN");
  CHECK(canonicalize(canonicalize(f, Topology::closed), Topology::closed) ==
        canonicalize(f, Topology::closed));

  // all 8 images of F_3 canonicalize to one string
  std::set<std::string> forms;
  for (const Folding& img : dihedral_images(gen_F(3)))
    forms.insert(canonicalize(img, Topology::closed).steps);
  CHECK(forms.size() == 1);

  CHECK_THROWS_AS(canonicalize(parse_folding("EW"), Topology::open), input_error);
}

TEST_CASE("isometric compares dihedral orbits") {
  CHECK(isometric(parse_folding("E"), parse_folding("S"), Topology::open));
  CHECK(isometric(parse_folding("EN"), parse_folding("ES"), Topology::open));
  CHECK_FALSE(isometric(parse_folding("EEN"), parse_folding("ENE"), Topology::open));
  CHECK_THROWS_AS(isometric(parse_folding("E"), parse_folding("EE"), Topology::open),
                  input_error);
}

TEST_CASE("missing bonds: standard Z embedding has 4 external") {
  const MissingBondReport r = missing_bonds(gen_Z(8), standard_Z_embedding(4));
  CHECK(r.total_missing() == 4);
  CHECK(r.total_external == 4);
  CHECK(r.total_internal == 0);
}

TEST_CASE("missing bonds: degenerate single-node chain reports 4") {
  const MissingBondReport r = missing_bonds(parse_chain("H", Topology::open), Folding{""});
  REQUIRE(r.nodes.size() == 1);
  CHECK(r.nodes[0].bond_degree == 0);
  CHECK(r.nodes[0].missing() == 4);
  CHECK(r.total_external == 4);  // every slot leaves the one-point bounding box
}

TEST_CASE("missing bonds: S_2 folded by F_2") {
  const MissingBondReport r = missing_bonds(gen_S(2), gen_F(2));
  REQUIRE(r.nodes.size() == 2);
  for (const MissingBondEntry& e : r.nodes) {
    CHECK(e.bond_degree == 1);
    CHECK(e.missing() == 1);
  }
}

TEST_CASE("missing bond degree identity on random foldings") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const Topology topo =
        (n >= 4 && n % 2 == 0 && (rng() & 1)) ? Topology::closed : Topology::open;
    const Chain chain = tu::random_chain(rng, n, topo);
    const Folding f = tu::random_folding(rng, n, topo);
    const MissingBondReport r = missing_bonds(chain, f);
    for (const MissingBondEntry& e : r.nodes) {
      const bool endpoint =
          topo == Topology::open && (e.node == 0 || e.node == n - 1);
      const int slots = n == 1 ? 4 : endpoint ? 3 : 2;
      CHECK(e.bond_degree + e.missing() == slots);
      CHECK(static_cast<int>(e.walls.size()) == e.external_missing);
    }
  }
}

TEST_CASE("bond graph shape classification") {
  CHECK(bond_graph_shape(BondGraph{}).kind == BondGraphKind::acyclic_path);
  CHECK(bond_graph_shape(BondGraph{}).component_sizes.empty());

  const BondGraphShape path = bond_graph_shape(contacts(gen_S(8), gen_F(8)));
  CHECK(path.kind == BondGraphKind::acyclic_path);
  CHECK(path.component_sizes == std::vector<int>{8});
  CHECK(contacts(gen_S(8), gen_F(8)).count() == 7);

  // two disjoint 4-cycles
  BondGraph two;
  two.contacts = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}};
  const BondGraphShape s = bond_graph_shape(two);
  CHECK(s.kind == BondGraphKind::disjoint_even_cycles);
  CHECK(s.component_sizes == std::vector<int>{4, 4});

  // a triangle is neither
  BondGraph tri;
  tri.contacts = {{0, 1}, {1, 2}, {0, 2}};
  CHECK(bond_graph_shape(tri).kind == BondGraphKind::other);

  // two disjoint paths are "other" as well
  BondGraph paths;
  paths.contacts = {{0, 1}, {2, 3}};
  CHECK(bond_graph_shape(paths).kind == BondGraphKind::other);
}

TEST_CASE("contact structure invariants on random inputs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 15);
    const Topology topo =
        (n >= 4 && n % 2 == 0 && (rng() & 1)) ? Topology::closed : Topology::open;
    const Chain chain = tu::random_chain(rng, n, topo);
    const Folding f = tu::random_folding(rng, n, topo);

    // no immediate reversals in a valid folding
    for (const char* bad : {"EW", "WE", "NS", "SN"})
      CHECK(f.steps.find(bad) == std::string::npos);

    const BondGraph g = contacts(chain, f);
    CHECK(g.count() <= max_contact_bound(chain));
    for (const auto& [i, j] : g.contacts) {
      CHECK((i + j) % 2 == 1);  // opposite parity
      if (topo == Topology::open) CHECK(j - i >= 3);
    }

    // contacts are invariant over the dihedral orbit
    for (const Folding& img : dihedral_images(f)) CHECK(contacts(chain, img) == g);
  }
}

TEST_CASE("ascii render of S_2/F_2 is the 3x2 rectangle with one bond") {
  const std::string art = render(gen_S(2), gen_F(2), RenderFormat::ascii);
  CHECK(art ==
        "P-H-P\n"
        "| : |\n"
        "P-H-P\n");
}

TEST_CASE("svg render is well-formed and structurally right") {
  const std::string svg = render(gen_Z(8), standard_Z_embedding(4), RenderFormat::svg);
  CHECK(tu::well_formed_xml(svg));

  const auto count = [&](const std::string& needle) {
    std::size_t c = 0, pos = 0;
    while ((pos = svg.find(needle, pos)) != std::string::npos) {
      ++c;
      pos += needle.size();
    }
    return c;
  };
  CHECK(count("<circle") == 16);
  CHECK(count("class=\"chain\"") == 15);
  CHECK(count("class=\"bond\"") == 7);
  CHECK(count("class=\"node-h\"") == 8);

  // closed chains draw the wrap-around edge too
  const std::string closed_svg = render(gen_S(2), gen_F(2), RenderFormat::svg);
  CHECK(tu::well_formed_xml(closed_svg));
  std::size_t edges = 0, pos = 0;
  while ((pos = closed_svg.find("class=\"chain\"", pos)) != std::string::npos) {
    ++edges;
    pos += 10;
  }
  CHECK(edges == 6);
}

TEST_CASE("json round trips") {
  using nlohmann::json;

  const Chain chain = gen_Z(5);
  CHECK(json(chain).get<Chain>() == chain);

  const Folding f = standard_Z_embedding(3);
  CHECK(json(f).get<Folding>() == f);

  const BondGraph g = contacts(gen_Z(6), standard_Z_embedding(3));
  CHECK(json(g).get<BondGraph>() == g);

  const MissingBondReport r = missing_bonds(gen_Z(6), standard_Z_embedding(3));
  CHECK(json(r).get<MissingBondReport>() == r);

  CHECK_THROWS_AS(json::parse("{\"labels\":\"HXH\",\"topology\":\"open\"}").get<Chain>(),
                  input_error);
}
