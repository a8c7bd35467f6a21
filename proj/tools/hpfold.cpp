// Command-line surface for the HP-model engine: exact enumeration of optimal
// foldings, family generators, exhaustive uniqueness surveys, claim
// verification suites, and ASCII/SVG rendering.
//
// Exit codes: 0 success, 1 failed verify claim, 2 invalid input,
//             3 resource limit, 4 corrupt checkpoint.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hpfold/families.hpp"
#include "hpfold/json_io.hpp"
#include "hpfold/render.hpp"
#include "hpfold/search.hpp"
#include "hpfold/survey.hpp"

namespace {

using nlohmann::json;
using namespace hpfold;

constexpr int kCliMaxChainLength = 64;

struct Shared {
  std::string format;  // empty -> per-command default
  int workers = 1;
  std::string checkpoint;
  std::size_t store_limit = 16;
  bool quotient = true;
};

std::string fmt3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

Topology topo_from_flags(bool open_flag, bool closed_flag, Topology fallback) {
  if (open_flag) return Topology::open;
  if (closed_flag) return Topology::closed;
  return fallback;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::trunc);
  if (!out) throw input_error("cannot write output file " + out_path);
  out << text;
}

// ---------------------------------------------------------------------- //

int cmd_enumerate(const Shared& g, const std::string& chain_text, bool open_flag,
                  bool closed_flag, int split_depth, bool no_pruning) {
  const Chain chain =
      parse_chain(chain_text, topo_from_flags(open_flag, closed_flag, Topology::open));
  if (chain.size() > kCliMaxChainLength)
    throw limit_error("chains longer than " + std::to_string(kCliMaxChainLength) +
                      " nodes are not supported by the CLI");
  SearchOptions so;
  so.store_limit = g.store_limit;
  so.workers = g.workers;
  so.parallel_split_depth = split_depth;
  so.quotient_chain_automorphisms = g.quotient;
  so.use_pruning = !no_pruning;
  const SearchResult r = enumerate_optimal(chain, so);

  const std::string format = g.format.empty() ? "json" : g.format;
  if (format == "json") {
    std::cout << json(r).dump(2) << '\n';
  } else if (format == "text") {
    std::cout << "chain " << chain.labels << ' ' << topology_name(chain.topology) << '\n'
              << "optimum " << r.optimum << '\n'
              << "class_count " << r.class_count << '\n';
    for (const Folding& f : r.representatives) std::cout << "representative " << f.steps << '\n';
    std::cout << "nodes_expanded " << r.stats.nodes_expanded << '\n'
              << "branches_pruned " << r.stats.branches_pruned << '\n'
              << "wall_time_s " << r.stats.wall_time_s << '\n';
  } else {
    throw input_error("enumerate supports --format json|text");
  }
  return 0;
}

int cmd_family(const Shared& g, const std::string& name, int k, bool open_flag,
               bool closed_flag) {
  const std::string format = g.format.empty() ? "text" : g.format;
  json j;
  std::string text;
  if (name == "S") {
    const Chain c = gen_S(k);
    j = c;
    text = c.labels;
  } else if (name == "F") {
    const Folding f = gen_F(k);
    j = f;
    text = f.steps;
  } else if (name == "Z") {
    const Chain c = gen_Z(k);
    j = c;
    text = c.labels;
  } else if (name == "Zstd") {
    const Folding f = standard_Z_embedding(k);
    j = f;
    text = f.steps;
  } else if (name == "PHP") {
    const Chain c = gen_PHP(k, topo_from_flags(open_flag, closed_flag, Topology::open));
    j = c;
    text = c.labels;
  } else {
    throw input_error("unknown family \"" + name + "\" (want S, F, Z, Zstd or PHP)");
  }
  if (format == "json")
    std::cout << j.dump(2) << '\n';
  else if (format == "text")
    std::cout << text << '\n';
  else
    throw input_error("family supports --format json|text");
  return 0;
}

int cmd_survey(const Shared& g, int n, bool closed_flag, const std::string& csv,
               std::uint64_t block_size, std::uint64_t max_chains) {
  SweepOptions so;
  so.workers = g.workers;
  so.checkpoint_path = g.checkpoint;
  so.csv_path = csv;
  so.block_size = block_size;
  so.max_chains = max_chains;
  so.progress = [n](std::uint64_t done, std::uint64_t total) {
    std::fprintf(stderr, "[survey] n=%d %llu/%llu\n", n,
                 static_cast<unsigned long long>(done),
                 static_cast<unsigned long long>(total));
  };
  const SurveyRecord rec =
      sweep(n, closed_flag ? Topology::closed : Topology::open, so);

  const std::string format = g.format.empty() ? "json" : g.format;
  if (format == "json") {
    std::cout << json(rec).dump(2) << '\n';
  } else if (format == "text") {
    std::cout << "n " << rec.n << " topology " << topology_name(rec.topology) << " unique "
              << rec.unique_count << " total " << rec.total_count << " percentage "
              << fmt3(rec.percentage) << " cursor " << rec.cursor << " elapsed_s "
              << rec.elapsed_s << '\n';
  } else {
    throw input_error("survey supports --format json|text");
  }
  return 0;
}

// ---------------------------------------------------------------------- //

struct Verifier {
  bool all_ok = true;

  void claim(const std::string& name, const std::string& expected,
             const std::string& observed) {
    const bool ok = expected == observed;
    all_ok = all_ok && ok;
    std::cout << (ok ? "[ ok ] " : "[FAIL] ") << name << ": expected " << expected
              << ", observed " << observed << '\n';
  }
  template <typename T, typename U>
  void claim_eq(const std::string& name, const T& expected, const U& observed) {
    claim(name, std::to_string(expected), std::to_string(observed));
  }
  void claim_true(const std::string& name, bool observed) {
    claim(name, "true", observed ? "true" : "false");
  }
};

int cmd_verify(const Shared& g, const std::string& suite) {
  Verifier v;
  SearchOptions so;
  so.workers = g.workers;
  so.store_limit = 16;
  so.quotient_chain_automorphisms = g.quotient;

  if (suite == "sk") {
    for (int k = 1; k <= 7; ++k) {
      const Chain s = gen_S(k);
      const SearchResult r = enumerate_optimal(s, so);
      v.claim_eq("S_" + std::to_string(k) + " optimum", k - 1, r.optimum);
      v.claim_eq("S_" + std::to_string(k) + " classes", 1, r.class_count);
      v.claim_true("S_" + std::to_string(k) + " representative is F_" + std::to_string(k),
                   same_optimal_class(s, r.representatives.at(0), gen_F(k), g.quotient));
    }
  } else if (suite == "z-even") {
    for (int j = 1; j <= 4; ++j) {
      const Chain z = gen_Z(2 * j);
      const Folding std_fold = standard_Z_embedding(j);
      const SearchResult r = enumerate_optimal(z, so);
      v.claim_eq("Z_" + std::to_string(2 * j) + " optimum",
                 contacts(z, std_fold).count(), r.optimum);
      v.claim_eq("Z_" + std::to_string(2 * j) + " classes", 1, r.class_count);
      v.claim_true("Z_" + std::to_string(2 * j) + " representative is the standard embedding",
                   same_optimal_class(z, r.representatives.at(0), std_fold, g.quotient));
    }
  } else if (suite == "z-odd") {
    for (int k : {1, 3, 5, 7}) {
      const SearchResult r = enumerate_optimal(gen_Z(k), so);
      v.claim_eq("Z_" + std::to_string(k) + " classes", k <= 3 ? 1 : 2, r.class_count);
    }
  } else if (suite == "php") {
    for (Topology topo : {Topology::open, Topology::closed}) {
      SearchOptions wide = so;
      wide.store_limit = 1u << 20;
      const SearchResult r = enumerate_optimal(gen_PHP(1, topo), wide);
      const std::string tag = std::string("(PHP)^4 ") + std::string(topology_name(topo));
      v.claim_eq(tag + " optimum", 4, r.optimum);
      bool all_cycles = !r.representatives.empty();
      for (const Folding& f : r.representatives) {
        const BondGraphShape s = bond_graph_shape(contacts(gen_PHP(1, topo), f));
        all_cycles = all_cycles && s.kind == BondGraphKind::disjoint_even_cycles &&
                     s.component_sizes == std::vector<int>{4};
      }
      v.claim_true(tag + " every optimum is one 4-cycle", all_cycles);
    }
    for (int k = 1; k <= 3; ++k) {
      for (Topology topo : {Topology::open, Topology::closed}) {
        const Chain chain = gen_PHP(k, topo);
        bool ok = true;
        for (const LatticeTree& t : enumerate_lattice_trees(k)) {
          const Folding f = tree_to_folding(t, topo);
          const BondGraph g2 = contacts(chain, f);
          const BondGraphShape s = bond_graph_shape(g2);
          ok = ok && g2.count() == 4 * k &&
               s.kind == BondGraphKind::disjoint_even_cycles &&
               s.component_sizes == std::vector<int>(static_cast<std::size_t>(k), 4);
        }
        v.claim_true("(PHP)^" + std::to_string(4 * k) + " " +
                         std::string(topology_name(topo)) +
                         " lattice-tree foldings reach 4k contacts in k 4-cycles",
                     ok);
      }
    }
  } else if (suite == "table1-small") {
    struct Row {
      int n;
      std::uint64_t unique;
      const char* pct;
    };
    for (const Row row : {Row{11, 65, "3.174"}, Row{12, 88, "2.148"}}) {
      SweepOptions sw;
      sw.workers = g.workers;
      const SurveyRecord rec = sweep(row.n, Topology::open, sw);
      v.claim_eq("n=" + std::to_string(row.n) + " unique", row.unique, rec.unique_count);
      v.claim_eq("n=" + std::to_string(row.n) + " total", std::uint64_t{1} << row.n,
                 rec.total_count);
      v.claim("n=" + std::to_string(row.n) + " percentage", row.pct, fmt3(rec.percentage));
    }
  } else {
    throw input_error("unknown verify suite \"" + suite +
                      "\" (want sk, z-even, z-odd, php or table1-small)");
  }
  std::cout << (v.all_ok ? "verify: all claims hold\n" : "verify: FAILURES\n");
  return v.all_ok ? 0 : 1;
}

int cmd_render(const Shared& g, const std::string& chain_text, const std::string& folding_text,
               const std::string& family, int k, bool open_flag, bool closed_flag,
               const std::string& out_path) {
  Chain chain;
  Folding folding;
  if (!family.empty()) {
    if (family == "F") {
      chain = gen_S(k);
      folding = gen_F(k);
    } else if (family == "Zstd") {
      chain = gen_Z(2 * k);
      folding = standard_Z_embedding(k);
    } else {
      throw input_error("render supports --family F|Zstd");
    }
  } else {
    if (chain_text.empty() || folding_text.empty())
      throw input_error("render needs --chain and --folding, or --family and --k");
    chain = parse_chain(chain_text, topo_from_flags(open_flag, closed_flag, Topology::open));
    folding = parse_folding(folding_text);
  }
  const std::string format = g.format.empty() ? "ascii" : g.format;
  emit(render(chain, folding, render_format_from_name(format)), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hpfold: exact optimal-folding engine for the square-lattice HP model"};
  app.require_subcommand(1);

  Shared g;
  app.add_option("--format", g.format, "Output format (per-command default)");
  app.add_option("--workers", g.workers, "Worker threads");
  app.add_option("--checkpoint", g.checkpoint, "Checkpoint file for resumable sweeps");
  app.add_option("--store-limit", g.store_limit, "Max representatives retained");
  app.add_flag("--quotient-automorphisms,!--no-quotient-automorphisms", g.quotient,
               "Quotient classes by label-preserving chain automorphisms (default on; "
               "turn off to count labeled embeddings)");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate all optimal foldings");
  std::string chain_text;
  bool open_flag = false, closed_flag = false, no_pruning = false;
  int split_depth = 0;
  enumerate->add_option("--chain", chain_text, "HP string")->required();
  auto* eo = enumerate->add_flag("--open", open_flag, "Open topology (default)");
  auto* ec = enumerate->add_flag("--closed", closed_flag, "Closed topology");
  eo->excludes(ec);
  ec->excludes(eo);
  enumerate->add_option("--split-depth", split_depth, "Parallel work-split prefix depth");
  enumerate->add_flag("--no-pruning", no_pruning, "Disable branch-and-bound pruning");
  enumerate->fallthrough();

  auto* family = app.add_subcommand("family", "Generate a named chain or folding");
  std::string family_name;
  int family_k = 0;
  bool f_open = false, f_closed = false;
  family->add_option("name", family_name, "S | F | Z | Zstd | PHP")->required();
  family->add_option("k", family_k, "Family parameter")->required();
  auto* fo = family->add_flag("--open", f_open, "Open topology (PHP only; default)");
  auto* fc = family->add_flag("--closed", f_closed, "Closed topology (PHP only)");
  fo->excludes(fc);
  fc->excludes(fo);
  family->fallthrough();

  auto* survey_cmd = app.add_subcommand("survey", "Sweep all 2^n chains of length n");
  int survey_n = 0;
  bool s_closed = false;
  std::string survey_csv;
  std::uint64_t block_size = 256, max_chains = 0;
  survey_cmd->add_option("n", survey_n, "Chain length")->required();
  survey_cmd->add_flag("--closed", s_closed, "Closed topology (default open)");
  survey_cmd->add_option("--csv", survey_csv, "Write per-chain detail CSV on completion");
  survey_cmd->add_option("--block-size", block_size, "Chains per checkpointed block");
  survey_cmd->add_option("--max-chains", max_chains,
                         "Stop after this many chains this run (0 = all)");
  survey_cmd->fallthrough();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "sk | z-even | z-odd | php | table1-small")->required();
  verify->fallthrough();

  auto* render_cmd = app.add_subcommand("render", "Draw an embedded chain");
  std::string r_chain, r_folding, r_family, r_out;
  int r_k = 0;
  bool r_open = false, r_closed = false;
  render_cmd->add_option("--chain", r_chain, "HP string");
  render_cmd->add_option("--folding", r_folding, "Direction string over ENWS");
  render_cmd->add_option("--family", r_family, "F | Zstd");
  render_cmd->add_option("--k", r_k, "Family parameter");
  auto* ro = render_cmd->add_flag("--open", r_open, "Open topology (default)");
  auto* rc = render_cmd->add_flag("--closed", r_closed, "Closed topology");
  ro->excludes(rc);
  rc->excludes(ro);
  render_cmd->add_option("--out", r_out, "Output file (default stdout)");
  render_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(enumerate))
      return cmd_enumerate(g, chain_text, open_flag, closed_flag, split_depth, no_pruning);
    if (app.got_subcommand(family))
      return cmd_family(g, family_name, family_k, f_open, f_closed);
    if (app.got_subcommand(survey_cmd))
      return cmd_survey(g, survey_n, s_closed, survey_csv, block_size, max_chains);
    if (app.got_subcommand(verify)) return cmd_verify(g, suite);
    if (app.got_subcommand(render_cmd))
      return cmd_render(g, r_chain, r_folding, r_family, r_k, r_open, r_closed, r_out);
  } catch (const checkpoint_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const limit_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
