#include "hpfold/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <set>
#include <thread>

#include "hpfold/families.hpp"

namespace hpfold {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

std::vector<std::vector<int>> chain_automorphisms(const Chain& c) {
  const int n = c.size();
  std::vector<std::vector<int>> out;
  const auto label = [&](int i) { return c.labels[static_cast<std::size_t>(i)]; };

  if (c.topology == Topology::open) {
    bool palindrome = true;
    for (int i = 0; i < n; ++i)
      if (label(i) != label(n - 1 - i)) {
        palindrome = false;
        break;
      }
    if (palindrome && n > 1) {
      std::vector<int> rev(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) rev[static_cast<std::size_t>(i)] = n - 1 - i;
      out.push_back(std::move(rev));
    }
    return out;
  }

  for (int t = 0; t < n; ++t) {
    if (t != 0) {  // rotation i -> i + t
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) ok = label((i + t) % n) == label(i);
      if (ok) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = (i + t) % n;
        out.push_back(std::move(perm));
      }
    }
    {  // reflection i -> t - i
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) ok = label(((t - i) % n + n) % n) == label(i);
      if (ok) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = ((t - i) % n + n) % n;
        out.push_back(std::move(perm));
      }
    }
  }
  return out;
}

namespace {

Folding apply_automorphism(const Folding& f, Topology topo, const std::vector<int>& perm) {
  const Embedding pts = walk_points(f, topo);
  const int n = static_cast<int>(pts.size());
  std::string s;
  s.reserve(f.steps.size());
  const int steps = topo == Topology::closed ? n : n - 1;
  for (int t = 0; t < steps; ++t) {
    const Point d = pts[static_cast<std::size_t>(perm[static_cast<std::size_t>((t + 1) % n)])] -
                    pts[static_cast<std::size_t>(perm[static_cast<std::size_t>(t)])];
    bool found = false;
    for (int di = 0; di < 4; ++di) {
      if (dir_offset(static_cast<Dir>(di)) == d) {
        s.push_back(dir_char(static_cast<Dir>(di)));
        found = true;
        break;
      }
    }
    if (!found) throw input_error("permutation does not preserve chain adjacency");
  }
  return Folding{std::move(s)};
}

Folding extended_canonical_impl(const Chain& chain, const Folding& f,
                                const std::vector<std::vector<int>>& autos) {
  Folding best = canonicalize(f, chain.topology);
  for (const auto& perm : autos) {
    Folding img =
        canonicalize(apply_automorphism(f, chain.topology, perm), chain.topology);
    if (folding_less(img, best)) best = img;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Initial lower bound: run the chain's own family folding when the chain is
// recognized as S_k, Z_2j or (PHP)^4k, otherwise a deterministic greedy walk.
// Affects speed only; the search never trusts the seed beyond "achievable".
// ---------------------------------------------------------------------------

int greedy_seed(const Chain& chain) {
  const int n = chain.size();
  const bool closed = chain.topology == Topology::closed;
  const int w = 2 * n + 3, off = n + 1;
  std::vector<int16_t> board(static_cast<std::size_t>(w) * static_cast<std::size_t>(w), 0);
  const auto cell = [&](Point p) { return (p.y + off) * w + (p.x + off); };

  std::vector<Point> pts(static_cast<std::size_t>(n));
  pts[0] = {0, 0};
  board[static_cast<std::size_t>(cell(pts[0]))] = 1;
  int total = 0;
  for (int i = 1; i < n; ++i) {
    int best_gain = -1;
    Point best_np{};
    for (int di = 0; di < 4; ++di) {
      const Point np = pts[static_cast<std::size_t>(i - 1)] + dir_offset(static_cast<Dir>(di));
      if (board[static_cast<std::size_t>(cell(np))]) continue;
      if (closed && std::abs(np.x) + std::abs(np.y) > n - i) continue;
      int gain = 0;
      if (chain.is_h(i)) {
        for (int dj = 0; dj < 4; ++dj) {
          const Point q = np + dir_offset(static_cast<Dir>(dj));
          const int occ = board[static_cast<std::size_t>(cell(q))];
          if (!occ) continue;
          const int j = occ - 1;
          if (chain.is_h(j) && !chain_adjacent(i, j, n, chain.topology)) ++gain;
        }
      }
      if (gain > best_gain) {
        best_gain = gain;
        best_np = np;
      }
    }
    if (best_gain < 0) return -1;  // trapped
    pts[static_cast<std::size_t>(i)] = best_np;
    board[static_cast<std::size_t>(cell(best_np))] = static_cast<int16_t>(i + 1);
    total += best_gain;
  }
  if (closed) {
    const Point last = pts[static_cast<std::size_t>(n - 1)];
    if (std::abs(last.x) + std::abs(last.y) != 1) return -1;
  }
  return total;
}

int family_seed(const Chain& chain) {
  const int n = chain.size();
  if (chain.topology == Topology::closed && n >= 4) {
    const int k = (n - 2) / 2;
    if (k >= 1 && gen_S(k) == chain) return contacts(chain, gen_F(k)).count();
  }
  if (chain.topology == Topology::open && n >= 4 && n % 4 == 0) {
    const int k = n / 2;  // even by construction
    if (gen_Z(k) == chain) return contacts(chain, standard_Z_embedding(k / 2)).count();
  }
  if (n >= 12 && n % 12 == 0) {
    const int k = n / 12;
    if (gen_PHP(k, chain.topology) == chain) {
      std::vector<Point> nodes;
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < k; ++i) {
        nodes.push_back({i, 0});
        if (i > 0) edges.emplace_back(i - 1, i);
      }
      const Folding f = tree_to_folding(make_lattice_tree(nodes, edges), chain.topology);
      return contacts(chain, f).count();
    }
  }
  return greedy_seed(chain);
}

// ---------------------------------------------------------------------------
// The symmetry-reduced branch-and-bound enumerator.
//
// Dihedral reduction: step 0 is pinned to E and the first non-E step to N,
// which emits exactly the lexicographically least image of every orbit (the
// two E-starting images of an orbit differ first at the first N/S step).
//
// Admissible pruning bound: a contact still to be created pairs an H node
// that is currently unplaced (the later endpoint) with an H node of the
// opposite index parity. Charging one capacity unit per endpoint gives
//   future contacts <= min(cap_even, cap_odd, cap_unplaced)
// where an unplaced H contributes its maximum bond degree (2 interior,
// 3 endpoint) and a placed H contributes
// min(free neighbor cells, max degree - current bond degree).
// ---------------------------------------------------------------------------

struct Prefix {
  std::string steps;
  bool turned = false;
};

struct Collector {
  int best = -1;  // inherited at task start; only counts at the final optimum survive
  std::uint64_t count = 0;
  std::vector<std::string> reps;
  std::set<std::string> classes;  // quotient mode only
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;

  bool found_any(bool quotient) const { return quotient ? !classes.empty() : count > 0; }
};

class Searcher {
 public:
  Searcher(const Chain& chain, bool use_pruning, bool quotient,
           const std::vector<std::vector<int>>* autos, std::size_t store_limit,
           std::atomic<int>* shared_best)
      : chain_(chain),
        n_(chain.size()),
        closed_(chain.topology == Topology::closed),
        use_pruning_(use_pruning),
        quotient_(quotient),
        autos_(autos),
        store_limit_(store_limit),
        shared_best_(shared_best),
        w_(2 * n_ + 3),
        off_(n_ + 1) {
    ish_.resize(static_cast<std::size_t>(n_));
    maxdeg_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      ish_[static_cast<std::size_t>(i)] = chain.is_h(i) ? 1 : 0;
      maxdeg_[static_cast<std::size_t>(i)] =
          closed_ ? 2 : (i == 0 || i == n_ - 1) ? static_cast<int8_t>(n_ == 1 ? 4 : 3) : 2;
    }
    board_.resize(static_cast<std::size_t>(w_) * static_cast<std::size_t>(w_));
    pts_.resize(static_cast<std::size_t>(n_));
    cell_of_.resize(static_cast<std::size_t>(n_));
    freeslot_.resize(static_cast<std::size_t>(n_));
    bonddeg_.resize(static_cast<std::size_t>(n_));
    stepbuf_.assign(static_cast<std::size_t>(n_ - 1), '?');
  }

  /// All valid restricted prefixes of the given depth, in DFS order.
  void gen_prefixes(int depth, std::vector<Prefix>& out) {
    reset();
    place(0, {0, 0});
    gen_rec(0, false, depth, out);
  }

  void run_task(const Prefix& prefix, Collector* col) {
    col_ = col;
    reset();
    place(0, {0, 0});
    for (std::size_t t = 0; t < prefix.steps.size(); ++t) {
      stepbuf_[t] = prefix.steps[t];
      place(static_cast<int>(t) + 1, pts_[t] + dir_offset(dir_from_char(prefix.steps[t])));
      ++col_->nodes;
    }
    if (use_pruning_ && contacts_ + bound() < best_now()) {
      ++col_->pruned;
      return;
    }
    dfs(static_cast<int>(prefix.steps.size()), prefix.turned);
  }

 private:
  int cell(Point p) const { return (p.y + off_) * w_ + (p.x + off_); }

  void reset() {
    std::fill(board_.begin(), board_.end(), int16_t{0});
    std::fill(bonddeg_.begin(), bonddeg_.end(), int8_t{0});
    contacts_ = 0;
    cap_[0] = cap_[1] = cap_unplaced_ = 0;
    for (int i = 0; i < n_; ++i) {
      if (!ish_[static_cast<std::size_t>(i)]) continue;
      cap_[i & 1] += maxdeg_[static_cast<std::size_t>(i)];
      cap_unplaced_ += maxdeg_[static_cast<std::size_t>(i)];
    }
  }

  int contrib(int u) const {
    const std::size_t su = static_cast<std::size_t>(u);
    int c = maxdeg_[su] - bonddeg_[su];
    if (freeslot_[su] < c) c = freeslot_[su];
    return c < 0 ? 0 : c;
  }

  bool bonds_with(int i, int j) const {
    return ish_[static_cast<std::size_t>(i)] && ish_[static_cast<std::size_t>(j)] &&
           !chain_adjacent(i, j, n_, chain_.topology);
  }

  void place(int i, Point p) {
    const int ci = cell(p);
    int fs = 0;
    for (int di = 0; di < 4; ++di) {
      const int cj = cell(p + dir_offset(static_cast<Dir>(di)));
      const int occ = board_[static_cast<std::size_t>(cj)];
      if (!occ) {
        ++fs;
        continue;
      }
      const int j = occ - 1;
      const bool bond = bonds_with(i, j);
      if (ish_[static_cast<std::size_t>(j)]) {
        const int old = contrib(j);
        --freeslot_[static_cast<std::size_t>(j)];
        if (bond) ++bonddeg_[static_cast<std::size_t>(j)];
        cap_[j & 1] += contrib(j) - old;
      }
      if (bond) {
        ++contacts_;
        ++bonddeg_[static_cast<std::size_t>(i)];
      }
    }
    board_[static_cast<std::size_t>(ci)] = static_cast<int16_t>(i + 1);
    pts_[static_cast<std::size_t>(i)] = p;
    cell_of_[static_cast<std::size_t>(i)] = ci;
    freeslot_[static_cast<std::size_t>(i)] = static_cast<int8_t>(fs);
    if (ish_[static_cast<std::size_t>(i)]) {
      cap_unplaced_ -= maxdeg_[static_cast<std::size_t>(i)];
      cap_[i & 1] += contrib(i) - maxdeg_[static_cast<std::size_t>(i)];
    }
  }

  void unplace(int i) {
    if (ish_[static_cast<std::size_t>(i)]) {
      cap_[i & 1] -= contrib(i) - maxdeg_[static_cast<std::size_t>(i)];
      cap_unplaced_ += maxdeg_[static_cast<std::size_t>(i)];
    }
    board_[static_cast<std::size_t>(cell_of_[static_cast<std::size_t>(i)])] = 0;
    const Point p = pts_[static_cast<std::size_t>(i)];
    for (int di = 0; di < 4; ++di) {
      const int cj = cell(p + dir_offset(static_cast<Dir>(di)));
      const int occ = board_[static_cast<std::size_t>(cj)];
      if (!occ) continue;
      const int j = occ - 1;
      const bool bond = bonds_with(i, j);
      if (ish_[static_cast<std::size_t>(j)]) {
        const int old = contrib(j);
        ++freeslot_[static_cast<std::size_t>(j)];
        if (bond) --bonddeg_[static_cast<std::size_t>(j)];
        cap_[j & 1] += contrib(j) - old;
      }
      if (bond) {
        --contacts_;
        --bonddeg_[static_cast<std::size_t>(i)];
      }
    }
  }

  int bound() const {
    int b = cap_[0] < cap_[1] ? cap_[0] : cap_[1];
    return cap_unplaced_ < b ? cap_unplaced_ : b;
  }

  int best_now() const {
    const int s = shared_best_->load(std::memory_order_relaxed);
    return s > col_->best ? s : col_->best;
  }

  void gen_rec(int t, bool turned, int depth, std::vector<Prefix>& out) {
    if (t == depth || t == n_ - 1) {
      out.push_back(Prefix{stepbuf_.substr(0, static_cast<std::size_t>(t)), turned});
      return;
    }
    const Point cur = pts_[static_cast<std::size_t>(t)];
    for (int di = 0; di < 4; ++di) {
      if (t == 0 && di != 0) break;          // first step: E
      if (!turned && di != 0 && di != 1) continue;  // first turn: N
      const Point np = cur + dir_offset(static_cast<Dir>(di));
      if (board_[static_cast<std::size_t>(cell(np))]) continue;
      if (closed_ && std::abs(np.x) + std::abs(np.y) > n_ - t - 1) continue;
      stepbuf_[static_cast<std::size_t>(t)] = dir_char(static_cast<Dir>(di));
      place(t + 1, np);
      gen_rec(t + 1, turned || di == 1 || di == 3, depth, out);
      unplace(t + 1);
    }
  }

  void dfs(int t, bool turned) {
    if (t == n_ - 1) {
      leaf();
      return;
    }
    const Point cur = pts_[static_cast<std::size_t>(t)];
    for (int di = 0; di < 4; ++di) {
      if (t == 0 && di != 0) break;
      if (!turned && di != 0 && di != 1) continue;
      const Point np = cur + dir_offset(static_cast<Dir>(di));
      if (board_[static_cast<std::size_t>(cell(np))]) continue;
      if (closed_ && std::abs(np.x) + std::abs(np.y) > n_ - t - 1) continue;
      ++col_->nodes;
      stepbuf_[static_cast<std::size_t>(t)] = dir_char(static_cast<Dir>(di));
      place(t + 1, np);
      if (use_pruning_ && contacts_ + bound() < best_now()) {
        ++col_->pruned;
      } else {
        dfs(t + 1, turned || di == 1 || di == 3);
      }
      unplace(t + 1);
    }
  }

  void leaf() {
    char final_char = 0;
    if (closed_) {
      const Point last = pts_[static_cast<std::size_t>(n_ - 1)];
      // The distance feasibility cut plus parity guarantees |last| == 1 here.
      final_char = last.x == 1    ? 'W'
                   : last.x == -1 ? 'E'
                   : last.y == 1  ? 'S'
                                  : 'N';
    }
    const int c = contacts_;
    if (c < col_->best) return;
    if (c > col_->best) {
      col_->best = c;
      col_->count = 0;
      col_->reps.clear();
      col_->classes.clear();
      int cur = shared_best_->load(std::memory_order_relaxed);
      while (cur < c &&
             !shared_best_->compare_exchange_weak(cur, c, std::memory_order_relaxed)) {
      }
    }
    if (quotient_) {
      std::string s = stepbuf_;
      if (closed_) s.push_back(final_char);
      col_->classes.insert(extended_canonical(std::move(s)));
    } else {
      ++col_->count;
      if (col_->reps.size() < store_limit_) {
        std::string s = stepbuf_;
        if (closed_) s.push_back(final_char);
        col_->reps.push_back(std::move(s));
      }
    }
  }

  std::string extended_canonical(std::string steps) const {
    return extended_canonical_impl(chain_, Folding{std::move(steps)}, *autos_).steps;
  }

  const Chain& chain_;
  const int n_;
  const bool closed_;
  const bool use_pruning_;
  const bool quotient_;
  const std::vector<std::vector<int>>* autos_;
  const std::size_t store_limit_;
  std::atomic<int>* shared_best_;
  const int w_, off_;

  std::vector<int8_t> ish_, maxdeg_;
  std::vector<int16_t> board_;
  std::vector<Point> pts_;
  std::vector<int> cell_of_;
  std::vector<int8_t> freeslot_, bonddeg_;
  std::string stepbuf_;
  int contacts_ = 0;
  int cap_[2] = {0, 0};
  int cap_unplaced_ = 0;
  Collector* col_ = nullptr;
};

SearchResult trivial_single_node(const Chain& chain, Clock::time_point t0,
                                 std::size_t store_limit) {
  SearchResult r;
  r.chain = chain;
  r.optimum = 0;
  r.class_count = 1;  // the empty folding
  if (store_limit > 0) r.representatives = {Folding{""}};
  r.stats.wall_time_s = seconds_since(t0);
  return r;
}

}  // namespace

SearchResult enumerate_optimal(const Chain& chain, const SearchOptions& options) {
  validate(chain);
  if (options.parallel_split_depth < 0)
    throw input_error("parallel_split_depth must be nonnegative");
  if (options.workers < 1) throw input_error("workers must be at least 1");

  const auto t0 = Clock::now();
  const int n = chain.size();
  if (n == 1) return trivial_single_node(chain, t0, options.store_limit);

  std::vector<std::vector<int>> autos;
  if (options.quotient_chain_automorphisms) autos = chain_automorphisms(chain);
  // With no chain symmetry the quotient is a no-op; use the fast counting path.
  const bool quotient = options.quotient_chain_automorphisms && !autos.empty();

  int depth = options.parallel_split_depth;
  if (depth == 0 && options.workers > 1) depth = 4;
  depth = std::clamp(depth, 0, n - 1);

  std::atomic<int> shared_best{family_seed(chain)};

  Searcher prefix_gen(chain, options.use_pruning, quotient, &autos, options.store_limit,
                      &shared_best);
  std::vector<Prefix> tasks;
  prefix_gen.gen_prefixes(depth, tasks);

  std::vector<Collector> cols(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    Searcher s(chain, options.use_pruning, quotient, &autos, options.store_limit,
               &shared_best);
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      cols[i].best = shared_best.load(std::memory_order_relaxed);
      s.run_task(tasks[i], &cols[i]);
    }
  };

  const int nworkers = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(options.workers), tasks.size()));
  if (nworkers <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(nworkers - 1));
    for (int i = 0; i + 1 < nworkers; ++i) threads.emplace_back(worker);
    worker();
    for (auto& th : threads) th.join();
  }

  SearchResult result;
  result.chain = chain;
  int opt = -1;
  for (const Collector& c : cols) {
    result.stats.nodes_expanded += c.nodes;
    result.stats.branches_pruned += c.pruned;
    if (c.found_any(quotient) && c.best > opt) opt = c.best;
  }
  if (opt < 0) throw std::logic_error("search found no folding for a valid chain");
  result.optimum = opt;

  if (quotient) {
    std::set<std::string> all;
    for (Collector& c : cols)
      if (c.found_any(true) && c.best == opt) all.merge(c.classes);
    result.class_count = all.size();
    for (const std::string& s : all) {
      if (result.representatives.size() >= options.store_limit) break;
      result.representatives.push_back(Folding{s});
    }
  } else {
    for (Collector& c : cols) {
      if (!c.found_any(false) || c.best != opt) continue;
      result.class_count += c.count;
      for (std::string& s : c.reps) {
        if (result.representatives.size() >= options.store_limit) break;
        result.representatives.push_back(Folding{std::move(s)});
      }
    }
  }
  result.stats.wall_time_s = seconds_since(t0);
  return result;
}

SearchResult naive_oracle(const Chain& chain, int max_length,
                          bool quotient_chain_automorphisms) {
  validate(chain);
  if (chain.size() > max_length)
    throw limit_error("chain length " + std::to_string(chain.size()) +
                      " exceeds the naive enumeration bound " + std::to_string(max_length));

  const auto t0 = Clock::now();
  const int n = chain.size();
  if (n == 1) return trivial_single_node(chain, t0, 16);

  std::vector<std::vector<int>> autos;
  if (quotient_chain_automorphisms) autos = chain_automorphisms(chain);

  const bool closed = chain.topology == Topology::closed;
  const int w = 2 * n + 3, off = n + 1;
  std::vector<int8_t> board(static_cast<std::size_t>(w) * static_cast<std::size_t>(w), 0);
  const auto cell = [&](Point p) { return (p.y + off) * w + (p.x + off); };

  std::vector<Point> pts(static_cast<std::size_t>(n));
  std::string steps(static_cast<std::size_t>(n - 1), '?');
  int best = -1;
  std::set<std::string> classes;
  std::uint64_t nodes = 0;

  pts[0] = {0, 0};
  board[static_cast<std::size_t>(cell(pts[0]))] = 1;

  const auto visit_leaf = [&] {
    std::string s = steps;
    if (closed) {
      const Point last = pts[static_cast<std::size_t>(n - 1)];
      if (std::abs(last.x) + std::abs(last.y) != 1) return;
      s.push_back(last.x == 1 ? 'W' : last.x == -1 ? 'E' : last.y == 1 ? 'S' : 'N');
    }
    const Folding f{std::move(s)};
    const int c = contacts(chain, f).count();
    if (c < best) return;
    if (c > best) {
      best = c;
      classes.clear();
    }
    classes.insert(extended_canonical_impl(chain, f, autos).steps);
  };

  const auto rec = [&](auto&& self, int t) -> void {
    if (t == n - 1) {
      visit_leaf();
      return;
    }
    for (int di = 0; di < 4; ++di) {
      if (t == 0 && di != 0) break;  // first step pinned to E
      const Point np = pts[static_cast<std::size_t>(t)] + dir_offset(static_cast<Dir>(di));
      const int ci = cell(np);
      if (board[static_cast<std::size_t>(ci)]) continue;
      ++nodes;
      pts[static_cast<std::size_t>(t + 1)] = np;
      board[static_cast<std::size_t>(ci)] = 1;
      steps[static_cast<std::size_t>(t)] = dir_char(static_cast<Dir>(di));
      self(self, t + 1);
      board[static_cast<std::size_t>(ci)] = 0;
    }
  };
  rec(rec, 0);

  SearchResult r;
  r.chain = chain;
  r.optimum = best;
  r.class_count = classes.size();
  for (const std::string& s : classes) {
    if (r.representatives.size() >= 16) break;
    r.representatives.push_back(Folding{s});
  }
  r.stats.nodes_expanded = nodes;
  r.stats.wall_time_s = seconds_since(t0);
  return r;
}

bool is_unique(const Chain& chain, const SearchOptions& options) {
  SearchOptions o = options;
  o.store_limit = 0;
  return enumerate_optimal(chain, o).class_count == 1;
}

Folding class_canonical(const Chain& chain, const Folding& folding,
                        bool quotient_chain_automorphisms) {
  validate(chain);
  if (folding.size() != chain.step_count())
    throw input_error("folding length does not fit the chain");
  if (!quotient_chain_automorphisms) return canonicalize(folding, chain.topology);
  return extended_canonical_impl(chain, folding, chain_automorphisms(chain));
}

bool same_optimal_class(const Chain& chain, const Folding& a, const Folding& b,
                        bool quotient_chain_automorphisms) {
  return class_canonical(chain, a, quotient_chain_automorphisms) ==
         class_canonical(chain, b, quotient_chain_automorphisms);
}

}  // namespace hpfold
