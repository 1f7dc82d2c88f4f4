// Exact gamma_t / gamma_tc by iterative deepening on the target size k.
//
// A level k is decided by one of two searches over 64-bit vertex masks:
//
//  direct      Branch on the undominated vertex with the fewest available
//              dominators, adding one of them per child; siblings already
//              tried are excluded below. Every total dominating set T with
//              |T| <= k contains some leaf D of this tree. For gamma_tc, T
//              exists over D iff G[V \ D] has a component with >= n-k
//              vertices (a connected set contains connected subsets of every
//              smaller size), which is also a monotone prune on the way down.
//
//  complement  Enumerate connected induced sets C with |C| = n-k and test
//              whether V \ C is total dominating. Cheap when k is close to n.
//
// Levels below the answer are refuted exhaustively. At the answer level the
// canonical mode keeps searching and returns the lexicographically least T.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "mgdom/domination.hpp"
#include "mgdom/error.hpp"
#include "mgdom/kernels.hpp"

namespace mgdom {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr Mask bit(int v) { return Mask{1} << v; }
int count(Mask m) { return std::popcount(m); }
int lowest(Mask m) { return std::countr_zero(m); }

/// For equal-size sets: the one holding the lowest differing element sorts
/// first as a sorted list.
bool lex_less_mask(Mask a, Mask b) {
  const Mask diff = a ^ b;
  return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

struct Problem {
  int n = 0;
  Mask all = 0;
  std::vector<Mask> adj;
  int max_degree = 0;
  Mask leaves = 0;
  Mask supports = 0;
  const kernels::KernelTable* kernels = nullptr;

  Mask undominated(Mask d) const { return kernels->undominated(adj.data(), n, d); }
  int max_gain(Mask candidates, Mask targets) const {
    return kernels->max_gain(adj.data(), n, candidates, targets);
  }

  Mask component(int start, Mask allowed) const {
    Mask seen = bit(start);
    Mask frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= adj[lowest(f)];
      next &= allowed & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  int max_component(Mask allowed) const {
    int best = 0;
    while (allowed != 0) {
      const Mask c = component(lowest(allowed), allowed);
      best = std::max(best, count(c));
      allowed &= ~c;
    }
    return best;
  }

  bool connected(Mask s) const { return s == 0 || component(lowest(s), s) == s; }
};

Problem make_problem(const Graph& g) {
  if (g.order() > 64)
    throw Error(ErrorCode::TooLarge, "the exact solver handles at most 64 vertices");
  Problem p;
  p.n = g.order();
  p.all = p.n == 64 ? ~Mask{0} : bit(p.n) - 1;
  p.adj.assign(static_cast<std::size_t>(p.n), 0);
  for (auto [i, j] : g.edges()) {
    p.adj[i - 1] |= bit(j - 1);
    p.adj[j - 1] |= bit(i - 1);
  }
  for (int v = 0; v < p.n; ++v) {
    const int d = count(p.adj[v]);
    if (d == 0)
      throw Error(ErrorCode::IsolatedVertex,
                  "isolated vertex " + std::to_string(v + 1) + ": no total dominating set exists");
    p.max_degree = std::max(p.max_degree, d);
    if (d == 1) {
      p.leaves |= bit(v);
      p.supports |= p.adj[v];
    }
  }
  p.kernels = &kernels::active();
  return p;
}

class Budget {
 public:
  explicit Budget(const SolverOptions& opts) : limit_(opts.node_budget) {
    if (opts.node_budget == 0) throw Error(ErrorCode::BadParameter, "node budget must be positive");
    if (opts.time_budget_seconds) {
      if (*opts.time_budget_seconds <= 0)
        throw Error(ErrorCode::BadParameter, "time budget must be positive");
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(*opts.time_budget_seconds));
    }
  }

  void tick() {
    const auto used = used_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (used > limit_)
      throw Error(ErrorCode::BudgetExhausted,
                  "node budget of " + std::to_string(limit_) + " exhausted");
    if (deadline_ && (used & 0xFFF) == 0 && Clock::now() > *deadline_)
      throw Error(ErrorCode::BudgetExhausted, "time budget exhausted");
  }

  std::uint64_t used() const { return std::min(used_.load(), limit_); }

 private:
  std::uint64_t limit_;
  std::optional<Clock::time_point> deadline_;
  std::atomic<std::uint64_t> used_{0};
};

/// Best set found at one level. `best` is only meaningful when `found`.
struct LevelResult {
  bool found = false;
  Mask best = 0;

  void offer(Mask t) {
    if (!found || lex_less_mask(t, best)) best = t;
    found = true;
  }
  void merge(const LevelResult& other) {
    if (other.found) offer(other.best);
  }
};

/// Shared state of one level: problem, target, stop flag for early exit.
struct Level {
  const Problem& p;
  Parameter param;
  int k;
  bool canonical;
  Budget& budget;
  std::atomic<bool>& stop;

  bool done(const LevelResult& r) const {
    return stop.load(std::memory_order_relaxed) || (r.found && !canonical);
  }
  void report(const LevelResult& r) const {
    if (r.found && !canonical) stop.store(true, std::memory_order_relaxed);
  }
};

// ---------------------------------------------------------------------------
// Connected induced subsets of fixed size.

/// Calls visit(C) for every connected C subset of `allowed` with |C| == size
/// and C containing `root` as its lowest element. `keep(C)` is a monotone
/// filter: once false for C it must be false for all supersets. visit
/// returns false to stop the enumeration.
class ConnectedSets {
 public:
  ConnectedSets(const Problem& p, Budget& budget, int size, std::function<bool(Mask)> keep,
                std::function<bool(Mask)> visit)
      : p_(p), budget_(budget), size_(size), keep_(std::move(keep)), visit_(std::move(visit)) {}

  bool from_root(int root, Mask allowed) {
    allowed &= ~(bit(root) - 1);
    const Mask c = bit(root);
    if (!keep_(c)) return true;
    return grow(c, p_.adj[root] & allowed & ~c, allowed & ~c);
  }

 private:
  // c: current set; ext: candidates adjacent to c; open: vertices not yet
  // excluded and not in c.
  bool grow(Mask c, Mask ext, Mask open) {
    budget_.tick();
    if (count(c) == size_) return visit_(c);
    if (ext == 0) return true;
    if (count(c) + count(p_.component(lowest(c), c | open) & ~c) < size_) return true;
    const int u = lowest(ext);
    const Mask cu = c | bit(u);
    if (keep_(cu)) {
      const Mask open_u = open & ~bit(u);
      if (!grow(cu, (ext | (p_.adj[u] & open_u)) & ~bit(u), open_u)) return false;
    }
    return grow(c, ext & ~bit(u), open & ~bit(u));
  }

  const Problem& p_;
  Budget& budget_;
  int size_;
  std::function<bool(Mask)> keep_;
  std::function<bool(Mask)> visit_;
};

/// Lexicographically least T = outside-complement over all connected C of
/// size `size` inside `free_set`; equivalently the C that loses every
/// lowest-differing-element comparison.
std::optional<Mask> best_connected_subset(const Level& lv, Mask free_set, int size) {
  if (size == 0) return Mask{0};
  std::optional<Mask> best;
  ConnectedSets sets(
      lv.p, lv.budget, size, [](Mask) { return true; },
      [&](Mask c) {
        if (!best || lex_less_mask(*best, c)) best = c;
        return lv.canonical;
      });
  for (Mask roots = free_set; roots != 0; roots &= roots - 1) {
    if (!sets.from_root(lowest(roots), free_set)) break;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Direct branching.

class DirectSearch {
 public:
  DirectSearch(const Level& lv, Mask seed) : lv_(lv), seed_(seed) {}

  /// Children of the root as (in, excluded) pairs, for splitting across
  /// workers. Empty when the root is itself decided; run_root handles that.
  std::vector<std::pair<Mask, Mask>> root_children() {
    std::vector<std::pair<Mask, Mask>> out;
    const auto choice = branch_choice(seed_, 0);
    if (!choice) return out;
    Mask excluded = 0;
    for (Mask a = *choice; a != 0; a &= a - 1) {
      const Mask x = a & (~a + 1);
      out.emplace_back(seed_ | x, excluded);
      excluded |= x;
    }
    return out;
  }

  LevelResult run(Mask in, Mask excluded) {
    LevelResult r;
    dfs(in, excluded, r);
    return r;
  }

 private:
  /// nullopt when the node is a leaf (dominated) or pruned; otherwise the
  /// dominators to branch over.
  std::optional<Mask> branch_choice(Mask in, Mask excluded) {
    const Problem& p = lv_.p;
    const Mask undom = p.undominated(in);
    const int room = lv_.k - count(in);
    if (undom == 0 || room <= 0) return std::nullopt;
    if (lv_.param == Parameter::GammaTc && p.n - lv_.k >= 2 &&
        p.max_component(p.all & ~in) < p.n - lv_.k)
      return std::nullopt;
    const Mask available = p.all & ~in & ~excluded;
    const int gain = p.max_gain(available, undom);
    if (gain == 0 || room * gain < count(undom)) return std::nullopt;
    int best_options = 65;
    Mask best = 0;
    for (Mask u = undom; u != 0; u &= u - 1) {
      const Mask opts = p.adj[lowest(u)] & available;
      const int c = count(opts);
      if (c < best_options) {
        best_options = c;
        best = opts;
        if (c <= 1) break;
      }
    }
    if (best_options == 0) return std::nullopt;
    return best;
  }

  void dfs(Mask in, Mask excluded, LevelResult& r) {
    if (lv_.done(r)) return;
    lv_.budget.tick();
    const Problem& p = lv_.p;
    if (p.undominated(in) == 0) {
      leaf(in, r);
      return;
    }
    const auto choice = branch_choice(in, excluded);
    if (!choice) return;
    for (Mask a = *choice; a != 0 && !lv_.done(r); a &= a - 1) {
      const Mask x = a & (~a + 1);
      dfs(in | x, excluded, r);
      excluded |= x;
    }
  }

  void leaf(Mask d, LevelResult& r) {
    const Problem& p = lv_.p;
    const int room = lv_.k - count(d);
    if (room < 0) return;
    const Mask free_set = p.all & ~d;
    if (lv_.param == Parameter::GammaT) {
      Mask t = d;
      Mask f = free_set;
      for (int i = 0; i < room; ++i) {
        t |= f & (~f + 1);
        f &= f - 1;
      }
      r.offer(t);
      lv_.report(r);
      return;
    }
    const int outside = p.n - lv_.k;
    if (outside >= 2 && p.max_component(free_set) < outside) return;
    if (const auto c = best_connected_subset(lv_, free_set, outside)) {
      r.offer(p.all & ~*c);
      lv_.report(r);
    }
  }

  const Level& lv_;
  Mask seed_;
};

// ---------------------------------------------------------------------------
// Complement enumeration (gamma_tc only).

LevelResult complement_from_root(const Level& lv, int root, Mask allowed) {
  const Problem& p = lv.p;
  LevelResult r;
  const int size = p.n - lv.k;
  ConnectedSets sets(
      p, lv.budget, size,
      // No vertex may have its whole neighbourhood inside C.
      [&](Mask c) { return p.undominated(p.all & ~c) == 0; },
      [&](Mask c) {
        // Lowest-differing rule flips for complements: keep the lex-largest C.
        const Mask t = p.all & ~c;
        r.offer(t);
        lv.report(r);
        return !lv.done(r);
      });
  sets.from_root(root, allowed);
  return r;
}

// ---------------------------------------------------------------------------
// Level driver.

using Task = std::function<LevelResult()>;

LevelResult run_tasks(const Level& lv, const std::vector<Task>& tasks, bool parallel) {
  LevelResult total;
  if (!parallel || tasks.size() <= 1) {
    for (const auto& t : tasks) {
      if (lv.done(total)) break;
      total.merge(t());
    }
    return total;
  }
  const unsigned workers =
      std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(),
                                      static_cast<unsigned>(tasks.size())));
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr failure;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size() || lv.stop.load()) return;
        try {
          LevelResult r = tasks[i]();
          std::lock_guard lock(mu);
          total.merge(r);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
          lv.stop.store(true);
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return total;
}

enum class Mode { Direct, Complement };

LevelResult solve_level(const Problem& p, Parameter param, int k, Mode mode,
                        const SolverOptions& opts, Budget& budget) {
  std::atomic<bool> stop{false};
  const Level lv{p, param, k, opts.canonical_witness, budget, stop};
  const bool outside_two = p.n - k >= 2;
  std::vector<Task> tasks;

  if (mode == Mode::Complement) {
    if (k >= p.n) {
      LevelResult r;
      r.offer(p.all);
      return r;
    }
    // With two or more outside vertices, leaves and their supports are in T.
    const Mask allowed = outside_two ? p.all & ~(p.leaves | p.supports) : p.all;
    for (Mask roots = allowed; roots != 0; roots &= roots - 1) {
      const int root = lowest(roots);
      tasks.emplace_back([&lv, root, allowed] { return complement_from_root(lv, root, allowed); });
    }
    return run_tasks(lv, tasks, opts.parallel);
  }

  Mask seed = p.supports;
  if (param == Parameter::GammaTc && outside_two) seed |= p.leaves;
  if (count(seed) > k) return {};
  DirectSearch root(lv, seed);
  if (p.undominated(seed) == 0 || !opts.parallel) return root.run(seed, 0);
  for (auto [in, excluded] : root.root_children()) {
    tasks.emplace_back([&lv, seed, in = in, excluded = excluded] {
      DirectSearch s(lv, seed);
      return s.run(in, excluded);
    });
  }
  return run_tasks(lv, tasks, true);
}

int lower_bound(const Problem& p, Parameter param) {
  int lb = std::max(2, (p.n + p.max_degree - 1) / p.max_degree);
  lb = std::max(lb, count(p.supports));
  if (param == Parameter::GammaTc) {
    const int forced = count(p.supports | p.leaves);
    lb = std::max(lb, forced <= p.n - 2 ? forced : p.n - 1);
  }
  return std::min(lb, p.n);
}

SolveReport brute_force(const Graph& g, Parameter param, const SolverOptions& opts) {
  Budget budget(opts);
  const int n = g.order();
  for (int v = 1; v <= n; ++v)
    if (g.degree(v) == 0)
      throw Error(ErrorCode::IsolatedVertex,
                  "isolated vertex " + std::to_string(v) + ": no total dominating set exists");
  for (int k = 1; k <= n; ++k) {
    // k-combinations of 1..n in lexicographic order.
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[i] = i + 1;
    for (;;) {
      budget.tick();
      const VertexSet d(n, pick);
      const bool ok = param == Parameter::GammaT ? is_total_dominating(g, d)
                                                 : verify_tocd(g, d).valid_tocd;
      if (ok) {
        SolveReport r;
        r.parameter = param;
        r.value = k;
        r.witness = d;
        r.nodes_explored = budget.used();
        r.method_used = Method::BruteForce;
        return r;
      }
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i + 1) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw Error(ErrorCode::IsolatedVertex, "no total dominating set exists");
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::IterativeDeepening: return "iterative-deepening";
    case Method::ComplementSearch: return "complement-search";
    case Method::BruteForce: return "brute-force";
  }
  return "unknown";
}

std::optional<Method> method_from_name(std::string_view name) {
  for (Method m : {Method::Auto, Method::IterativeDeepening, Method::ComplementSearch,
                   Method::BruteForce})
    if (to_string(m) == name) return m;
  return std::nullopt;
}

std::string_view to_string(Parameter p) {
  return p == Parameter::GammaT ? "gamma_t" : "gamma_tc";
}

SolveReport solve(const Graph& g, Parameter param, const SolverOptions& opts) {
  if (opts.method == Method::BruteForce) return brute_force(g, param, opts);
  if (g.order() == 0) throw Error(ErrorCode::BadParameter, "empty graph");
  const Problem p = make_problem(g);
  Budget budget(opts);

  for (int k = lower_bound(p, param); k <= p.n; ++k) {
    Mode mode = Mode::Direct;
    if (param == Parameter::GammaTc) {
      if (opts.method == Method::ComplementSearch) mode = Mode::Complement;
      if (opts.method == Method::Auto && 2 * k > p.n) mode = Mode::Complement;
    }
    const LevelResult r = solve_level(p, param, k, mode, opts, budget);
    if (!r.found) continue;
    SolveReport rep;
    rep.parameter = param;
    rep.value = k;
    rep.witness = VertexSet::from_mask(p.n, r.best);
    rep.nodes_explored = budget.used();
    rep.method_used = mode == Mode::Direct ? Method::IterativeDeepening : Method::ComplementSearch;
    return rep;
  }
  // V itself is total dominating once isolated vertices are excluded.
  throw Error(ErrorCode::Infeasible, "search failed to close at k = n");
}

SolveReport gamma_t_exact(const Graph& g, const SolverOptions& opts) {
  return solve(g, Parameter::GammaT, opts);
}

SolveReport gamma_tc_exact(const Graph& g, const SolverOptions& opts) {
  return solve(g, Parameter::GammaTc, opts);
}

}  // namespace mgdom
