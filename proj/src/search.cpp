#include "gfl/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <thread>

#include "gfl/detect.hpp"
#include "gfl/errors.hpp"

namespace gfl {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr Vertex kernel_max_order = 64;

inline auto bit(unsigned v) -> Mask { return Mask{1} << v; }

// True iff the graph `adj` restricted to `s` has a matching of size m.
auto has_matching(const Mask *adj, Mask s, unsigned m) -> bool {
  if (m == 0)
    return true;
  while (s) {
    if (static_cast<unsigned>(std::popcount(s)) < 2 * m)
      return false;
    auto x = static_cast<unsigned>(std::countr_zero(s));
    s &= ~bit(x);
    Mask nb = adj[x] & s;
    if (!nb)
      continue;
    // x extends any (m-1)-matching of the rest.
    if (static_cast<unsigned>(std::popcount(nb)) >= 2 * m - 1)
      return has_matching(adj, s, m - 1);
    for (Mask t = nb; t; t &= t - 1)
      if (has_matching(adj, s & ~bit(static_cast<unsigned>(std::countr_zero(t))), m - 1))
        return true;
    // otherwise x stays unmatched
  }
  return false;
}

struct Shared {
  Shared(const TwoColorProblem &p, const SearchBudget &b, const SearchOptions &o)
      : problem(p), budget(b), options(o), start(Clock::now()) {}

  const TwoColorProblem &problem;
  const SearchBudget &budget;
  const SearchOptions &options;
  Clock::time_point start;

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> exceeded{false};

  std::mutex mu;
  std::optional<std::size_t> witness_task;
  std::optional<ColoredCompleteGraph> witness;
  std::uint64_t prunes = 0;
  std::uint64_t leaves = 0;
};

class Worker {
public:
  explicit Worker(Shared &sh) : sh_(sh), p_(sh.problem) {
    std::memset(adj_, 0, sizeof(adj_));
    for (auto [e, c] : p_.fixed)
      set(e, c);
  }

  // Any monochromatic F_m in the current partial coloring.
  auto any_fan() const -> bool {
    for (unsigned c = 0; c < 2; ++c)
      for (unsigned x = 0; x < p_.n; ++x)
        if (has_matching(adj_[c], adj_[c][x], p_.m))
          return true;
    return false;
  }

  // Counts a node and colors var `idx` with color c (1 or 2). Returns false
  // and undoes the assignment when it creates a fan the pruning mode sees.
  auto assign(std::size_t idx, unsigned c) -> bool {
    count_node();
    const auto &edges = p_.vars[idx];
    for (auto e : edges)
      set(e, c);
    if (creates_fan(edges, c - 1)) {
      for (auto e : edges)
        clear(e, c);
      ++prunes_;
      return false;
    }
    return true;
  }

  void unassign(std::size_t idx, unsigned c) {
    for (auto e : p_.vars[idx])
      clear(e, c);
  }

  // Colors var `idx` without counting or checking (replaying a prefix).
  void replay(std::size_t idx, unsigned c) {
    for (auto e : p_.vars[idx])
      set(e, c);
  }

  void dfs(std::size_t idx, std::size_t task) {
    if (sh_.stop.load(std::memory_order_relaxed))
      return;
    if (idx == p_.vars.size()) {
      if (sh_.options.pruning == Pruning::None && any_fan())
        return;
      ++leaves_;
      record_witness(task);
      return;
    }
    for (unsigned c = 1; c <= 2; ++c) {
      if (sh_.stop.load(std::memory_order_relaxed))
        return;
      if (!assign(idx, c))
        continue;
      dfs(idx + 1, task);
      unassign(idx, c);
    }
  }

  // Surviving prefixes of the first `depth` vars, in DFS order.
  void prefixes(std::size_t idx, std::size_t depth, std::vector<unsigned> &cur,
                std::vector<std::vector<unsigned>> &out) {
    if (sh_.stop.load(std::memory_order_relaxed))
      return;
    if (idx == depth) {
      out.push_back(cur);
      return;
    }
    for (unsigned c = 1; c <= 2; ++c) {
      if (!assign(idx, c))
        continue;
      cur.push_back(c);
      prefixes(idx + 1, depth, cur, out);
      cur.pop_back();
      unassign(idx, c);
    }
  }

  void flush() {
    std::lock_guard lock(sh_.mu);
    sh_.prunes += prunes_;
    sh_.leaves += leaves_;
    prunes_ = leaves_ = 0;
  }

private:
  void set(Edge e, unsigned c) {
    adj_[c - 1][e.u] |= bit(e.v);
    adj_[c - 1][e.v] |= bit(e.u);
  }
  void clear(Edge e, unsigned c) {
    adj_[c - 1][e.u] &= ~bit(e.v);
    adj_[c - 1][e.v] &= ~bit(e.u);
  }

  auto fan_at(unsigned ci, unsigned x) const -> bool {
    return has_matching(adj_[ci], adj_[ci][x], p_.m);
  }

  auto creates_fan(const EdgeList &edges, unsigned ci) const -> bool {
    switch (sh_.options.pruning) {
    case Pruning::None:
      return false;
    case Pruning::FullRescan:
      return any_fan();
    case Pruning::Incremental:
      break;
    }
    // A new fan uses a new edge as a spoke (center at an endpoint) or as a
    // matching edge (center adjacent to both endpoints).
    Mask centers = 0;
    for (auto e : edges)
      centers |= bit(e.u) | bit(e.v) | (adj_[ci][e.u] & adj_[ci][e.v]);
    for (Mask t = centers; t; t &= t - 1)
      if (fan_at(ci, static_cast<unsigned>(std::countr_zero(t))))
        return true;
    return false;
  }

  void count_node() {
    auto n = sh_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    const auto &b = sh_.budget;
    if (b.unlimited)
      return;
    if (b.max_nodes && n > *b.max_nodes) {
      sh_.exceeded = true;
      sh_.stop = true;
    }
    if (b.max_seconds && (++since_clock_ & 4095) == 0) {
      std::chrono::duration<double> el = Clock::now() - sh_.start;
      if (el.count() > *b.max_seconds) {
        sh_.exceeded = true;
        sh_.stop = true;
      }
    }
  }

  void record_witness(std::size_t task) {
    std::lock_guard lock(sh_.mu);
    if (!sh_.witness_task || task < *sh_.witness_task) {
      sh_.witness_task = task;
      sh_.witness = snapshot();
    }
    if (!sh_.options.count_all)
      sh_.stop = true;
  }

  auto snapshot() const -> ColoredCompleteGraph {
    ColoredCompleteGraph g(p_.n, p_.palette, 1);
    for (unsigned ci = 0; ci < 2; ++ci)
      for (unsigned u = 0; u < p_.n; ++u)
        for (Mask t = adj_[ci][u] & ~((bit(u) << 1) - 1); t; t &= t - 1)
          g.set_color(u, static_cast<Vertex>(std::countr_zero(t)), static_cast<Color>(ci + 1));
    for (auto [e, c] : p_.extra)
      g.set_color(e.u, e.v, c);
    return g;
  }

  Shared &sh_;
  const TwoColorProblem &p_;
  Mask adj_[2][kernel_max_order];
  std::uint64_t prunes_ = 0, leaves_ = 0, since_clock_ = 0;
};

void check_problem(const TwoColorProblem &p) {
  if (p.n < 2 || p.n > kernel_max_order)
    throw ParamError("search order must lie in 2.." + std::to_string(kernel_max_order));
  if (p.m < 1)
    throw ParamError("fan order must be at least 1");
  std::vector<int> seen(static_cast<std::size_t>(p.n) * p.n, 0);
  auto mark = [&](Edge e) {
    if (e.u == e.v || e.v >= p.n)
      throw ParamError("bad search edge");
    if (seen[e.u * p.n + e.v]++)
      throw ParamError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") appears twice");
  };
  for (auto [e, c] : p.fixed) {
    if (c != 1 && c != 2)
      throw PaletteError("fixed search edges use colors 1 and 2");
    mark(e);
  }
  for (const auto &var : p.vars)
    for (auto e : var)
      mark(e);
  for (auto [e, c] : p.extra) {
    if (c < 1 || c > p.palette)
      throw PaletteError("extra edge color outside the palette");
    mark(e);
  }
  if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(p.n) * (p.n - 1) / 2)
    throw ParamError("search problem does not cover every edge");
}

auto elapsed_since(Clock::time_point t0) -> double {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

auto edge_order(Vertex n, EdgeOrder order) -> EdgeList {
  EdgeList edges;
  if (order == EdgeOrder::Lexicographic) {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        edges.emplace_back(u, v);
  } else {
    for (Vertex v = 1; v < n; ++v)
      for (Vertex u = 0; u < v; ++u)
        edges.emplace_back(u, v);
  }
  return edges;
}

auto all_edges(Vertex n) -> EdgeList { return edge_order(n, EdgeOrder::Lexicographic); }

auto path(Vertex start, Vertex len) -> EdgeList {
  EdgeList e;
  for (Vertex i = 0; i + 1 < len; ++i)
    e.emplace_back(start + i, start + i + 1);
  return e;
}

auto cycle(Vertex start, Vertex len) -> EdgeList {
  auto e = path(start, len);
  e.emplace_back(start, start + len - 1);
  return e;
}

void enumerate_embeddable(std::span<const Edge> allowed, std::size_t i, EdgeList &cur,
                          std::vector<unsigned> &deg, std::vector<EdgeList> &out) {
  if (i == allowed.size()) {
    if (embeds_in_c4_c5_2k3(cur))
      out.push_back(cur);
    return;
  }
  enumerate_embeddable(allowed, i + 1, cur, deg, out);
  auto e = allowed[i];
  if (deg[e.u] >= 2 || deg[e.v] >= 2)
    return;
  cur.push_back(e);
  if (matching_number(cur) <= 2) {
    ++deg[e.u];
    ++deg[e.v];
    enumerate_embeddable(allowed, i + 1, cur, deg, out);
    --deg[e.u];
    --deg[e.v];
  }
  cur.pop_back();
}

auto budget_hit(const SearchBudget &b, std::uint64_t cases, Clock::time_point t0) -> bool {
  if (b.unlimited)
    return false;
  if (b.max_nodes && cases > *b.max_nodes)
    return true;
  return b.max_seconds && elapsed_since(t0) > *b.max_seconds;
}

} // namespace

void SearchBudget::validate() const {
  if (!unlimited && !max_nodes && !max_seconds)
    throw ParamError("a search budget needs a node limit, a time limit, or the unlimited flag");
  if (max_seconds && *max_seconds < 0)
    throw ParamError("time limit must be non-negative");
}

auto verdict_name(Verdict v) -> std::string_view {
  switch (v) {
  case Verdict::Exhausted:
    return "Exhausted";
  case Verdict::Witness:
    return "Witness";
  case Verdict::BudgetExceeded:
    return "BudgetExceeded";
  }
  return "?";
}

auto default_thread_count() -> unsigned {
  if (const char *env = std::getenv("GFL_THREADS")) {
    unsigned t = 0;
    auto end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, t);
    if (ec == std::errc{} && ptr == end && t > 0)
      return t;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

auto solve_two_color(const TwoColorProblem &problem, const SearchBudget &budget,
                     const SearchOptions &options) -> SearchOutcome {
  budget.validate();
  check_problem(problem);
  Shared sh(problem, budget, options);
  SearchOutcome out;

  Worker root(sh);
  if (root.any_fan()) {
    out.stats.elapsed_seconds = elapsed_since(sh.start);
    out.note = "the fixed edges already contain a monochromatic fan";
    return out;
  }

  unsigned threads = options.deterministic ? 1 : options.threads;
  if (threads == 0)
    threads = default_thread_count();

  // Fix the first `depth` vars once, then hand out the surviving prefixes.
  auto depth = threads > 1 ? std::min<std::size_t>(options.split_depth, problem.vars.size()) : 0;
  std::vector<std::vector<unsigned>> tasks;
  std::vector<unsigned> cur;
  root.prefixes(0, depth, cur, tasks);
  root.flush();

  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      auto t = next.fetch_add(1);
      if (t >= tasks.size() || sh.stop.load())
        break;
      Worker w(sh);
      for (std::size_t i = 0; i < depth; ++i)
        w.replay(i, tasks[t][i]);
      w.dfs(depth, t);
      w.flush();
    }
  };
  if (threads <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i)
      pool.emplace_back(run);
    for (auto &th : pool)
      th.join();
  }

  out.stats.nodes = sh.nodes.load();
  out.stats.prunes = sh.prunes;
  out.stats.leaves = sh.leaves;
  out.stats.elapsed_seconds = elapsed_since(sh.start);
  if (sh.witness) {
    for (Color c = 1; c <= 2; ++c)
      if (find_mono_fan(*sh.witness, problem.m, c))
        throw InternalInconsistency("search witness contains a monochromatic fan");
    out.verdict = Verdict::Witness;
    out.witness = std::move(sh.witness);
  } else if (sh.exceeded) {
    out.verdict = Verdict::BudgetExceeded;
  }
  return out;
}

auto ramsey2_decide(unsigned m, Vertex n, const SearchBudget &budget,
                    const SearchOptions &options) -> SearchOutcome {
  if (m < 1)
    throw ParamError("fan order must be at least 1");
  if (n < 2 || n > kernel_max_order)
    throw ParamError("order must lie in 2.." + std::to_string(kernel_max_order));
  TwoColorProblem p;
  p.n = n;
  p.m = m;
  p.fixed.push_back({Edge(0, 1), 1});
  for (auto e : edge_order(n, options.order))
    if (e != Edge(0, 1))
      p.vars.push_back({e});
  return solve_two_color(p, budget, options);
}

auto brute_ramsey_count(unsigned m, Vertex n) -> std::uint64_t {
  if (n < 2 || n > 7)
    throw OracleSizeError("brute_ramsey_count handles 2 <= n <= 7");
  auto edges = all_edges(n);
  std::uint64_t count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << edges.size()); ++bits) {
    ColoredCompleteGraph g(n, 2, 1);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (bits >> i & 1)
        g.set_color(edges[i].u, edges[i].v, 2);
    if (!find_mono_fan(g, m, 1) && !find_mono_fan(g, m, 2))
      ++count;
  }
  return count;
}

auto check_ramsey_value(unsigned m, Vertex value, const SearchBudget &budget,
                        const SearchOptions &options) -> SearchOutcome {
  if (value < 3)
    throw ParamError("Ramsey value must be at least 3");
  auto lower = ramsey2_decide(m, value - 1, budget, options);
  auto upper = ramsey2_decide(m, value, budget, options);
  SearchOutcome out;
  out.stats.nodes = lower.stats.nodes + upper.stats.nodes;
  out.stats.prunes = lower.stats.prunes + upper.stats.prunes;
  out.stats.leaves = lower.stats.leaves + upper.stats.leaves;
  out.stats.elapsed_seconds = lower.stats.elapsed_seconds + upper.stats.elapsed_seconds;
  auto tag = "R(F" + std::to_string(m) + ",F" + std::to_string(m) + ")";

  if (upper.verdict == Verdict::Witness) {
    out.verdict = Verdict::Witness;
    out.witness = std::move(upper.witness);
    out.note = tag + " > " + std::to_string(value);
    return out;
  }
  if (lower.verdict == Verdict::Exhausted)
    throw InternalInconsistency(tag + " <= " + std::to_string(value - 1) +
                                ": no fan-free coloring below the claimed value");
  if (lower.verdict == Verdict::BudgetExceeded || upper.verdict == Verdict::BudgetExceeded) {
    out.verdict = Verdict::BudgetExceeded;
    out.note = "lower side " + std::string(verdict_name(lower.verdict)) + ", upper side " +
               std::string(verdict_name(upper.verdict));
    return out;
  }
  out.verdict = Verdict::Exhausted;
  out.witness = std::move(lower.witness);
  out.note = tag + " = " + std::to_string(value) + "; witness is the F" + std::to_string(m) +
             "-free coloring of K" + std::to_string(value - 1);
  return out;
}

auto matching_number(std::span<const Edge> edges) -> unsigned {
  if (edges.size() > 16)
    throw ParamError("matching_number handles at most 16 edges");
  if (edges.empty())
    return 0;
  auto first = edges.front();
  auto rest = edges.subspan(1);
  EdgeList disjoint;
  for (auto e : rest)
    if (e.u != first.u && e.u != first.v && e.v != first.u && e.v != first.v)
      disjoint.push_back(e);
  return std::max(matching_number(rest), 1 + matching_number(disjoint));
}

auto embeddable_edge_sets(std::span<const Edge> allowed) -> std::vector<EdgeList> {
  Vertex top = 0;
  for (auto e : allowed) {
    if (e.u == e.v)
      throw SelfLoopError("self-loop in allowed edges");
    top = std::max(top, e.v);
  }
  std::vector<unsigned> deg(static_cast<std::size_t>(top) + 1, 0);
  std::vector<EdgeList> out;
  EdgeList cur;
  enumerate_embeddable(allowed, 0, cur, deg, out);
  return out;
}

auto embeddable_class_representatives() -> std::vector<EdgeList> {
  auto join = [](EdgeList a, const EdgeList &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  return {
      {},
      path(0, 2),
      path(0, 3),
      path(0, 4),
      path(0, 5),
      cycle(0, 3),
      cycle(0, 4),
      cycle(0, 5),
      join(path(0, 2), path(2, 2)),
      join(path(0, 2), path(2, 3)),
      join(path(0, 2), cycle(2, 3)),
      join(path(0, 3), path(3, 3)),
      join(path(0, 3), cycle(3, 3)),
      join(cycle(0, 3), cycle(3, 3)),
  };
}

auto check_fact_k7() -> SearchOutcome {
  auto t0 = Clock::now();
  SearchOutcome out;
  auto sets = embeddable_edge_sets(all_edges(7));
  for (const auto &s : sets) {
    ++out.stats.cases;
    ColoredCompleteGraph g(7, 2, 2);
    for (auto e : s)
      g.set_color(e.u, e.v, 1);
    if (!find_mono_fan(g, 3, 2)) {
      out.verdict = Verdict::Witness;
      out.witness = std::move(g);
      out.note = "color-2 F3 missing";
      break;
    }
  }
  out.stats.leaves = out.stats.cases;
  out.stats.elapsed_seconds = elapsed_since(t0);
  if (out.verdict == Verdict::Exhausted)
    out.note = std::to_string(sets.size()) + " labeled color-1 sets on 7 vertices";
  return out;
}

auto check_claim_f1(const SearchBudget &budget) -> SearchOutcome {
  budget.validate();
  auto t0 = Clock::now();
  SearchOutcome out;
  const auto edges = all_edges(9);
  auto reps = embeddable_class_representatives();
  for (const auto &rep : reps) {
    EdgeList rest;
    for (auto e : edges)
      if (std::find(rep.begin(), rep.end(), e) == rep.end())
        rest.push_back(e);
    for (const auto &s2 : embeddable_edge_sets(rest)) {
      ++out.stats.cases;
      if ((out.stats.cases & 1023) == 0 && budget_hit(budget, out.stats.cases, t0)) {
        out.verdict = Verdict::BudgetExceeded;
        out.stats.elapsed_seconds = elapsed_since(t0);
        return out;
      }
      ColoredCompleteGraph g(9, 3, 3);
      for (auto e : rep)
        g.set_color(e.u, e.v, 1);
      for (auto e : s2)
        g.set_color(e.u, e.v, 2);
      if (find_rainbow_triangle(g))
        continue;
      ++out.stats.leaves;
      if (!find_mono_fan(g, 3, 3)) {
        out.verdict = Verdict::Witness;
        out.witness = std::move(g);
        out.note = "rainbow-free coloring without a color-3 F3";
        out.stats.elapsed_seconds = elapsed_since(t0);
        return out;
      }
    }
  }
  out.stats.elapsed_seconds = elapsed_since(t0);
  out.note = std::to_string(reps.size()) + " color-1 classes; " +
             std::to_string(out.stats.leaves) + " rainbow-free colorings checked";
  return out;
}

auto check_claim_f2k8(const SearchBudget &budget, const SearchOptions &options, Vertex n)
    -> SearchOutcome {
  if (n < 3)
    throw ParamError("check_claim_f2k8 needs n >= 3");
  TwoColorProblem p;
  p.n = n;
  p.m = 2;
  p.palette = 3;
  p.extra.push_back({Edge(0, 1), 3});
  // A rainbow triangle 0,1,w is avoided exactly when color(0,w) = color(1,w).
  for (Vertex w = 2; w < n; ++w)
    p.vars.push_back({Edge(0, w), Edge(1, w)});
  for (Vertex u = 2; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      p.vars.push_back({Edge(u, v)});
  auto out = solve_two_color(p, budget, options);
  if (out.witness && find_rainbow_triangle(*out.witness))
    throw InternalInconsistency("f2k8 witness has a rainbow triangle");
  out.note = "one color-3 edge on K" + std::to_string(n) +
             "; the case with no color-3 edge is R(F2,F2) = 9 (search ramsey --fan 2 --order 9)";
  return out;
}

} // namespace gfl
