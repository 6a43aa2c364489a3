#include "antiram/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <climits>
#include <thread>

#include "antiram/predicates.hpp"

namespace antiram {

std::vector<int> SearchOutcome::gaps() const {
  std::vector<int> out;
  int max = max_achievable();
  size_t at = 0;
  for (int m = 1; m <= max; ++m) {
    while (at < achievable.size() && achievable[at] < m) ++at;
    if (at >= achievable.size() || achievable[at] != m) out.push_back(m);
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Shared {
  const CopyIndex* idx = nullptr;
  PhiKind kind = PhiKind::AR;
  SearchMode mode = SearchMode::FullSet;
  int target_m = -1;  // >= 1 switches to exact-m witness search
  int ecount = 0;
  long long node_limit = 0;
  Clock::time_point deadline;
  std::atomic<long long> global_nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> budget_hit{false};
  std::atomic<int> best_found_task{INT_MAX};
};

struct TaskResult {
  int task = -1;
  int best_m = 0;
  std::vector<int> best_colors;
  bool found = false;
  std::vector<char> achievable;
  bool complete = true;
  long long nodes = 0;
  long long prunes = 0;
};

struct Worker {
  Shared& sh;
  std::vector<int> color;
  std::vector<int> remaining;
  std::array<int, 128> cbuf;
  TaskResult res;
  int current_task = -1;
  long long unseen_nodes = 0;

  explicit Worker(Shared& s) : sh(s) {
    color.assign(s.ecount, -1);
    reset_counters();
  }

  void reset_counters() {
    remaining.assign(sh.idx->copy_count(), 0);
    for (int c = 0; c < sh.idx->copy_count(); ++c)
      remaining[c] = sh.idx->edges_per_copy;
  }

  void bump_node() {
    ++res.nodes;
    if (++unseen_nodes >= 4096) flush_budget();
  }

  void flush_budget() {
    long long total = sh.global_nodes.fetch_add(unseen_nodes) + unseen_nodes;
    unseen_nodes = 0;
    if (total > sh.node_limit || Clock::now() > sh.deadline) {
      sh.stop.store(true, std::memory_order_relaxed);
      sh.budget_hit.store(true, std::memory_order_relaxed);
    }
  }

  bool cancelled() const {
    return sh.target_m >= 1 &&
           sh.best_found_task.load(std::memory_order_relaxed) < current_task;
  }

  // Assigns color c to edge t; reports whether a newly completed copy is
  // good. Completed copies never lose edges later, so a good one kills the
  // whole subtree.
  bool apply(int t, int c) {
    color[t] = c;
    bool good = false;
    for (int cid : sh.idx->copies_with_edge[t]) {
      if (--remaining[cid] == 0 && !good) {
        auto ids = sh.idx->copy_edges(cid);
        for (size_t i = 0; i < ids.size(); ++i) cbuf[i] = color[ids[i]];
        good = detail::check_copy_unchecked(sh.idx->copy_pairs(cid),
                                            {cbuf.data(), ids.size()}, sh.kind);
      }
    }
    return good;
  }

  void unapply(int t) {
    color[t] = -1;
    for (int cid : sh.idx->copies_with_edge[t]) ++remaining[cid];
  }

  void leaf(int used) {
    if (sh.target_m >= 1) {
      if (used == sh.target_m) {
        res.best_colors = color;
        res.best_m = used;
        res.found = true;
        int expect = sh.best_found_task.load();
        while (current_task < expect &&
               !sh.best_found_task.compare_exchange_weak(expect, current_task)) {
        }
      }
      return;
    }
    res.achievable[used] = 1;
    if (used > res.best_m) {
      res.best_m = used;
      res.best_colors = color;
    }
  }

  void dfs(int t, int used) {
    if (sh.stop.load(std::memory_order_relaxed) || cancelled()) {
      res.complete = false;
      return;
    }
    if (t == sh.ecount) {
      leaf(used);
      return;
    }
    if (sh.mode == SearchMode::MaxOnly && sh.target_m < 1 &&
        used + (sh.ecount - t) <= res.best_m)
      return;
    if (sh.target_m >= 1 && used + (sh.ecount - t) < sh.target_m) return;
    int c_max = used;  // c == used introduces the fresh color, tried last
    if (sh.target_m >= 1 && used >= sh.target_m) c_max = used - 1;
    for (int c = 0; c <= c_max; ++c) {
      bump_node();
      if (apply(t, c)) {
        ++res.prunes;
      } else {
        dfs(t + 1, used + (c == used ? 1 : 0));
      }
      unapply(t);
      if (res.found && sh.target_m >= 1) return;
      if (sh.stop.load(std::memory_order_relaxed)) {
        res.complete = false;
        return;
      }
    }
  }

  // Replays a prefix (known to be alive) and searches below it.
  TaskResult run_task(int task_id, std::span<const int> prefix) {
    res = TaskResult{};
    res.task = task_id;
    if (sh.target_m < 1) res.achievable.assign(sh.ecount + 1, 0);
    current_task = task_id;
    if (cancelled()) {
      res.complete = true;  // a lower task already holds the answer
      return res;
    }
    int used = 0;
    for (size_t t = 0; t < prefix.size(); ++t) {
      if (apply(static_cast<int>(t), prefix[t]))
        throw error("internal: dead prefix handed to worker");
      used = std::max(used, prefix[t] + 1);
    }
    dfs(static_cast<int>(prefix.size()), used);
    for (int t = static_cast<int>(prefix.size()) - 1; t >= 0; --t) unapply(t);
    flush_budget();
    return res;
  }
};

// Live prefixes of the restricted-growth enumeration at the split depth,
// in lexicographic order.
void gen_prefixes(Worker& w, int depth, int t, int used,
                  std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (t == depth) {
    out.push_back(cur);
    return;
  }
  for (int c = 0; c <= used; ++c) {
    cur.push_back(c);
    if (!w.apply(t, c))
      gen_prefixes(w, depth, t + 1, used + (c == used ? 1 : 0), cur, out);
    w.unapply(t);
    cur.pop_back();
  }
}

struct MergedRun {
  std::vector<TaskResult> results;
  bool budget_hit = false;
  long long nodes = 0;
  long long prunes = 0;
  double seconds = 0;
};

MergedRun run_search(Shared& sh, int threads, const Budget& budget) {
  if (budget.max_nodes <= 0 || budget.max_seconds <= 0)
    throw error("budget limits must be strictly positive");
  auto t0 = Clock::now();
  sh.ecount = edge_count(sh.idx->host_order);
  sh.node_limit = budget.max_nodes;
  sh.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(budget.max_seconds));

  MergedRun out;
  threads = std::max(1, threads);
  if (threads == 1 || sh.ecount < 6) {
    Worker w(sh);
    out.results.push_back(w.run_task(0, {}));
  } else {
    int depth = std::min(4, sh.ecount - 1);
    std::vector<std::vector<int>> prefixes;
    {
      Worker w(sh);
      std::vector<int> cur;
      gen_prefixes(w, depth, 0, 0, cur, prefixes);
    }
    std::atomic<int> next{0};
    std::vector<std::vector<TaskResult>> per_thread(threads);
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) {
      pool.emplace_back([&, i] {
        Worker w(sh);
        while (true) {
          int task = next.fetch_add(1);
          if (task >= static_cast<int>(prefixes.size())) break;
          per_thread[i].push_back(w.run_task(task, prefixes[task]));
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& v : per_thread)
      out.results.insert(out.results.end(), v.begin(), v.end());
    std::sort(out.results.begin(), out.results.end(),
              [](const TaskResult& a, const TaskResult& b) {
                return a.task < b.task;
              });
  }
  out.budget_hit = sh.budget_hit.load();
  for (auto& r : out.results) {
    out.nodes += r.nodes;
    out.prunes += r.prunes;
  }
  out.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return out;
}

EdgeColoring coloring_from(int n, std::vector<int> colors) {
  EdgeColoring psi;
  psi.n = n;
  psi.color = std::move(colors);
  psi.color_count =
      psi.color.empty()
          ? 0
          : *std::max_element(psi.color.begin(), psi.color.end()) + 1;
  return psi;
}

bool verify_against(const EdgeColoring& psi, const CopyIndex& idx,
                    PhiKind kind) {
  return !find_good_copy(psi, idx, kind).has_value();
}

}  // namespace

SearchOutcome phi_exact(const Graph& g, int n, PhiKind kind,
                        const Budget& budget, int threads, SearchMode mode) {
  CopyIndex idx = enumerate_copies(g, n);
  Shared sh;
  sh.idx = &idx;
  sh.kind = kind;
  sh.mode = mode;
  MergedRun run = run_search(sh, threads, budget);

  SearchOutcome o;
  o.host_order = n;
  o.kind = kind;
  o.pattern_name = g.name;
  o.stats.nodes = run.nodes;
  o.stats.good_copy_prunes = run.prunes;
  o.stats.seconds = run.seconds;
  o.exhausted = !run.budget_hit;
  o.full_set = o.exhausted && mode == SearchMode::FullSet;

  std::vector<char> merged(edge_count(n) + 1, 0);
  int best_m = 0, best_task = INT_MAX;
  const TaskResult* best = nullptr;
  for (const auto& r : run.results) {
    for (size_t m = 0; m < r.achievable.size(); ++m)
      if (r.achievable[m]) merged[m] = 1;
    if (r.best_m > best_m ||
        (r.best_m == best_m && r.best_m > 0 && r.task < best_task)) {
      best_m = r.best_m;
      best_task = r.task;
      best = &r;
    }
  }
  for (int m = 1; m < static_cast<int>(merged.size()); ++m)
    if (merged[m]) o.achievable.push_back(m);
  o.phi = 1 + best_m;
  if (best && best_m > 0) {
    o.witness = coloring_from(n, best->best_colors);
    if (o.witness->color_count != best_m ||
        !verify_against(*o.witness, idx, kind))
      throw error("internal: witness failed its verification scan");
  }
  return o;
}

AvoidResult avoidable(const Graph& g, int n, int m, PhiKind kind,
                      const Budget& budget, int threads) {
  if (m < 1 || m > edge_count(n))
    throw error("color count m must be in 1..C(n,2)");
  CopyIndex idx = enumerate_copies(g, n);
  Shared sh;
  sh.idx = &idx;
  sh.kind = kind;
  sh.target_m = m;
  MergedRun run = run_search(sh, threads, budget);

  AvoidResult res;
  res.stats.nodes = run.nodes;
  res.stats.good_copy_prunes = run.prunes;
  res.stats.seconds = run.seconds;
  int best_task = INT_MAX;
  const TaskResult* hit = nullptr;
  bool all_complete = true;
  for (const auto& r : run.results) {
    if (r.found && r.task < best_task) {
      best_task = r.task;
      hit = &r;
    }
    all_complete = all_complete && r.complete;
  }
  if (hit) {
    res.witness = coloring_from(n, hit->best_colors);
    res.exhausted = true;  // definitive either way once a witness exists
    if (res.witness->color_count != m ||
        !verify_against(*res.witness, idx, kind))
      throw error("internal: witness failed its verification scan");
  } else {
    res.exhausted = all_complete && !run.budget_hit;
  }
  return res;
}

bool verify_lower_bound(const EdgeColoring& psi, const Graph& g,
                        PhiKind kind) {
  CopyIndex idx = enumerate_copies(g, psi.n);
  return verify_against(psi, idx, kind);
}

std::vector<CriticalColor> critical_colors(const EdgeColoring& psi, int v) {
  if (v < 0 || v >= psi.n) throw error("vertex out of range");
  int colors = psi.color_count;
  std::vector<int> count(colors, 0);
  std::vector<char> all_at_v(colors, 1);
  auto table = edge_pairs(psi.n);
  for (int e = 0; e < edge_count(psi.n); ++e) {
    int c = psi.color[e];
    if (c >= colors) continue;  // non-canonical input: ignore stray ids
    ++count[c];
    if (table[e].first != v && table[e].second != v) all_at_v[c] = 0;
  }
  std::vector<CriticalColor> out;
  for (int c = 0; c < colors; ++c)
    if (count[c] >= 1 && all_at_v[c])
      out.push_back({c, count[c] >= 2});
  return out;
}

}  // namespace antiram
