#include "antiram/orientations.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace antiram {

std::string_view to_string(OrderKind k) {
  return k == OrderKind::OMO ? "omo" : "oeo";
}

namespace {

bool vertex_ok(int back, int deg, OrderKind kind) {
  if (back == 0 || back % 2 == 1) return true;
  return kind == OrderKind::OEO && back == deg;
}

OrderingResult annotate(const Graph& g, std::vector<int> perm, OrderKind kind) {
  OrderingResult r;
  r.kind = kind;
  r.perm = std::move(perm);
  r.backward.assign(g.order, 0);
  std::vector<int> pos(g.order, 0);
  for (int p = 0; p < g.order; ++p) pos[r.perm[p]] = p;
  for (auto [u, v] : g.edges) ++r.backward[pos[u] < pos[v] ? v : u];
  r.vclass.resize(g.order);
  for (int v = 0; v < g.order; ++v) {
    using VC = OrderingResult::VertexClass;
    r.vclass[v] = r.backward[v] == 0       ? VC::Zero
                  : r.backward[v] % 2 == 1 ? VC::Odd
                                           : VC::EvenClosed;
  }
  return r;
}

struct OrderSearch {
  const std::vector<uint64_t> adj;
  const std::vector<int> deg;
  int n;
  OrderKind kind;
  bool find_one;
  uint64_t placed = 0;
  std::vector<int> perm;
  long long count = 0;
  bool found = false;

  OrderSearch(std::vector<uint64_t> a, std::vector<int> d, int n_,
              OrderKind k, bool one)
      : adj(std::move(a)), deg(std::move(d)), n(n_), kind(k), find_one(one) {}

  // The backward count of v is fixed the moment v is placed, and so is the
  // presence of unplaced neighbors, so both conditions prune prefixes.
  void dfs() {
    if (static_cast<int>(perm.size()) == n) {
      if (find_one)
        found = true;
      else
        ++count;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (placed & (uint64_t{1} << v)) continue;
      int back = std::popcount(adj[v] & placed);
      bool ok = back == 0 || back % 2 == 1;
      if (!ok && kind == OrderKind::OEO)
        ok = (adj[v] & ~placed & ~(uint64_t{1} << v)) == 0;
      if (!ok) continue;
      placed |= uint64_t{1} << v;
      perm.push_back(v);
      dfs();
      if (found) return;  // keep the completed permutation intact
      perm.pop_back();
      placed &= ~(uint64_t{1} << v);
    }
  }
};

std::optional<std::vector<int>> forest_ordering(const Graph& g) {
  // Peel leaves; each peeled vertex goes after everything that remains.
  auto deg = g.degrees();
  auto adj = g.adjacency();
  std::vector<char> removed(g.order, 0);
  std::vector<int> peeled;
  for (;;) {
    int leaf = -1;
    for (int v = 0; v < g.order && leaf < 0; ++v)
      if (!removed[v] && deg[v] == 1) leaf = v;
    if (leaf < 0) break;
    removed[leaf] = 1;
    peeled.push_back(leaf);
    uint64_t m = adj[leaf];
    while (m) {
      int w = std::countr_zero(m);
      m &= m - 1;
      if (!removed[w]) --deg[w];
    }
    deg[leaf] = 0;
  }
  std::vector<int> perm;
  for (int v = 0; v < g.order; ++v)
    if (!removed[v]) perm.push_back(v);  // isolated leftovers first
  perm.insert(perm.end(), peeled.rbegin(), peeled.rend());
  return perm;
}

// Block ordering A then B. For OMO, every positive-even-degree vertex must
// sit in A; side choice is per component.
std::optional<std::vector<int>> bipartite_block_ordering(const Graph& g,
                                                         OrderKind kind) {
  auto side = g.bipartition();
  if (!side) return std::nullopt;
  auto comp = g.component_ids();
  auto deg = g.degrees();
  int comps = g.order ? *std::max_element(comp.begin(), comp.end()) + 1 : 0;
  std::vector<int> a_side(comps, 0);
  if (kind == OrderKind::OMO) {
    std::vector<int> even_side(comps, -1);
    for (int v = 0; v < g.order; ++v) {
      if (deg[v] > 0 && deg[v] % 2 == 0) {
        int c = comp[v];
        if (even_side[c] == -1)
          even_side[c] = (*side)[v];
        else if (even_side[c] != (*side)[v])
          return std::nullopt;  // even vertices straddle the bipartition
      }
    }
    for (int c = 0; c < comps; ++c) a_side[c] = std::max(0, even_side[c]);
  }
  std::vector<int> perm;
  for (int v = 0; v < g.order; ++v)
    if ((*side)[v] == a_side[comp[v]]) perm.push_back(v);
  for (int v = 0; v < g.order; ++v)
    if ((*side)[v] != a_side[comp[v]]) perm.push_back(v);
  return perm;
}

}  // namespace

bool verify_ordering(const Graph& g, std::span<const int> perm,
                     OrderKind kind) {
  if (static_cast<int>(perm.size()) != g.order)
    throw error("ordering must list every vertex once");
  std::vector<char> seen(g.order, 0);
  for (int v : perm) {
    if (v < 0 || v >= g.order || seen[v])
      throw error("ordering is not a permutation of the vertices");
    seen[v] = 1;
  }
  std::vector<int> pos(g.order);
  for (int p = 0; p < g.order; ++p) pos[perm[p]] = p;
  std::vector<int> back(g.order, 0);
  for (auto [u, v] : g.edges) ++back[pos[u] < pos[v] ? v : u];
  auto deg = g.degrees();
  for (int v = 0; v < g.order; ++v)
    if (!vertex_ok(back[v], deg[v], kind)) return false;
  return true;
}

std::optional<OrderingResult> solve_ordering(const Graph& g, OrderKind kind) {
  std::optional<std::vector<int>> perm;
  if (g.is_forest()) {
    perm = forest_ordering(g);
  } else if (g.bipartition()) {
    perm = bipartite_block_ordering(g, kind);
  }
  if (!perm) {
    if (g.order > 10)
      throw error("no constructive path applies and brute force is capped "
                  "at 10 vertices");
    OrderSearch s(g.adjacency(), g.degrees(), g.order, kind, true);
    s.dfs();
    if (!s.found) return std::nullopt;
    perm = s.perm;
  }
  if (!verify_ordering(g, *perm, kind))
    throw error("internal: constructed ordering failed verification");
  return annotate(g, std::move(*perm), kind);
}

long long count_orderings(const Graph& g, OrderKind kind) {
  if (g.order > 10) throw error("counting is capped at 10 vertices");
  OrderSearch s(g.adjacency(), g.degrees(), g.order, kind, false);
  s.dfs();
  return s.count;
}

OmoBipartiteScan scan_bipartite_independent_even(int max_order) {
  if (max_order < 2 || max_order > 10)
    throw error("scan order must be 2..10");
  OmoBipartiteScan out;
  for (int v = 2; v <= max_order; ++v) {
    for (int a = 1; a <= v / 2; ++a) {
      int b = v - a;
      int cross = a * b;
      for (uint64_t mask = 0; mask < (uint64_t{1} << cross); ++mask) {
        std::vector<std::pair<int, int>> edges;
        int bit = 0;
        for (int x = 0; x < a; ++x)
          for (int y = 0; y < b; ++y, ++bit)
            if (mask & (uint64_t{1} << bit)) edges.emplace_back(x, a + y);
        if (static_cast<int>(edges.size()) < v - 1) continue;
        Graph g = make_graph(v, std::move(edges));
        if (!g.is_connected()) continue;
        ++out.graphs_scanned;
        auto deg = g.degrees();
        bool independent = true;
        for (auto [x, y] : g.edges)
          if (deg[x] % 2 == 0 && deg[y] % 2 == 0) independent = false;
        if (!independent) continue;
        ++out.with_property;
        OrderSearch s(g.adjacency(), deg, g.order, OrderKind::OMO, true);
        s.dfs();
        if (!s.found) out.counterexamples.push_back(g);
      }
    }
  }
  return out;
}

}  // namespace antiram
