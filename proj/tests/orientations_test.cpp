#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "antiram/orientations.hpp"

using namespace antiram;

namespace {

// All labelled trees on n vertices via their length-(n-2) sequences.
std::vector<Graph> labelled_trees(int n) {
  std::vector<Graph> out;
  if (n == 1) {
    out.push_back(make_graph(1, {}));
    return out;
  }
  if (n == 2) {
    out.push_back(build_path(2));
    return out;
  }
  std::vector<int> seq(n - 2, 0);
  for (;;) {
    std::vector<int> deg(n, 1);
    for (int v : seq) ++deg[v];
    std::vector<std::pair<int, int>> edges;
    for (int v : seq) {
      int leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
      --deg[leaf];  // consumed
      --deg[v];
    }
    std::vector<int> last;
    for (int v = 0; v < n; ++v)
      if (deg[v] == 1) last.push_back(v);
    edges.emplace_back(last[0], last[1]);
    out.push_back(make_graph(n, edges));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return out;
}

}  // namespace

TEST_CASE("verify on hand orderings") {
  Graph p4 = build_path(4);
  std::vector<int> id{0, 1, 2, 3};
  CHECK(verify_ordering(p4, id, OrderKind::OMO));

  Graph k3 = build_complete(3);
  std::vector<int> perm{0, 1, 2};
  std::sort(perm.begin(), perm.end());
  do {
    CHECK_FALSE(verify_ordering(k3, perm, OrderKind::OMO));
  } while (std::next_permutation(perm.begin(), perm.end()));

  Graph c4 = build_cycle(4);
  // bipartition blocks {0,2} then {1,3}
  CHECK(verify_ordering(c4, std::vector<int>{0, 2, 1, 3}, OrderKind::OEO));
  CHECK_FALSE(verify_ordering(c4, std::vector<int>{0, 2, 1, 3}, OrderKind::OMO));

  CHECK_THROWS_AS(verify_ordering(p4, std::vector<int>{0, 1, 2, 2},
                                  OrderKind::OMO),
                  error);
  CHECK_THROWS_AS(verify_ordering(p4, std::vector<int>{0, 1}, OrderKind::OMO),
                  error);
}

TEST_CASE("named existence results") {
  auto omo = solve_ordering(build_k4_minus_e(), OrderKind::OMO);
  REQUIRE(omo.has_value());
  CHECK(verify_ordering(build_k4_minus_e(), omo->perm, OrderKind::OMO));
  CHECK(verify_ordering(build_k4_minus_e(), omo->perm, OrderKind::OEO));

  for (int k = 3; k <= 6; ++k)
    CHECK_FALSE(solve_ordering(build_complete(k), OrderKind::OMO).has_value());
  for (int k = 3; k <= 8; ++k)
    CHECK_FALSE(solve_ordering(build_cycle(k), OrderKind::OMO).has_value());
  // even cycles still have odd-even orderings
  CHECK(solve_ordering(build_cycle(6), OrderKind::OEO).has_value());
}

TEST_CASE("counting") {
  CHECK(count_orderings(build_path(2), OrderKind::OMO) == 2);
  CHECK(count_orderings(build_complete(3), OrderKind::OMO) == 0);
  CHECK(count_orderings(build_path(3), OrderKind::OMO) == 4);
  // OEO counts dominate OMO counts
  for (const char* name : {"P4", "C4", "paw", "K4-e"}) {
    Graph g = parse_graph(name);
    CHECK(count_orderings(g, OrderKind::OEO) >=
          count_orderings(g, OrderKind::OMO));
  }
}

TEST_CASE("forests always admit odd-majority orientations") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& t : labelled_trees(n)) {
      auto res = solve_ordering(t, OrderKind::OMO);
      REQUIRE(res.has_value());
      CHECK(verify_ordering(t, res->perm, OrderKind::OMO));
      if (n <= 6) CHECK(count_orderings(t, OrderKind::OMO) > 0);
    }
  }
  // a forest with several components
  Graph f = parse_graph("union:P3+2P2");
  auto res = solve_ordering(f, OrderKind::OMO);
  REQUIRE(res.has_value());
  CHECK(verify_ordering(f, res->perm, OrderKind::OMO));
}

TEST_CASE("bipartite block orderings") {
  for (const char* name : {"C4", "C6", "K2,3", "K3,3", "K1,4", "C8"}) {
    Graph g = parse_graph(name);
    auto oeo = solve_ordering(g, OrderKind::OEO);
    REQUIRE(oeo.has_value());
    CHECK(verify_ordering(g, oeo->perm, OrderKind::OEO));
  }
  // bipartite odd graph: OMO via the block order
  Graph k33 = parse_graph("K3,3");
  auto omo = solve_ordering(k33, OrderKind::OMO);
  REQUIRE(omo.has_value());
  CHECK(verify_ordering(k33, omo->perm, OrderKind::OMO));
  // evens on one side: K2,3 has its even-degree vertices in one class
  Graph k23 = parse_graph("K2,3");
  auto omo23 = solve_ordering(k23, OrderKind::OMO);
  REQUIRE(omo23.has_value());
}

TEST_CASE("every odd-majority orientation is an odd-even ordering") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) edges.emplace_back(u, v);
    Graph g = make_graph(n, edges);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    if (verify_ordering(g, perm, OrderKind::OMO))
      CHECK(verify_ordering(g, perm, OrderKind::OEO));
  }
}

TEST_CASE("order cap") {
  Graph k11 = make_graph(11, [] {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < 11; ++u)
      for (int v = u + 1; v < 11; ++v) e.emplace_back(u, v);
    return e;
  }());
  CHECK_THROWS_AS(solve_ordering(k11, OrderKind::OMO), error);
  CHECK_THROWS_AS(count_orderings(k11, OrderKind::OMO), error);
}

TEST_CASE("bipartite independent-even scan finds no counterexample") {
  auto scan = scan_bipartite_independent_even(6);
  CHECK(scan.graphs_scanned > 0);
  CHECK(scan.with_property > 0);
  CHECK(scan.counterexamples.empty());
}
