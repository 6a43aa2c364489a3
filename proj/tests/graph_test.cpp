#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "antiram/graph.hpp"
#include "naive_oracle.hpp"

using namespace antiram;

namespace {
std::vector<int> sorted_degrees(const Graph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}
}  // namespace

TEST_CASE("edge indexing is lexicographic") {
  auto pairs = edge_pairs(5);
  REQUIRE(pairs.size() == 10);
  CHECK(pairs[0] == std::pair{0, 1});
  CHECK(pairs[4] == std::pair{1, 2});
  for (int i = 0; i < 10; ++i)
    CHECK(edge_index(5, pairs[i].first, pairs[i].second) == i);
}

TEST_CASE("catalog builds match their closed forms") {
  CHECK(sorted_degrees(build_k4_minus_e()) == std::vector<int>{3, 3, 2, 2});
  Graph broom = build_broom(3);
  CHECK(broom.order == 5);
  CHECK(broom.size() == 4);
  CHECK(sorted_degrees(broom) == std::vector<int>{3, 2, 1, 1, 1});
  Graph cor = build_corona(build_cycle(4));
  CHECK(cor.order == 8);
  CHECK(cor.size() == 8);
  for (int v = 0; v < 4; ++v) CHECK(cor.degrees()[v] == 3);
  for (int v = 4; v < 8; ++v) CHECK(cor.degrees()[v] == 1);

  for (int k = 2; k <= 8; ++k) CHECK(build_path(k).size() == k - 1);
  for (int k = 3; k <= 8; ++k) CHECK(build_cycle(k).size() == k);
  for (int k = 2; k <= 6; ++k) CHECK(build_complete(k).size() == k * (k - 1) / 2);
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 4; ++q)
      CHECK(build_complete_bipartite(p, q).size() == p * q);
  for (int k = 2; k <= 6; ++k) CHECK(build_broom(k).size() == k + 1);
  for (int t = 1; t <= 5; ++t) CHECK(build_matching(t).size() == t);
}

TEST_CASE("building is deterministic") {
  Graph a = parse_graph("union:P3+2P2");
  Graph b = parse_graph("union:P3+2P2");
  CHECK(a.order == b.order);
  CHECK(a.edges == b.edges);
  CHECK(a.name == b.name);
}

TEST_CASE("graph grammar") {
  CHECK(parse_graph("P4").size() == 3);
  CHECK(parse_graph("C5").size() == 5);
  CHECK(parse_graph("K4-e").size() == 5);
  CHECK(parse_graph("K1,3").size() == 3);
  CHECK(parse_graph("K1,3+").size() == 4);
  CHECK(parse_graph("paw").size() == 4);
  CHECK(parse_graph("K2,3").size() == 6);
  CHECK(parse_graph("2P3").order == 6);
  CHECK(parse_graph("3P2").size() == 3);
  Graph u = parse_graph("union:P3+2P2");
  CHECK(u.order == 7);
  CHECK(u.size() == 4);
  CHECK(u.name == "P3+2P2");
  Graph ub = parse_graph("union:K1,3++P2");
  CHECK(ub.order == 7);
  CHECK(ub.size() == 5);
  Graph ex = parse_graph("g:5:01,12,23,34");
  CHECK(ex.order == 5);
  CHECK(isomorphic(ex, build_path(5)));
  CHECK(parse_graph("g:12:0-1,1-11").order == 12);
  CHECK(parse_graph("corona:C4").size() == 8);

  CHECK_THROWS_AS(parse_graph("Q7"), error);
  CHECK_THROWS_AS(parse_graph("P20"), error);       // pattern cap
  CHECK_THROWS_AS(parse_graph("g:3:00"), error);    // loop
  CHECK_THROWS_AS(parse_graph("g:3:01,01"), error); // duplicate
  CHECK_THROWS_AS(parse_graph("C2"), error);
  CHECK_THROWS_AS(parse_graph(""), error);
}

TEST_CASE("degree parity profile") {
  auto k4 = degree_parity_profile(build_complete(4));
  CHECK(k4.odd_graph);
  CHECK_FALSE(k4.even_graph);
  auto c4 = degree_parity_profile(build_cycle(4));
  CHECK(c4.even_graph);
  CHECK_FALSE(c4.odd_graph);
  auto d = degree_parity_profile(build_k4_minus_e());
  CHECK_FALSE(d.odd_graph);
  CHECK_FALSE(d.even_graph);
  CHECK(d.parity == std::vector<int>{1, 1, 0, 0});
}

TEST_CASE("odd and even flags are mutually exclusive on nonempty graphs") {
  const char* names[] = {"P2", "P3", "P4", "C3", "C4", "C5",  "K4",
                         "K4-e", "paw", "K1,3", "K1,4", "2P2", "K2,3"};
  for (const char* name : names) {
    Graph g = parse_graph(name);
    REQUIRE(g.size() >= 1);
    CHECK_FALSE((g.is_odd_graph() && g.is_even_graph()));
  }
}

TEST_CASE("turan numbers") {
  CHECK(turan_ex(6, 3) == 9);
  CHECK(turan_ex(5, 3) == 6);
  CHECK(turan_ex(7, 4) == 16);
  CHECK(turan_ex(2, 3) == 1);
  CHECK_THROWS_AS(turan_ex(5, 2), error);

  for (int n = 1; n <= 7; ++n)
    for (int k : {3, 4})
      CHECK(turan_ex(n, k) == antiram::testing::brute_turan(n, k));
}

TEST_CASE("structure helpers") {
  CHECK(build_path(5).is_forest());
  CHECK_FALSE(build_cycle(4).is_forest());
  CHECK(build_cycle(4).bipartition().has_value());
  CHECK_FALSE(build_cycle(5).bipartition().has_value());
  CHECK(parse_graph("union:P3+P2").component_ids() ==
        std::vector<int>{0, 0, 0, 1, 1});
  CHECK(build_cycle(4).count_positive_even_degree() == 4);
  CHECK(build_paw().count_positive_even_degree() == 2);
}

TEST_CASE("automorphisms and isomorphism") {
  CHECK(count_automorphisms(build_cycle(4)) == 8);
  CHECK(count_automorphisms(build_path(4)) == 2);
  CHECK(count_automorphisms(build_complete(4)) == 24);
  CHECK(count_automorphisms(build_k4_minus_e()) == 4);
  CHECK(isomorphic(build_cycle(4), build_complete_bipartite(2, 2)));
  CHECK_FALSE(isomorphic(build_paw(), build_star(3)));
}
