#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace antiram {

// Pattern graphs stay small; hosts are complete graphs K_n.
inline constexpr int kMaxPatternOrder = 16;
inline constexpr int kMaxHostOrder = 64;

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Edges of K_n are indexed in lexicographic order of pairs (i,j), i<j:
// (0,1),(0,2),...,(0,n-1),(1,2),...,(n-2,n-1).
constexpr int edge_count(int n) { return n * (n - 1) / 2; }
constexpr int edge_index(int n, int u, int v) {
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}
std::vector<std::pair<int, int>> edge_pairs(int n);

// Simple undirected graph on vertices 0..order-1.
// Edge list is kept sorted in lexicographic pair order, u < v.
struct Graph {
  int order = 0;
  std::vector<std::pair<int, int>> edges;
  std::string name;

  int size() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const;
  std::vector<int> degrees() const;
  std::vector<uint64_t> adjacency() const;
  int max_degree() const;
  bool is_odd_graph() const;
  bool is_even_graph() const;
  bool has_isolated_vertex() const;
  int count_positive_even_degree() const;
  std::vector<int> component_ids() const;
  bool is_connected() const;
  bool is_forest() const;
  // Side labels 0/1 per vertex, or nullopt if an odd cycle exists.
  // Within each component the side containing its smallest vertex is 0.
  std::optional<std::vector<int>> bipartition() const;
};

// Validates and canonicalizes the edge list (sorts, checks range/dupes).
Graph make_graph(int order, std::vector<std::pair<int, int>> edges,
                 std::string name = "");

struct DegreeParityProfile {
  std::vector<int> parity;  // degree mod 2 per vertex
  bool odd_graph = false;
  bool even_graph = false;
};
DegreeParityProfile degree_parity_profile(const Graph& g);

// Named catalog. Vertex labelling is deterministic per family:
//   P_k   path 0-1-...-(k-1)
//   C_k   cycle 0-1-...-(k-1)-0
//   K_k   complete
//   K_p,q parts {0..p-1} and {p..p+q-1}
//   K_1,r star, center 0
//   K4-e  vertices 0..3, the pair (2,3) missing
//   paw   triangle 0,1,2 with leaf 3 on vertex 0
//   K_1,k^+ broom: star center 0, leaves 1..k, pendant k+1 on leaf 1
//   tK_2  matching, edge (2i,2i+1)
//   corona(H): H plus one leaf |H|+v attached to each vertex v
Graph build_path(int k);
Graph build_cycle(int k);
Graph build_complete(int k);
Graph build_complete_bipartite(int p, int q);
Graph build_star(int r);
Graph build_k4_minus_e();
Graph build_paw();
Graph build_broom(int k);
Graph build_matching(int t);
Graph build_corona(const Graph& h);
Graph disjoint_union(const Graph& a, const Graph& b);

// Textual grammar, e.g. "P4", "C5", "K4-e", "K2,3", "K1,3", "K1,3+",
// "paw", "2P2", "corona:C4", "union:P3+2P2", "g:5:01,12,23,34".
// Explicit edge lists use one base-16 digit per endpoint, or "a-b" decimal.
Graph parse_graph(const std::string& text);

// Maximum edge count of a K_k-free graph on n vertices (k >= 3),
// realized by the balanced complete (k-1)-partite graph.
long long turan_ex(long long n, int k);

// Brute-force helpers for small graphs (order <= 10 / 8).
long long count_automorphisms(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace antiram
