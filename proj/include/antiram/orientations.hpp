#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "antiram/graph.hpp"

namespace antiram {

// Vertex orderings with parity constraints. Each edge is oriented from the
// later vertex toward the earlier one; backward(v) counts neighbors of v
// placed before v.
//   OMO: every vertex has backward count 0 or odd.
//   OEO: as OMO, or an even backward count with no later neighbors.
enum class OrderKind { OMO, OEO };
std::string_view to_string(OrderKind k);

struct OrderingResult {
  enum class VertexClass { Zero, Odd, EvenClosed };
  std::vector<int> perm;      // perm[pos] = vertex
  std::vector<int> backward;  // per vertex
  std::vector<VertexClass> vclass;
  OrderKind kind = OrderKind::OMO;
};

bool verify_ordering(const Graph& g, std::span<const int> perm, OrderKind kind);

// Constructive fast paths (forests for OMO/OEO, bipartite for OEO, bipartite
// with all positive-even-degree vertices on one side for OMO) fall back to
// a pruned permutation search for |V| <= 10. Returned orderings re-verify.
std::optional<OrderingResult> solve_ordering(const Graph& g, OrderKind kind);

// Exact number of satisfying permutations, |V| <= 10.
long long count_orderings(const Graph& g, OrderKind kind);

// Empirical scan: connected bipartite graphs up to max_order whose
// even-degree vertex set is independent, looking for one without an OMO.
struct OmoBipartiteScan {
  long long graphs_scanned = 0;
  long long with_property = 0;
  std::vector<Graph> counterexamples;
};
OmoBipartiteScan scan_bipartite_independent_even(int max_order);

}  // namespace antiram
