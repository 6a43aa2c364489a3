#pragma once

#include <optional>
#include <span>

#include "antiram/coloring.hpp"
#include "antiram/graph.hpp"

namespace antiram {

// All distinct copies of a pattern inside K_n, identified by edge sets
// (embedding-level duplicates collapse by |Aut(G)|). Copies are ordered
// lexicographically by their sorted host-edge-index tuples, and an
// inverted index maps each host edge to the copies containing it.
struct CopyIndex {
  Graph pattern;
  int host_order = 0;
  int edges_per_copy = 0;
  std::vector<int> edge_ids;                 // flattened, sorted per copy
  std::vector<std::pair<int, int>> pairs;    // endpoints, parallel to edge_ids
  std::vector<std::vector<int>> copies_with_edge;

  int copy_count() const {
    return edges_per_copy ? static_cast<int>(edge_ids.size()) / edges_per_copy
                          : 0;
  }
  std::span<const int> copy_edges(int c) const {
    return {edge_ids.data() + static_cast<size_t>(c) * edges_per_copy,
            static_cast<size_t>(edges_per_copy)};
  }
  std::span<const std::pair<int, int>> copy_pairs(int c) const {
    return {pairs.data() + static_cast<size_t>(c) * edges_per_copy,
            static_cast<size_t>(edges_per_copy)};
  }
};

CopyIndex enumerate_copies(const Graph& g, int host_order);

// First copy (in index order) whose induced coloring satisfies the kind,
// or nullopt if none does. The scan is exhaustive.
std::optional<int> find_good_copy(const EdgeColoring& psi,
                                  const CopyIndex& index, PhiKind kind);

struct CanonicalClique {
  enum class Tag { Monochromatic, Rainbow, Lex };
  std::vector<int> vertices;
  Tag tag;
};
std::string_view to_string(CanonicalClique::Tag tag);

// First k-subset (in lexicographic order) inducing a monochromatic,
// rainbow, or LEX-patterned clique; the LEX tag means some ordering of the
// subset gives every vertex a monochromatic backward star, star colors
// mutually distinct. k <= 6.
std::optional<CanonicalClique> find_canonical_clique(const EdgeColoring& psi,
                                                     int k);

}  // namespace antiram
