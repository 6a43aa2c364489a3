#pragma once

#include <span>
#include <utility>
#include <vector>

#include "antiram/coloring.hpp"

namespace antiram {

enum class ClassParity { Odd, Even, Mixed };
std::string_view to_string(ClassParity p);

// A colored copy is a list of host edges (endpoint pairs, u < v) together
// with one color per edge. Patterns never have isolated vertices, so the
// copy's vertex set is exactly the set of endpoints.
//
// Semantics of the eight conditions, per vertex v of the copy and per color
// class C restricted to the copy's edges:
//   AR  all edge colors distinct
//   LR  every class is a matching (proper edge coloring)
//   SOD every class induces an odd graph on the vertices it touches
//   OD  every vertex has some incident color of odd multiplicity
//   CF  every vertex has some incident color of multiplicity exactly one
//   SP  all classes induce odd graphs, or all induce even graphs
//   CP  each class individually induces an odd graph or an even graph
//   LP  at each vertex, the incident color multiplicities are all odd
//       or all even
bool check_copy(std::span<const std::pair<int, int>> edges,
                std::span<const int> colors, PhiKind kind);

struct CopyColorClass {
  int color;
  std::vector<int> edge_ids;  // positions within the copy's edge list
  ClassParity parity;
};
std::vector<CopyColorClass> class_decomposition(
    std::span<const std::pair<int, int>> edges, std::span<const int> colors);

namespace detail {
// No input validation; the search layer guarantees well-formed copies.
bool check_copy_unchecked(std::span<const std::pair<int, int>> edges,
                          std::span<const int> colors, PhiKind kind);
}  // namespace detail

}  // namespace antiram
