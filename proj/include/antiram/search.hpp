#pragma once

#include <optional>

#include "antiram/coloring.hpp"
#include "antiram/copies.hpp"
#include "antiram/graph.hpp"

namespace antiram {

struct Budget {
  long long max_nodes = 100'000'000;
  double max_seconds = 60.0;
};

struct SearchStats {
  long long nodes = 0;
  long long good_copy_prunes = 0;
  double seconds = 0.0;
};

// FullSet visits every avoiding restricted-growth string and records the
// color count of each leaf; MaxOnly additionally cuts branches that cannot
// exceed the best color count seen so far (per worker, so the outcome stays
// schedule-independent).
enum class SearchMode { FullSet, MaxOnly };

struct SearchOutcome {
  int host_order = 0;
  PhiKind kind = PhiKind::AR;
  std::string pattern_name;
  long long phi = 1;  // exact when exhausted, otherwise a lower bound
  std::vector<int> achievable;
  std::optional<EdgeColoring> witness;
  SearchStats stats;
  bool exhausted = false;
  bool full_set = false;  // achievable is the complete set

  int max_achievable() const {
    return achievable.empty() ? 0 : achievable.back();
  }
  // m-values missing from {1..max}; the set is not assumed to be an interval.
  std::vector<int> gaps() const;
};

// Exact phi(n,G) for one kind: a single DFS over restricted-growth edge
// colorings of K_n with per-copy completion pruning. phi = 1 + max m such
// that some surjective m-coloring avoids all good copies of g.
SearchOutcome phi_exact(const Graph& g, int n, PhiKind kind,
                        const Budget& budget = {}, int threads = 1,
                        SearchMode mode = SearchMode::FullSet);

struct AvoidResult {
  std::optional<EdgeColoring> witness;
  bool exhausted = false;
  SearchStats stats;
};

// Searches for a coloring with exactly m colors and no good copy of g.
// A returned witness is canonical and re-verified by full scan.
AvoidResult avoidable(const Graph& g, int n, int m, PhiKind kind,
                      const Budget& budget = {}, int threads = 1);

// True iff no copy of g in the colored host satisfies the kind; such a
// coloring certifies phi(n,g,kind) >= color_count + 1.
bool verify_lower_bound(const EdgeColoring& psi, const Graph& g, PhiKind kind);

struct CriticalColor {
  int color;
  bool star;  // false: single-edge class; true: star with >= 2 edges
};
// Colors whose entire class is incident with v.
std::vector<CriticalColor> critical_colors(const EdgeColoring& psi, int v);

}  // namespace antiram
