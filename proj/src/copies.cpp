#include "antiram/copies.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "antiram/predicates.hpp"

namespace antiram {

namespace {

// Advances a k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

double falling_factorial(int n, int p) {
  double x = 1;
  for (int i = 0; i < p; ++i) x *= n - i;
  return x;
}

}  // namespace

CopyIndex enumerate_copies(const Graph& g, int host_order) {
  if (g.order < 2 || g.size() < 1)
    throw error("pattern must have at least one edge");
  if (g.has_isolated_vertex())
    throw error("patterns with isolated vertices are rejected");
  if (host_order > kMaxHostOrder)
    throw error("host order capped at 64");
  if (g.order > host_order)
    throw error("pattern larger than host");
  if (g.order > 10)
    throw error("copy enumeration capped at 10-vertex patterns");
  if (falling_factorial(host_order, g.order) > 5e8)
    throw error("copy universe too large for this host");

  const int p = g.order;
  const int pe = g.size();
  std::vector<int> comb(p);
  std::iota(comb.begin(), comb.end(), 0);
  std::vector<std::vector<int>> all;
  std::vector<int> perm(p);
  do {
    std::set<std::vector<int>> seen;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> tuple(pe);
      for (int e = 0; e < pe; ++e) {
        int u = comb[perm[g.edges[e].first]];
        int v = comb[perm[g.edges[e].second]];
        if (u > v) std::swap(u, v);
        tuple[e] = edge_index(host_order, u, v);
      }
      std::sort(tuple.begin(), tuple.end());
      seen.insert(std::move(tuple));
    } while (std::next_permutation(perm.begin(), perm.end()));
    all.insert(all.end(), seen.begin(), seen.end());
  } while (next_combination(comb, host_order));
  std::sort(all.begin(), all.end());

  CopyIndex idx;
  idx.pattern = g;
  idx.host_order = host_order;
  idx.edges_per_copy = pe;
  idx.edge_ids.reserve(all.size() * pe);
  idx.pairs.reserve(all.size() * pe);
  auto table = edge_pairs(host_order);
  idx.copies_with_edge.assign(edge_count(host_order), {});
  for (size_t c = 0; c < all.size(); ++c) {
    for (int id : all[c]) {
      idx.edge_ids.push_back(id);
      idx.pairs.push_back(table[id]);
      idx.copies_with_edge[id].push_back(static_cast<int>(c));
    }
  }
  return idx;
}

std::optional<int> find_good_copy(const EdgeColoring& psi,
                                  const CopyIndex& index, PhiKind kind) {
  if (psi.n != index.host_order)
    throw error("coloring host order does not match copy index");
  std::array<int, 128> colors;
  for (int c = 0; c < index.copy_count(); ++c) {
    auto ids = index.copy_edges(c);
    for (size_t i = 0; i < ids.size(); ++i) colors[i] = psi.color[ids[i]];
    if (detail::check_copy_unchecked(
            index.copy_pairs(c), {colors.data(), ids.size()}, kind))
      return c;
  }
  return std::nullopt;
}

std::string_view to_string(CanonicalClique::Tag tag) {
  switch (tag) {
    case CanonicalClique::Tag::Monochromatic: return "monochromatic";
    case CanonicalClique::Tag::Rainbow: return "rainbow";
    case CanonicalClique::Tag::Lex: return "lex";
  }
  return "?";
}

namespace {

// Extends an ordering of the subset so that each added vertex sees one
// color on all edges to its predecessors, distinct from earlier star colors.
bool lex_order_exists(const EdgeColoring& psi, const std::vector<int>& subset,
                      std::vector<int>& order, uint32_t used_mask,
                      std::vector<int>& star_colors) {
  int k = static_cast<int>(subset.size());
  if (static_cast<int>(order.size()) == k) return true;
  for (int i = 0; i < k; ++i) {
    if (used_mask & (1u << i)) continue;
    int v = subset[i];
    int c = -1;
    bool ok = true;
    for (int w : order) {
      int cw = psi.color[edge_index(psi.n, std::min(v, w), std::max(v, w))];
      if (c < 0) c = cw;
      if (cw != c) { ok = false; break; }
    }
    if (ok && !order.empty() &&
        std::find(star_colors.begin(), star_colors.end(), c) !=
            star_colors.end())
      ok = false;
    if (!ok) continue;
    order.push_back(v);
    if (order.size() >= 2) star_colors.push_back(c);
    if (lex_order_exists(psi, subset, order, used_mask | (1u << i),
                         star_colors))
      return true;
    if (order.size() >= 2) star_colors.pop_back();
    order.pop_back();
  }
  return false;
}

}  // namespace

std::optional<CanonicalClique> find_canonical_clique(const EdgeColoring& psi,
                                                     int k) {
  if (k < 2 || k > 6) throw error("canonical clique order must be 2..6");
  if (k > psi.n) throw error("clique larger than host");
  std::vector<int> comb(k);
  std::iota(comb.begin(), comb.end(), 0);
  do {
    int first = psi.color[edge_index(psi.n, comb[0], comb[1])];
    bool mono = true, rainbow = true;
    std::vector<int> cs;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        cs.push_back(psi.color[edge_index(psi.n, comb[i], comb[j])]);
    for (int c : cs) mono = mono && (c == first);
    std::sort(cs.begin(), cs.end());
    rainbow = std::adjacent_find(cs.begin(), cs.end()) == cs.end();
    if (mono)
      return CanonicalClique{comb, CanonicalClique::Tag::Monochromatic};
    if (rainbow)
      return CanonicalClique{comb, CanonicalClique::Tag::Rainbow};
    std::vector<int> order, star_colors;
    if (lex_order_exists(psi, comb, order, 0, star_colors))
      return CanonicalClique{comb, CanonicalClique::Tag::Lex};
  } while (next_combination(comb, psi.n));
  return std::nullopt;
}

}  // namespace antiram
