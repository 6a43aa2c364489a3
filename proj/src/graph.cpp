#include "antiram/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace antiram {

std::vector<std::pair<int, int>> edge_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
  return out;
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(order, 0);
  for (auto [u, v] : edges) {
    ++d[u];
    ++d[v];
  }
  return d;
}

std::vector<uint64_t> Graph::adjacency() const {
  std::vector<uint64_t> adj(order, 0);
  for (auto [u, v] : edges) {
    adj[u] |= uint64_t{1} << v;
    adj[v] |= uint64_t{1} << u;
  }
  return adj;
}

int Graph::max_degree() const {
  auto d = degrees();
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

bool Graph::is_odd_graph() const {
  auto d = degrees();
  return std::all_of(d.begin(), d.end(), [](int x) { return x % 2 == 1; });
}

bool Graph::is_even_graph() const {
  auto d = degrees();
  return std::all_of(d.begin(), d.end(), [](int x) { return x % 2 == 0; });
}

bool Graph::has_isolated_vertex() const {
  auto d = degrees();
  return std::any_of(d.begin(), d.end(), [](int x) { return x == 0; });
}

int Graph::count_positive_even_degree() const {
  auto d = degrees();
  return static_cast<int>(
      std::count_if(d.begin(), d.end(), [](int x) { return x > 0 && x % 2 == 0; }));
}

std::vector<int> Graph::component_ids() const {
  std::vector<int> id(order, -1);
  auto adj = adjacency();
  int next = 0;
  for (int s = 0; s < order; ++s) {
    if (id[s] >= 0) continue;
    std::vector<int> stack{s};
    id[s] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      uint64_t m = adj[v];
      while (m) {
        int w = std::countr_zero(m);
        m &= m - 1;
        if (id[w] < 0) {
          id[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return id;
}

bool Graph::is_connected() const {
  if (order <= 1) return true;
  auto id = component_ids();
  return std::all_of(id.begin(), id.end(), [](int x) { return x == 0; });
}

bool Graph::is_forest() const {
  auto id = component_ids();
  int comps = id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
  return size() == order - comps;
}

std::optional<std::vector<int>> Graph::bipartition() const {
  std::vector<int> side(order, -1);
  auto adj = adjacency();
  for (int s = 0; s < order; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      uint64_t m = adj[v];
      while (m) {
        int w = std::countr_zero(m);
        m &= m - 1;
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

Graph make_graph(int order, std::vector<std::pair<int, int>> edges,
                 std::string name) {
  if (order < 1 || order > kMaxHostOrder)
    throw error("graph order out of range: " + std::to_string(order));
  for (auto& [u, v] : edges) {
    if (u == v) throw error("loop edge rejected");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= order) throw error("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw error("duplicate edge rejected");
  Graph g;
  g.order = order;
  g.edges = std::move(edges);
  g.name = std::move(name);
  return g;
}

DegreeParityProfile degree_parity_profile(const Graph& g) {
  DegreeParityProfile p;
  auto d = g.degrees();
  p.parity.resize(g.order);
  for (int v = 0; v < g.order; ++v) p.parity[v] = d[v] % 2;
  p.odd_graph = g.is_odd_graph();
  p.even_graph = g.is_even_graph();
  return p;
}

namespace {

void require_pattern_order(int k, const char* family) {
  if (k < 1 || k > kMaxPatternOrder)
    throw error(std::string(family) + ": order parameter out of range (1..16)");
}

}  // namespace

Graph build_path(int k) {
  require_pattern_order(k, "path");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return make_graph(k, std::move(e), "P" + std::to_string(k));
}

Graph build_cycle(int k) {
  if (k < 3) throw error("cycle needs order >= 3");
  require_pattern_order(k, "cycle");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, k - 1);
  return make_graph(k, std::move(e), "C" + std::to_string(k));
}

Graph build_complete(int k) {
  require_pattern_order(k, "complete");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) e.emplace_back(u, v);
  return make_graph(k, std::move(e), "K" + std::to_string(k));
}

Graph build_complete_bipartite(int p, int q) {
  if (p < 1 || q < 1) throw error("complete bipartite parts must be positive");
  require_pattern_order(p + q, "complete bipartite");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < p; ++u)
    for (int v = p; v < p + q; ++v) e.emplace_back(u, v);
  return make_graph(p + q, std::move(e),
                    "K" + std::to_string(p) + "," + std::to_string(q));
}

Graph build_star(int r) {
  Graph g = build_complete_bipartite(1, r);
  g.name = "K1," + std::to_string(r);
  return g;
}

Graph build_k4_minus_e() {
  return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}, "K4-e");
}

Graph build_paw() {
  return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}, "paw");
}

Graph build_broom(int k) {
  if (k < 2) throw error("broom needs star degree >= 2");
  require_pattern_order(k + 2, "broom");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
  e.emplace_back(1, k + 1);
  return make_graph(k + 2, std::move(e), "K1," + std::to_string(k) + "+");
}

Graph build_matching(int t) {
  if (t < 1) throw error("matching needs at least one edge");
  require_pattern_order(2 * t, "matching");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < t; ++i) e.emplace_back(2 * i, 2 * i + 1);
  return make_graph(2 * t, std::move(e), std::to_string(t) + "P2");
}

Graph build_corona(const Graph& h) {
  require_pattern_order(2 * h.order, "corona");
  auto e = h.edges;
  for (int v = 0; v < h.order; ++v) e.emplace_back(v, h.order + v);
  return make_graph(2 * h.order, std::move(e), "corona:" + h.name);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto e = a.edges;
  for (auto [u, v] : b.edges) e.emplace_back(a.order + u, a.order + v);
  std::string name = a.name + "+" + b.name;
  return make_graph(a.order + b.order, std::move(e), std::move(name));
}

namespace {

int parse_int(std::string_view s, const char* what) {
  int value = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || p != s.data() + s.size())
    throw error(std::string("bad integer in graph spec: ") + what);
  return value;
}

Graph parse_explicit(std::string_view body) {
  // body = "<order>:<edge>,<edge>,..."; edge is two base-16 digits or "a-b".
  auto colon = body.find(':');
  if (colon == std::string_view::npos)
    throw error("explicit graph needs g:<order>:<edges>");
  int order = parse_int(body.substr(0, colon), "order");
  std::vector<std::pair<int, int>> edges;
  std::string_view rest = body.substr(colon + 1);
  auto hex = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return 10 + (c - 'a');
    return -1;
  };
  while (!rest.empty()) {
    auto comma = rest.find(',');
    size_t len = comma == std::string_view::npos ? rest.size() : comma;
    std::string_view tok = rest.substr(0, len);
    if (auto dash = tok.find('-'); dash != std::string_view::npos) {
      edges.emplace_back(parse_int(tok.substr(0, dash), "edge endpoint"),
                         parse_int(tok.substr(dash + 1), "edge endpoint"));
    } else if (tok.size() == 2 && hex(tok[0]) >= 0 && hex(tok[1]) >= 0) {
      edges.emplace_back(hex(tok[0]), hex(tok[1]));
    } else {
      throw error("bad edge token: " + std::string(tok));
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (order > kMaxPatternOrder)
    throw error("explicit pattern graphs are capped at 16 vertices");
  return make_graph(order, std::move(edges), "g:" + std::string(body));
}

Graph parse_base(std::string_view s);

// A term is an optional decimal multiplicity followed by a base name.
Graph parse_term(std::string_view s) {
  size_t digits = 0;
  while (digits < s.size() && s[digits] >= '0' && s[digits] <= '9') ++digits;
  // Avoid eating the 1 of "1P2"? A leading count applies only if a base
  // follows; "2P2" and bare "P2" are both valid.
  if (digits == 0 || digits == s.size()) return parse_base(s);
  int t = parse_int(s.substr(0, digits), "multiplicity");
  if (t < 1) throw error("multiplicity must be positive");
  Graph base = parse_base(s.substr(digits));
  Graph out = base;
  for (int i = 1; i < t; ++i) out = disjoint_union(out, base);
  if (base.name == "P2") {
    out.name = std::to_string(t) + "P2";
  } else if (t > 1) {
    out.name = std::to_string(t) + base.name;
  }
  return out;
}

Graph parse_base(std::string_view s) {
  if (s == "K4-e" || s == "K4e") return build_k4_minus_e();
  if (s == "paw") return build_paw();
  if (s.starts_with("corona:")) return build_corona(parse_term(s.substr(7)));
  if (s.size() >= 2 && (s[0] == 'P' || s[0] == 'C')) {
    int k = parse_int(s.substr(1), "order");
    return s[0] == 'P' ? build_path(k) : build_cycle(k);
  }
  if (s.size() >= 2 && s[0] == 'K') {
    std::string_view body = s.substr(1);
    bool broom = body.ends_with("+");
    if (broom) body.remove_suffix(1);
    if (auto comma = body.find(','); comma != std::string_view::npos) {
      int p = parse_int(body.substr(0, comma), "part size");
      int q = parse_int(body.substr(comma + 1), "part size");
      if (broom) {
        if (p != 1) throw error("broom form is K1,<k>+");
        return build_broom(q);
      }
      if (p == 1) return build_star(q);
      return build_complete_bipartite(p, q);
    }
    if (broom) throw error("broom form is K1,<k>+");
    return build_complete(parse_int(body, "order"));
  }
  throw error("unknown graph family: " + std::string(s));
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::string_view s = text;
  if (s.empty()) throw error("empty graph spec");
  if (s.starts_with("g:")) return parse_explicit(s.substr(2));
  if (s.starts_with("union:")) s.remove_prefix(6);
  // Split on '+'; an empty piece means the previous term ended in '+'
  // (broom names like K1,3+).
  std::vector<std::string> parts;
  std::string cur;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '+') {
      if (i < s.size() && s[i] == '+' &&
          (i + 1 == s.size() || s[i + 1] == '+')) {
        cur.push_back('+');  // trailing '+' belongs to the term
        if (i + 1 < s.size()) ++i;
      }
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(s[i]);
    }
  }
  if (!parts.empty() && parts.back().empty()) parts.pop_back();
  if (parts.empty()) throw error("empty graph spec");
  Graph g = parse_term(parts[0]);
  for (size_t i = 1; i < parts.size(); ++i)
    g = disjoint_union(g, parse_term(parts[i]));
  if (g.order > kMaxPatternOrder)
    throw error("pattern graphs are capped at 16 vertices");
  return g;
}

long long turan_ex(long long n, int k) {
  if (k < 3) throw error("turan_ex needs clique order k >= 3");
  if (n < 1) throw error("turan_ex needs n >= 1");
  long long parts = k - 1;
  long long q = n / parts, r = n % parts;
  // r parts of size q+1, the rest of size q
  auto c2 = [](long long x) { return x * (x - 1) / 2; };
  return c2(n) - r * c2(q + 1) - (parts - r) * c2(q);
}

namespace {

bool mapping_preserves(const Graph& a, const Graph& b,
                       const std::vector<int>& perm) {
  for (auto [u, v] : a.edges)
    if (!b.has_edge(perm[u], perm[v])) return false;
  return true;
}

}  // namespace

long long count_automorphisms(const Graph& g) {
  if (g.order > 10) throw error("count_automorphisms capped at order 10");
  std::vector<int> perm(g.order);
  std::iota(perm.begin(), perm.end(), 0);
  long long count = 0;
  do {
    if (mapping_preserves(g, g, perm)) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order != b.order || a.size() != b.size()) return false;
  if (a.order > 8) throw error("isomorphic capped at order 8");
  auto da = a.degrees();
  auto db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> perm(a.order);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (mapping_preserves(a, b, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace antiram
