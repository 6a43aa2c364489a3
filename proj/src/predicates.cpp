#include "antiram/predicates.hpp"

#include <algorithm>
#include <array>

namespace antiram {

std::string_view to_string(PhiKind kind) {
  switch (kind) {
    case PhiKind::AR: return "ar";
    case PhiKind::LR: return "lr";
    case PhiKind::SOD: return "sod";
    case PhiKind::OD: return "od";
    case PhiKind::CF: return "cf";
    case PhiKind::SP: return "sp";
    case PhiKind::CP: return "cp";
    case PhiKind::LP: return "lp";
  }
  return "?";
}

std::optional<PhiKind> phi_kind_from_string(std::string_view s) {
  for (PhiKind k : kAllPhiKinds)
    if (s == to_string(k)) return k;
  return std::nullopt;
}

std::string_view to_string(ClassParity p) {
  switch (p) {
    case ClassParity::Odd: return "odd";
    case ClassParity::Even: return "even";
    case ClassParity::Mixed: return "mixed";
  }
  return "?";
}

void EdgeColoring::canonicalize() {
  std::vector<int> relabel;
  int next = 0;
  for (int& c : color) {
    if (c >= static_cast<int>(relabel.size()))
      relabel.resize(c + 1, -1);
    if (relabel[c] < 0) relabel[c] = next++;
    c = relabel[c];
  }
  color_count = next;
}

bool EdgeColoring::is_canonical() const {
  int next = 0;
  for (int c : color) {
    if (c > next) return false;
    if (c == next) ++next;
  }
  return next == color_count;
}

EdgeColoring make_coloring(int n, std::vector<int> raw_colors) {
  if (n < 2 || n > kMaxHostOrder)
    throw error("host order out of range: " + std::to_string(n));
  if (static_cast<int>(raw_colors.size()) != edge_count(n))
    throw error("coloring must assign every edge of K_n");
  for (int c : raw_colors)
    if (c < 0 || c > 1'000'000) throw error("color id out of range");
  EdgeColoring psi;
  psi.n = n;
  psi.color = std::move(raw_colors);
  psi.canonicalize();
  return psi;
}

namespace detail {

namespace {

constexpr int kMaxCopyEdges = 128;

// Fills (key, value) pairs sorted by key then value; returns pair count.
// Used both as (vertex, color) and as (color, vertex) incidence lists.
int gather_sorted(std::span<const std::pair<int, int>> edges,
                  std::span<const int> colors, bool vertex_major,
                  std::array<std::pair<int, int>, 2 * kMaxCopyEdges>& buf) {
  int m = 0;
  for (size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    int c = colors[i];
    if (vertex_major) {
      buf[m++] = {u, c};
      buf[m++] = {v, c};
    } else {
      buf[m++] = {c, u};
      buf[m++] = {c, v};
    }
  }
  std::sort(buf.begin(), buf.begin() + m);
  return m;
}

bool all_colors_distinct(std::span<const int> colors) {
  std::array<int, kMaxCopyEdges> tmp;
  std::copy(colors.begin(), colors.end(), tmp.begin());
  std::sort(tmp.begin(), tmp.begin() + colors.size());
  return std::adjacent_find(tmp.begin(), tmp.begin() + colors.size()) ==
         tmp.begin() + colors.size();
}

}  // namespace

bool check_copy_unchecked(std::span<const std::pair<int, int>> edges,
                          std::span<const int> colors, PhiKind kind) {
  if (kind == PhiKind::AR) return all_colors_distinct(colors);

  std::array<std::pair<int, int>, 2 * kMaxCopyEdges> buf;

  if (kind == PhiKind::LR || kind == PhiKind::OD || kind == PhiKind::CF ||
      kind == PhiKind::LP) {
    int m = gather_sorted(edges, colors, /*vertex_major=*/true, buf);
    int i = 0;
    while (i < m) {
      int v = buf[i].first;
      // Scan one vertex; multiplicity runs are consecutive.
      bool has_odd = false, has_one = false, has_even = false, any_two = false;
      while (i < m && buf[i].first == v) {
        int c = buf[i].second;
        int mult = 0;
        while (i < m && buf[i].first == v && buf[i].second == c) {
          ++mult;
          ++i;
        }
        if (mult % 2 == 1) has_odd = true;
        if (mult % 2 == 0) has_even = true;
        if (mult == 1) has_one = true;
        if (mult >= 2) any_two = true;
      }
      switch (kind) {
        case PhiKind::LR:
          if (any_two) return false;
          break;
        case PhiKind::OD:
          if (!has_odd) return false;
          break;
        case PhiKind::CF:
          if (!has_one) return false;
          break;
        case PhiKind::LP:
          if (has_odd && has_even) return false;
          break;
        default: break;
      }
    }
    return true;
  }

  // SOD / SP / CP: per-class vertex degree parities.
  int m = gather_sorted(edges, colors, /*vertex_major=*/false, buf);
  bool any_odd_class = false, any_even_class = false;
  int i = 0;
  while (i < m) {
    int c = buf[i].first;
    bool class_has_odd = false, class_has_even = false;
    while (i < m && buf[i].first == c) {
      int v = buf[i].second;
      int deg = 0;
      while (i < m && buf[i].first == c && buf[i].second == v) {
        ++deg;
        ++i;
      }
      (deg % 2 == 1 ? class_has_odd : class_has_even) = true;
    }
    bool mixed = class_has_odd && class_has_even;
    if (kind == PhiKind::SOD && (mixed || class_has_even)) return false;
    if (mixed) return false;  // mixed class fails SP and CP alike
    (class_has_odd ? any_odd_class : any_even_class) = true;
  }
  if (kind == PhiKind::SP) return !(any_odd_class && any_even_class);
  return true;  // SOD passed per class; CP accepts any odd/even mix
}

}  // namespace detail

namespace {

void validate_copy(std::span<const std::pair<int, int>> edges,
                   std::span<const int> colors) {
  if (edges.size() != colors.size())
    throw error("copy edge/color size mismatch");
  if (edges.empty()) throw error("empty copy");
  if (edges.size() > 128) throw error("copy too large");
  std::vector<std::pair<int, int>> sorted(edges.begin(), edges.end());
  for (auto& [u, v] : sorted) {
    if (u == v || u < 0) throw error("malformed copy edge");
    if (u > v) std::swap(u, v);
  }
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw error("duplicate edge in copy");
  for (int c : colors)
    if (c < 0) throw error("negative color in copy");
}

}  // namespace

bool check_copy(std::span<const std::pair<int, int>> edges,
                std::span<const int> colors, PhiKind kind) {
  validate_copy(edges, colors);
  return detail::check_copy_unchecked(edges, colors, kind);
}

std::vector<CopyColorClass> class_decomposition(
    std::span<const std::pair<int, int>> edges, std::span<const int> colors) {
  validate_copy(edges, colors);
  std::vector<CopyColorClass> out;
  std::vector<int> order(edges.size());
  for (size_t i = 0; i < edges.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return colors[a] < colors[b]; });
  size_t i = 0;
  while (i < order.size()) {
    CopyColorClass cls;
    cls.color = colors[order[i]];
    while (i < order.size() && colors[order[i]] == cls.color)
      cls.edge_ids.push_back(order[i++]);
    // Degree parity over the vertices this class touches.
    std::vector<std::pair<int, int>> deg;  // (vertex, degree)
    for (int e : cls.edge_ids) {
      for (int v : {edges[e].first, edges[e].second}) {
        auto it = std::find_if(deg.begin(), deg.end(),
                               [v](auto& p) { return p.first == v; });
        if (it == deg.end())
          deg.emplace_back(v, 1);
        else
          ++it->second;
      }
    }
    bool odd = false, even = false;
    for (auto& [v, d] : deg) (d % 2 ? odd : even) = true;
    cls.parity = (odd && even) ? ClassParity::Mixed
                 : odd         ? ClassParity::Odd
                               : ClassParity::Even;
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace antiram
