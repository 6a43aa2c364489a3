#include "antiram/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace antiram {

namespace {

long long c2(long long x) { return x * (x - 1) / 2; }

struct Canvas {
  int n;
  std::vector<int> color;
  int next = 0;

  explicit Canvas(int n_) : n(n_), color(edge_count(n_), -1) {}
  int fresh() { return next++; }
  void paint(int u, int v, int c) {
    if (u > v) std::swap(u, v);
    int& slot = color[edge_index(n, u, v)];
    if (slot >= 0) throw error("internal: construction painted an edge twice");
    slot = c;
  }
  EdgeColoring finish() {
    for (int c : color)
      if (c < 0) throw error("internal: construction left an edge uncolored");
    return make_coloring(n, std::move(color));
  }
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw error(msg);
}

// Rainbow K_h on the listed vertices.
void paint_rainbow_clique(Canvas& cv, const std::vector<int>& verts) {
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      cv.paint(verts[i], verts[j], cv.fresh());
}

// Klex(k,h) on the listed vertices (in the given sequential order):
// rainbow K_h on the first h; every later vertex sends one shared backward
// color to positions >= k-1 and private colors to positions < k-1.
void paint_klex(Canvas& cv, const std::vector<int>& verts, int k, int h) {
  int nn = static_cast<int>(verts.size());
  require(k >= 1, "klex needs k >= 1");
  require(h >= k + 1, "klex needs h >= k+1");
  require(h <= nn, "klex needs h <= n");
  paint_rainbow_clique(cv, {verts.begin(), verts.begin() + h});
  for (int b = h; b < nn; ++b) {
    int shared = cv.fresh();
    for (int a = k - 1; a < b; ++a) cv.paint(verts[a], verts[b], shared);
    for (int a = 0; a < k - 1; ++a) cv.paint(verts[a], verts[b], cv.fresh());
  }
}

std::vector<int> iota_vec(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Balanced k-partition of 0..n-1: the first n%k parts get the extra vertex.
std::vector<std::vector<int>> balanced_parts(int n, int k) {
  std::vector<std::vector<int>> parts(k);
  int q = n / k, r = n % k, v = 0;
  for (int i = 0; i < k; ++i) {
    int sz = q + (i < r ? 1 : 0);
    for (int j = 0; j < sz; ++j) parts[i].push_back(v++);
  }
  return parts;
}

void paint_cross_rainbow(Canvas& cv, const std::vector<std::vector<int>>& parts) {
  std::vector<int> part_of(cv.n, -1);
  for (size_t i = 0; i < parts.size(); ++i)
    for (int v : parts[i]) part_of[v] = static_cast<int>(i);
  for (int u = 0; u < cv.n; ++u)
    for (int v = u + 1; v < cv.n; ++v)
      if (part_of[u] != part_of[v]) cv.paint(u, v, cv.fresh());
}

bool has_c4(const Graph& g) {
  auto adj = g.adjacency();
  for (int u = 0; u < g.order; ++u)
    for (int v = u + 1; v < g.order; ++v)
      if (std::popcount(adj[u] & adj[v] & ~(uint64_t{1} << u) &
                        ~(uint64_t{1} << v)) >= 2)
        return true;
  return false;
}

EdgeColoring generate_impl(const PatternSpec& spec, int n) {
  using F = PatternSpec::Family;
  require(n >= 2 && n <= kMaxHostOrder, "host order must be 2..64");
  Canvas cv(n);
  switch (spec.family) {
    case F::Monochromatic: {
      int c = cv.fresh();
      for (int& x : cv.color) x = c;
      break;
    }
    case F::Rainbow:
      for (int& x : cv.color) x = cv.fresh();
      break;
    case F::Lex:
      paint_klex(cv, iota_vec(n), 1, 2);
      break;
    case F::Klek:
      paint_klex(cv, iota_vec(n), 1, spec.h);
      break;
    case F::Klex:
      paint_klex(cv, iota_vec(n), spec.k, spec.h);
      break;
    case F::Krs: {
      require(spec.k >= 1 && spec.k <= n - 2, "krs needs 1 <= k <= n-2");
      int mono = -1;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (u < spec.k) {
            cv.paint(u, v, cv.fresh());
          } else {
            if (mono < 0) mono = cv.fresh();
            cv.paint(u, v, mono);
          }
        }
      break;
    }
    case F::SplitLex: {
      require(spec.k >= 1 && spec.k < n, "splitlex needs 1 <= k < n");
      for (int u = 0; u < spec.k; ++u)
        for (int v = u + 1; v < n; ++v) cv.paint(u, v, cv.fresh());
      std::vector<int> rest;
      for (int v = spec.k; v < n; ++v) rest.push_back(v);
      paint_klex(cv, rest, spec.t, spec.h);
      break;
    }
    case F::Clique: {
      require(spec.k >= 2 && spec.k < n, "clique coloring needs 2 <= k < n");
      int r = n % spec.k;
      std::vector<std::vector<int>> parts;
      int v = 0;
      if (r > 0) {
        parts.emplace_back();
        for (int j = 0; j < r; ++j) parts.back().push_back(v++);
      }
      while (v < n) {
        parts.emplace_back();
        for (int j = 0; j < spec.k; ++j) parts.back().push_back(v++);
      }
      for (auto& part : parts) paint_rainbow_clique(cv, part);
      int cross = cv.fresh();
      for (int& x : cv.color)
        if (x < 0) x = cross;
      break;
    }
    case F::RainbowMultipartite: {
      require(spec.k >= 2 && spec.k <= n, "rmulti needs 2 <= k <= n");
      auto parts = balanced_parts(n, spec.k);
      paint_cross_rainbow(cv, parts);
      for (auto& part : parts)
        if (part.size() >= 2) paint_klex(cv, part, 1, 2);
      break;
    }
    case F::RainbowMultipartiteLex: {
      require(spec.k >= 2 && spec.k <= n, "rmultilex needs 2 <= k <= n");
      auto parts = balanced_parts(n, spec.k);
      require(static_cast<int>(parts.back().size()) >= spec.h,
              "rmultilex needs h <= floor(n/k)");
      paint_cross_rainbow(cv, parts);
      for (auto& part : parts) paint_klex(cv, part, spec.t, spec.h);
      break;
    }
    case F::RainbowKpMonoRest: {
      require(spec.s >= 2 && spec.s <= n, "rainbow-kp-mono needs 2 <= s <= n");
      paint_rainbow_clique(cv, iota_vec(spec.s - 1));
      int mono = cv.fresh();
      for (int& x : cv.color)
        if (x < 0) x = mono;
      break;
    }
    case F::LexPlusRainbowStar: {
      require(n >= 3, "lexstar needs n >= 3");
      paint_klex(cv, iota_vec(n - 1), 1, 2);
      for (int u = 0; u < n - 1; ++u) cv.paint(u, n - 1, cv.fresh());
      break;
    }
    case F::PairGrowth: {
      // K_2 and K_3 seeds; each growth step adjoins two vertices with
      // three new colors (their joining edge and the two stars into the
      // previous vertex set).
      int base = (n % 2 == 0) ? 2 : 3;
      paint_rainbow_clique(cv, iota_vec(base));
      for (int z = base; z < n; z += 2) {
        int x = z, y = z + 1;
        cv.paint(x, y, cv.fresh());
        int cx = cv.fresh();
        for (int u = 0; u < z; ++u) cv.paint(u, x, cx);
        int cy = cv.fresh();
        for (int u = 0; u < z; ++u) cv.paint(u, y, cy);
      }
      break;
    }
    case F::CpK4eFourColoring: {
      require(n >= 4, "cp-k4e needs n >= 4");
      int c0 = cv.fresh(), c1 = cv.fresh(), c2 = cv.fresh(), c3 = cv.fresh();
      cv.paint(0, 1, c3);
      for (int v = 2; v < n; ++v) {
        cv.paint(0, v, c0);
        cv.paint(1, v, c1);
        for (int w = v + 1; w < n; ++w) cv.paint(v, w, c2);
      }
      break;
    }
    case F::HamiltonianDecomposition: {
      require(n >= 3 && n % 2 == 1, "hamdec needs odd n >= 3");
      // Hub-and-zigzag decomposition of K_{2m+1} into m Hamiltonian
      // cycles: hub n-1, rim Z_{2m}; rotation i gives the path
      // i, i+1, i-1, i+2, i-2, ..., i+m with hub edges at both ends.
      int m = (n - 1) / 2, rim = n - 1;
      for (int i = 0; i < m; ++i) {
        int c = cv.fresh();
        std::vector<int> path{i};
        for (int t = 1; t < rim; ++t) {
          int off = (t % 2 == 1) ? (t + 1) / 2 : -(t / 2);
          path.push_back(((i + off) % rim + rim) % rim);
        }
        cv.paint(n - 1, path.front(), c);
        for (int t = 0; t + 1 < rim; ++t) cv.paint(path[t], path[t + 1], c);
        cv.paint(path.back(), n - 1, c);
      }
      break;
    }
    case F::TwoRegularSplit: {
      require(spec.r >= 4, "tworeg needs r >= 4");
      require(n == 2 * spec.r - 3, "tworeg needs n = 2r-3");
      require(spec.r % 2 == 0,
              "no (r-2)-regular two-split of K_{2r-3} exists for odd r "
              "(odd degree sum on an odd vertex count)");
      // Distance classes of the circulant on Z_n are 2-regular; the first
      // (r-2)/2 distances form one class, the rest the other.
      int half = (spec.r - 2) / 2;
      int c0 = cv.fresh(), c1 = cv.fresh();
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          int d = std::min(v - u, n - (v - u));
          cv.paint(u, v, d <= half ? c0 : c1);
        }
      break;
    }
    case F::C4FreeRainbowPlusMono: {
      require(spec.aux.has_value(), "c4free-mono needs a graph argument");
      const Graph& h = *spec.aux;
      require(h.order <= n, "c4free-mono graph larger than host");
      require(!has_c4(h), "c4free-mono rejects graphs containing a 4-cycle");
      for (auto [u, v] : h.edges) cv.paint(u, v, cv.fresh());
      int mono = cv.fresh();
      for (int& x : cv.color)
        if (x < 0) x = mono;
      break;
    }
  }
  return cv.finish();
}

}  // namespace

EdgeColoring generate(const PatternSpec& spec, int n) {
  EdgeColoring psi = generate_impl(spec, n);
  if (auto claimed = claimed_colors(spec, n);
      claimed && *claimed != psi.color_count)
    throw error("internal: construction color count disagrees with its "
                "closed form");
  return psi;
}

std::optional<long long> claimed_colors(const PatternSpec& spec, int n) {
  using F = PatternSpec::Family;
  long long nn = n;
  switch (spec.family) {
    case F::Monochromatic: return 1;
    case F::Rainbow: return c2(nn);
    case F::Lex: return nn - 1;
    case F::Klek: return nn + static_cast<long long>(spec.h) * (spec.h - 3) / 2;
    case F::Klex: return (nn - spec.h) * spec.k + c2(spec.h);
    case F::Krs: return spec.k * (nn - spec.k) + c2(spec.k) + 1;
    case F::SplitLex:
      return spec.k * (nn - spec.k) + c2(spec.k) +
             (nn - spec.k - spec.h) * spec.t + c2(spec.h);
    case F::Clique: {
      long long r = nn % spec.k;
      return (nn - r) * (spec.k - 1) / 2 + c2(r) + 1;
    }
    case F::RainbowMultipartite: return nn - spec.k + turan_ex(nn, spec.k + 1);
    case F::RainbowMultipartiteLex: return std::nullopt;
    case F::RainbowKpMonoRest: return c2(spec.s - 1) + 1;
    case F::LexPlusRainbowStar: return 2 * nn - 3;
    case F::PairGrowth: return (3 * nn - 3) / 2;
    case F::CpK4eFourColoring: return 4;
    case F::HamiltonianDecomposition: return (nn - 1) / 2;
    case F::TwoRegularSplit: return 2;
    case F::C4FreeRainbowPlusMono: return std::nullopt;
  }
  return std::nullopt;
}

PatternSpec parse_pattern(const std::string& text) {
  PatternSpec spec;
  spec.text = text;
  std::string head = text;
  std::string args;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    head = text.substr(0, colon);
    args = text.substr(colon + 1);
  }
  auto ints = [&](size_t want) {
    std::vector<int> out;
    std::string_view rest = args;
    while (!rest.empty()) {
      auto comma = rest.find(',');
      auto tok = rest.substr(0, comma);
      int value = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || p != tok.data() + tok.size())
        throw error("bad pattern parameter: " + std::string(tok));
      out.push_back(value);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (out.size() != want)
      throw error("pattern " + head + " expects " + std::to_string(want) +
                  " parameter(s)");
    return out;
  };
  using F = PatternSpec::Family;
  if (head == "mono") spec.family = F::Monochromatic;
  else if (head == "rainbow") spec.family = F::Rainbow;
  else if (head == "lex") spec.family = F::Lex;
  else if (head == "klek") { spec.family = F::Klek; spec.h = ints(1)[0]; }
  else if (head == "klex") {
    spec.family = F::Klex;
    auto v = ints(2);
    spec.k = v[0]; spec.h = v[1];
  } else if (head == "krs") { spec.family = F::Krs; spec.k = ints(1)[0]; }
  else if (head == "splitlex") {
    spec.family = F::SplitLex;
    auto v = ints(3);
    spec.k = v[0]; spec.t = v[1]; spec.h = v[2];
  } else if (head == "clique") { spec.family = F::Clique; spec.k = ints(1)[0]; }
  else if (head == "rmulti") {
    spec.family = F::RainbowMultipartite;
    spec.k = ints(1)[0];
  } else if (head == "rmultilex") {
    spec.family = F::RainbowMultipartiteLex;
    auto v = ints(3);
    spec.k = v[0]; spec.t = v[1]; spec.h = v[2];
  } else if (head == "rainbow-kp-mono") {
    spec.family = F::RainbowKpMonoRest;
    spec.s = ints(1)[0];
  } else if (head == "lexstar") spec.family = F::LexPlusRainbowStar;
  else if (head == "pairgrowth") spec.family = F::PairGrowth;
  else if (head == "cp-k4e") spec.family = F::CpK4eFourColoring;
  else if (head == "hamdec") spec.family = F::HamiltonianDecomposition;
  else if (head == "tworeg") { spec.family = F::TwoRegularSplit; spec.r = ints(1)[0]; }
  else if (head == "c4free-mono") {
    spec.family = F::C4FreeRainbowPlusMono;
    spec.aux = parse_graph(args);
  } else {
    throw error("unknown pattern family: " + head);
  }
  return spec;
}

}  // namespace antiram
