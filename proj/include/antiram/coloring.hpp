#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "antiram/graph.hpp"

namespace antiram {

// The eight coloring conditions a copy of G inside K_n can satisfy.
enum class PhiKind { AR, LR, SOD, OD, CF, SP, CP, LP };
inline constexpr int kPhiKindCount = 8;
inline constexpr PhiKind kAllPhiKinds[] = {
    PhiKind::AR, PhiKind::LR, PhiKind::SOD, PhiKind::OD,
    PhiKind::CF, PhiKind::SP, PhiKind::CP,  PhiKind::LP};

std::string_view to_string(PhiKind kind);
std::optional<PhiKind> phi_kind_from_string(std::string_view s);

// A total edge coloring of K_n in canonical edge order.
struct EdgeColoring {
  int n = 0;
  std::vector<int> color;  // one entry per edge index
  int color_count = 0;

  // Relabels colors into restricted-growth form: color ids 0..count-1,
  // first occurrences in increasing edge order.
  void canonicalize();
  bool is_canonical() const;
};

EdgeColoring make_coloring(int n, std::vector<int> raw_colors);

}  // namespace antiram
