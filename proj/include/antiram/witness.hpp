#pragma once

#include <string>

#include "antiram/coloring.hpp"
#include "antiram/graph.hpp"

namespace antiram {

// Certificate file for an avoiding coloring:
// { "n": int, "edge_order": "lex-pairs", "colors": [...], "kind": str,
//   "pattern": str, "m": int, "verified": bool }
struct Witness {
  EdgeColoring coloring;
  PhiKind kind = PhiKind::AR;
  std::string pattern;  // graph grammar string for the avoided G
  int m = 0;
  bool verified = false;
};

std::string witness_to_json(const Witness& w);
Witness witness_from_json(const std::string& text);
void write_witness_file(const Witness& w, const std::string& path);
Witness read_witness_file(const std::string& path);

}  // namespace antiram
