#pragma once

#include <optional>
#include <string>

#include "antiram/coloring.hpp"
#include "antiram/graph.hpp"

namespace antiram {

// Lower-bound coloring patterns of K_n. Textual forms (the host order n is
// supplied separately):
//   mono | rainbow | lex | klek:<h> | klex:<k>,<h> | krs:<k>
//   splitlex:<k>,<t>,<h> | clique:<k> | rmulti:<k> | rmultilex:<k>,<t>,<h>
//   rainbow-kp-mono:<s> | lexstar | pairgrowth | cp-k4e | hamdec
//   tworeg:<r> | c4free-mono:<graph>
struct PatternSpec {
  enum class Family {
    Monochromatic,
    Rainbow,
    Lex,
    Klek,
    Klex,
    Krs,
    SplitLex,
    Clique,
    RainbowMultipartite,
    RainbowMultipartiteLex,
    RainbowKpMonoRest,
    LexPlusRainbowStar,
    PairGrowth,
    CpK4eFourColoring,
    HamiltonianDecomposition,
    TwoRegularSplit,
    C4FreeRainbowPlusMono,
  };
  Family family;
  int k = 0, t = 0, h = 0, s = 0, r = 0;
  std::optional<Graph> aux;  // C4FreeRainbowPlusMono only
  std::string text;
};

PatternSpec parse_pattern(const std::string& text);

// Deterministic coloring of K_n in restricted-growth form. Throws on
// parameter-domain violations; C4FreeRainbowPlusMono rejects an aux graph
// containing a 4-cycle.
EdgeColoring generate(const PatternSpec& spec, int n);

// Closed-form color count where one exists; nullopt means the count is
// construction-defined (RainbowMultipartiteLex, C4FreeRainbowPlusMono).
std::optional<long long> claimed_colors(const PatternSpec& spec, int n);

}  // namespace antiram
