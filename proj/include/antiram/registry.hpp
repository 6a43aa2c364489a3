#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "antiram/coloring.hpp"

namespace antiram {

// Closed forms in n: integers, n, arithmetic, floor/ceil division,
// Turan numbers ex(n,K_k), two short lookup tables for ex(n,C4) and
// ex(n,{C3,C4}), and ceil(sqrt(.)).
struct Formula {
  enum class Op {
    Const, N, Add, Sub, Mul, FloorDiv, CeilDiv, Ex, ExC4, ExC3C4, CeilSqrt
  };
  Op op = Op::Const;
  long long value = 0;  // Const payload, divisor, or clique order for Ex
  std::vector<Formula> args;
};

// nullopt when a lookup table does not cover this n.
std::optional<long long> eval_formula(const Formula& f, long long n);
Formula parse_formula(const std::string& json_text);

struct KnownValue {
  enum class Status { Exact, Bounds, Unknown };
  Status status = Status::Unknown;
  long long value = 0;
  std::optional<long long> lower, upper;
  // Exact values flagged asymptotic hold for all large n with an unknown
  // threshold; small-n search results are ground truth there.
  bool asymptotic = false;
  // Table-derived entries may disagree with exhaustive search for very
  // small hosts (n <= 8); such disagreements are findings, not errors.
  bool small_n_caveat = false;
  std::string source;
};

class Registry {
 public:
  static Registry load_file(const std::string& path);
  static Registry load_text(const std::string& json_text);
  static const Registry& builtin();

  KnownValue known(PhiKind kind, const std::string& pattern,
                   long long n) const;
  size_t entry_count() const { return entries_.size(); }
  std::vector<std::string> patterns() const;

 private:
  struct Entry {
    std::string pattern;
    PhiKind kind;
    std::optional<Formula> exact, lower, upper;
    long long n_min = 0;
    bool caveat = false;
    bool asymptotic = false;
    std::map<long long, long long> small_values;
    std::string source;
  };
  std::vector<Entry> entries_;

  KnownValue star_rule(PhiKind kind, int r, long long n) const;
};

// (p-2)n - floor(p^2/2) + p + 1: the linear ceiling on Cf(n,G) for a graph
// with p non-isolated vertices.
long long cf_upper_bound(long long p, long long n);

// Eight-node implication DAG; an edge a->b means the a-condition implies
// the b-condition on every colored copy, hence phi_a >= phi_b.
const std::vector<std::pair<PhiKind, PhiKind>>& hierarchy_edges();
// Violated comparable pairs ("CF->OD"-style labels), using the transitive
// closure so partial maps are still checked.
std::vector<std::string> check_hierarchy(
    const std::map<PhiKind, long long>& values);

}  // namespace antiram
