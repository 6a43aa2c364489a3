#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "antiram/patterns.hpp"
#include "antiram/search.hpp"
#include "naive_oracle.hpp"

using namespace antiram;

namespace {
SearchOutcome run(const std::string& g, int n, PhiKind kind, int threads = 1,
                  SearchMode mode = SearchMode::FullSet) {
  return phi_exact(parse_graph(g), n, kind, Budget{}, threads, mode);
}
}  // namespace

TEST_CASE("pruned search equals the naive enumerator at n=4") {
  for (const char* name : {"P3", "C4", "K4-e", "paw"}) {
    Graph g = parse_graph(name);
    for (PhiKind kind : {PhiKind::AR, PhiKind::OD, PhiKind::SP, PhiKind::LP}) {
      auto naive = antiram::testing::naive_achievable(g, 4, kind);
      SearchOutcome out = phi_exact(g, 4, kind);
      REQUIRE(out.exhausted);
      CHECK(std::set<int>(out.achievable.begin(), out.achievable.end()) ==
            naive);
    }
  }
}

TEST_CASE("known exact values") {
  CHECK(run("P4", 5, PhiKind::OD).phi == 3);
  CHECK(run("K4-e", 5, PhiKind::OD).phi == 3);
  CHECK(run("paw", 4, PhiKind::SOD).phi == 4);
  CHECK(run("K4", 4, PhiKind::CF).phi == 5);
  CHECK(run("K4", 5, PhiKind::OD).phi == 1);
  CHECK(run("K4", 4, PhiKind::OD).phi == 1);
}

TEST_CASE("avoidable with an exact color count") {
  auto yes = avoidable(parse_graph("C4"), 4, 3, PhiKind::OD);
  REQUIRE(yes.witness.has_value());
  CHECK(yes.witness->color_count == 3);
  CHECK(yes.witness->is_canonical());
  CHECK(verify_lower_bound(*yes.witness, parse_graph("C4"), PhiKind::OD));

  auto no = avoidable(parse_graph("P4"), 5, 3, PhiKind::OD);
  CHECK_FALSE(no.witness.has_value());
  CHECK(no.exhausted);

  auto ar3 = avoidable(parse_graph("K3"), 4, 3, PhiKind::AR);
  CHECK(ar3.witness.has_value());
  auto ar4 = avoidable(parse_graph("K3"), 4, 4, PhiKind::AR);
  CHECK_FALSE(ar4.witness.has_value());
  CHECK(ar4.exhausted);

  CHECK_THROWS_AS(avoidable(parse_graph("C4"), 4, 9, PhiKind::OD), error);
}

TEST_CASE("witnesses verify and use the maximal color count") {
  SearchOutcome out = run("C4", 5, PhiKind::OD);
  REQUIRE(out.exhausted);
  REQUIRE(out.witness.has_value());
  CHECK(out.witness->color_count == out.max_achievable());
  CHECK(out.witness->is_canonical());
  CHECK(verify_lower_bound(*out.witness, parse_graph("C4"), PhiKind::OD));
  CHECK(out.phi == out.max_achievable() + 1);
}

TEST_CASE("rainbow-avoidance sets are downward closed") {
  for (const char* name : {"P3", "P4", "C4", "K3", "K4-e"}) {
    SearchOutcome out = run(name, 4, PhiKind::AR);
    REQUIRE(out.exhausted);
    CHECK(out.gaps().empty());
  }
}

TEST_CASE("thread count does not change the outcome") {
  for (PhiKind kind : {PhiKind::OD, PhiKind::AR, PhiKind::CP}) {
    SearchOutcome a = run("C4", 5, kind, 1);
    SearchOutcome b = run("C4", 5, kind, 3);
    CHECK(a.phi == b.phi);
    CHECK(a.achievable == b.achievable);
    REQUIRE(a.witness.has_value() == b.witness.has_value());
    if (a.witness) CHECK(a.witness->color == b.witness->color);
  }
}

TEST_CASE("avoidable is schedule-independent") {
  for (int threads : {1, 3}) {
    auto yes = avoidable(parse_graph("C4"), 5, 4, PhiKind::OD, Budget{}, threads);
    REQUIRE(yes.witness.has_value());
    auto baseline = avoidable(parse_graph("C4"), 5, 4, PhiKind::OD);
    CHECK(yes.witness->color == baseline.witness->color);
    auto no = avoidable(parse_graph("P4"), 5, 3, PhiKind::OD, Budget{}, threads);
    CHECK_FALSE(no.witness.has_value());
    CHECK(no.exhausted);
  }
}

TEST_CASE("max-only mode reports the same phi and witness") {
  for (PhiKind kind : {PhiKind::OD, PhiKind::SP}) {
    SearchOutcome full = run("C4", 5, kind, 1, SearchMode::FullSet);
    SearchOutcome fast = run("C4", 5, kind, 1, SearchMode::MaxOnly);
    CHECK(full.phi == fast.phi);
    REQUIRE(full.witness.has_value() == fast.witness.has_value());
    if (full.witness) CHECK(full.witness->color == fast.witness->color);
    CHECK_FALSE(fast.full_set);
  }
}

TEST_CASE("budgets must be positive") {
  CHECK_THROWS_AS(phi_exact(parse_graph("P3"), 4, PhiKind::OD, Budget{0, 60.0}),
                  error);
  CHECK_THROWS_AS(phi_exact(parse_graph("P3"), 4, PhiKind::OD, Budget{10, 0.0}),
                  error);
}

TEST_CASE("budget exhaustion is reported, never silently wrong") {
  Budget tiny{50, 60.0};
  SearchOutcome out = phi_exact(parse_graph("C4"), 6, PhiKind::OD, tiny);
  CHECK_FALSE(out.exhausted);
  CHECK_FALSE(out.full_set);
  CHECK(out.phi >= 1);  // lower bound semantics
}

TEST_CASE("critical colors") {
  EdgeColoring lex = generate(parse_pattern("lex"), 6);
  auto at3 = critical_colors(lex, 3);
  REQUIRE(at3.size() == 1);
  CHECK(at3[0].color == 2);  // the backward star into vertex 3
  CHECK(at3[0].star);
  auto at1 = critical_colors(lex, 1);
  REQUIRE(at1.size() == 1);
  CHECK(at1[0].color == 0);
  CHECK_FALSE(at1[0].star);  // single edge 0-1

  EdgeColoring rainbow = generate(parse_pattern("rainbow"), 5);
  auto atr = critical_colors(rainbow, 2);
  CHECK(atr.size() == 4);
  for (auto& c : atr) CHECK_FALSE(c.star);

  EdgeColoring mono = generate(parse_pattern("mono"), 5);
  CHECK(critical_colors(mono, 0).empty());
  CHECK_THROWS_AS(critical_colors(mono, 9), error);
}

TEST_CASE("self-consistency: every witness passes verify_lower_bound") {
  for (const char* name : {"P4", "C4", "paw"}) {
    for (PhiKind kind : kAllPhiKinds) {
      SearchOutcome out = run(name, 4, kind);
      if (out.witness)
        CHECK(verify_lower_bound(*out.witness, parse_graph(name), kind));
    }
  }
}
