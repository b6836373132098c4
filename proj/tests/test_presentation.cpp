#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "henson/finite_graph.hpp"
#include "henson/presentation.hpp"

using namespace henson;

namespace {

// every pair (attach, avoid) with attach u avoid inside [0, universe),
// |attach u avoid| <= max_size, attach and avoid disjoint
std::vector<std::pair<std::vector<int>, std::vector<int>>> small_patterns(
    int universe, int max_size) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  std::vector<int> members;
  auto expand = [&](auto&& self, int next) -> void {
    if (!members.empty()) {
      const int s = static_cast<int>(members.size());
      for (int mask = 0; mask < (1 << s); ++mask) {
        std::vector<int> attach, avoid;
        for (int j = 0; j < s; ++j)
          ((mask >> j) & 1 ? avoid : attach).push_back(members[j]);
        out.push_back({attach, avoid});
      }
    }
    if (static_cast<int>(members.size()) == max_size) return;
    for (int v = next; v < universe; ++v) {
      members.push_back(v);
      self(self, v + 1);
      members.pop_back();
    }
  };
  out.push_back({{}, {}});
  expand(expand, 0);
  return out;
}

bool attach_clique_free(Presentation& p, const std::vector<int>& attach, int n) {
  // largest clique inside attach, brute force
  const int s = static_cast<int>(attach.size());
  for (int mask = 1; mask < (1 << s); ++mask) {
    if (__builtin_popcount(mask) < n - 1) continue;
    bool clique = true;
    for (int i = 0; i < s && clique; ++i)
      for (int j = i + 1; j < s && clique; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && !p.adjacent(attach[i], attach[j]))
          clique = false;
    if (clique) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("construction basics") {
  CHECK_THROWS_AS(Presentation(2), std::invalid_argument);
  Presentation p(3);
  p.ensure_stage(1);
  CHECK(p.built_stage() >= 1);
  CHECK(p.restriction(1).edge_count() == 0);
  const int before = p.built_stage();
  p.ensure_stage(before);  // idempotent
  CHECK(p.built_stage() == before);
}

TEST_CASE("adjacency is irreflexive, symmetric, and stable") {
  Presentation p(3);
  for (int i = 0; i < 40; ++i) CHECK_FALSE(p.adjacent(i, i));
  std::vector<std::pair<int, int>> sampled;
  std::vector<bool> values;
  for (int i = 0; i < 60; ++i)
    for (int j = i + 1; j < 60; ++j) {
      sampled.push_back({i, j});
      values.push_back(p.adjacent(i, j));
      CHECK(p.adjacent(j, i) == values.back());
    }
  p.ensure_stage(1000);  // replay after growth: answers never change
  for (size_t idx = 0; idx < sampled.size(); ++idx)
    CHECK(p.adjacent(sampled[idx].first, sampled[idx].second) == values[idx]);
}

TEST_CASE("two presentations with equal n agree") {
  Presentation a(3), b(3);
  b.ensure_stage(777);  // growth pattern must not matter
  for (int i = 0; i < 500; ++i)
    for (int j = i + 1; j < 500; ++j)
      REQUIRE(a.adjacent(i, j) == b.adjacent(i, j));
}

TEST_CASE("prefixes stay clique-free") {
  for (int n : {3, 4}) {
    Presentation p(n);
    FiniteGraph g = p.restriction(200);
    CHECK(clique_number(g) < n);
  }
}

TEST_CASE("neighbor sets") {
  Presentation p(3);
  CHECK(p.neighbor_set_within(5, 0).empty());
  FiniteGraph g = p.restriction(120);
  for (int x = 0; x < 30; ++x) {
    std::vector<int> nbrs = p.neighbor_set_within(x, 120);
    CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
    CHECK_FALSE(std::binary_search(nbrs.begin(), nbrs.end(), x));
    std::vector<int> expect;
    for (int y = 0; y < 120; ++y)
      if (y != x && g.adjacent(x, y)) expect.push_back(y);
    CHECK(nbrs == expect);
    // neighbor sets of H_3 are edgeless
    for (size_t i = 0; i < nbrs.size(); ++i)
      for (size_t j = i + 1; j < nbrs.size(); ++j)
        CHECK_FALSE(p.adjacent(nbrs[i], nbrs[j]));
  }
}

TEST_CASE("find_extension returns the least qualifying vertex") {
  Presentation p(3);
  CHECK(p.find_extension({}, {}, 5) == 6);
  const int x = p.find_extension({0}, {}, 0);
  CHECK(x > 0);
  CHECK(p.adjacent(x, 0));
  for (int y = 1; y < x; ++y) CHECK_FALSE(p.adjacent(y, 0));

  const int y = p.find_extension({0}, {1, 2}, 10);
  CHECK(y > 10);
  CHECK(p.adjacent(y, 0));
  CHECK_FALSE(p.adjacent(y, 1));
  CHECK_FALSE(p.adjacent(y, 2));
}

TEST_CASE("find_extension validates its inputs") {
  Presentation p(3);
  CHECK_THROWS_AS(p.find_extension({1}, {1}, 0), std::invalid_argument);
  // two adjacent vertices form a K_2 = K_{n-1} for n = 3
  const int nb = p.find_extension({0}, {}, 0);
  CHECK_THROWS_AS(p.find_extension({0, nb}, {}, 0), std::invalid_argument);
  CHECK_THROWS_AS(p.find_extension({-1}, {}, 0), std::invalid_argument);
}

TEST_CASE("every small pattern is satisfied within the first 10000 vertices") {
  for (int n : {3, 4}) {
    Presentation p(n);
    for (const auto& [attach, avoid] : small_patterns(8, 3)) {
      if (!attach_clique_free(p, attach, n)) continue;
      const int x = p.find_extension(attach, avoid, -1);
      CHECK(x < 10000);
      for (int a : attach) CHECK(p.adjacent(a, x));
      for (int b : avoid) CHECK_FALSE(p.adjacent(b, x));
    }
  }
}

TEST_CASE("extend_copy walks target prefixes") {
  Presentation p(3);
  FiniteGraph single(1);
  CHECK(p.extend_copy({}, single, 9) == 10);

  FiniteGraph edge = FiniteGraph::from_edges(2, {{0, 1}});
  const int w = p.extend_copy({0}, edge, 0);
  CHECK(w > 0);
  CHECK(p.adjacent(0, w));
  std::vector<int> nbrs = p.neighbor_set_within(0, w + 1);
  REQUIRE_FALSE(nbrs.empty());
  CHECK(nbrs.front() == w);  // least neighbor of 0

  // five distinct witnesses under increasing bounds
  FiniteGraph fork = FiniteGraph::from_edges(3, {{0, 2}, {1, 2}});
  REQUIRE_FALSE(p.adjacent(0, 1));
  std::set<int> seen;
  int bound = 1;
  for (int i = 0; i < 5; ++i) {
    const int x = p.extend_copy({0, 1}, fork, bound);
    CHECK(x > bound);
    CHECK(p.adjacent(0, x));
    CHECK(p.adjacent(1, x));
    seen.insert(x);
    bound = x;
  }
  CHECK(seen.size() == 5);
}

TEST_CASE("extend_copy validates the target") {
  Presentation p(3);
  FiniteGraph triangle = FiniteGraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  FiniteGraph disconnected(3);
  FiniteGraph edge = FiniteGraph::from_edges(2, {{0, 1}});
  CHECK_THROWS_AS(p.extend_copy({0, 1}, triangle, 0), std::invalid_argument);
  CHECK_THROWS_AS(p.extend_copy({0, 1}, disconnected, 0), std::invalid_argument);
  CHECK_THROWS_AS(p.extend_copy({0}, FiniteGraph(1), 0), std::invalid_argument);
  CHECK_THROWS_AS(p.extend_copy({1, 0}, edge, 0), std::invalid_argument);
  // prefix mismatch: {0, w} is an edge but the target prefix is edgeless
  const int w = p.find_extension({0}, {}, 0);
  FiniteGraph fork = FiniteGraph::from_edges(3, {{0, 2}, {1, 2}});
  CHECK_THROWS_AS(p.extend_copy({0, w}, fork, 0), std::invalid_argument);
}
