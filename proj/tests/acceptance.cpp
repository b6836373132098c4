// Acceptance suite: every case prints one pass/fail line on completion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <set>

#include "henson/folkman.hpp"
#include "henson/graph6.hpp"
#include "henson/presentation.hpp"
#include "henson/priority.hpp"
#include "henson/roster_config.hpp"
#include "henson/trace.hpp"
#include "henson/verify.hpp"

using namespace henson;

namespace {

struct Criterion {
  explicit Criterion(int number) : number_(number) {}
  ~Criterion() {
    std::cout << "[criterion " << number_ << "] " << (ok_ ? "PASS" : "FAIL")
              << " (" << seconds() << " s)" << std::endl;
  }
  void fail() { ok_ = false; }
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  int number_;
  bool ok_ = true;
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

#define CRITERION_CHECK(crit, expr) \
  do {                              \
    const bool ok_ = (expr);        \
    if (!ok_) (crit).fail();        \
    CHECK(ok_);                     \
  } while (0)

std::vector<std::pair<std::vector<int>, std::vector<int>>> patterns_within(
    int universe, int max_size) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  out.push_back({{}, {}});
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
  expand(expand, 0);
  return out;
}

bool clique_free_in(Presentation& p, const std::vector<int>& verts, int size) {
  const int s = static_cast<int>(verts.size());
  if (s < size) return true;
  for (int mask = 1; mask < (1 << s); ++mask) {
    if (__builtin_popcount(mask) != size) continue;
    bool clique = true;
    for (int i = 0; i < s && clique; ++i)
      for (int j = i + 1; j < s && clique; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && !p.adjacent(verts[i], verts[j]))
          clique = false;
    if (clique) return false;
  }
  return true;
}

// no-pruning partition oracle (independent of the library search)
bool partition_check_naive(const FiniteGraph& g, int n, int k) {
  const int v = g.vertex_count();
  if (v == 0) return false;
  std::vector<int> assign(v, 0);
  while (true) {
    bool some_block = false;
    for (int b = 0; b < k && !some_block; ++b) {
      std::vector<int> block;
      for (int u = 0; u < v; ++u)
        if (assign[u] == b) block.push_back(u);
      const int s = static_cast<int>(block.size());
      for (int mask = 1; mask < (1 << s) && !some_block; ++mask) {
        if (__builtin_popcount(mask) != n - 1) continue;
        bool clique = true;
        for (int i = 0; i < s && clique; ++i)
          for (int j = i + 1; j < s && clique; ++j)
            if ((mask >> i & 1) && (mask >> j & 1) &&
                !g.adjacent(block[i], block[j]))
              clique = false;
        some_block = clique;
      }
    }
    if (!some_block) return false;
    int pos = v - 1;
    while (pos >= 0 && assign[pos] == k - 1) assign[pos--] = 0;
    if (pos < 0) return true;
    ++assign[pos];
  }
}

RunConfig acceptance_config() {
  return load_run_config(std::string(HENSON_CONFIG_DIR) + "/acceptance_roster.cfg");
}

}  // namespace

TEST_CASE("criterion 1: presentation soundness") {
  Criterion crit(1);
  for (int n : {3, 4}) {
    Presentation p(n);
    CRITERION_CHECK(crit, clique_number(p.restriction(200)) < n);
    for (const auto& [attach, avoid] : patterns_within(8, 3)) {
      if (!clique_free_in(p, attach, n - 1)) continue;
      const int x = p.find_extension(attach, avoid, -1);
      CRITERION_CHECK(crit, x < 10000);
      bool adjacency_ok = true;
      for (int a : attach) adjacency_ok = adjacency_ok && p.adjacent(a, x);
      for (int b : avoid) adjacency_ok = adjacency_ok && !p.adjacent(b, x);
      CRITERION_CHECK(crit, adjacency_ok);
    }
  }
  CRITERION_CHECK(crit, crit.seconds() < 10.0);
}

TEST_CASE("criterion 2: exact small partition witnesses") {
  Criterion crit(2);
  FolkmanCertificate one = folkman_witness(3, 1, 5);
  CRITERION_CHECK(crit, one.graph.vertex_count() == 2);
  CRITERION_CHECK(crit, partition_check_naive(one.graph, 3, 1));

  FolkmanCertificate two = folkman_witness(3, 2, 6);
  CRITERION_CHECK(crit, two.graph.vertex_count() == 5);
  CRITERION_CHECK(crit, partition_check_naive(two.graph, 3, 2));

  bool four_vertex_witness_exists = true;
  try {
    folkman_witness(3, 2, 4);
  } catch (const SearchExhausted&) {
    four_vertex_witness_exists = false;
  }
  CRITERION_CHECK(crit, !four_vertex_witness_exists);
  CRITERION_CHECK(crit, crit.seconds() < 60.0);
}

TEST_CASE("criterion 3: no witness inside two neighbor sets") {
  Criterion crit(3);
  Presentation p(3);
  FiniteGraph witness = folkman_witness(3, 2, 6).graph;
  for (int a = 0; a < 20; ++a) {
    for (int b = a; b < 20; ++b) {
      const std::vector<int> centers =
          (a == b) ? std::vector<int>{a} : std::vector<int>{a, b};
      CRITERION_CHECK(crit,
                      neighbor_cover_obstruction_check(witness, p, centers, 200));
    }
  }
  // the logical certificate: neighbor sets in the window cannot hold a K_2
  for (int x = 0; x < 200; ++x) {
    const std::vector<int> nbrs = p.neighbor_set_within(x, 200);
    for (size_t i = 0; i < nbrs.size(); ++i)
      for (size_t j = i + 1; j < nbrs.size(); ++j)
        CRITERION_CHECK(crit, !p.adjacent(nbrs[i], nbrs[j]));
  }
  CRITERION_CHECK(crit, crit.seconds() < 60.0);
}

TEST_CASE("criterion 4: five extension witnesses for every small pattern") {
  Criterion crit(4);
  Presentation p(3);
  FiniteGraph base = p.restriction(30);
  std::vector<std::vector<int>> subsets;
  for (int a = 0; a < 30; ++a) {
    subsets.push_back({a});
    for (int b = a + 1; b < 30; ++b) {
      subsets.push_back({a, b});
      for (int c = b + 1; c < 30; ++c) subsets.push_back({a, b, c});
    }
  }
  subsets.push_back({});

  long checked = 0;
  for (const std::vector<int>& delta : subsets) {
    const int d = static_cast<int>(delta.size());
    for (int mask = 0; mask < (1 << d); ++mask) {
      FiniteGraph target(d + 1);
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
          if (base.adjacent(delta[i], delta[j])) target.add_edge(i, j);
      for (int i = 0; i < d; ++i)
        if ((mask >> i) & 1) target.add_edge(i, d);
      if (!is_connected_clique_free(target, 3)) continue;
      ++checked;
      std::set<int> seen;
      int bound = delta.empty() ? -1 : delta.back();
      for (int i = 0; i < 5; ++i) {
        const int x = p.extend_copy(delta, target, bound);
        seen.insert(x);
        bound = x;
      }
      CRITERION_CHECK(crit, seen.size() == 5);
      if (seen.size() != 5) return;
    }
  }
  CRITERION_CHECK(crit, checked > 4000);  // the sweep really ran
  CRITERION_CHECK(crit, crit.seconds() < 30.0);
}

TEST_CASE("criterion 5: construction runs and verifies") {
  Criterion crit(5);
  RunConfig config = acceptance_config();
  CRITERION_CHECK(crit, config.roster.size() >= 4);
  RunResult result = run_construction(config);
  CRITERION_CHECK(crit,
                  static_cast<int>(result.coloring.size()) == config.stages + 1);

  VerifyReport report = verify_trace(result.trace, result.coloring, config);
  for (const CheckResult& check : report.checks) {
    CAPTURE(check.name);
    CAPTURE(check.detail);
    CRITERION_CHECK(crit, check.passed);
  }

  // negative control: one flipped record must fail V1
  Trace corrupted = result.trace;
  auto colored = std::find_if(
      corrupted.events.begin(), corrupted.events.end(), [](const TraceEvent& e) {
        return e.kind == EventKind::Colored && e.stage == 2500;
      });
  REQUIRE(colored != corrupted.events.end());
  colored->color = opposite(*colored->color);
  VerifyReport bad = verify_trace(corrupted, std::nullopt, config);
  CRITERION_CHECK(crit, !bad.find("V1")->passed);
  CRITERION_CHECK(crit, crit.seconds() < 120.0);
}

TEST_CASE("criterion 6: byte-identical end-to-end runs") {
  Criterion crit(6);
  RunConfig config = acceptance_config();
  RunResult a = run_construction(config);
  RunResult b = run_construction(config);
  CRITERION_CHECK(crit, trace_to_jsonl(a.trace) == trace_to_jsonl(b.trace));
  CRITERION_CHECK(crit, coloring_to_text(a.coloring, config.n) ==
                            coloring_to_text(b.coloring, config.n));
}

TEST_CASE("criterion 7: finite injury bound") {
  Criterion crit(7);
  RunConfig config = acceptance_config();
  RunResult result = run_construction(config);
  const int requirement_count = static_cast<int>(config.roster.size()) * 2;
  std::vector<int> injuries(requirement_count, 0);
  std::vector<int> acquisitions(requirement_count, 0);
  for (const TraceEvent& e : result.trace.events) {
    if (e.kind == EventKind::Injured) ++injuries[e.requirement];
    if (e.kind == EventKind::FirstFollower || e.kind == EventKind::NewFollower)
      ++acquisitions[e.requirement];
  }
  for (int i = 0; i < requirement_count; ++i) {
    int stronger = 0;
    for (int j = 0; j < i; ++j) stronger += acquisitions[j];
    CRITERION_CHECK(crit, injuries[i] <= stronger);
  }
}
