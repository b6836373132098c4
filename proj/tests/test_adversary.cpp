#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "henson/adversary.hpp"
#include "henson/priority.hpp"

using namespace henson;

namespace {

struct Harness {
  Presentation presentation{3};
  std::vector<Color> colors;
  std::vector<std::pair<int, int>> empty_history;

  StageView view(int stage) {
    StageView v;
    v.stage = stage;
    v.colors = &colors;
    v.presentation = &presentation;
    v.own_history = &empty_history;
    return v;
  }
};

// test-only rule that breaks replay determinism via shared state
class FlakyStrategy : public Strategy {
public:
  explicit FlakyStrategy(int* counter) : counter_(counter) {}
  std::vector<int> step(const StageView& view) override {
    if (view.stage == 0) return {(*counter_)++};
    return {};
  }
  std::unique_ptr<Strategy> fresh_clone() const override {
    return std::make_unique<FlakyStrategy>(counter_);
  }
  std::string describe() const override { return "flaky"; }

private:
  int* counter_;
};

}  // namespace

TEST_CASE("constant_set emits one element per stage") {
  Harness h;
  AdversaryStream stream(0, make_constant_set({2, 4, 6}));
  for (int stage = 0; stage < 5; ++stage) {
    h.colors.push_back(Color::Red);
    std::vector<int> got = stream.step(h.view(stage), stage + 1);
    if (stage == 0) CHECK(got == std::vector<int>{2});
    if (stage == 1) CHECK(got == std::vector<int>{4});
    if (stage == 2) CHECK(got == std::vector<int>{6});
    if (stage >= 3) CHECK(got.empty());
  }
  CHECK(stream.contains(4));
  CHECK_FALSE(stream.contains(5));
}

TEST_CASE("color_chaser collects exactly its color class") {
  Harness h;
  AdversaryStream stream(0, make_color_chaser(Color::Red));
  std::vector<int> reds;
  for (int stage = 0; stage < 50; ++stage) {
    h.colors.push_back(stage % 3 == 0 ? Color::Red : Color::Blue);
    if (h.colors.back() == Color::Red) reds.push_back(stage);
    stream.step(h.view(stage), stage + 1);
  }
  for (int stage = 0; stage < 50; ++stage)
    CHECK(stream.contains(stage) == (stage % 3 == 0));
}

TEST_CASE("delay postpones stepping") {
  Harness h;
  AdversaryStream stream(0, make_constant_set({7}, 3));
  for (int stage = 0; stage < 6; ++stage) {
    h.colors.push_back(Color::Red);
    std::vector<int> got = stream.step(h.view(stage), stage + 1);
    CHECK(got.empty() == (stage != 3));
  }
}

TEST_CASE("greedy copier emissions are its color and chain the prefix pattern") {
  Harness h;
  AdversaryStream stream(0, make_greedy_copier(Color::Red));
  for (int stage = 0; stage < 200; ++stage) {
    h.colors.push_back(stage % 2 == 0 ? Color::Red : Color::Blue);
    stream.step(h.view(stage), stage + 1);
  }
  const auto& history = stream.history();
  REQUIRE(!history.empty());
  std::vector<int> chain;
  for (const auto& [x, stage] : history) {
    CHECK(h.colors[x] == Color::Red);
    const int m = static_cast<int>(chain.size());
    for (int i = 0; i < m; ++i)
      CHECK(h.presentation.adjacent(chain[i], x) == h.presentation.adjacent(i, m));
    if (!chain.empty()) CHECK(x > chain.back());
    chain.push_back(x);
  }
}

TEST_CASE("streams reject re-enumeration") {
  Harness h;
  int counter = 5;
  AdversaryStream ok(0, std::make_unique<FlakyStrategy>(&counter));
  h.colors.push_back(Color::Red);
  ok.step(h.view(0), 1);
  counter = 5;  // force the same element again on a fresh flaky stream
  // the same strategy object keeps its member pointer; emitting twice at
  // stage 0 is impossible, so simulate by stepping a new stream twice
  AdversaryStream dup(1, make_constant_set({3, 3}));
  dup.step(h.view(0), 1);
  CHECK_THROWS_AS(dup.step(h.view(1), 2), std::runtime_error);
}

TEST_CASE("registration replay rejects nondeterministic strategies") {
  Presentation p(3);
  int counter = 0;
  AdversaryStream flaky(0, std::make_unique<FlakyStrategy>(&counter));
  CHECK_THROWS_AS(flaky.validate_strategy(p), std::runtime_error);
  AdversaryStream sane(1, make_color_chaser(Color::Blue));
  CHECK_NOTHROW(sane.validate_strategy(p));
  AdversaryStream copier(2, make_greedy_copier(Color::Red, 2));
  CHECK_NOTHROW(copier.validate_strategy(p));
}

TEST_CASE("color_split keeps elements of its color once colored") {
  Harness h;
  AdversaryStream stream(0, make_constant_set({2, 4, 6}));
  SplitStream red(&stream, Color::Red);
  SplitStream blue(&stream, Color::Blue);
  // colors: c(2) = R, c(4) = B, c(6) = R
  for (int stage = 1; stage <= 10; ++stage) {
    while (static_cast<int>(h.colors.size()) < stage) {
      const int x = static_cast<int>(h.colors.size());
      h.colors.push_back(x == 4 ? Color::Blue : Color::Red);
    }
    stream.step(h.view(stage - 1), stage);
    std::vector<int> got_red = red.absorb(stage, h.colors);
    std::vector<int> got_blue = blue.absorb(stage, h.colors);
    for (int x : got_red) CHECK(h.colors[x] == Color::Red);
    for (int x : got_blue) CHECK(h.colors[x] == Color::Blue);
  }
  CHECK(red.contains(2));
  CHECK(red.contains(6));
  CHECK_FALSE(red.contains(4));
  CHECK(blue.contains(4));
  CHECK_FALSE(blue.contains(2));
  // element 2 becomes visible at stage 3 (colors then cover 0..2)
  CHECK(red.enumeration_stage(2) == 3);
  CHECK(red.enumeration_stage(6) == 7);
  CHECK(blue.enumeration_stage(4) == 5);
}

TEST_CASE("split of an empty stream stays empty") {
  Harness h;
  AdversaryStream stream(0, make_constant_set({}));
  SplitStream red(&stream, Color::Red);
  for (int stage = 1; stage <= 5; ++stage) {
    h.colors.push_back(Color::Red);
    stream.step(h.view(stage - 1), stage);
    CHECK(red.absorb(stage, h.colors).empty());
  }
  CHECK(red.history().empty());
}

TEST_CASE("roster replay determinism end to end") {
  RunConfig config;
  config.n = 3;
  config.stages = 120;
  config.roster.push_back({0, "color_chaser", Color::Blue, {}, 0});
  config.roster.push_back({1, "color_chaser", Color::Red, {}, 4});
  config.roster.push_back({2, "greedy_copier", Color::Blue, {}, 0});
  config.roster.push_back({3, "constant_set", Color::Red, {0}, 0});
  RunResult a = run_construction(config);
  RunResult b = run_construction(config);
  CHECK(a.coloring == b.coloring);
  CHECK(a.trace == b.trace);
}
