#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "henson/adversary.hpp"
#include "henson/color.hpp"
#include "henson/finite_graph.hpp"
#include "henson/presentation.hpp"
#include "henson/trace.hpp"

namespace henson {

struct AdversarySpec {
  int index = 0;
  std::string strategy;        // constant_set | color_chaser | greedy_copier
  Color color = Color::Red;    // chaser / copier parameter
  std::vector<int> elements;   // constant_set parameter
  int delay = 0;
};

std::unique_ptr<Strategy> make_strategy(const AdversarySpec& spec);

struct RunConfig {
  int n = 3;
  int stages = 0;
  std::vector<AdversarySpec> roster;
  int folkman_max_vertices = 6;
};

void validate_config(const RunConfig& config);

struct FollowerRecord {
  int vertex = -1;
  int enum_stage = -1;   // stage the vertex entered the split stream
  int added_stage = -1;  // stage it became a follower
};

struct TargetInfo {
  FiniteGraph graph;  // in connect order
  int k_at_choice = 0;
  int chosen_stage = -1;
};

struct RequirementState {
  int priority = 0;         // lower is stronger
  int adversary_index = 0;  // priority / 2
  Color color = Color::Red;
  std::vector<FollowerRecord> followers;
  std::optional<TargetInfo> target;
  std::optional<int> last_injury_stage;
  bool active = false;
  bool follower_seeded_this_stage = false;
};

// Active at `stage`: the adversary index has come up and the split stream
// holds an element enumerated after the last injury.
bool is_active(const RequirementState& r, int stage, const SplitStream& split);

// The target for a requirement choosing while stronger active requirements
// hold `stronger_follower_count` followers: the first partition witness that
// cannot sit inside stronger_follower_count + 1 neighbor sets, in connect
// order. Results are memoized.
FiniteGraph choose_target_graph(int n, int stronger_follower_count, int max_vertices);

// A reservation: owner plans `color` for every x adjacent to anchor with
// x > threshold, except vertices already covered by entries that were both
// stronger and live when this one was created.
struct ReservationEntry {
  int id = 0;
  int owner = 0;  // priority index
  Color color = Color::Red;
  int anchor = -1;
  int threshold = -1;
  int created_stage = -1;
  bool live = true;
  std::vector<int> blockers;
};

class ReservationLedger {
public:
  explicit ReservationLedger(Presentation* p) : presentation_(p) {}

  int add_entry(int owner, Color color, int anchor, int threshold, int stage);
  void kill_owner(int owner);

  // p(x, now): color of the strongest live entry covering x; Red by default.
  Color planned_color(int x) const;
  // id of that entry, or -1 when nothing covers x.
  int strongest_live_cover(int x) const;
  bool entry_covers(int id, int x) const;

  const std::vector<ReservationEntry>& entries() const { return entries_; }

private:
  void coverage(int x, std::vector<char>& out) const;

  Presentation* presentation_;
  std::vector<ReservationEntry> entries_;
};

struct RunResult {
  std::vector<Color> coloring;  // c(0..stages)
  Trace trace;
};

// The stagewise construction: c(0) = Red; each stage steps the adversaries,
// assigns first followers and targets, scans strongest-to-weakest for
// order-isomorphic extensions (reserving and injuring on success), then
// colors the stage vertex by its planned color.
RunResult run_construction(const RunConfig& config);

}  // namespace henson
