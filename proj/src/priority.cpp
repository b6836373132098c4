#include "henson/priority.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "henson/folkman.hpp"
#include "henson/graph6.hpp"

namespace henson {

std::unique_ptr<Strategy> make_strategy(const AdversarySpec& spec) {
  if (spec.delay < 0) throw std::invalid_argument("delay must be nonnegative");
  if (spec.strategy == "constant_set" || spec.strategy == "finite_set")
    return make_constant_set(spec.elements, spec.delay);
  if (spec.strategy == "color_chaser") return make_color_chaser(spec.color, spec.delay);
  if (spec.strategy == "greedy_copier") return make_greedy_copier(spec.color, spec.delay);
  throw std::invalid_argument("unknown strategy: " + spec.strategy);
}

void validate_config(const RunConfig& config) {
  if (config.n < 3) throw std::invalid_argument("n must be >= 3");
  if (config.stages < 0) throw std::invalid_argument("stages must be >= 0");
  if (config.folkman_max_vertices < 1)
    throw std::invalid_argument("folkman_max_vertices must be >= 1");
  for (size_t i = 0; i < config.roster.size(); ++i)
    if (config.roster[i].index != static_cast<int>(i))
      throw std::invalid_argument(
          "adversary indices must be unique and contiguous from 0");
}

bool is_active(const RequirementState& r, int stage, const SplitStream& split) {
  if (r.adversary_index > stage) return false;
  const auto& history = split.history();
  if (history.empty()) return false;
  if (!r.last_injury_stage) return true;
  // enumeration stages are monotone, so the newest element decides
  return history.back().second > *r.last_injury_stage;
}

FiniteGraph choose_target_graph(int n, int stronger_follower_count, int max_vertices) {
  static std::map<std::tuple<int, int, int>, FiniteGraph> cache;
  const auto key = std::make_tuple(n, stronger_follower_count, max_vertices);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  FolkmanCertificate cert = folkman_witness(n, stronger_follower_count + 1, max_vertices);
  FiniteGraph ordered = reorder(cert.graph, connect_order(cert.graph));
  cache.emplace(key, ordered);
  return ordered;
}

int ReservationLedger::add_entry(int owner, Color color, int anchor, int threshold,
                                 int stage) {
  ReservationEntry entry;
  entry.id = static_cast<int>(entries_.size());
  entry.owner = owner;
  entry.color = color;
  entry.anchor = anchor;
  entry.threshold = threshold;
  entry.created_stage = stage;
  for (const ReservationEntry& e : entries_)
    if (e.live && e.owner < owner) entry.blockers.push_back(e.id);
  entries_.push_back(std::move(entry));
  return entries_.back().id;
}

void ReservationLedger::kill_owner(int owner) {
  for (ReservationEntry& e : entries_)
    if (e.owner == owner) e.live = false;
}

// Static coverage for every entry at once: an entry covers x when x is past
// its threshold, adjacent to its anchor, and not covered by any of its
// blockers. Blockers always have smaller ids, so one ascending pass works.
void ReservationLedger::coverage(int x, std::vector<char>& out) const {
  out.assign(entries_.size(), 0);
  for (size_t i = 0; i < entries_.size(); ++i) {
    const ReservationEntry& e = entries_[i];
    if (x <= e.threshold || !presentation_->adjacent(e.anchor, x)) continue;
    bool blocked = false;
    for (int b : e.blockers)
      if (out[b]) { blocked = true; break; }
    if (!blocked) out[i] = 1;
  }
}

int ReservationLedger::strongest_live_cover(int x) const {
  std::vector<char> cov;
  coverage(x, cov);
  int best = -1;
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (!entries_[i].live || !cov[i]) continue;
    if (best < 0 || entries_[i].owner < entries_[best].owner)
      best = static_cast<int>(i);
  }
  return best;
}

bool ReservationLedger::entry_covers(int id, int x) const {
  std::vector<char> cov;
  coverage(x, cov);
  return cov.at(id) != 0;
}

Color ReservationLedger::planned_color(int x) const {
  const int id = strongest_live_cover(x);
  return id < 0 ? Color::Red : entries_[id].color;
}

namespace {

TraceEvent make_event(EventKind kind, int stage, int requirement = -1,
                      int vertex = -1, std::optional<Color> color = std::nullopt,
                      std::string graph6 = {}) {
  TraceEvent e;
  e.kind = kind;
  e.stage = stage;
  e.requirement = requirement;
  e.vertex = vertex;
  e.color = color;
  e.graph6 = std::move(graph6);
  return e;
}

class Engine {
public:
  explicit Engine(const RunConfig& config)
      : config_(config), presentation_(config.n), ledger_(&presentation_) {
    validate_config(config_);
    for (const AdversarySpec& spec : config_.roster) {
      auto stream = std::make_unique<AdversaryStream>(spec.index, make_strategy(spec));
      stream->validate_strategy(presentation_);
      parents_.push_back(std::move(stream));
    }
    for (const auto& parent : parents_) {
      splits_.emplace_back(parent.get(), Color::Red);
      splits_.emplace_back(parent.get(), Color::Blue);
    }
    for (size_t p = 0; p < splits_.size(); ++p) {
      RequirementState r;
      r.priority = static_cast<int>(p);
      r.adversary_index = static_cast<int>(p / 2);
      r.color = (p % 2 == 0) ? Color::Red : Color::Blue;
      requirements_.push_back(std::move(r));
    }
  }

  RunResult run() {
    trace_.header.n = config_.n;
    trace_.header.stages = config_.stages;
    emit(make_event(EventKind::StageStart, 0));
    coloring_.push_back(Color::Red);
    emit(make_event(EventKind::Colored, 0, -1, 0, Color::Red));
    for (int stage = 1; stage <= config_.stages; ++stage) run_stage(stage);
    return {std::move(coloring_), std::move(trace_)};
  }

private:
  void emit(TraceEvent event) { trace_.events.push_back(std::move(event)); }

  void reserve_around(RequirementState& r, int anchor, Color color, int threshold,
                      int stage) {
    ledger_.add_entry(r.priority, color, anchor, threshold, stage);
    emit(make_event(EventKind::Reserved, stage, r.priority, anchor, color));
  }

  void injure_weaker_than(int priority, int stage) {
    for (RequirementState& r : requirements_) {
      if (r.priority <= priority) continue;
      r.followers.clear();
      r.target.reset();
      r.last_injury_stage = stage;
      r.active = false;
      ledger_.kill_owner(r.priority);
      emit(make_event(EventKind::Injured, stage, r.priority));
    }
  }

  void run_stage(int stage) {
    emit(make_event(EventKind::StageStart, stage));
    presentation_.ensure_stage(stage + 1);

    // 1. step the adversaries, then refresh the monochromatic splits
    StageView view;
    view.stage = stage - 1;
    view.colors = &coloring_;
    view.presentation = &presentation_;
    for (const auto& parent : parents_) {
      view.own_history = &parent->history();
      parent->step(view, stage);
    }
    for (SplitStream& split : splits_) split.absorb(stage, coloring_);

    // 2. activity
    for (RequirementState& r : requirements_) {
      r.follower_seeded_this_stage = false;
      const bool now = is_active(r, stage, splits_[r.priority]);
      if (now && !r.active) emit(make_event(EventKind::Activated, stage, r.priority));
      r.active = now;
    }

    // 3. first followers, strongest first
    for (RequirementState& r : requirements_) {
      if (!r.active || !r.followers.empty()) continue;
      const SplitStream& split = splits_[r.priority];
      int pick = -1, pick_stage = -1;
      for (int x : split.sorted_elements()) {
        const int es = split.enumeration_stage(x);
        if (r.last_injury_stage && es <= *r.last_injury_stage) continue;
        pick = x;
        pick_stage = es;
        break;
      }
      if (pick < 0)
        throw std::logic_error("active requirement has no eligible element");
      r.followers.push_back({pick, pick_stage, stage});
      r.follower_seeded_this_stage = true;
      emit(make_event(EventKind::FirstFollower, stage, r.priority, pick));
      // plan the opposite of the follower's color on its uncolored neighbors
      reserve_around(r, pick, opposite(coloring_[pick]), stage - 1, stage);
    }

    // 4. targets
    for (RequirementState& r : requirements_) {
      if (!r.active || r.followers.empty() || r.target) continue;
      int k = 0;
      for (const RequirementState& s : requirements_) {
        if (s.priority >= r.priority) break;
        if (s.active) k += static_cast<int>(s.followers.size());
      }
      TargetInfo info;
      info.graph = choose_target_graph(config_.n, k, config_.folkman_max_vertices);
      info.k_at_choice = k;
      info.chosen_stage = stage;
      emit(make_event(EventKind::TargetChosen, stage, r.priority, -1, std::nullopt,
                      encode_graph6(info.graph)));
      r.target = std::move(info);
    }

    // 5. extension scan, strongest to weakest
    for (RequirementState& r : requirements_) {
      if (!r.active || r.followers.empty() || !r.target) continue;
      if (r.follower_seeded_this_stage) continue;
      const int m = static_cast<int>(r.followers.size());
      if (m >= r.target->graph.vertex_count()) continue;
      const SplitStream& split = splits_[r.priority];
      const int after = r.followers.back().enum_stage;
      int found = -1;
      for (int x : split.sorted_elements()) {
        if (x <= after) continue;
        bool ok = true;
        for (int j = 0; j < m && ok; ++j)
          ok = presentation_.adjacent(r.followers[j].vertex, x) ==
               r.target->graph.adjacent(j, m);
        if (ok) { found = x; break; }
      }
      if (found < 0) continue;
      r.followers.push_back({found, split.enumeration_stage(found), stage});
      emit(make_event(EventKind::NewFollower, stage, r.priority, found));
      reserve_around(r, found, opposite(r.color), stage, stage);
      injure_weaker_than(r.priority, stage);
    }

    // 6. color the stage vertex
    const Color col = ledger_.planned_color(stage);
    coloring_.push_back(col);
    emit(make_event(EventKind::Colored, stage, -1, stage, col));
  }

  RunConfig config_;
  Presentation presentation_;
  ReservationLedger ledger_;
  std::vector<std::unique_ptr<AdversaryStream>> parents_;
  std::vector<SplitStream> splits_;
  std::vector<RequirementState> requirements_;
  std::vector<Color> coloring_;
  Trace trace_;
};

}  // namespace

RunResult run_construction(const RunConfig& config) {
  Engine engine(config);
  return engine.run();
}

}  // namespace henson
