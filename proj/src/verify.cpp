#include "henson/verify.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "henson/graph6.hpp"

namespace henson {

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::find(const std::string& name) const {
  for (const CheckResult& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

constexpr int kNever = std::numeric_limits<int>::max();

struct FollowerSpan {
  int vertex;
  int added_stage;
  int removed_stage = kNever;
};

struct ReqTrack {
  Color color = Color::Red;
  std::vector<int> followers;  // current, in acquisition order
  std::vector<int> follower_added;
  std::optional<FiniteGraph> target;
  int target_stage = -1;
  std::vector<FollowerSpan> spans;  // full history for V4
  std::vector<int> injuries;
};

struct Check {
  explicit Check(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::string detail;

  void fail(const std::string& message) {
    if (!passed) return;  // keep the first failure
    passed = false;
    detail = message;
  }

  CheckResult result() const { return {name, passed, detail}; }
};

std::string stage_str(int stage) { return "stage " + std::to_string(stage); }

}  // namespace

VerifyReport verify_trace(const Trace& trace,
                          const std::optional<std::vector<Color>>& coloring_file,
                          const RunConfig& config) {
  Check structure{"structure"}, v1{"V1"}, v2{"V2"}, v3{"V3"}, v4{"V4"}, v5{"V5"},
      v6{"V6"}, replay{"replay"};

  if (trace.header.n != config.n || trace.header.stages != config.stages)
    structure.fail("header does not match the configuration");

  Presentation presentation(config.n);
  ReservationLedger ledger(&presentation);
  std::vector<ReqTrack> reqs(config.roster.size() * 2);
  for (size_t p = 0; p < reqs.size(); ++p)
    reqs[p].color = (p % 2 == 0) ? Color::Red : Color::Blue;

  std::vector<Color> colors;
  int current_stage = -1;
  bool colored_this_stage = false;
  const TraceEvent* previous = nullptr;

  auto req_ok = [&](int r) { return r >= 0 && r < static_cast<int>(reqs.size()); };

  auto check_iso = [&](int r, const std::string& where) {
    ReqTrack& t = reqs[r];
    if (!t.target) return;
    const int m = static_cast<int>(t.followers.size());
    if (m > t.target->vertex_count()) return;  // reported by V6
    try {
      if (!increasing_iso(t.followers,
                          [&](int a, int b) { return presentation.adjacent(a, b); },
                          restriction(*t.target, m)))
        v2.fail("followers of requirement " + std::to_string(r) +
                " do not match the target prefix at " + where);
    } catch (const std::exception& err) {
      v2.fail("follower list of requirement " + std::to_string(r) +
              " is malformed at " + where + ": " + err.what());
    }
  };

  for (const TraceEvent& e : trace.events) {
    switch (e.kind) {
      case EventKind::StageStart:
        if (e.stage != current_stage + 1)
          structure.fail("stages are not contiguous at " + stage_str(e.stage));
        if (current_stage >= 0 && !colored_this_stage)
          structure.fail(stage_str(current_stage) + " ended without a Colored event");
        current_stage = e.stage;
        colored_this_stage = false;
        break;

      case EventKind::Activated:
        if (!req_ok(e.requirement))
          structure.fail("Activated names an unknown requirement");
        break;

      case EventKind::FirstFollower: {
        if (!req_ok(e.requirement) || e.vertex < 0) {
          structure.fail("malformed FirstFollower at " + stage_str(e.stage));
          break;
        }
        ReqTrack& t = reqs[e.requirement];
        if (!t.followers.empty())
          structure.fail("FirstFollower for a requirement that has followers at " +
                         stage_str(e.stage));
        t.followers.push_back(e.vertex);
        t.follower_added.push_back(e.stage);
        t.spans.push_back({e.vertex, e.stage, kNever});
        check_iso(e.requirement, stage_str(e.stage));
        break;
      }

      case EventKind::NewFollower: {
        if (!req_ok(e.requirement) || e.vertex < 0) {
          structure.fail("malformed NewFollower at " + stage_str(e.stage));
          break;
        }
        ReqTrack& t = reqs[e.requirement];
        if (!t.target) {
          structure.fail("NewFollower without a target at " + stage_str(e.stage));
          break;
        }
        t.followers.push_back(e.vertex);
        t.follower_added.push_back(e.stage);
        t.spans.push_back({e.vertex, e.stage, kNever});
        if (static_cast<int>(t.followers.size()) > t.target->vertex_count())
          v6.fail("requirement " + std::to_string(e.requirement) + " holds " +
                  std::to_string(t.followers.size()) + " followers for a " +
                  std::to_string(t.target->vertex_count()) + "-vertex target at " +
                  stage_str(e.stage));
        check_iso(e.requirement, stage_str(e.stage));
        break;
      }

      case EventKind::TargetChosen: {
        if (!req_ok(e.requirement)) {
          structure.fail("malformed TargetChosen at " + stage_str(e.stage));
          break;
        }
        try {
          reqs[e.requirement].target = decode_graph6(e.graph6);
          reqs[e.requirement].target_stage = e.stage;
        } catch (const std::exception& err) {
          structure.fail(std::string("undecodable target graph: ") + err.what());
          break;
        }
        check_iso(e.requirement, stage_str(e.stage));
        break;
      }

      case EventKind::Reserved: {
        if (!req_ok(e.requirement) || e.vertex < 0 || !e.color) {
          structure.fail("malformed Reserved at " + stage_str(e.stage));
          break;
        }
        if (previous == nullptr || previous->requirement != e.requirement ||
            previous->stage != e.stage ||
            (previous->kind != EventKind::FirstFollower &&
             previous->kind != EventKind::NewFollower) ||
            previous->vertex != e.vertex) {
          structure.fail("Reserved not paired with a follower event at " +
                         stage_str(e.stage));
          break;
        }
        const int threshold =
            previous->kind == EventKind::FirstFollower ? e.stage - 1 : e.stage;
        ledger.add_entry(e.requirement, *e.color, e.vertex, threshold, e.stage);
        break;
      }

      case EventKind::Injured: {
        if (!req_ok(e.requirement)) {
          structure.fail("malformed Injured at " + stage_str(e.stage));
          break;
        }
        ReqTrack& t = reqs[e.requirement];
        for (FollowerSpan& span : t.spans)
          if (span.removed_stage == kNever) span.removed_stage = e.stage;
        t.followers.clear();
        t.follower_added.clear();
        t.target.reset();
        t.target_stage = -1;
        t.injuries.push_back(e.stage);
        ledger.kill_owner(e.requirement);
        break;
      }

      case EventKind::Colored: {
        if (e.stage != current_stage || colored_this_stage || !e.color ||
            e.vertex != e.stage || e.stage != static_cast<int>(colors.size())) {
          structure.fail("malformed Colored event at " + stage_str(e.stage));
          break;
        }
        colored_this_stage = true;
        const Color planned = ledger.planned_color(e.stage);
        if (planned != *e.color)
          v1.fail(stage_str(e.stage) + ": colored " +
                  color_name(*e.color) + " but the planned color is " +
                  color_name(planned));
        const int cover = ledger.strongest_live_cover(e.stage);
        if (cover >= 0 && ledger.entries()[cover].color != *e.color)
          v3.fail(stage_str(e.stage) + ": strongest live reservation not honored");
        colors.push_back(*e.color);
        break;
      }
    }
    previous = &e;
  }

  if (static_cast<int>(colors.size()) != config.stages + 1)
    structure.fail("coloring is not total: " + std::to_string(colors.size()) +
                   " of " + std::to_string(config.stages + 1) + " vertices colored");

  // V4: each later follower of the requirement's own color must touch a
  // follower of a stronger opposite-colored requirement live at its coloring
  for (size_t r = 0; r < reqs.size(); ++r) {
    const ReqTrack& t = reqs[r];
    if (!t.target || t.followers.size() < 2) continue;
    for (size_t i = 1; i < t.followers.size(); ++i) {
      const int x = t.followers[i];
      if (x >= static_cast<int>(colors.size()) || colors[x] != t.color) continue;
      bool shielded = false;
      for (size_t d = 0; d < r && !shielded; ++d) {
        if (reqs[d].color != opposite(t.color)) continue;
        for (const FollowerSpan& span : reqs[d].spans) {
          if (span.added_stage <= x && x < span.removed_stage &&
              presentation.adjacent(x, span.vertex)) {
            shielded = true;
            break;
          }
        }
      }
      if (!shielded)
        v4.fail("follower " + std::to_string(x) + " of requirement " +
                std::to_string(r) +
                " matches its color with no stronger opposite follower adjacent");
    }
  }

  // V5 and replay: deterministic re-run, compared event by event
  try {
    RunResult expected = run_construction(config);
    const auto& a = expected.trace.events;
    const auto& b = trace.events;
    size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    if (i < a.size() || i < b.size()) {
      const bool extension_related =
          (i < a.size() && a[i].kind == EventKind::NewFollower) ||
          (i < b.size() && b[i].kind == EventKind::NewFollower);
      std::ostringstream where;
      where << "event " << i << ": expected "
            << (i < a.size() ? event_kind_name(a[i].kind) : "end of trace")
            << ", found "
            << (i < b.size() ? event_kind_name(b[i].kind) : "end of trace");
      if (extension_related)
        v5.fail("stage replay disagrees on a follower extension (" + where.str() +
                ")");
      replay.fail("trace does not match the deterministic re-run (" + where.str() +
                  ")");
    }
  } catch (const std::exception& err) {
    replay.fail(std::string("re-run failed: ") + err.what());
  }

  VerifyReport report;
  report.checks = {structure.result(), v1.result(), v2.result(), v3.result(),
                   v4.result(),        v5.result(), v6.result(), replay.result()};
  if (coloring_file) {
    Check file_check("coloring");
    if (*coloring_file != colors)
      file_check.fail("coloring file does not match the trace");
    report.checks.push_back(file_check.result());
  }
  return report;
}

}  // namespace henson
