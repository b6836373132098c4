#pragma once

#include <optional>
#include <string>
#include <vector>

#include "henson/color.hpp"

namespace henson {

enum class EventKind {
  StageStart,
  Activated,
  FirstFollower,
  TargetChosen,
  NewFollower,
  Reserved,
  Injured,
  Colored,
};

const char* event_kind_name(EventKind kind);
EventKind parse_event_kind(const std::string& name);

struct TraceEvent {
  EventKind kind;
  int stage = 0;
  int requirement = -1;          // priority index, when applicable
  int vertex = -1;               // follower / anchor / colored vertex
  std::optional<Color> color;    // Reserved, Colored
  std::string graph6;            // TargetChosen

  bool operator==(const TraceEvent&) const = default;
};

struct TraceHeader {
  int version = 1;
  int n = 0;
  int stages = 0;

  bool operator==(const TraceHeader&) const = default;
};

struct Trace {
  TraceHeader header;
  std::vector<TraceEvent> events;

  bool operator==(const Trace&) const = default;
};

// JSON-lines serialization; the first record is the header.
std::string trace_to_jsonl(const Trace& trace);
Trace trace_from_jsonl(const std::string& text);

// Coloring file: "# henson-coloring v1 ..." header then "stage color" lines.
std::string coloring_to_text(const std::vector<Color>& coloring, int n);
std::vector<Color> coloring_from_text(const std::string& text);

}  // namespace henson
