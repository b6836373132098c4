#include "henson/trace.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace henson {

namespace {
using nlohmann::json;

constexpr const char* kTraceFormat = "henson-trace";
constexpr const char* kColoringHeader = "# henson-coloring v1";

const char* kKindNames[] = {"StageStart", "Activated",  "FirstFollower",
                            "TargetChosen", "NewFollower", "Reserved",
                            "Injured",    "Colored"};
}  // namespace

const char* event_kind_name(EventKind kind) {
  return kKindNames[static_cast<int>(kind)];
}

EventKind parse_event_kind(const std::string& name) {
  for (int i = 0; i < 8; ++i)
    if (name == kKindNames[i]) return static_cast<EventKind>(i);
  throw std::invalid_argument("unknown trace event kind: " + name);
}

std::string trace_to_jsonl(const Trace& trace) {
  std::string out;
  json header;
  header["format"] = kTraceFormat;
  header["kind"] = "Header";
  header["n"] = trace.header.n;
  header["stages"] = trace.header.stages;
  header["version"] = trace.header.version;
  out += header.dump();
  out += '\n';
  for (const TraceEvent& e : trace.events) {
    json record;
    record["kind"] = event_kind_name(e.kind);
    record["stage"] = e.stage;
    if (e.requirement >= 0) record["requirement"] = e.requirement;
    if (e.vertex >= 0) record["vertex"] = e.vertex;
    if (e.color) record["color"] = std::string(1, color_char(*e.color));
    if (!e.graph6.empty()) record["graph6"] = e.graph6;
    out += record.dump();
    out += '\n';
  }
  return out;
}

Trace trace_from_jsonl(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Trace trace;
  bool have_header = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& err) {
      throw std::runtime_error("trace line " + std::to_string(line_no) + ": " +
                               err.what());
    }
    const std::string kind = record.at("kind").get<std::string>();
    if (!have_header) {
      if (kind != "Header" || record.value("format", "") != kTraceFormat)
        throw std::runtime_error("trace line 1: missing henson-trace header");
      trace.header.version = record.at("version").get<int>();
      trace.header.n = record.at("n").get<int>();
      trace.header.stages = record.at("stages").get<int>();
      have_header = true;
      continue;
    }
    TraceEvent e;
    e.kind = parse_event_kind(kind);
    e.stage = record.at("stage").get<int>();
    if (record.contains("requirement")) e.requirement = record["requirement"].get<int>();
    if (record.contains("vertex")) e.vertex = record["vertex"].get<int>();
    if (record.contains("color"))
      e.color = parse_color(record["color"].get<std::string>());
    if (record.contains("graph6")) e.graph6 = record["graph6"].get<std::string>();
    trace.events.push_back(std::move(e));
  }
  if (!have_header) throw std::runtime_error("trace is empty");
  return trace;
}

std::string coloring_to_text(const std::vector<Color>& coloring, int n) {
  std::string out = kColoringHeader;
  out += " n=" + std::to_string(n) +
         " stages=" + std::to_string(coloring.empty() ? 0 : coloring.size() - 1) +
         "\n";
  for (size_t i = 0; i < coloring.size(); ++i) {
    out += std::to_string(i);
    out += ' ';
    out += color_char(coloring[i]);
    out += '\n';
  }
  return out;
}

std::vector<Color> coloring_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind(kColoringHeader, 0) != 0)
    throw std::runtime_error("coloring file: missing henson-coloring header");
  std::vector<Color> out;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    long stage = -1;
    std::string color;
    if (!(fields >> stage >> color) || stage != static_cast<long>(out.size()))
      throw std::runtime_error("coloring file line " + std::to_string(line_no) +
                               ": expected \"" + std::to_string(out.size()) +
                               " R|B\"");
    out.push_back(parse_color(color));
  }
  return out;
}

}  // namespace henson
