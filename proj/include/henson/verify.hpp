#pragma once

#include <optional>
#include <string>
#include <vector>

#include "henson/priority.hpp"
#include "henson/trace.hpp"

namespace henson {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
};

// Replays and audits a construction trace:
//   structure  trace well-formed: header, stage layout, one Colored per stage
//   V1         every Colored event matches a planned-color replay
//   V2         followers stay order-isomorphic to their target prefix
//   V3         covered vertices received the strongest live reservation color
//   V4         same-colored later followers touch a live stronger opposite
//              follower at coloring time
//   V5         the stage replay finds no skipped new-follower candidate
//   V6         follower counts never exceed the target size
//   replay     an independent re-run reproduces the trace exactly
//   coloring   the coloring file matches the trace (when provided)
VerifyReport verify_trace(const Trace& trace,
                          const std::optional<std::vector<Color>>& coloring_file,
                          const RunConfig& config);

}  // namespace henson
