#pragma once

#include <ostream>
#include <string>

namespace henson::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;
inline constexpr int kExitExhausted = 3;

// Writes the presentation prefix on m vertices as graph6 or an adjacency list.
int cmd_present(int n, int m, const std::string& format, const std::string& out_path,
                std::ostream& out, std::ostream& err);

// Searches for a partition witness and writes graph6 plus a summary.
int cmd_folkman(int n, int k, int max_vertices, const std::string& out_path,
                std::ostream& out, std::ostream& err);

// Runs the construction from a config file; writes <prefix>.trace.jsonl and
// <prefix>.coloring.txt.
int cmd_color(const std::string& config_path, const std::string& out_prefix,
              std::ostream& out, std::ostream& err);

// Replays and audits a trace/coloring pair; prints one line per check.
int cmd_verify(const std::string& config_path, const std::string& trace_path,
               const std::string& coloring_path, std::ostream& out,
               std::ostream& err);

}  // namespace henson::cli
