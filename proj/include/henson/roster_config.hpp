#pragma once

#include <string>

#include "henson/priority.hpp"

namespace henson {

// Flat text configuration:
//   n = 3
//   stages = 5000
//   folkman_max_vertices = 6        (optional)
//   adversary <index> constant_set <elements...> [delay=N]
//   adversary <index> color_chaser <red|blue> [delay=N]
//   adversary <index> greedy_copier <red|blue> [delay=N]
// Blank lines and lines starting with # are ignored.
// Errors mention <source>:<line>.
RunConfig parse_run_config(const std::string& text, const std::string& source);
RunConfig load_run_config(const std::string& path);

}  // namespace henson
