#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "henson/finite_graph.hpp"

namespace henson {

struct Graph6Error : std::runtime_error {
  Graph6Error(const std::string& message, size_t position);
  size_t position;
};

// Small-format graph6 (fewer than 63 vertices), per the published ASCII
// specification. One graph per line when written to files.
std::string encode_graph6(const FiniteGraph& g);
FiniteGraph decode_graph6(std::string_view text);

}  // namespace henson
