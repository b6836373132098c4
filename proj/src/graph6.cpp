#include "henson/graph6.hpp"

#include <vector>

namespace henson {

Graph6Error::Graph6Error(const std::string& message, size_t pos)
    : std::runtime_error(message + " at byte " + std::to_string(pos)),
      position(pos) {}

std::string encode_graph6(const FiniteGraph& g) {
  const int n = g.vertex_count();
  if (n >= 63)
    throw std::invalid_argument("small-format graph6 requires fewer than 63 vertices");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  // Upper-triangle bits in column order: (0,1), (0,2), (1,2), (0,3), ...
  int bits = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      bits = (bits << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + bits));
        bits = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) {
    bits <<= (6 - nbits);
    out.push_back(static_cast<char>(63 + bits));
  }
  return out;
}

FiniteGraph decode_graph6(std::string_view text) {
  if (text.empty()) throw Graph6Error("empty graph6 input", 0);
  const unsigned char first = static_cast<unsigned char>(text[0]);
  if (first == 126) throw Graph6Error("long-format graph6 not supported", 0);
  if (first < 63 || first > 125) throw Graph6Error("invalid graph6 byte", 0);
  for (size_t p = 1; p < text.size(); ++p) {
    const unsigned char c = static_cast<unsigned char>(text[p]);
    if (c < 63 || c > 126) throw Graph6Error("invalid graph6 byte", p);
  }
  const int n = first - 63;
  const long needed_bits = static_cast<long>(n) * (n - 1) / 2;
  const size_t needed_bytes = static_cast<size_t>((needed_bits + 5) / 6);
  if (text.size() < 1 + needed_bytes)
    throw Graph6Error("truncated graph6 input", text.size());
  if (text.size() > 1 + needed_bytes)
    throw Graph6Error("trailing bytes after graph6 data", 1 + needed_bytes);

  FiniteGraph g(n);
  long bit_index = 0;
  for (size_t p = 1; p < text.size(); ++p) {
    const int group = static_cast<unsigned char>(text[p]) - 63;
    for (int b = 5; b >= 0; --b, ++bit_index) {
      const int bit = (group >> b) & 1;
      if (bit_index >= needed_bits) {
        if (bit != 0) throw Graph6Error("nonzero padding bits", p);
        continue;
      }
      if (bit) {
        // invert column-order position back to the pair (i, j)
        long idx = bit_index;
        int j = 1;
        while (idx >= j) idx -= j, ++j;
        g.add_edge(static_cast<int>(idx), j);
      }
    }
  }
  return g;
}

}  // namespace henson
