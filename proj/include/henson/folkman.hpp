#pragma once

#include <cstdint>
#include <stdexcept>

#include "henson/finite_graph.hpp"
#include "henson/presentation.hpp"

namespace henson {

struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FolkmanCertificate {
  FiniteGraph graph;
  int n = 0;
  int k = 0;
  int64_t partitions_checked = 0;  // search nodes explored verifying the witness
};

// True iff every assignment of g's vertices to k blocks leaves some block
// containing K_{n-1} as a subgraph. Exhaustive backtracking with the first
// vertex pinned to block 0 and early exit on a witness partition.
bool partition_ramsey_check(const FiniteGraph& g, int n, int k);

// First connected K_n-free graph, by vertex count then by canonical
// adjacency-bitstring order, passing partition_ramsey_check. Throws
// SearchExhausted when no witness exists within max_vertices.
FolkmanCertificate folkman_witness(int n, int k, int max_vertices);

// True iff g has no induced embedding into the union of the centers'
// neighbor sets inside [0, window). Finite-window evidence only.
bool neighbor_cover_obstruction_check(const FiniteGraph& g, Presentation& p,
                                      const std::vector<int>& centers, int window);

}  // namespace henson
