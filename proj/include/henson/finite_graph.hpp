#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace henson {

// Simple undirected graph on dense vertex indices [0, n).
// The adjacency matrix is symmetric with an empty diagonal.
class FiniteGraph {
public:
  FiniteGraph() = default;
  explicit FiniteGraph(int vertex_count);

  static FiniteGraph from_edges(int vertex_count,
                                const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  bool adjacent(int i, int j) const;
  void add_edge(int i, int j);
  void remove_edge(int i, int j);

  std::vector<int> neighbors(int v) const;
  int edge_count() const;

  bool operator==(const FiniteGraph& other) const = default;

private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<uint8_t> adj_;  // row-major n*n
};

// Largest m such that g contains K_m as a subgraph; 0 for the empty graph.
// Exact; backtracking with a greedy-coloring bound.
int clique_number(const FiniteGraph& g);

bool is_connected(const FiniteGraph& g);

// Nonempty, connected, and clique_number < n ("candidate target" graphs).
bool is_connected_clique_free(const FiniteGraph& g, int n);

using AdjacencyFn = std::function<bool(int, int)>;

// Order isomorphism: host_vertices must be strictly ascending and is matched
// position-by-position against the pattern's vertices 0..k-1.
bool increasing_iso(const std::vector<int>& host_vertices,
                    const AdjacencyFn& host_adjacent,
                    const FiniteGraph& pattern);
bool increasing_iso(const std::vector<int>& host_vertices,
                    const FiniteGraph& host,
                    const FiniteGraph& pattern);

// Induced subgraph on vertices [0, m). Throws if m is out of range.
FiniteGraph restriction(const FiniteGraph& g, int m);

// BFS order from vertex 0 (FIFO, neighbors in ascending index order), so that
// every vertex except the first is adjacent to an earlier one.
// Throws if g is empty or disconnected.
std::vector<int> connect_order(const FiniteGraph& g);

// Relabel so that new vertex i is old vertex order[i].
FiniteGraph reorder(const FiniteGraph& g, const std::vector<int>& order);

// Injective map from pattern into host preserving adjacency and
// non-adjacency; images restricted to `allowed`. Not order-constrained.
bool induced_embedding_exists(const FiniteGraph& pattern,
                              const FiniteGraph& host,
                              const std::vector<int>& allowed);
bool induced_embedding_exists(const FiniteGraph& pattern,
                              const FiniteGraph& host);

}  // namespace henson
