#pragma once

#include <cstdint>
#include <vector>

#include "henson/finite_graph.hpp"

namespace henson {

// A fixed deterministic computable copy of the Henson graph H_n on domain N.
//
// Vertices are materialized in order. Vertex t serves one extension
// requirement (attach set A, avoid set B) drawn from a fair schedule: when the
// requirement is well formed (A and B already built, A is K_{n-1}-free), the
// new vertex is connected to exactly A among the existing vertices; otherwise
// it starts out isolated. Each requirement is revisited at every stage of the
// form 2^k + index, so every valid pattern acquires unboundedly many
// witnesses and find_extension is total.
//
// Construction is single-writer; queries are safe concurrently with each
// other once a stage barrier has been reached, never concurrently with
// ensure_stage.
class Presentation {
public:
  explicit Presentation(int n);  // n >= 3, the forbidden clique size

  int forbidden_clique_size() const { return n_; }
  int built_stage() const { return static_cast<int>(vertex_req_.size()); }

  // Materialize at least t vertices. Idempotent, monotone.
  void ensure_stage(int t);

  // Stable, symmetric, irreflexive; extends the construction on demand.
  bool adjacent(int i, int j);

  // Neighbors of x below m, sorted ascending.
  std::vector<int> neighbor_set_within(int x, int m);

  // Induced subgraph on [0, m) as a FiniteGraph.
  FiniteGraph restriction(int m);

  // Least x > bound adjacent to every vertex of attach and to none of avoid,
  // with x outside both sets. attach must induce a K_{n-1}-free subgraph and
  // be disjoint from avoid. Always terminates.
  int find_extension(const std::vector<int>& attach, const std::vector<int>& avoid,
                     int bound);

  // Least x > max(bound, base.back()) with base ++ [x] order-isomorphic to
  // target. target must be connected, K_n-free, on base.size()+1 vertices,
  // and its prefix must match base inside the presentation.
  int extend_copy(const std::vector<int>& base, const FiniteGraph& target, int bound);

private:
  struct StoredRequirement {
    uint32_t offset;      // into element_pool_
    uint8_t attach_size;
    uint8_t avoid_size;
  };

  void build_vertex(int t);
  void ensure_requirement(int64_t index);
  void generate_key(int key);
  bool attach_is_clique_free(const int32_t* attach, int count);
  bool has_clique_within(const std::vector<int>& vertices, int size, int from,
                         std::vector<int>& chosen);
  int scan_for_pattern(const std::vector<int>& attach, const std::vector<int>& avoid,
                       int bound);
  bool matches_pattern(int x, const std::vector<int>& attach,
                       const std::vector<int>& avoid);

  int n_;
  std::vector<int32_t> vertex_req_;           // requirement index or -1 (filler)
  std::vector<std::vector<int32_t>> forward_neighbors_;

  // requirement table, generated lazily in schedule order
  std::vector<StoredRequirement> requirements_;
  std::vector<int32_t> element_pool_;
  int next_key_ = 0;
};

}  // namespace henson
