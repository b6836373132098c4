#include "henson/folkman.hpp"

#include <algorithm>
#include <string>

namespace henson {

namespace {

// Does block ∪ {v} contain K_{size} using v? Looks for K_{size-1} among the
// block members adjacent to v.
bool completes_clique(const FiniteGraph& g, const std::vector<int>& block, int v,
                      int size) {
  std::vector<int> candidates;
  for (int u : block)
    if (g.adjacent(u, v)) candidates.push_back(u);
  // backtracking for a clique of size-1 inside candidates
  std::vector<int> chosen;
  auto search = [&](auto&& self, size_t from, int need) -> bool {
    if (need == 0) return true;
    for (size_t i = from; i < candidates.size(); ++i) {
      bool ok = true;
      for (int u : chosen)
        if (!g.adjacent(u, candidates[i])) { ok = false; break; }
      if (!ok) continue;
      chosen.push_back(candidates[i]);
      if (self(self, i + 1, need - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return search(search, 0, size - 1);
}

struct PartitionSearch {
  const FiniteGraph& g;
  int n;
  int k;
  int64_t nodes = 0;
  std::vector<std::vector<int>> blocks;

  // True iff some complete assignment keeps every block K_{n-1}-free,
  // i.e. a partition witnessing failure exists.
  bool good_partition_from(int v) {
    ++nodes;
    if (v == g.vertex_count()) return true;
    const int limit = (v == 0) ? 1 : k;  // pin vertex 0 to block 0
    for (int b = 0; b < limit; ++b) {
      if (completes_clique(g, blocks[b], v, n - 1)) continue;
      blocks[b].push_back(v);
      if (good_partition_from(v + 1)) return true;
      blocks[b].pop_back();
    }
    return false;
  }
};

// mask bit layout: pair (0,1) is the most significant bit, then (0,2), ...
FiniteGraph graph_from_mask(int v, uint64_t mask) {
  FiniteGraph g(v);
  const int pairs = v * (v - 1) / 2;
  int p = 0;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j, ++p)
      if (mask & (uint64_t{1} << (pairs - 1 - p))) g.add_edge(i, j);
  return g;
}

}  // namespace

bool partition_ramsey_check(const FiniteGraph& g, int n, int k) {
  if (n < 3) throw std::invalid_argument("forbidden clique size must be >= 3");
  if (k < 1) throw std::invalid_argument("partition count must be >= 1");
  if (g.vertex_count() == 0) return false;
  PartitionSearch search{g, n, k, 0, std::vector<std::vector<int>>(k)};
  return !search.good_partition_from(0);
}

FolkmanCertificate folkman_witness(int n, int k, int max_vertices) {
  if (n < 3) throw std::invalid_argument("forbidden clique size must be >= 3");
  if (k < 1) throw std::invalid_argument("partition count must be >= 1");
  if (max_vertices < 1) throw std::invalid_argument("max_vertices must be >= 1");
  for (int v = 1; v <= max_vertices; ++v) {
    const int pairs = v * (v - 1) / 2;
    if (pairs > 62) break;  // beyond desk scale anyway
    for (uint64_t mask = 0; mask < (uint64_t{1} << pairs); ++mask) {
      FiniteGraph g = graph_from_mask(v, mask);
      if (!is_connected(g)) continue;
      if (clique_number(g) >= n) continue;
      PartitionSearch search{g, n, k, 0, std::vector<std::vector<int>>(k)};
      if (!search.good_partition_from(0)) {
        FolkmanCertificate cert;
        cert.graph = std::move(g);
        cert.n = n;
        cert.k = k;
        cert.partitions_checked = search.nodes;
        return cert;
      }
    }
  }
  throw SearchExhausted("no partition witness with at most " +
                        std::to_string(max_vertices) + " vertices for n=" +
                        std::to_string(n) + " k=" + std::to_string(k));
}

bool neighbor_cover_obstruction_check(const FiniteGraph& g, Presentation& p,
                                      const std::vector<int>& centers, int window) {
  std::vector<int> covered;
  for (int c : centers) {
    std::vector<int> nbrs = p.neighbor_set_within(c, window);
    covered.insert(covered.end(), nbrs.begin(), nbrs.end());
  }
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());

  FiniteGraph host(static_cast<int>(covered.size()));
  for (size_t i = 0; i < covered.size(); ++i)
    for (size_t j = i + 1; j < covered.size(); ++j)
      if (p.adjacent(covered[i], covered[j]))
        host.add_edge(static_cast<int>(i), static_cast<int>(j));
  return !induced_embedding_exists(g, host);
}

}  // namespace henson
