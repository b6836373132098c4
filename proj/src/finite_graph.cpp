#include "henson/finite_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

namespace henson {

FiniteGraph::FiniteGraph(int vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  n_ = vertex_count;
  adj_.assign(static_cast<size_t>(n_) * n_, 0);
}

FiniteGraph FiniteGraph::from_edges(int vertex_count,
                                    const std::vector<std::pair<int, int>>& edges) {
  FiniteGraph g(vertex_count);
  for (auto [i, j] : edges) g.add_edge(i, j);
  return g;
}

void FiniteGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

bool FiniteGraph::adjacent(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  return adj_[static_cast<size_t>(i) * n_ + j] != 0;
}

void FiniteGraph::add_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw std::invalid_argument("self loops are not allowed");
  adj_[static_cast<size_t>(i) * n_ + j] = 1;
  adj_[static_cast<size_t>(j) * n_ + i] = 1;
}

void FiniteGraph::remove_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  adj_[static_cast<size_t>(i) * n_ + j] = 0;
  adj_[static_cast<size_t>(j) * n_ + i] = 0;
}

std::vector<int> FiniteGraph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (adj_[static_cast<size_t>(v) * n_ + u]) out.push_back(u);
  return out;
}

int FiniteGraph::edge_count() const {
  int m = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (adj_[static_cast<size_t>(i) * n_ + j]) ++m;
  return m;
}

namespace {

// Tomita-style expansion: candidates are greedily colored, then processed in
// reverse color order so depth + color bounds the reachable clique size.
void expand_clique(const FiniteGraph& g, const std::vector<int>& candidates,
                   int depth, int& best) {
  if (candidates.empty()) {
    best = std::max(best, depth);
    return;
  }
  std::vector<std::vector<int>> classes;
  std::vector<int> color(candidates.size(), 0);
  std::vector<int> order;
  order.reserve(candidates.size());
  for (int v : candidates) {
    size_t c = 0;
    for (; c < classes.size(); ++c) {
      bool clash = false;
      for (int u : classes[c])
        if (g.adjacent(u, v)) { clash = true; break; }
      if (!clash) break;
    }
    if (c == classes.size()) classes.emplace_back();
    classes[c].push_back(v);
  }
  std::vector<std::pair<int, int>> colored;  // (color, vertex)
  for (size_t c = 0; c < classes.size(); ++c)
    for (int v : classes[c]) colored.emplace_back(static_cast<int>(c) + 1, v);
  // process highest colors first
  for (size_t i = colored.size(); i-- > 0;) {
    auto [col, v] = colored[i];
    if (depth + col <= best) return;
    std::vector<int> next;
    for (size_t j = 0; j < i; ++j)
      if (g.adjacent(colored[j].second, v)) next.push_back(colored[j].second);
    expand_clique(g, next, depth + 1, best);
  }
}

}  // namespace

int clique_number(const FiniteGraph& g) {
  if (g.vertex_count() == 0) return 0;
  std::vector<int> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  int best = 0;
  expand_clique(g, all, 0, best);
  return best;
}

bool is_connected(const FiniteGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u = 0; u < n; ++u)
      if (g.adjacent(v, u) && !seen[u]) {
        seen[u] = 1;
        ++reached;
        queue.push_back(u);
      }
  }
  return reached == n;
}

bool is_connected_clique_free(const FiniteGraph& g, int n) {
  if (n < 3) throw std::invalid_argument("forbidden clique size must be >= 3");
  if (g.vertex_count() == 0) return false;
  return is_connected(g) && clique_number(g) < n;
}

bool increasing_iso(const std::vector<int>& host_vertices,
                    const AdjacencyFn& host_adjacent,
                    const FiniteGraph& pattern) {
  const int k = pattern.vertex_count();
  if (static_cast<int>(host_vertices.size()) != k)
    throw std::invalid_argument("host vertex list size does not match pattern");
  for (size_t i = 1; i < host_vertices.size(); ++i)
    if (host_vertices[i - 1] >= host_vertices[i])
      throw std::invalid_argument("host vertices must be strictly ascending");
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (host_adjacent(host_vertices[i], host_vertices[j]) != pattern.adjacent(i, j))
        return false;
  return true;
}

bool increasing_iso(const std::vector<int>& host_vertices,
                    const FiniteGraph& host,
                    const FiniteGraph& pattern) {
  return increasing_iso(
      host_vertices,
      [&host](int a, int b) { return host.adjacent(a, b); }, pattern);
}

FiniteGraph restriction(const FiniteGraph& g, int m) {
  if (m < 0 || m > g.vertex_count())
    throw std::out_of_range("restriction size out of range");
  FiniteGraph out(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(i, j)) out.add_edge(i, j);
  return out;
}

std::vector<int> connect_order(const FiniteGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("connect_order of empty graph");
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  std::vector<int> order;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (int u = 0; u < n; ++u)
      if (g.adjacent(v, u) && !seen[u]) {
        seen[u] = 1;
        queue.push_back(u);
      }
  }
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("connect_order of disconnected graph");
  return order;
}

FiniteGraph reorder(const FiniteGraph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("order size does not match graph");
  FiniteGraph out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(order[i], order[j])) out.add_edge(i, j);
  return out;
}

namespace {

bool embed_from(const FiniteGraph& pattern, const FiniteGraph& host,
                const std::vector<int>& allowed, const std::vector<int>& order,
                std::vector<int>& image, std::vector<char>& used, size_t pos) {
  if (pos == order.size()) return true;
  const int pv = order[pos];
  for (int hv : allowed) {
    if (used[hv]) continue;
    bool ok = true;
    for (size_t q = 0; q < pos && ok; ++q) {
      const int pu = order[q];
      ok = host.adjacent(image[pu], hv) == pattern.adjacent(pu, pv);
    }
    if (!ok) continue;
    image[pv] = hv;
    used[hv] = 1;
    if (embed_from(pattern, host, allowed, order, image, used, pos + 1)) return true;
    used[hv] = 0;
  }
  return false;
}

}  // namespace

bool induced_embedding_exists(const FiniteGraph& pattern, const FiniteGraph& host,
                              const std::vector<int>& allowed) {
  const int k = pattern.vertex_count();
  if (k == 0) return true;
  if (static_cast<int>(allowed.size()) < k) return false;
  for (int v : allowed)
    if (v < 0 || v >= host.vertex_count())
      throw std::out_of_range("allowed vertex outside host");
  // Place pattern vertices so each step has as many placed neighbors as
  // possible; keeps the search shallow on connected patterns.
  std::vector<int> order;
  std::vector<char> placed(k, 0);
  for (int step = 0; step < k; ++step) {
    int pick = -1, pick_score = -1;
    for (int v = 0; v < k; ++v) {
      if (placed[v]) continue;
      int score = 0;
      for (int u : order)
        if (pattern.adjacent(u, v)) ++score;
      if (score > pick_score) { pick = v; pick_score = score; }
    }
    placed[pick] = 1;
    order.push_back(pick);
  }
  std::vector<int> image(k, -1);
  std::vector<char> used(host.vertex_count(), 0);
  return embed_from(pattern, host, allowed, order, image, used, 0);
}

bool induced_embedding_exists(const FiniteGraph& pattern, const FiniteGraph& host) {
  std::vector<int> all(host.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  return induced_embedding_exists(pattern, host, all);
}

}  // namespace henson
