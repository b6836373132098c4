#include "henson/presentation.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <string>

namespace henson {

namespace {

// Requirements are enumerated by key = (max element + 1) + 32 * |A u B|, so
// small patterns over low vertices are scheduled early regardless of how many
// vertices they avoid. Within a key: size ascending, element sets in
// lexicographic order, then attach/avoid assignments by binary mask.
constexpr int kSizeWeight = 32;

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Presentation::Presentation(int n) : n_(n) {
  if (n < 3) throw std::invalid_argument("forbidden clique size must be >= 3");
}

void Presentation::ensure_stage(int t) {
  while (built_stage() < t) build_vertex(built_stage());
}

void Presentation::build_vertex(int t) {
  const int64_t index =
      t == 0 ? 0 : t - static_cast<int64_t>(std::bit_floor(static_cast<uint64_t>(t)));
  ensure_requirement(index);
  const StoredRequirement& req = requirements_[index];
  const int32_t* elems = element_pool_.data() + req.offset;
  const int total = req.attach_size + req.avoid_size;

  bool well_formed = true;
  for (int i = 0; i < total; ++i)
    if (elems[i] >= t) { well_formed = false; break; }
  if (well_formed) well_formed = attach_is_clique_free(elems, req.attach_size);

  if (well_formed) {
    vertex_req_.push_back(static_cast<int32_t>(index));
    for (int i = 0; i < req.attach_size; ++i)
      forward_neighbors_[elems[i]].push_back(t);
  } else {
    vertex_req_.push_back(-1);
  }
  forward_neighbors_.emplace_back();
}

void Presentation::ensure_requirement(int64_t index) {
  while (static_cast<int64_t>(requirements_.size()) <= index) generate_key(next_key_++);
}

void Presentation::generate_key(int key) {
  if (key == 0) {
    requirements_.push_back({static_cast<uint32_t>(element_pool_.size()), 0, 0});
    return;
  }
  for (int s = 1; kSizeWeight * s <= key; ++s) {
    const int m = key - kSizeWeight * s;  // max element + 1
    if (m < s) continue;
    const int top = m - 1;
    // (s-1)-subsets of [0, top) in lexicographic order, plus the top element
    std::vector<int> pick(s - 1);
    for (int i = 0; i < s - 1; ++i) pick[i] = i;
    while (true) {
      std::vector<int> elems(pick.begin(), pick.end());
      elems.push_back(top);
      for (int mask = 0; mask < (1 << s); ++mask) {
        const uint32_t offset = static_cast<uint32_t>(element_pool_.size());
        int attach = 0, avoid = 0;
        for (int j = 0; j < s; ++j)
          if (!(mask & (1 << j))) { element_pool_.push_back(elems[j]); ++attach; }
        for (int j = 0; j < s; ++j)
          if (mask & (1 << j)) { element_pool_.push_back(elems[j]); ++avoid; }
        requirements_.push_back({offset, static_cast<uint8_t>(attach),
                                 static_cast<uint8_t>(avoid)});
      }
      // next combination
      if (s == 1) break;
      int i = s - 2;
      while (i >= 0 && pick[i] == top - (s - 1 - i)) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < s - 1; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

bool Presentation::attach_is_clique_free(const int32_t* attach, int count) {
  const int want = n_ - 1;
  if (count < want) return true;
  std::vector<int> verts(attach, attach + count);
  std::vector<int> chosen;
  return !has_clique_within(verts, want, 0, chosen);
}

bool Presentation::has_clique_within(const std::vector<int>& vertices, int size,
                                     int from, std::vector<int>& chosen) {
  if (size == 0) return true;
  for (size_t i = from; i < vertices.size(); ++i) {
    const int v = vertices[i];
    bool ok = true;
    for (int u : chosen)
      if (!adjacent(u, v)) { ok = false; break; }
    if (!ok) continue;
    chosen.push_back(v);
    if (has_clique_within(vertices, size - 1, static_cast<int>(i) + 1, chosen))
      return true;
    chosen.pop_back();
  }
  return false;
}

bool Presentation::adjacent(int i, int j) {
  if (i < 0 || j < 0) throw std::out_of_range("negative vertex");
  if (i == j) return false;
  const int lo = std::min(i, j), hi = std::max(i, j);
  ensure_stage(hi + 1);
  const int32_t r = vertex_req_[hi];
  if (r < 0) return false;
  const StoredRequirement& req = requirements_[r];
  const int32_t* begin = element_pool_.data() + req.offset;
  const int32_t* end = begin + req.attach_size;
  return std::binary_search(begin, end, lo);
}

std::vector<int> Presentation::neighbor_set_within(int x, int m) {
  if (x < 0) throw std::out_of_range("negative vertex");
  ensure_stage(std::max(x + 1, m));
  std::vector<int> out;
  const int32_t r = vertex_req_[x];
  if (r >= 0) {
    const StoredRequirement& req = requirements_[r];
    const int32_t* elems = element_pool_.data() + req.offset;
    for (int i = 0; i < req.attach_size && elems[i] < m; ++i)
      out.push_back(elems[i]);
  }
  for (int32_t f : forward_neighbors_[x]) {
    if (f >= m) break;
    out.push_back(f);
  }
  return out;
}

FiniteGraph Presentation::restriction(int m) {
  if (m < 0) throw std::out_of_range("negative restriction size");
  ensure_stage(m);
  FiniteGraph g(m);
  for (int v = 0; v < m; ++v) {
    const int32_t r = vertex_req_[v];
    if (r < 0) continue;
    const StoredRequirement& req = requirements_[r];
    const int32_t* elems = element_pool_.data() + req.offset;
    for (int i = 0; i < req.attach_size; ++i) g.add_edge(elems[i], v);
  }
  return g;
}

bool Presentation::matches_pattern(int x, const std::vector<int>& attach,
                                   const std::vector<int>& avoid) {
  for (int a : attach) {
    if (a == x || !adjacent(a, x)) return false;
  }
  for (int b : avoid) {
    if (b == x || adjacent(b, x)) return false;
  }
  return true;
}

int Presentation::scan_for_pattern(const std::vector<int>& attach,
                                   const std::vector<int>& avoid, int bound) {
  const int top = std::max(attach.empty() ? -1 : attach.back(),
                           avoid.empty() ? -1 : avoid.back());
  // below the pattern's own vertices: direct checks
  for (int x = std::max(bound + 1, 0); x <= top; ++x)
    if (matches_pattern(x, attach, avoid)) return x;

  int from = std::max({bound, top});
  if (attach.empty()) {
    // almost every vertex avoids a fixed finite set; plain scan
    for (int x = from + 1;; ++x) {
      if (x >= built_stage()) ensure_stage(x + 256);
      bool ok = true;
      for (int b : avoid)
        if (adjacent(b, x)) { ok = false; break; }
      if (ok) return x;
    }
  }

  // x > top and adjacent to all of attach: walk the forward list of the
  // largest attach vertex and match the stored connection sets
  const int anchor = attach.back();
  ensure_stage(anchor + 1);
  size_t cursor = std::upper_bound(forward_neighbors_[anchor].begin(),
                                   forward_neighbors_[anchor].end(), from) -
                  forward_neighbors_[anchor].begin();
  while (true) {
    const auto& fwd = forward_neighbors_[anchor];
    for (; cursor < fwd.size(); ++cursor) {
      const int x = fwd[cursor];
      const StoredRequirement& req = requirements_[vertex_req_[x]];
      const int32_t* a_begin = element_pool_.data() + req.offset;
      const int32_t* a_end = a_begin + req.attach_size;
      bool ok = std::includes(a_begin, a_end, attach.begin(), attach.end());
      for (size_t i = 0; ok && i < avoid.size(); ++i)
        ok = !std::binary_search(a_begin, a_end, avoid[i]);
      if (ok) return x;
    }
    ensure_stage(built_stage() * 2 + 64);
  }
}

int Presentation::find_extension(const std::vector<int>& attach,
                                 const std::vector<int>& avoid, int bound) {
  std::vector<int> a = sorted_unique(attach);
  std::vector<int> b = sorted_unique(avoid);
  for (int v : a)
    if (v < 0) throw std::invalid_argument("negative vertex in attach set");
  for (int v : b)
    if (v < 0) throw std::invalid_argument("negative vertex in avoid set");
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  if (!common.empty())
    throw std::invalid_argument("attach and avoid sets must be disjoint");
  if (!a.empty()) {
    ensure_stage(a.back() + 1);
    if (!attach_is_clique_free(a.data(), static_cast<int>(a.size())))
      throw std::invalid_argument("attach set contains a forbidden clique");
  }
  return scan_for_pattern(a, b, bound);
}

int Presentation::extend_copy(const std::vector<int>& base, const FiniteGraph& target,
                              int bound) {
  for (size_t i = 1; i < base.size(); ++i)
    if (base[i - 1] >= base[i])
      throw std::invalid_argument("base vertices must be strictly ascending");
  const int d = static_cast<int>(base.size());
  if (target.vertex_count() != d + 1)
    throw std::invalid_argument("target must have one vertex more than base");
  if (!is_connected_clique_free(target, n_))
    throw std::invalid_argument("target must be connected and clique-free");
  if (d > 0) {
    ensure_stage(base.back() + 1);
    if (!increasing_iso(base, [this](int x, int y) { return adjacent(x, y); },
                        henson::restriction(target, d)))
      throw std::invalid_argument("base does not match the target prefix");
  }
  std::vector<int> attach, avoid;
  for (int i = 0; i < d; ++i)
    (target.adjacent(i, d) ? attach : avoid).push_back(base[i]);
  const int from = base.empty() ? bound : std::max(bound, base.back());
  return scan_for_pattern(attach, avoid, from);
}

}  // namespace henson
