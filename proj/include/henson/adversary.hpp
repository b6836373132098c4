#pragma once

#include <memory>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "henson/color.hpp"
#include "henson/presentation.hpp"

namespace henson {

// What an enumerator may read at a stage: the construction so far. colors
// covers vertices [0, stage]; nothing beyond the stage is ever revealed.
struct StageView {
  int stage = -1;
  const std::vector<Color>* colors = nullptr;
  Presentation* presentation = nullptr;
  const std::vector<std::pair<int, int>>* own_history = nullptr;  // (element, stage)

  int colored_count() const { return static_cast<int>(colors->size()); }
};

// A deterministic enumeration rule. Implementations must be replayable:
// identical view sequences produce identical emissions.
class Strategy {
public:
  virtual ~Strategy() = default;
  virtual std::vector<int> step(const StageView& view) = 0;
  virtual std::unique_ptr<Strategy> fresh_clone() const = 0;
  virtual std::string describe() const = 0;
};

std::unique_ptr<Strategy> make_constant_set(std::vector<int> elements, int delay = 0);
std::unique_ptr<Strategy> make_color_chaser(Color color, int delay = 0);
std::unique_ptr<Strategy> make_greedy_copier(Color color, int delay = 0);

// A monotone stage-driven enumerator modeling one c.e. set.
class AdversaryStream {
public:
  AdversaryStream(int index, std::unique_ptr<Strategy> strategy);

  int index() const { return index_; }
  const std::string& description() const { return description_; }

  // Called once per stage in increasing stage order; returns the newly
  // enumerated elements. Throws if the strategy re-enumerates an element.
  std::vector<int> step(const StageView& view, int record_stage);

  bool contains(int x) const { return members_.count(x) != 0; }
  const std::vector<std::pair<int, int>>& history() const { return history_; }

  // Determinism and monotonicity self-check: replays a fresh clone of the
  // strategy against 100 synthetic stages and compares emissions. Throws on
  // divergence.
  void validate_strategy(Presentation& p) const;

private:
  int index_;
  std::unique_ptr<Strategy> strategy_;
  std::string description_;
  std::vector<std::pair<int, int>> history_;
  std::unordered_set<int> members_;
};

// Monochromatic view of a stream: x appears at the first stage where the
// parent has enumerated x, x is colored, and its color matches.
class SplitStream {
public:
  SplitStream(const AdversaryStream* parent, Color color)
      : parent_(parent), color_(color) {}

  Color color() const { return color_; }
  const AdversaryStream* parent() const { return parent_; }

  // Absorb parent elements whose colors are now visible; colors covers
  // [0, upto]. Returns newly split elements in ascending order.
  std::vector<int> absorb(int stage, const std::vector<Color>& colors);

  bool contains(int x) const { return members_.count(x) != 0; }
  int enumeration_stage(int x) const;
  const std::vector<std::pair<int, int>>& history() const { return history_; }
  // split elements in ascending vertex order
  const std::vector<int>& sorted_elements() const { return sorted_; }

private:
  const AdversaryStream* parent_;
  Color color_;
  size_t parent_cursor_ = 0;
  std::vector<int> pending_;  // parent elements not yet colored
  std::vector<std::pair<int, int>> history_;
  std::vector<int> sorted_;
  std::unordered_set<int> members_;
};

}  // namespace henson
