#include "henson/adversary.hpp"

#include <algorithm>
#include <stdexcept>

namespace henson {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

class ConstantSetStrategy : public Strategy {
public:
  ConstantSetStrategy(std::vector<int> elements, int delay)
      : elements_(std::move(elements)), delay_(delay) {}

  std::vector<int> step(const StageView& view) override {
    if (view.stage < delay_) return {};
    if (next_ >= elements_.size()) return {};
    return {elements_[next_++]};
  }

  std::unique_ptr<Strategy> fresh_clone() const override {
    return std::make_unique<ConstantSetStrategy>(elements_, delay_);
  }

  std::string describe() const override {
    std::string out = "constant_set " + join_ints(elements_);
    if (delay_) out += " delay=" + std::to_string(delay_);
    return out;
  }

private:
  std::vector<int> elements_;
  int delay_;
  size_t next_ = 0;
};

class ColorChaserStrategy : public Strategy {
public:
  ColorChaserStrategy(Color color, int delay) : color_(color), delay_(delay) {}

  // Enumerates s at stage s whenever c(s) has the chased color.
  std::vector<int> step(const StageView& view) override {
    if (view.stage < delay_) return {};
    if (view.stage >= view.colored_count()) return {};
    if ((*view.colors)[view.stage] == color_) return {view.stage};
    return {};
  }

  std::unique_ptr<Strategy> fresh_clone() const override {
    return std::make_unique<ColorChaserStrategy>(color_, delay_);
  }

  std::string describe() const override {
    std::string out = "color_chaser " + color_name(color_);
    if (delay_) out += " delay=" + std::to_string(delay_);
    return out;
  }

private:
  Color color_;
  int delay_;
};

// Builds a monochromatic order-isomorphic copy of the presentation's own
// prefix inside its color class, emitting one chain vertex at a time.
class GreedyCopierStrategy : public Strategy {
public:
  GreedyCopierStrategy(Color color, int delay) : color_(color), delay_(delay) {}

  std::vector<int> step(const StageView& view) override {
    if (view.stage < delay_) return {};
    const int limit = view.colored_count();
    const int m = static_cast<int>(chain_.size());
    while (cursor_ < limit) {
      const int x = cursor_;
      if ((*view.colors)[x] != color_ ||
          (!chain_.empty() && x <= chain_.back())) {
        ++cursor_;
        continue;
      }
      bool ok = true;
      for (int i = 0; i < m && ok; ++i)
        ok = view.presentation->adjacent(chain_[i], x) ==
             view.presentation->adjacent(i, m);
      if (!ok) {
        ++cursor_;
        continue;
      }
      chain_.push_back(x);
      cursor_ = x + 1;
      return {x};
    }
    return {};
  }

  std::unique_ptr<Strategy> fresh_clone() const override {
    return std::make_unique<GreedyCopierStrategy>(color_, delay_);
  }

  std::string describe() const override {
    std::string out = "greedy_copier " + color_name(color_);
    if (delay_) out += " delay=" + std::to_string(delay_);
    return out;
  }

private:
  Color color_;
  int delay_;
  std::vector<int> chain_;
  int cursor_ = 0;  // rejections are permanent for a fixed chain length
};

}  // namespace

std::unique_ptr<Strategy> make_constant_set(std::vector<int> elements, int delay) {
  for (int e : elements)
    if (e < 0) throw std::invalid_argument("constant_set elements must be naturals");
  return std::make_unique<ConstantSetStrategy>(std::move(elements), delay);
}

std::unique_ptr<Strategy> make_color_chaser(Color color, int delay) {
  return std::make_unique<ColorChaserStrategy>(color, delay);
}

std::unique_ptr<Strategy> make_greedy_copier(Color color, int delay) {
  return std::make_unique<GreedyCopierStrategy>(color, delay);
}

AdversaryStream::AdversaryStream(int index, std::unique_ptr<Strategy> strategy)
    : index_(index), strategy_(std::move(strategy)) {
  description_ = strategy_->describe();
}

std::vector<int> AdversaryStream::step(const StageView& view, int record_stage) {
  std::vector<int> emitted = strategy_->step(view);
  for (int x : emitted) {
    if (x < 0) throw std::runtime_error("adversary emitted a negative element");
    if (!members_.insert(x).second)
      throw std::runtime_error("adversary re-enumerated element " +
                               std::to_string(x));
    history_.emplace_back(x, record_stage);
  }
  return emitted;
}

void AdversaryStream::validate_strategy(Presentation& p) const {
  auto a = strategy_->fresh_clone();
  auto b = strategy_->fresh_clone();
  // synthetic deterministic coloring: alternate red/blue
  std::vector<Color> colors;
  std::vector<std::pair<int, int>> history_a, history_b;
  std::unordered_set<int> seen_a, seen_b;
  for (int stage = 0; stage < 100; ++stage) {
    colors.push_back(stage % 2 == 0 ? Color::Red : Color::Blue);
    StageView view;
    view.stage = stage;
    view.colors = &colors;
    view.presentation = &p;
    view.own_history = &history_a;
    std::vector<int> ea = a->step(view);
    view.own_history = &history_b;
    std::vector<int> eb = b->step(view);
    if (ea != eb)
      throw std::runtime_error("adversary " + std::to_string(index_) +
                               " failed the determinism replay");
    for (int x : ea) {
      if (!seen_a.insert(x).second)
        throw std::runtime_error("adversary " + std::to_string(index_) +
                                 " violated monotonicity in replay");
      history_a.emplace_back(x, stage);
      history_b.emplace_back(x, stage);
      seen_b.insert(x);
    }
  }
}

std::vector<int> SplitStream::absorb(int stage, const std::vector<Color>& colors) {
  const auto& parent_history = parent_->history();
  for (; parent_cursor_ < parent_history.size(); ++parent_cursor_)
    pending_.push_back(parent_history[parent_cursor_].first);

  std::vector<int> ready;
  std::vector<int> still_pending;
  for (int x : pending_) {
    if (x < static_cast<int>(colors.size()) && colors[x] == color_)
      ready.push_back(x);
    else if (x >= static_cast<int>(colors.size()))
      still_pending.push_back(x);
    // wrong color once visible: dropped for good
  }
  pending_ = std::move(still_pending);
  std::sort(ready.begin(), ready.end());
  for (int x : ready) {
    history_.emplace_back(x, stage);
    members_.insert(x);
    sorted_.insert(std::upper_bound(sorted_.begin(), sorted_.end(), x), x);
  }
  return ready;
}

int SplitStream::enumeration_stage(int x) const {
  for (const auto& [elem, stage] : history_)
    if (elem == x) return stage;
  throw std::out_of_range("element not in split stream");
}

}  // namespace henson
