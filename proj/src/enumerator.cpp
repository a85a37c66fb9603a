#include "checkers/enumerator.hpp"

namespace checkers {

namespace {

class Backtracker {
 public:
  Backtracker(const GameSpec& spec,
              const std::function<bool(std::span<const Position>)>& visit)
      : spec_(spec),
        visit_(visit),
        board_(initial_state(spec)),
        goal_(goal_state(spec)),
        depth_(spec.optimal_length()) {
    path_.reserve(static_cast<std::size_t>(depth_));
  }

  std::size_t run() {
    search();
    return found_;
  }

 private:
  bool is(Position pos, Cell c) const { return board_.in_bounds(pos) && board_.at(pos) == c; }

  // Returns false once the visitor asked to stop.
  bool search() {
    const Position e = board_.vacant();
    if (static_cast<std::int64_t>(path_.size()) == depth_) {
      if (e == spec_.m() + 1 && board_ == goal_) {
        ++found_;
        return visit_(path_);
      }
      return true;
    }
    if (is(e - 2, Cell::Black) && is(e - 1, Cell::White) && !step(e - 2)) return false;
    if (is(e + 2, Cell::White) && is(e + 1, Cell::Black) && !step(e + 2)) return false;
    if (is(e - 1, Cell::Black) && !step(e - 1)) return false;
    if (is(e + 1, Cell::White) && !step(e + 1)) return false;
    return true;
  }

  bool step(Position pos) {
    const Position back = board_.vacant();
    board_.move(pos);
    path_.push_back(pos);
    const bool go_on = search();
    path_.pop_back();
    board_.move(back);
    return go_on;
  }

  GameSpec spec_;
  const std::function<bool(std::span<const Position>)>& visit_;
  BoardState board_;
  BoardState goal_;
  std::int64_t depth_;
  std::vector<Position> path_;
  std::size_t found_ = 0;
};

}  // namespace

std::size_t for_each_optimal(const GameSpec& spec,
                             const std::function<bool(std::span<const Position>)>& visit) {
  return Backtracker(spec, visit).run();
}

Enumeration enumerate(const GameSpec& spec, std::optional<std::size_t> limit) {
  Enumeration out;
  if (limit && *limit == 0) {
    out.truncated = true;
    return out;
  }
  const Position start = spec.n() + 1;
  for_each_optimal(spec, [&](std::span<const Position> steps) {
    if (limit && out.solutions.size() == *limit) {
      out.truncated = true;
      return false;
    }
    out.solutions.push_back(
        Solution{spec, start - steps.front(), std::vector<Position>(steps.begin(), steps.end())});
    return true;
  });
  return out;
}

}  // namespace checkers
