#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace checkers {

// Cell index on the row, 1-based.
using Position = std::int32_t;

class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IllegalMove : public std::runtime_error {
 public:
  IllegalMove(Position pos, const std::string& why);
  Position position() const noexcept { return pos_; }

 private:
  Position pos_;
};

class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A game instance: n black checkers, m white checkers, one vacant cell.
class GameSpec {
 public:
  static constexpr int kMaxCheckers = 1'000'000;

  GameSpec(int n, int m);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  int board_len() const noexcept { return n_ + m_ + 1; }
  std::int64_t optimal_length() const noexcept {
    return std::int64_t{n_} * m_ + n_ + m_;
  }
  GameSpec mirrored() const { return GameSpec(m_, n_); }

  friend bool operator==(const GameSpec&, const GameSpec&) = default;

 private:
  int n_;
  int m_;
};

enum class Cell : char { Black = 'b', White = 'w', Vacant = '.' };

// A row of cells with exactly one vacancy. Text form uses 'b', 'w', '.'.
class BoardState {
 public:
  // Throws std::invalid_argument unless the text has only b/w/. and one '.'.
  static BoardState parse(std::string_view text);

  Cell at(Position pos) const { return static_cast<Cell>(cells_[pos - 1]); }
  Position vacant() const noexcept { return vacant_; }
  int size() const noexcept { return static_cast<int>(cells_.size()); }
  bool in_bounds(Position pos) const noexcept { return pos >= 1 && pos <= size(); }
  int count(Cell c) const;
  const std::string& str() const noexcept { return cells_; }

  // Moves the checker at pos into the vacancy. Throws IllegalMove.
  void move(Position pos);

  friend bool operator==(const BoardState&, const BoardState&) = default;

 private:
  BoardState(std::string cells, Position vacant)
      : cells_(std::move(cells)), vacant_(vacant) {}

  std::string cells_;
  Position vacant_;
};

BoardState initial_state(const GameSpec& spec);
BoardState goal_state(const GameSpec& spec);

enum class Rules { Full, Optimal };

enum class Side { Left, Right };

// One row of the twelve move kinds. Identity is `number`; `name` is a label.
struct MoveClass {
  int number;
  Cell mover;
  Cell over;     // jumped checker; Vacant for a slide
  int distance;  // 1 = slide, 2 = jump
  Side direction;
  int d_inversions;
  int d_vacant_inversions;
  std::string_view name;

  bool optimal() const noexcept { return number <= 4; }
  bool is_jump() const noexcept { return distance == 2; }
};

const std::array<MoveClass, 12>& move_table();

// Throws IllegalMove when moving pos is not a slide or jump.
MoveClass classify(const BoardState& state, Position pos);

std::vector<Position> legal_moves(const BoardState& state, Rules rules);

BoardState apply(const BoardState& state, Position pos);

struct Metrics {
  std::int64_t inversions = 0;
  std::int64_t vacant_inversions = 0;

  std::int64_t potential() const noexcept { return inversions + vacant_inversions; }
  friend bool operator==(const Metrics&, const Metrics&) = default;
};

Metrics metrics(const BoardState& state);

// Initial move direction of the staged construction. R starts with the black
// checker at n sliding right (d = +1), L with the white at n+2 sliding left.
enum class Direction { L, R };

constexpr int sign(Direction dir) noexcept { return dir == Direction::R ? 1 : -1; }
constexpr Direction flip(Direction dir) noexcept {
  return dir == Direction::R ? Direction::L : Direction::R;
}
Direction direction_from_sign(int d);

struct Solution {
  GameSpec spec;
  int d;  // +1 or -1
  std::vector<Position> steps;

  friend bool operator==(const Solution&, const Solution&) = default;
};

BoardState mirror(const BoardState& state);
Solution mirror_solution(const Solution& sol);

struct Violation {
  std::int64_t step;  // 1-based
  std::string reason;
};

struct ValidationReport {
  bool legal = true;
  bool reached_goal = false;
  std::int64_t step_count = 0;
  bool optimal = false;
  std::optional<Violation> first_violation;
};

ValidationReport validate(const GameSpec& spec, std::span<const Position> steps,
                          Rules rules);
inline ValidationReport validate(const Solution& sol, Rules rules) {
  return validate(sol.spec, sol.steps, rules);
}

// Every board along the sequence, initial and final included. Throws IllegalMove.
std::vector<BoardState> replay(const GameSpec& spec, std::span<const Position> steps);

}  // namespace checkers
