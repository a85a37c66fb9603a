#pragma once

#include <span>
#include <vector>

#include "checkers/board.hpp"

namespace checkers {

// Board plus a current move direction; records every emitted source position
// and refuses any move outside the four optimal move classes.
class MoveCursor {
 public:
  MoveCursor(const GameSpec& spec, Direction dir);

  const GameSpec& spec() const noexcept { return spec_; }
  Direction direction() const noexcept { return dir_; }
  const BoardState& board() const noexcept { return board_; }
  const std::vector<Position>& steps() const noexcept { return steps_; }
  std::vector<Position> release_steps() && { return std::move(steps_); }

  void change() noexcept { dir_ = flip(dir_); }
  void slide(Direction dir);
  void jump(Direction dir);

 private:
  void emit(Position pos);

  GameSpec spec_;
  Direction dir_;
  BoardState board_;
  std::vector<Position> steps_;
};

// Each stage appends to the cursor and returns the positions it emitted; the
// span is valid until the cursor emits again. All stages assume n >= m.
//
//   stage 1: for i = 1..m, i-1 jumps, one slide, then flip   (m(m+1)/2 moves)
//   stage 2: m jumps                                         (m moves)
//   stage 3: for each of n-m rounds, slide right, flip, m jumps
//   stage 4: for i = m..1, flip, one slide, i-1 jumps        (m(m+1)/2 moves)
std::span<const Position> stage1(MoveCursor& cursor);
std::span<const Position> stage2(MoveCursor& cursor);
std::span<const Position> stage3(MoveCursor& cursor);
std::span<const Position> stage4(MoveCursor& cursor);

// Optimal solution of nm+n+m moves. n < m is handled by mirroring.
Solution construct(const GameSpec& spec, Direction dir);

}  // namespace checkers
