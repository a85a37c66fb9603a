#include "checkers/constructor.hpp"

#include <stdexcept>

namespace checkers {

MoveCursor::MoveCursor(const GameSpec& spec, Direction dir)
    : spec_(spec), dir_(dir), board_(initial_state(spec)) {
  steps_.reserve(static_cast<std::size_t>(spec.optimal_length()));
}

void MoveCursor::slide(Direction dir) { emit(board_.vacant() - sign(dir)); }

void MoveCursor::jump(Direction dir) { emit(board_.vacant() - 2 * sign(dir)); }

void MoveCursor::emit(Position pos) {
  if (!classify(board_, pos).optimal()) {
    throw std::logic_error("construction emitted a non-optimal move at step " +
                           std::to_string(steps_.size() + 1));
  }
  board_.move(pos);
  steps_.push_back(pos);
}

namespace {

std::span<const Position> emitted_since(const MoveCursor& cursor, std::size_t mark) {
  return std::span<const Position>(cursor.steps()).subspan(mark);
}

}  // namespace

std::span<const Position> stage1(MoveCursor& cursor) {
  const std::size_t mark = cursor.steps().size();
  const int m = cursor.spec().m();
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j < i; ++j) cursor.jump(cursor.direction());
    cursor.slide(cursor.direction());
    cursor.change();
  }
  return emitted_since(cursor, mark);
}

std::span<const Position> stage2(MoveCursor& cursor) {
  const std::size_t mark = cursor.steps().size();
  const int m = cursor.spec().m();
  for (int i = 1; i <= m; ++i) cursor.jump(cursor.direction());
  return emitted_since(cursor, mark);
}

std::span<const Position> stage3(MoveCursor& cursor) {
  const std::size_t mark = cursor.steps().size();
  const int m = cursor.spec().m();
  const int rounds = cursor.spec().n() - m;
  for (int i = 1; i <= rounds; ++i) {
    cursor.slide(Direction::R);
    cursor.change();
    for (int j = 1; j <= m; ++j) cursor.jump(cursor.direction());
  }
  return emitted_since(cursor, mark);
}

std::span<const Position> stage4(MoveCursor& cursor) {
  const std::size_t mark = cursor.steps().size();
  for (int i = cursor.spec().m(); i >= 1; --i) {
    cursor.change();
    cursor.slide(cursor.direction());
    for (int j = 1; j < i; ++j) cursor.jump(cursor.direction());
  }
  return emitted_since(cursor, mark);
}

Solution construct(const GameSpec& spec, Direction dir) {
  if (spec.n() < spec.m()) return mirror_solution(construct(spec.mirrored(), flip(dir)));

  MoveCursor cursor(spec, dir);
  stage1(cursor);
  stage2(cursor);
  stage3(cursor);
  stage4(cursor);
  if (cursor.board() != goal_state(spec)) {
    throw std::logic_error("construction did not reach the goal state");
  }
  return Solution{spec, sign(dir), std::move(cursor).release_steps()};
}

}  // namespace checkers
