#include "checkers/board.hpp"

#include <algorithm>
#include <cstdlib>

namespace checkers {

IllegalMove::IllegalMove(Position pos, const std::string& why)
    : std::runtime_error("illegal move from " + std::to_string(pos) + ": " + why),
      pos_(pos) {}

GameSpec::GameSpec(int n, int m) : n_(n), m_(m) {
  if (n < 1 || m < 1) {
    throw InvalidSpec("need at least one checker of each color, got n=" +
                      std::to_string(n) + " m=" + std::to_string(m));
  }
  if (n > kMaxCheckers || m > kMaxCheckers) {
    throw InvalidSpec("checker count exceeds " + std::to_string(kMaxCheckers));
  }
}

BoardState BoardState::parse(std::string_view text) {
  Position vacant = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    switch (text[k]) {
      case 'b':
      case 'w':
        break;
      case '.':
        if (vacant != 0) throw std::invalid_argument("board has more than one vacancy");
        vacant = static_cast<Position>(k + 1);
        break;
      default:
        throw std::invalid_argument("unexpected board character '" +
                                    std::string(1, text[k]) + "'");
    }
  }
  if (vacant == 0) throw std::invalid_argument("board has no vacancy");
  return BoardState(std::string(text), vacant);
}

int BoardState::count(Cell c) const {
  return static_cast<int>(std::count(cells_.begin(), cells_.end(), static_cast<char>(c)));
}

void BoardState::move(Position pos) {
  if (!in_bounds(pos)) throw IllegalMove(pos, "out of bounds");
  const int dist = std::abs(pos - vacant_);
  if (dist != 1 && dist != 2) throw IllegalMove(pos, "not adjacent to the vacancy");
  cells_[vacant_ - 1] = cells_[pos - 1];
  cells_[pos - 1] = static_cast<char>(Cell::Vacant);
  vacant_ = pos;
}

BoardState initial_state(const GameSpec& spec) {
  std::string cells(spec.n(), 'b');
  cells += '.';
  cells.append(spec.m(), 'w');
  return BoardState::parse(cells);
}

BoardState goal_state(const GameSpec& spec) {
  std::string cells(spec.m(), 'w');
  cells += '.';
  cells.append(spec.n(), 'b');
  return BoardState::parse(cells);
}

namespace {

constexpr Cell B = Cell::Black;
constexpr Cell W = Cell::White;
constexpr Cell O = Cell::Vacant;

// Rows follow the before/after pictures; several names do not describe the
// picture literally (row 4 moves the white checker) and are kept as labels.
constexpr std::array<MoveClass, 12> kTable{{
    {1, B, O, 1, Side::Right, 0, -1, "slide(b,r)"},
    {2, W, O, 1, Side::Left, 0, -1, "slide(w,l)"},
    {3, B, W, 2, Side::Right, -1, 0, "jump(b,w,r)"},
    {4, W, B, 2, Side::Left, -1, 0, "jump(b,w,l)"},
    {5, W, B, 2, Side::Right, 1, 0, "jump(w,b,r)"},
    {6, B, W, 2, Side::Left, 1, 0, "jump(w,b,l)"},
    {7, B, O, 1, Side::Left, 0, 1, "slide(b,l)"},
    {8, W, O, 1, Side::Right, 0, 1, "slide(w,r)"},
    {9, W, W, 2, Side::Right, 0, 2, "jump(w,w,r)"},
    {10, B, B, 2, Side::Left, 0, 2, "jump(b,b,l)"},
    {11, W, W, 2, Side::Left, 0, -2, "jump(w,w,l)"},
    {12, B, B, 2, Side::Right, 0, -2, "jump(b,b,r)"},
}};

}  // namespace

const std::array<MoveClass, 12>& move_table() { return kTable; }

MoveClass classify(const BoardState& state, Position pos) {
  if (!state.in_bounds(pos)) throw IllegalMove(pos, "out of bounds");
  const Position e = state.vacant();
  const int dist = std::abs(pos - e);
  if (dist != 1 && dist != 2) throw IllegalMove(pos, "not adjacent to the vacancy");

  const Cell mover = state.at(pos);
  const Cell over = dist == 2 ? state.at((pos + e) / 2) : Cell::Vacant;
  const Side side = pos < e ? Side::Right : Side::Left;
  for (const MoveClass& row : kTable) {
    if (row.mover == mover && row.over == over && row.direction == side) return row;
  }
  // unreachable for a board with a single vacancy
  throw IllegalMove(pos, "no matching move class");
}

std::vector<Position> legal_moves(const BoardState& state, Rules rules) {
  std::vector<Position> out;
  const Position e = state.vacant();
  for (Position pos : {e - 2, e - 1, e + 1, e + 2}) {
    if (!state.in_bounds(pos)) continue;
    if (rules == Rules::Optimal && !classify(state, pos).optimal()) continue;
    out.push_back(pos);
  }
  return out;
}

BoardState apply(const BoardState& state, Position pos) {
  BoardState next = state;
  next.move(pos);
  return next;
}

Metrics metrics(const BoardState& state) {
  Metrics out;
  std::int64_t blacks_seen = 0;
  const Position e = state.vacant();
  for (Position p = 1; p <= state.size(); ++p) {
    switch (state.at(p)) {
      case Cell::Black:
        ++blacks_seen;
        if (p < e) ++out.vacant_inversions;
        break;
      case Cell::White:
        out.inversions += blacks_seen;
        if (p > e) ++out.vacant_inversions;
        break;
      case Cell::Vacant:
        break;
    }
  }
  return out;
}

Direction direction_from_sign(int d) {
  if (d == 1) return Direction::R;
  if (d == -1) return Direction::L;
  throw std::invalid_argument("direction must be +1 or -1, got " + std::to_string(d));
}

BoardState mirror(const BoardState& state) {
  std::string cells(state.str().rbegin(), state.str().rend());
  for (char& c : cells) {
    if (c == 'b') {
      c = 'w';
    } else if (c == 'w') {
      c = 'b';
    }
  }
  return BoardState::parse(cells);
}

Solution mirror_solution(const Solution& sol) {
  const Position span = sol.spec.board_len() + 1;
  Solution out{sol.spec.mirrored(), -sol.d, {}};
  out.steps.reserve(sol.steps.size());
  for (Position x : sol.steps) out.steps.push_back(span - x);
  return out;
}

ValidationReport validate(const GameSpec& spec, std::span<const Position> steps,
                          Rules rules) {
  ValidationReport report;
  report.step_count = static_cast<std::int64_t>(steps.size());
  BoardState board = initial_state(spec);
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto step = static_cast<std::int64_t>(k + 1);
    const Position pos = steps[k];
    if (!board.in_bounds(pos) || std::abs(pos - board.vacant()) > 2 ||
        pos == board.vacant()) {
      report.legal = false;
      report.first_violation =
          Violation{step, "position " + std::to_string(pos) +
                              " cannot reach vacancy at " +
                              std::to_string(board.vacant())};
      return report;
    }
    if (rules == Rules::Optimal) {
      const MoveClass cls = classify(board, pos);
      if (!cls.optimal()) {
        report.legal = false;
        report.first_violation =
            Violation{step, "move class " + std::to_string(cls.number) + " " +
                                std::string(cls.name) + " is never optimal"};
        return report;
      }
    }
    board.move(pos);
  }
  report.reached_goal = board == goal_state(spec);
  report.optimal = report.reached_goal && report.step_count == spec.optimal_length();
  return report;
}

std::vector<BoardState> replay(const GameSpec& spec, std::span<const Position> steps) {
  std::vector<BoardState> out;
  out.reserve(steps.size() + 1);
  out.push_back(initial_state(spec));
  for (Position pos : steps) out.push_back(apply(out.back(), pos));
  return out;
}

}  // namespace checkers
