#include <doctest.h>

#include <vector>

#include "checkers/constructor.hpp"
#include "checkers/counter.hpp"

using namespace checkers;

namespace {

using Steps = std::vector<Position>;

Steps to_vec(std::span<const Position> s) { return Steps(s.begin(), s.end()); }

// The recursive formulation, kept independent of MoveCursor: move1 recurses
// before its jumps, move3 and move4 recurse after theirs.
struct RecursiveReference {
  BoardState board;
  int m;
  int dir;
  Steps out;

  RecursiveReference(const GameSpec& spec, int d)
      : board(initial_state(spec)), m(spec.m()), dir(d) {}

  void emit(Position pos) {
    out.push_back(pos);
    board = apply(board, pos);
  }
  void slide(int d) { emit(board.vacant() - d); }
  void jump(int d) { emit(board.vacant() - 2 * d); }
  void change() { dir = -dir; }

  void move1(int t) {
    if (t > 1) move1(t - 1);
    for (int i = 1; i <= t - 1; ++i) jump(dir);
    slide(dir);
    change();
  }
  void jumps() {
    for (int i = 1; i <= m; ++i) jump(dir);
  }
  void move3(int t) {
    slide(1);
    change();
    for (int i = 1; i <= m; ++i) jump(dir);
    if (t > 1) move3(t - 1);
  }
  void move4(int t) {
    change();
    slide(dir);
    for (int i = 1; i <= t - 1; ++i) jump(dir);
    if (t > 1) move4(t - 1);
  }
};

}  // namespace

TEST_CASE("construct examples") {
  CHECK(construct(GameSpec(1, 1), Direction::R).steps == Steps{1, 3, 2});
  CHECK(construct(GameSpec(1, 1), Direction::L).steps == Steps{3, 1, 2});
  CHECK(construct(GameSpec(2, 2), Direction::R).steps == Steps{2, 4, 5, 3, 1, 2, 4, 3});
  CHECK(construct(GameSpec(3, 2), Direction::R).steps.size() == 11);
  CHECK(construct(GameSpec(3, 2), Direction::L).steps.size() == 11);
  CHECK(construct(GameSpec(1, 1), Direction::R).d == 1);
  CHECK(construct(GameSpec(1, 1), Direction::L).d == -1);
}

TEST_CASE("stages for the 1x1 game") {
  MoveCursor right(GameSpec(1, 1), Direction::R);
  CHECK(to_vec(stage1(right)) == Steps{1});
  CHECK(right.board().str() == ".bw");
  CHECK(to_vec(stage2(right)) == Steps{3});
  CHECK(right.board().str() == "wb.");
  CHECK(to_vec(stage3(right)).empty());
  CHECK(to_vec(stage4(right)) == Steps{2});
  CHECK(right.board().str() == "w.b");

  MoveCursor left(GameSpec(1, 1), Direction::L);
  CHECK(to_vec(stage1(left)) == Steps{3});
  CHECK(left.board().str() == "bw.");
}

TEST_CASE("stages for the 2x2 game") {
  MoveCursor right(GameSpec(2, 2), Direction::R);
  CHECK(to_vec(stage1(right)) == Steps{2, 4, 5});
  CHECK(right.board().str() == "bwbw.");
  CHECK(to_vec(stage2(right)) == Steps{3, 1});
  CHECK(right.board().str() == ".wbwb");
  CHECK(to_vec(stage3(right)).empty());
  CHECK(right.direction() == Direction::R);
  CHECK(to_vec(stage4(right)) == Steps{2, 4, 3});
  CHECK(right.board().str() == "ww.bb");

  MoveCursor left(GameSpec(2, 2), Direction::L);
  stage1(left);
  CHECK(to_vec(stage2(left)) == Steps{3, 5});
  CHECK(left.board().str() == "wbwb.");
}

TEST_CASE("stage three for n > m") {
  MoveCursor cursor(GameSpec(2, 1), Direction::R);
  stage1(cursor);
  stage2(cursor);
  CHECK(stage3(cursor).size() == 2);

  MoveCursor wide(GameSpec(3, 2), Direction::L);
  CHECK(stage1(wide).size() == 3);
  CHECK(stage2(wide).size() == 2);
  CHECK(stage3(wide).size() == 3);
  CHECK(stage4(wide).size() == 3);
  CHECK(wide.board() == goal_state(GameSpec(3, 2)));
}

TEST_CASE("cursor refuses non-optimal moves") {
  MoveCursor cursor(GameSpec(2, 2), Direction::R);
  CHECK_THROWS_AS(cursor.jump(Direction::R), std::logic_error);  // b jumps b
  CHECK(cursor.steps().empty());
}

TEST_CASE("stage budgets, legality and direction mapping") {
  for (int n = 1; n <= 14; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (Direction dir : {Direction::L, Direction::R}) {
        CAPTURE(n);
        CAPTURE(m);
        const GameSpec spec(n, m);
        MoveCursor cursor(spec, dir);
        CHECK(stage1(cursor).size() == static_cast<std::size_t>(m * (m + 1) / 2));
        CHECK(stage2(cursor).size() == static_cast<std::size_t>(m));
        CHECK(stage3(cursor).size() == static_cast<std::size_t>((n - m) * (m + 1)));
        CHECK(stage4(cursor).size() == static_cast<std::size_t>(m * (m + 1) / 2));
        CHECK(cursor.board() == goal_state(spec));

        const Solution sol = construct(spec, dir);
        CHECK(static_cast<std::int64_t>(sol.steps.size()) == spec.optimal_length());
        CHECK(sol.steps == cursor.steps());
        CHECK(validate(sol, Rules::Optimal).optimal);
        CHECK(sol.steps.front() == (dir == Direction::R ? n : n + 2));
        CHECK(n + 1 - sol.steps.front() == sign(dir));
      }
    }
  }
}

TEST_CASE("iterative stages match the recursive formulation step for step") {
  for (int n = 1; n <= 12; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (Direction dir : {Direction::L, Direction::R}) {
        CAPTURE(n);
        CAPTURE(m);
        const GameSpec spec(n, m);
        MoveCursor cursor(spec, dir);
        RecursiveReference ref(spec, sign(dir));

        ref.move1(m);
        CHECK(to_vec(stage1(cursor)) == ref.out);
        ref.out.clear();
        ref.jumps();
        CHECK(to_vec(stage2(cursor)) == ref.out);
        ref.out.clear();
        if (n > m) ref.move3(n - m);
        CHECK(to_vec(stage3(cursor)) == ref.out);
        ref.out.clear();
        ref.move4(m);
        CHECK(to_vec(stage4(cursor)) == ref.out);
        CHECK(ref.board == cursor.board());
      }
    }
  }
}

TEST_CASE("direction duality") {
  for (int n = 1; n <= 10; ++n) {
    const GameSpec square(n, n);
    CHECK(construct(square, Direction::L) == mirror_solution(construct(square, Direction::R)));
    for (int m = 1; m < n; ++m) {
      const GameSpec spec(n, m);
      CHECK(construct(spec, Direction::L).steps != construct(spec, Direction::R).steps);
    }
  }
}

TEST_CASE("n < m goes through the mirror") {
  for (int n = 1; n <= 8; ++n) {
    for (int m = n + 1; m <= 9; ++m) {
      for (Direction dir : {Direction::L, Direction::R}) {
        const GameSpec spec(n, m);
        const Solution sol = construct(spec, dir);
        CHECK(sol.spec == spec);
        CHECK(sol.d == sign(dir));
        CHECK(n + 1 - sol.steps.front() == sign(dir));
        CHECK(validate(sol, Rules::Optimal).optimal);
      }
    }
  }
}

TEST_CASE("construction passes through the milestone states in order") {
  for (int n = 2; n <= 9; ++n) {
    for (int m = 2; m <= n; ++m) {
      for (Direction dir : {Direction::L, Direction::R}) {
        CAPTURE(n);
        CAPTURE(m);
        const GameSpec spec(n, m);
        const auto boards = replay(spec, construct(spec, dir).steps);
        std::size_t at = 0;
        for (const Milestone& stone : milestones(spec, dir)) {
          while (at < boards.size() && boards[at] != stone.state) ++at;
          CHECK(at < boards.size());
        }
      }
    }
  }
}
