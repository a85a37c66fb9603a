#include <doctest.h>

#include <cmath>
#include <map>

#include "checkers/constructor.hpp"
#include "checkers/counter.hpp"
#include "checkers/enumerator.hpp"

using namespace checkers;

namespace {

// a + b*sqrt(5) with exact integer parts.
struct Root5 {
  BigInt a;
  BigInt b;
  Root5 operator*(const Root5& o) const { return {a * o.a + 5 * b * o.b, a * o.b + b * o.a}; }
};

// Binet numerator: (1+sqrt5)^k - (1-sqrt5)^k = 2 b_k sqrt5, so F_k = b_k / 2^(k-1).
BigInt binet_scaled(int k) {
  Root5 p{1, 0};
  for (int i = 0; i < k; ++i) p = p * Root5{1, 1};
  return p.b;
}

}  // namespace

TEST_CASE("fib examples") {
  CHECK(fib(1) == 1);
  CHECK(fib(2) == 1);
  CHECK(fib(7) == 13);
  CHECK(fib(90) == BigInt("2880067194370816120"));
  CHECK(fib(94) == BigInt("19740274219868223167"));
  CHECK_THROWS_AS(fib(0), OutOfRange);
  for (int k = 3; k <= 300; ++k) REQUIRE(fib(k) == fib(k - 1) + fib(k - 2));
}

TEST_CASE("fib agrees with Binet") {
  for (int k = 1; k <= 200; ++k) {
    CAPTURE(k);
    REQUIRE(binet_scaled(k) == fib(k) * (BigInt(1) << (k - 1)));
  }
  const double phi_golden = (1.0 + std::sqrt(5.0)) / 2.0;
  for (int k = 1; k <= 70; ++k) {
    const double approx = std::round(std::pow(phi_golden, k) / std::sqrt(5.0));
    const double exact = fib(k).convert_to<double>();
    CHECK(std::fabs(approx - exact) <= 1e-12 * exact + 0.5);
  }
}

TEST_CASE("rho") {
  CHECK(rho(3, 1, 5) == 1);
  CHECK(rho(3, 2, 5) == 2);
  CHECK(rho(0, 2, 5) == 8);
  CHECK_THROWS_AS(rho(4, 1, 5), OutOfRange);
  CHECK_THROWS_AS(rho(-1, 1, 5), OutOfRange);
  CHECK_THROWS_AS(rho(0, 3, 5), OutOfRange);
  CHECK_THROWS_AS(rho(0, 1, 1), OutOfRange);
  for (int n = 2; n <= 30; ++n) {
    for (int i = 0; i <= n - 2; ++i) {
      REQUIRE(rho(i, 2, n) == fib(n - i + 1));
      REQUIRE(rho(i, 1, n) == fib(n - i));
      if (i < n - 2) {
        REQUIRE(rho(i, 1, n) == rho(i + 1, 2, n));
        REQUIRE(rho(i, 2, n) == rho(i + 1, 1, n) + rho(i + 1, 2, n));
      }
    }
  }
}

TEST_CASE("phi examples and symmetry") {
  CHECK(phi(GameSpec(1, 1)) == 2);
  CHECK(phi(GameSpec(5, 3)) == 2);
  CHECK(phi(GameSpec(2, 1)) == 3);
  CHECK(phi(GameSpec(4, 1)) == 8);
  CHECK(phi(GameSpec(1, 100)) == fib(102));
  for (int n = 1; n <= 30; ++n) {
    for (int m = 1; m <= 30; ++m) CHECK(phi(GameSpec(n, m)) == phi(GameSpec(m, n)));
  }
  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; m + n <= 9; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(phi(GameSpec(n, m)) == enumerate(GameSpec(n, m)).solutions.size());
    }
  }
}

TEST_CASE("milestone examples") {
  const auto left = milestones(GameSpec(2, 2), Direction::L);
  REQUIRE(left.size() == 4);  // lambda 1..2, nu 1..2
  CHECK(left[0].kind == MilestoneKind::Lambda);
  CHECK(left[0].index == 1);
  CHECK(left[0].state.str() == "b.wbw");
  CHECK(replay(GameSpec(2, 2), construct(GameSpec(2, 2), Direction::L).steps)[2] == left[0].state);
  CHECK(left.back().kind == MilestoneKind::Nu);
  CHECK(left.back().state == goal_state(GameSpec(2, 2)));

  const auto wide = milestones(GameSpec(3, 2), Direction::L);
  REQUIRE(wide.size() == 5);
  CHECK(wide[2].kind == MilestoneKind::Mu);
  CHECK(wide[2].index == 1);
  CHECK(wide[2].state.str() == ".wbwbb");
  CHECK(milestones(GameSpec(3, 2), Direction::R)[2].state.str() == "wbwb.b");

  CHECK_THROWS_AS(milestones(GameSpec(3, 1), Direction::L), OutOfRange);
  CHECK_THROWS_AS(milestones(GameSpec(2, 3), Direction::L), InvalidSpec);
}

TEST_CASE("every optimal solution passes its milestones in order") {
  for (int n = 2; n <= 7; ++n) {
    for (int m = 2; m <= n && n + m <= 12; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      const GameSpec spec(n, m);
      for (const Solution& sol : enumerate(spec).solutions) {
        const auto boards = replay(spec, sol.steps);
        const auto stones = milestones(spec, direction_from_sign(sol.d));
        CHECK(stones.size() == static_cast<std::size_t>(n + m));
        std::map<MilestoneKind, int> last;
        std::size_t at = 0;
        for (const Milestone& stone : stones) {
          CHECK(stone.index == ++last[stone.kind]);
          while (at < boards.size() && boards[at] != stone.state) ++at;
          CHECK(at < boards.size());
        }
      }
    }
  }
}
