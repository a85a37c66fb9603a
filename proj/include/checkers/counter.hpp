#pragma once

#include <vector>

#include "checkers/bigint.hpp"
#include "checkers/board.hpp"

namespace checkers {

// Fibonacci number with F(1) = F(2) = 1. Throws OutOfRange for k < 1.
BigInt fib(int k);

// Shortest-path counts through the forced two-state ladder of the m = 1
// game: rho(i, 1) = rho(i+1, 2), rho(i, 2) = rho(i+1, 1) + rho(i+1, 2),
// with rho(n-2, 1) = 1 and rho(n-2, 2) = 2. Needs 0 <= i <= n-2, j in {1, 2}.
BigInt rho(int i, int j, int n);

// Number of optimal solutions: 2 when min(n, m) > 1, F(max(n, m) + 2) when
// min(n, m) = 1.
BigInt phi(const GameSpec& spec);

enum class MilestoneKind { Lambda, Mu, Nu };

struct Milestone {
  MilestoneKind kind;
  int index;  // 1-based within its kind
  BoardState state;
};

// Forced intermediate states of the optimal path whose first move has the
// given direction: lambda_1..lambda_m, mu_1..mu_{n-m}, nu_1..nu_m, in path
// order. Requires n >= m > 1 (OutOfRange for m = 1, InvalidSpec for n < m).
std::vector<Milestone> milestones(const GameSpec& spec, Direction first_move);

}  // namespace checkers
