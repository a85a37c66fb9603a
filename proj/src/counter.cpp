#include "checkers/counter.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace checkers {

BigInt fib(int k) {
  if (k < 1) throw OutOfRange("Fibonacci index must be >= 1, got " + std::to_string(k));
  BigInt prev = 0;
  BigInt cur = 1;
  for (int i = 1; i < k; ++i) {
    prev += cur;
    std::swap(prev, cur);
  }
  return cur;
}

BigInt rho(int i, int j, int n) {
  if (n < 2 || i < 0 || i > n - 2 || (j != 1 && j != 2)) {
    throw OutOfRange("rho(" + std::to_string(i) + ", " + std::to_string(j) + ") undefined for n=" +
                     std::to_string(n));
  }
  BigInt one = 1;  // rho(k, 1)
  BigInt two = 2;  // rho(k, 2)
  for (int k = n - 2; k > i; --k) {
    BigInt next_two = one + two;
    one = two;
    two = std::move(next_two);
  }
  return j == 1 ? one : two;
}

BigInt phi(const GameSpec& spec) {
  const int big = std::max(spec.n(), spec.m());
  const int small = std::min(spec.n(), spec.m());
  if (small > 1) return 2;
  return fib(big + 2);
}

namespace {

// prefix + [vacant] + (wb)^pairs + [vacant] + suffix, vacant on one side.
BoardState around_pairs(std::string prefix, int pairs, bool vacant_first,
                        const std::string& suffix) {
  std::string cells = std::move(prefix);
  if (vacant_first) cells += '.';
  for (int k = 0; k < pairs; ++k) cells += "wb";
  if (!vacant_first) cells += '.';
  cells += suffix;
  return BoardState::parse(cells);
}

bool odd(int k) { return k % 2 != 0; }

}  // namespace

std::vector<Milestone> milestones(const GameSpec& spec, Direction first_move) {
  const int n = spec.n();
  const int m = spec.m();
  if (n < m) throw InvalidSpec("milestones need n >= m");
  if (m == 1) throw OutOfRange("milestone paths are not unique when m = 1");

  // The printed forms follow the path opening with a left slide; the other
  // path has every vacancy on the opposite side of its (wb) block.
  const bool swap_side = first_move == Direction::R;
  std::vector<Milestone> out;
  out.reserve(static_cast<std::size_t>(n + m));
  for (int t = 1; t <= m; ++t) {
    out.push_back({MilestoneKind::Lambda, t,
                   around_pairs(std::string(n - t, 'b'), t, odd(t) != swap_side,
                                std::string(m - t, 'w'))});
  }
  for (int t = 1; t <= n - m; ++t) {
    out.push_back({MilestoneKind::Mu, t,
                   around_pairs(std::string(n - m - t, 'b'), m, odd(m + t) != swap_side,
                                std::string(t, 'b'))});
  }
  for (int t = 1; t <= m; ++t) {
    out.push_back({MilestoneKind::Nu, t,
                   around_pairs(std::string(t, 'w'), m - t, odd(n + t) != swap_side,
                                std::string(n - m + t, 'b'))});
  }
  return out;
}

}  // namespace checkers
