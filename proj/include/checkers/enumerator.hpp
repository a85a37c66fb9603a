#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "checkers/board.hpp"

namespace checkers {

// Depth-bounded backtracking over the four optimal move classes. Candidates
// are tried in a fixed order: jump from the left (vacant-2), jump from the
// right (vacant+2), slide from the left, slide from the right.
//
// visit() sees each complete optimal solution's steps and returns false to
// stop the search. Returns the number of solutions visited.
std::size_t for_each_optimal(const GameSpec& spec,
                             const std::function<bool(std::span<const Position>)>& visit);

struct Enumeration {
  std::vector<Solution> solutions;
  bool truncated = false;  // stopped at the limit with solutions possibly left
};

Enumeration enumerate(const GameSpec& spec, std::optional<std::size_t> limit = std::nullopt);

}  // namespace checkers
