#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "checkers/bigint.hpp"
#include "checkers/board.hpp"

// Brute-force ground truth over the full state space. Uses only the board
// primitives, never the construction, formulas, enumeration or counting code.
namespace checkers::oracle {

inline constexpr std::size_t kDefaultCap = 2'000'000;

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::size_t cap);
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

using VertexId = std::int32_t;

// Undirected graph of the states reachable from the initial state under the
// full move rules. Vertex 0 is the initial state.
class StateGraph {
 public:
  const GameSpec& spec() const noexcept { return spec_; }
  std::size_t size() const noexcept { return states_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }

  const std::string& state(VertexId v) const { return states_[v]; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return std::span<const VertexId>(adjacency_[v].data(), degree_[v]);
  }
  std::optional<VertexId> find(std::string_view state) const;

  VertexId initial() const noexcept { return 0; }
  // Throws std::logic_error if the goal is unreachable.
  VertexId goal() const;

  friend StateGraph build_graph(const GameSpec& spec, std::size_t cap);

 private:
  explicit StateGraph(const GameSpec& spec) : spec_(spec) {}

  GameSpec spec_;
  std::vector<std::string> states_;
  std::vector<std::array<VertexId, 4>> adjacency_;
  std::vector<std::uint8_t> degree_;
  std::unordered_map<std::string, VertexId> index_;
  std::size_t edges_ = 0;
};

// Throws CapExceeded once more than `cap` states have been discovered.
StateGraph build_graph(const GameSpec& spec, std::size_t cap = kDefaultCap);

// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<std::int64_t> distances(const StateGraph& graph, VertexId source);

std::int64_t shortest_distance(const StateGraph& graph);
std::int64_t shortest_distance(const GameSpec& spec, std::size_t cap = kDefaultCap);

// Layered-BFS path counting: each vertex sums the counts of its neighbors one
// layer closer to the initial state.
BigInt count_shortest_paths(const StateGraph& graph);
BigInt count_shortest_paths(const GameSpec& spec, std::size_t cap = kDefaultCap);

// True when the edge {u, v}, in either orientation, lies on some shortest
// initial-to-goal path.
class ShortestPathEdges {
 public:
  explicit ShortestPathEdges(const StateGraph& graph);
  bool contains(VertexId u, VertexId v) const;
  std::int64_t length() const noexcept { return length_; }

 private:
  std::vector<std::int64_t> from_initial_;
  std::vector<std::int64_t> to_goal_;
  std::int64_t length_;
};

// Undirected DOT text. Nodes sorted by state string; the initial state is a
// box, the goal a doublecircle, and edges on a shortest path are bold.
std::string export_dot(const StateGraph& graph);
std::string export_dot(const GameSpec& spec, std::size_t cap = kDefaultCap);

}  // namespace checkers::oracle
