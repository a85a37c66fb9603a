#include "checkers/oracle.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <tuple>

namespace checkers::oracle {

CapExceeded::CapExceeded(std::size_t cap)
    : std::runtime_error("state space exceeds the cap of " + std::to_string(cap) + " states"),
      cap_(cap) {}

std::optional<VertexId> StateGraph::find(std::string_view state) const {
  const auto it = index_.find(std::string(state));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId StateGraph::goal() const {
  const auto v = find(goal_state(spec_).str());
  if (!v) throw std::logic_error("goal state is not reachable");
  return *v;
}

StateGraph build_graph(const GameSpec& spec, std::size_t cap) {
  StateGraph graph(spec);
  auto intern = [&](const BoardState& board) -> VertexId {
    const auto [it, fresh] =
        graph.index_.try_emplace(board.str(), static_cast<VertexId>(graph.states_.size()));
    if (fresh) {
      if (graph.states_.size() >= cap) throw CapExceeded(cap);
      graph.states_.push_back(board.str());
      graph.adjacency_.push_back({-1, -1, -1, -1});
      graph.degree_.push_back(0);
    }
    return it->second;
  };

  intern(initial_state(spec));
  for (std::size_t v = 0; v < graph.states_.size(); ++v) {
    const BoardState board = BoardState::parse(graph.states_[v]);
    for (Position pos : legal_moves(board, Rules::Full)) {
      const VertexId w = intern(apply(board, pos));
      graph.adjacency_[v][graph.degree_[v]++] = w;
    }
  }
  std::size_t degree_sum = 0;
  for (std::uint8_t d : graph.degree_) degree_sum += d;
  graph.edges_ = degree_sum / 2;
  return graph;
}

std::vector<std::int64_t> distances(const StateGraph& graph, VertexId source) {
  std::vector<std::int64_t> dist(graph.size(), -1);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : graph.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::int64_t shortest_distance(const StateGraph& graph) {
  return distances(graph, graph.initial())[graph.goal()];
}

std::int64_t shortest_distance(const GameSpec& spec, std::size_t cap) {
  return shortest_distance(build_graph(spec, cap));
}

BigInt count_shortest_paths(const StateGraph& graph) {
  const std::vector<std::int64_t> dist = distances(graph, graph.initial());
  std::vector<VertexId> order(graph.size());
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = static_cast<VertexId>(v);
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return dist[a] < dist[b]; });

  std::vector<BigInt> paths(graph.size());
  paths[graph.initial()] = 1;
  for (VertexId v : order) {
    if (dist[v] <= 0) continue;
    for (VertexId u : graph.neighbors(v)) {
      if (dist[u] == dist[v] - 1) paths[v] += paths[u];
    }
  }
  return paths[graph.goal()];
}

BigInt count_shortest_paths(const GameSpec& spec, std::size_t cap) {
  return count_shortest_paths(build_graph(spec, cap));
}

ShortestPathEdges::ShortestPathEdges(const StateGraph& graph)
    : from_initial_(distances(graph, graph.initial())),
      to_goal_(distances(graph, graph.goal())),
      length_(from_initial_[graph.goal()]) {}

bool ShortestPathEdges::contains(VertexId u, VertexId v) const {
  const auto on = [&](VertexId a, VertexId b) {
    return from_initial_[a] >= 0 && to_goal_[b] >= 0 &&
           from_initial_[a] + 1 + to_goal_[b] == length_;
  };
  return on(u, v) || on(v, u);
}

namespace {

std::string quoted(const std::string& s) { return '"' + s + '"'; }

}  // namespace

std::string export_dot(const StateGraph& graph) {
  const ShortestPathEdges shortest(graph);
  const VertexId initial = graph.initial();
  const VertexId goal = graph.goal();

  std::vector<VertexId> order(graph.size());
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = static_cast<VertexId>(v);
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return graph.state(a) < graph.state(b); });

  std::ostringstream out;
  out << "graph \"checkers_" << graph.spec().n() << "_" << graph.spec().m() << "\" {\n";
  out << "  node [shape=ellipse];\n";
  for (VertexId v : order) {
    out << "  " << quoted(graph.state(v));
    if (v == initial) {
      out << " [shape=box]";
    } else if (v == goal) {
      out << " [shape=doublecircle]";
    }
    out << ";\n";
  }

  std::vector<std::tuple<std::string, std::string, bool>> edges;
  edges.reserve(graph.edge_count());
  for (VertexId u = 0; u < static_cast<VertexId>(graph.size()); ++u) {
    for (VertexId v : graph.neighbors(u)) {
      if (graph.state(u) < graph.state(v)) {
        edges.emplace_back(graph.state(u), graph.state(v), shortest.contains(u, v));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b, bold] : edges) {
    out << "  " << quoted(a) << " -- " << quoted(b);
    if (bold) out << " [style=bold]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const GameSpec& spec, std::size_t cap) {
  return export_dot(build_graph(spec, cap));
}

}  // namespace checkers::oracle
