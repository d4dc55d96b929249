#pragma once

// The directed graph of all 3^n regular states under a rule set, with the
// queries used to check its structure: strong connectivity, BFS shortest
// paths with exact path counts, the K3,3 contraction on two disks, the
// Sierpinski-style embedding and its straight-line pseudo-edges.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hanoifib/bigint.hpp"
#include "hanoifib/core_state.hpp"

namespace hanoifib {

/// Default cap on the number of vertices build_graph will enumerate (3^10).
inline constexpr std::uint64_t kDefaultVertexCap = 59049;

struct Edge {
  std::uint32_t target = 0;
  Move move;
};

/// Vertices are the ternary state codes 0..3^n-1 (disk 1 least significant);
/// out-edges of each vertex follow legal_moves order.
class StateGraph {
 public:
  int disks() const { return n_; }
  const RuleSet& rules() const { return rules_; }
  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }
  State vertex(std::uint32_t code) const { return State::from_code(n_, code); }
  std::span<const Edge> out_edges(std::uint32_t v) const {
    return {edges_.data() + offsets_[v], edges_.data() + offsets_[v + 1]};
  }

 private:
  friend StateGraph build_graph(int n, const RuleSet& rules, std::uint64_t vertex_cap);

  int n_ = 0;
  RuleSet rules_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Edge> edges_;
};

/// Throws Error(kResource) when 3^n exceeds vertex_cap.
StateGraph build_graph(int n, const RuleSet& rules, std::uint64_t vertex_cap = kDefaultVertexCap);

struct Connectivity {
  bool strongly_connected = false;
  std::size_t components = 0;
};

Connectivity is_strongly_connected(const StateGraph& graph);

/// Connectivity of the graph with edge directions ignored.
bool is_weakly_connected(const StateGraph& graph);

struct ShortestPath {
  /// Empty when the target is unreachable.
  std::optional<std::uint64_t> distance;
  BigInt count;
  std::vector<Move> moves;
  std::vector<State> states;
};

/// BFS distance, number of shortest paths and the witness obtained by always
/// stepping back to the lowest-coded predecessor.
ShortestPath shortest_path(const StateGraph& graph, const State& from, const State& to);

/// Contracts the three vertex pairs {(-,1,2),(-,2,1)}, {(1,-,2),(2,-,1)},
/// {(1,2,-),(2,1,-)} of the undirected two-disk graph and reports whether every
/// merged vertex is adjacent to all three towers, i.e. whether K3,3 appears.
bool k33_minor_f2(const RuleSet& rules);

/// Integer lattice point; y counts units of sqrt(3) so the corners of the
/// unit triangle are A=(0,0), B=(2,0), C=(1,1).
struct EmbedCoord {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(EmbedCoord, EmbedCoord) = default;
};

EmbedCoord embed(const State& state);

/// True iff k >= 2 and the classical move of disk k is legal at `state`
/// (which is exactly when a k-Fibonacci move is).
bool is_pseudo_edge_origin(const State& state, int k);

/// Follows the classical edge of disk k out of `origin` and then continues in
/// a straight line through the embedding for 2^(k-2)+1 steps in total.
State pseudo_edge_target(const State& origin, int k);

std::string export_dot(const StateGraph& graph, bool with_coords);

/// Both sides of 2^n = F_{n+2} + sum_{k=0}^{n-2} 2^k F_{n-1-k}, plus 2^n
/// recomputed as 1 + sum over disks of (k-move count) x (classical path length
/// realising one k-move).
struct PowerIdentity {
  BigInt power;
  BigInt fibonacci_side;
  BigInt combinatorial;
  bool holds = false;
};

PowerIdentity check_power_identity(int n);

}  // namespace hanoifib
