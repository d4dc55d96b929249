#include "hanoifib/state_graph.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <deque>
#include <limits>
#include <numeric>
#include <set>

#include "hanoifib/error.hpp"
#include "hanoifib/numeration.hpp"
#include "hanoifib/solver.hpp"

namespace hanoifib {

namespace {

std::uint64_t power_of_three(int n, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (int i = 0; i < n; ++i) {
    if (v > cap / 3 + 1) return std::numeric_limits<std::uint64_t>::max();
    v *= 3;
  }
  return v;
}

constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

}  // namespace

StateGraph build_graph(int n, const RuleSet& rules, std::uint64_t vertex_cap) {
  if (n < 0) fail(Errc::kDomain, "disk count must be nonnegative");
  const std::uint64_t count = power_of_three(n, vertex_cap);
  if (count > vertex_cap || count > kUnseen) {
    fail(Errc::kResource, "3^" + std::to_string(n) + " states exceed the cap of " + std::to_string(vertex_cap));
  }
  StateGraph g;
  g.n_ = n;
  g.rules_ = rules;
  g.offsets_.reserve(count + 1);
  for (std::uint64_t code = 0; code < count; ++code) {
    const State s = State::from_code(n, code);
    for (const Move& m : legal_moves(s, rules)) {
      g.edges_.push_back({static_cast<std::uint32_t>(apply_move(s, m, rules).code()), m});
    }
    g.offsets_.push_back(g.edges_.size());
  }
  return g;
}

// Iterative Tarjan.
Connectivity is_strongly_connected(const StateGraph& graph) {
  const auto n = static_cast<std::uint32_t>(graph.vertex_count());
  std::vector<std::uint32_t> index(n, kUnseen), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, std::size_t>> call;
  std::uint32_t next_index = 0;
  std::size_t components = 0;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnseen) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      const auto out = graph.out_edges(v);
      if (pos < out.size()) {
        const std::uint32_t w = out[pos++].target;
        if (index[w] == kUnseen) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::uint32_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        ++components;
        std::uint32_t w = kUnseen;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
        } while (w != done);
      }
    }
  }
  return {components == 1, components};
}

bool is_weakly_connected(const StateGraph& graph) {
  const auto n = graph.vertex_count();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t sets = n;
  for (std::uint32_t v = 0; v < n; ++v) {
    for (const Edge& e : graph.out_edges(v)) {
      const auto a = find(v);
      const auto b = find(e.target);
      if (a != b) {
        parent[a] = b;
        --sets;
      }
    }
  }
  return sets == 1;
}

ShortestPath shortest_path(const StateGraph& graph, const State& from, const State& to) {
  if (from.disks() != graph.disks() || to.disks() != graph.disks()) {
    fail(Errc::kInvalidState, "endpoint disk count does not match the graph");
  }
  const auto n = graph.vertex_count();
  const auto source = static_cast<std::uint32_t>(from.code());
  const auto target = static_cast<std::uint32_t>(to.code());
  std::vector<std::uint32_t> dist(n, kUnseen), pred(n, kUnseen);
  std::vector<BigInt> count(n);
  std::deque<std::uint32_t> queue{source};
  dist[source] = 0;
  count[source] = 1;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    if (dist[target] != kUnseen && dist[u] >= dist[target]) break;
    for (const Edge& e : graph.out_edges(u)) {
      const auto v = e.target;
      if (dist[v] == kUnseen) {
        dist[v] = dist[u] + 1;
        count[v] = count[u];
        pred[v] = u;
        queue.push_back(v);
      } else if (dist[v] == dist[u] + 1) {
        count[v] += count[u];
        pred[v] = std::min(pred[v], u);
      }
    }
  }

  ShortestPath result;
  if (dist[target] == kUnseen) return result;
  result.distance = dist[target];
  result.count = count[target];
  std::vector<std::uint32_t> chain{target};
  while (chain.back() != source) chain.push_back(pred[chain.back()]);
  std::reverse(chain.begin(), chain.end());
  result.states.push_back(from);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    for (const Edge& e : graph.out_edges(chain[i - 1])) {
      if (e.target == chain[i]) {
        result.moves.push_back(e.move);
        break;
      }
    }
    result.states.push_back(graph.vertex(chain[i]));
  }
  return result;
}

bool k33_minor_f2(const RuleSet& rules) {
  const StateGraph g = build_graph(2, rules);
  auto code = [](std::string_view s) { return static_cast<std::uint32_t>(parse_state(s).code()); };
  // Each state maps to its class id after contraction.
  std::vector<int> cls(g.vertex_count(), -1);
  const std::array<std::array<std::string_view, 2>, 3> merged{{
      {"(-,1,2)", "(-,2,1)"},
      {"(1,-,2)", "(2,-,1)"},
      {"(1,2,-)", "(2,1,-)"},
  }};
  for (int i = 0; i < 3; ++i) {
    for (auto s : merged[i]) cls[code(s)] = i;
  }
  const std::array<std::string_view, 3> towers{"(12,-,-)", "(-,12,-)", "(-,-,12)"};
  for (int i = 0; i < 3; ++i) cls[code(towers[i])] = 3 + i;

  std::set<std::pair<int, int>> adjacent;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    for (const Edge& e : g.out_edges(v)) {
      const int a = cls[v];
      const int b = cls[e.target];
      if (a != b) adjacent.insert(std::minmax(a, b));
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 3; j < 6; ++j) {
      if (!adjacent.count({i, j})) return false;
    }
  }
  return true;
}

EmbedCoord embed(const State& state) {
  static constexpr std::array<EmbedCoord, 3> kCorner{{{0, 0}, {2, 0}, {1, 1}}};
  // relabel[p] is the corner that actual peg p plays at the current level.
  std::array<int, 3> relabel{0, 1, 2};
  EmbedCoord pos;
  for (int k = state.disks(); k >= 1; --k) {
    const int label = relabel[index_of(state.location(k))];
    const std::int64_t scale = std::int64_t{1} << (k - 1);
    pos.x += scale * kCorner[label].x;
    pos.y += scale * kCorner[label].y;
    // The sub-triangle swaps the two corners other than `label`.
    for (int& l : relabel) {
      if (l != label) l = 3 - label - l;
    }
  }
  return pos;
}

bool is_pseudo_edge_origin(const State& state, int k) {
  if (k < 2 || k > state.disks()) return false;
  const RuleSet classical = RuleSet::classical();
  for (Peg to : kPegs) {
    if (find_move(state, classical, k, to)) return true;
  }
  return false;
}

State pseudo_edge_target(const State& origin, int k) {
  if (!is_pseudo_edge_origin(origin, k)) {
    fail(Errc::kDomain, to_string(origin) + " is not the origin of a " + std::to_string(k) + "-pseudo-edge");
  }
  const RuleSet classical = RuleSet::classical();
  std::optional<Move> first;
  for (Peg to : kPegs) {
    if (auto m = find_move(origin, classical, k, to)) first = m;
  }
  State here = apply_move(origin, *first, classical);
  const EmbedCoord a = embed(origin);
  const EmbedCoord b = embed(here);
  const std::int64_t dx = b.x - a.x;
  const std::int64_t dy = b.y - a.y;

  const std::uint64_t steps = (std::uint64_t{1} << (k - 2)) + 1;
  for (std::uint64_t step = 1; step < steps; ++step) {
    const EmbedCoord p = embed(here);
    std::optional<State> next;
    int found = 0;
    for (const Move& m : legal_moves(here, classical)) {
      State cand = apply_move(here, m, classical);
      const EmbedCoord c = embed(cand);
      const std::int64_t ex = c.x - p.x;
      const std::int64_t ey = c.y - p.y;
      // Collinear and same orientation, with y scaled by sqrt(3).
      if (ex * dy - ey * dx == 0 && ex * dx + 3 * ey * dy > 0) {
        ++found;
        next = std::move(cand);
      }
    }
    if (found != 1) {
      fail(Errc::kInternal, "pseudo-edge from " + to_string(origin) + " has " + std::to_string(found) +
                                " straight continuations at " + to_string(here));
    }
    here = *next;
  }
  return here;
}

std::string export_dot(const StateGraph& graph, bool with_coords) {
  auto label = [](const State& s) {
    std::string out = to_string(s);
    out = out.substr(1, out.size() - 2);
    std::replace(out.begin(), out.end(), ',', '|');
    return out;
  };
  std::string out = "digraph hanoi {\n";
  out += "  graph [n=" + std::to_string(graph.disks()) + ", rules=\"" + describe(graph.rules()) + "\"];\n";
  char buf[96];
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
    const State s = graph.vertex(v);
    out += "  s" + std::to_string(v) + " [label=\"" + label(s) + "\"";
    if (with_coords) {
      // Unit-side triangle: x/2 and y*sqrt(3)/2.
      const EmbedCoord c = embed(s);
      std::snprintf(buf, sizeof buf, ", pos=\"%.4f,%.4f!\"", static_cast<double>(c.x) / 2.0,
                    static_cast<double>(c.y) * 0.8660254037844386);
      out += buf;
    }
    out += "];\n";
  }
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
    for (const Edge& e : graph.out_edges(v)) {
      out += "  s" + std::to_string(v) + " -> s" + std::to_string(e.target) + " [label=\"" +
             kind_name(e.move.kind) + " " + std::to_string(e.move.disk) + "\", kind=\"" +
             kind_name(e.move.kind) + "\", k=" + std::to_string(e.move.disk) + "];\n";
    }
  }
  out += "}\n";
  return out;
}

PowerIdentity check_power_identity(int n) {
  if (n < 0) fail(Errc::kDomain, "n must be nonnegative");
  PowerIdentity r;
  r.power = BigInt(1) << n;

  r.fibonacci_side = fib_exact(n + 2);
  for (int k = 0; k <= n - 2; ++k) r.fibonacci_side += (BigInt(1) << k) * fib_exact(n - 1 - k);

  // Each k-move of the variant puzzle is a straight run of classical moves:
  // one move for d_1, 2^(k-2)+1 moves for k >= 2. Small n take the per-disk
  // counts from an actual solution, larger n from F_{n+1-k}.
  std::vector<BigInt> per_disk(n + 1);
  if (n <= 20) {
    const auto counted = moves_per_disk(solve_recursive(n, RuleSet::fibonacci(Style::kVariant)));
    for (int k = 1; k <= n; ++k) per_disk[k] = counted[k];
  } else {
    for (int k = 1; k <= n; ++k) per_disk[k] = fib_exact(n + 1 - k);
  }
  r.combinatorial = 1;
  for (int k = 1; k <= n; ++k) {
    const BigInt jump = k == 1 ? BigInt(1) : (BigInt(1) << (k - 2)) + 1;
    r.combinatorial += per_disk[k] * jump;
  }
  r.holds = r.power == r.fibonacci_side && r.power == r.combinatorial;
  return r;
}

}  // namespace hanoifib
