#include <chrono>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "orbench/solve.hpp"

namespace orbench {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

struct Arc {
  int to;
  std::int64_t cap;
  std::int64_t cost;
  int rev;  // index of the reverse arc in graph[to]
};

struct Network {
  std::vector<std::vector<Arc>> graph;

  explicit Network(int nodes) : graph(nodes) {}

  void add_arc(int from, int to, std::int64_t cap, std::int64_t cost) {
    graph[from].push_back({to, cap, cost, static_cast<int>(graph[to].size())});
    graph[to].push_back({from, 0, -cost, static_cast<int>(graph[from].size()) - 1});
  }
};

}  // namespace

SolveOutcome solve_min_cost_flow(const MinCostFlowInstance& instance) {
  const auto t0 = Clock::now();
  const int n = static_cast<int>(instance.supplies.size());
  const int m = static_cast<int>(instance.demands.size());
  if (instance.supplies.sum() != instance.demands.sum())
    throw std::invalid_argument("supply/demand imbalance");

  // Node layout: source, warehouses, stores, sink.
  const int source = 0, sink = 1 + n + m;
  Network net(n + m + 2);
  for (int i = 0; i < n; ++i)
    net.add_arc(source, 1 + i, instance.supplies(i), 0);
  std::vector<std::vector<int>> arc_index(n, std::vector<int>(m));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      arc_index[i][j] = static_cast<int>(net.graph[1 + i].size());
      net.add_arc(1 + i, 1 + n + j, instance.capacities(i, j),
                  instance.costs(i, j));
    }
  }
  for (int j = 0; j < m; ++j)
    net.add_arc(1 + n + j, sink, instance.demands(j), 0);

  const std::int64_t target = instance.demands.sum();
  std::int64_t flow = 0, cost = 0;
  const int nodes = n + m + 2;
  std::vector<std::int64_t> potential(nodes, 0);  // costs >= 0, so valid
  SolveOutcome outcome;

  while (flow < target) {
    // Dijkstra on reduced costs.
    std::vector<std::int64_t> dist(nodes, kInf);
    std::vector<int> prev_node(nodes, -1), prev_arc(nodes, -1);
    using Item = std::pair<std::int64_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[source] = 0;
    queue.push({0, source});
    while (!queue.empty()) {
      auto [d, u] = queue.top();
      queue.pop();
      if (d > dist[u]) continue;
      ++outcome.stats.nodes_explored;
      for (std::size_t k = 0; k < net.graph[u].size(); ++k) {
        const Arc& a = net.graph[u][k];
        if (a.cap <= 0) continue;
        const std::int64_t nd = d + a.cost + potential[u] - potential[a.to];
        if (nd < dist[a.to]) {
          dist[a.to] = nd;
          prev_node[a.to] = u;
          prev_arc[a.to] = static_cast<int>(k);
          queue.push({nd, a.to});
        }
      }
    }
    if (dist[sink] >= kInf) {
      outcome.status = SolveStatus::infeasible;
      outcome.stats.elapsed = Clock::now() - t0;
      return outcome;
    }
    for (int v = 0; v < nodes; ++v) {
      if (dist[v] < kInf) potential[v] += dist[v];
    }
    std::int64_t push = target - flow;
    for (int v = sink; v != source; v = prev_node[v])
      push = std::min(push, net.graph[prev_node[v]][prev_arc[v]].cap);
    for (int v = sink; v != source; v = prev_node[v]) {
      Arc& a = net.graph[prev_node[v]][prev_arc[v]];
      a.cap -= push;
      net.graph[v][a.rev].cap += push;
      cost += push * a.cost;
    }
    flow += push;
  }

  imatrix_t flow_matrix(n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      const Arc& a = net.graph[1 + i][arc_index[i][j]];
      flow_matrix(i, j) = instance.capacities(i, j) - a.cap;
    }
  }

  outcome.status = SolveStatus::optimal;
  outcome.stats.elapsed = Clock::now() - t0;
  GroundTruth gt;
  gt.objective_value = static_cast<scalar_t>(cost);
  gt.assignment = FlowMatrix{std::move(flow_matrix)};
  gt.solver_id = "ssp_flow";
  outcome.ground_truth = std::move(gt);
  return outcome;
}

}  // namespace orbench
