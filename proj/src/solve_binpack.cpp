#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "orbench/solve.hpp"

namespace orbench {

namespace {

using Clock = std::chrono::steady_clock;

struct Search {
  const std::vector<std::int64_t>& weights;  // descending
  std::int64_t capacity;
  std::vector<std::int64_t> residual;  // per open bin
  std::vector<int> assign;             // per item (sorted order)
  std::vector<int> best_assign;
  int best_bins;
  std::int64_t remaining;  // weight not yet placed
  std::int64_t nodes = 0;

  void dfs(std::size_t item, int open) {
    ++nodes;
    if (item == weights.size()) {
      if (open < best_bins) {
        best_bins = open;
        best_assign = assign;
      }
      return;
    }
    // Bound: already-open free space first, the rest needs fresh bins.
    std::int64_t free_space = 0;
    for (int b = 0; b < open; ++b) free_space += residual[b];
    const std::int64_t overflow = remaining - free_space;
    int lower = open;
    if (overflow > 0)
      lower += static_cast<int>((overflow + capacity - 1) / capacity);
    if (lower >= best_bins) return;

    const std::int64_t w = weights[item];
    remaining -= w;
    // Equal residuals are interchangeable; trying one of them suffices.
    std::vector<std::int64_t> tried;
    for (int b = 0; b < open; ++b) {
      if (residual[b] < w) continue;
      if (std::find(tried.begin(), tried.end(), residual[b]) != tried.end())
        continue;
      tried.push_back(residual[b]);
      residual[b] -= w;
      assign[item] = b;
      dfs(item + 1, open);
      residual[b] += w;
    }
    if (open + 1 < best_bins) {  // open a new bin
      residual[open] = capacity - w;
      assign[item] = open;
      dfs(item + 1, open + 1);
    }
    remaining += w;
  }
};

}  // namespace

SolveOutcome solve_bin_packing(const BinPackingInstance& instance) {
  const auto start = Clock::now();
  const int n = static_cast<int>(instance.weights.size());
  SolveOutcome outcome;
  if (n > kBinPackingMaxItems) {
    outcome.status = SolveStatus::size_exceeded;
    return outcome;
  }
  for (int i = 0; i < n; ++i) {
    if (instance.weights(i) > instance.bin_capacity)
      throw std::invalid_argument("item heavier than a bin");
  }

  // First-fit decreasing gives the initial incumbent.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return instance.weights(a) > instance.weights(b);
  });
  std::vector<std::int64_t> sorted_w(n);
  for (int i = 0; i < n; ++i) sorted_w[i] = instance.weights(order[i]);

  std::vector<int> ffd_assign(n);
  std::vector<std::int64_t> ffd_residual;
  for (int i = 0; i < n; ++i) {
    int placed = -1;
    for (std::size_t b = 0; b < ffd_residual.size(); ++b) {
      if (ffd_residual[b] >= sorted_w[i]) {
        placed = static_cast<int>(b);
        break;
      }
    }
    if (placed < 0) {
      placed = static_cast<int>(ffd_residual.size());
      ffd_residual.push_back(instance.bin_capacity);
    }
    ffd_residual[placed] -= sorted_w[i];
    ffd_assign[i] = placed;
  }

  Search search{sorted_w,
                instance.bin_capacity,
                std::vector<std::int64_t>(n, 0),
                std::vector<int>(n, -1),
                ffd_assign,
                static_cast<int>(ffd_residual.size()),
                std::accumulate(sorted_w.begin(), sorted_w.end(), std::int64_t(0))};
  const int lower = static_cast<int>(
      (search.remaining + instance.bin_capacity - 1) / instance.bin_capacity);
  if (search.best_bins > lower) search.dfs(0, 0);

  outcome.stats.nodes_explored = search.nodes;
  outcome.stats.elapsed = Clock::now() - start;
  outcome.status = SolveStatus::optimal;

  BinAssignment assignment;
  assignment.bin_of.resize(n);
  for (int i = 0; i < n; ++i) assignment.bin_of[order[i]] = search.best_assign[i];
  assignment.bins_used = search.best_bins;
  GroundTruth gt;
  gt.objective_value = static_cast<scalar_t>(search.best_bins);
  gt.assignment = std::move(assignment);
  gt.solver_id = "binpack_bb";
  outcome.ground_truth = std::move(gt);
  return outcome;
}

}  // namespace orbench
