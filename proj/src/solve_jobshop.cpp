#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <vector>

#include "orbench/solve.hpp"

namespace orbench {

namespace {

using Clock = std::chrono::steady_clock;

struct Search {
  const JobShopInstance& inst;
  std::vector<std::size_t> next_op;          // per job
  std::vector<std::int64_t> job_ready;       // per job
  std::vector<std::int64_t> machine_ready;   // per machine
  std::vector<std::int64_t> job_rem;         // remaining work per job
  std::vector<std::int64_t> machine_rem;     // remaining work per machine
  std::vector<std::vector<std::int64_t>> starts;
  std::vector<std::vector<std::int64_t>> best_starts;
  std::int64_t best_makespan;
  std::int64_t nodes = 0;

  std::int64_t lower_bound(std::int64_t current) const {
    std::int64_t lb = current;
    for (std::size_t j = 0; j < inst.jobs.size(); ++j)
      lb = std::max(lb, job_ready[j] + job_rem[j]);
    for (int m = 0; m < inst.n_machines; ++m) {
      if (machine_rem[m] > 0)
        lb = std::max(lb, machine_ready[m] + machine_rem[m]);
    }
    return lb;
  }

  // Enumerates semi-active schedules: every ready operation may go next at
  // its earliest start.  The optimum is semi-active, so this is exact.
  void dfs(std::size_t scheduled, std::int64_t current) {
    ++nodes;
    const std::size_t total = starts_total();
    if (scheduled == total) {
      if (current < best_makespan) {
        best_makespan = current;
        best_starts = starts;
      }
      return;
    }
    if (lower_bound(current) >= best_makespan) return;
    for (std::size_t j = 0; j < inst.jobs.size(); ++j) {
      if (next_op[j] >= inst.jobs[j].size()) continue;
      const auto& op = inst.jobs[j][next_op[j]];
      const std::int64_t begin =
          std::max(job_ready[j], machine_ready[op.machine]);
      const std::int64_t end = begin + op.duration;

      const std::int64_t prev_job_ready = job_ready[j];
      const std::int64_t prev_machine_ready = machine_ready[op.machine];
      starts[j][next_op[j]] = begin;
      job_ready[j] = end;
      machine_ready[op.machine] = end;
      job_rem[j] -= op.duration;
      machine_rem[op.machine] -= op.duration;
      ++next_op[j];

      dfs(scheduled + 1, std::max(current, end));

      --next_op[j];
      job_ready[j] = prev_job_ready;
      machine_ready[op.machine] = prev_machine_ready;
      job_rem[j] += op.duration;
      machine_rem[op.machine] += op.duration;
    }
  }

  std::size_t starts_total() const {
    std::size_t n = 0;
    for (const auto& job : inst.jobs) n += job.size();
    return n;
  }
};

}  // namespace

SolveOutcome solve_job_shop(const JobShopInstance& instance) {
  const auto start = Clock::now();
  SolveOutcome outcome;
  std::size_t total_ops = 0;
  for (const auto& job : instance.jobs) total_ops += job.size();
  if (total_ops > static_cast<std::size_t>(kJobShopMaxOperations)) {
    outcome.status = SolveStatus::size_exceeded;
    return outcome;
  }
  if (instance.jobs.empty() || instance.n_machines <= 0)
    throw std::invalid_argument("empty job shop instance");

  Search search{instance,
                std::vector<std::size_t>(instance.jobs.size(), 0),
                std::vector<std::int64_t>(instance.jobs.size(), 0),
                std::vector<std::int64_t>(instance.n_machines, 0),
                std::vector<std::int64_t>(instance.jobs.size(), 0),
                std::vector<std::int64_t>(instance.n_machines, 0),
                {},
                {},
                0};
  for (std::size_t j = 0; j < instance.jobs.size(); ++j) {
    search.starts.emplace_back(instance.jobs[j].size(), 0);
    for (const auto& op : instance.jobs[j]) {
      search.job_rem[j] += op.duration;
      search.machine_rem[op.machine] += op.duration;
      search.best_makespan += op.duration;  // serial schedule upper bound
    }
  }
  search.best_makespan += 1;
  search.best_starts = search.starts;
  search.dfs(0, 0);

  outcome.stats.nodes_explored = search.nodes;
  outcome.stats.elapsed = Clock::now() - start;
  outcome.status = SolveStatus::optimal;
  GroundTruth gt;
  gt.objective_value = static_cast<scalar_t>(search.best_makespan);
  gt.assignment = OperationStarts{std::move(search.best_starts)};
  gt.solver_id = "jobshop_bb";
  outcome.ground_truth = std::move(gt);
  return outcome;
}

}  // namespace orbench
