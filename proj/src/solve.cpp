#include "orbench/solve.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "orbench/lp.hpp"

namespace orbench {

namespace detail {
bool tsp_feasible(const TspInstance& instance,
                  const std::vector<AugmentedConstraint>& augs,
                  std::vector<int>* witness);
}

namespace {

using Clock = std::chrono::steady_clock;

Assignment lp_assignment(const NumericInstance& instance, const vector_t& x) {
  switch (class_of(instance)) {
    case ProblemClass::inventory: {
      const auto& v = std::get<InventoryInstance>(instance);
      const int T = v.horizon;
      InventoryPlan plan;
      plan.orders = x.segment(0, T);
      plan.stocks = x.segment(T, T);
      plan.shortages = x.segment(2 * T, T);
      return plan;
    }
    case ProblemClass::portfolio:
    case ProblemClass::production:
      return VectorAssignment{x};
    case ProblemClass::transportation: {
      const auto& t = std::get<TransportationInstance>(instance);
      const index_t n = t.supplies.size(), m = t.demands.size();
      matrix_t ship(n, m);
      for (index_t i = 0; i < n; ++i)
        for (index_t j = 0; j < m; ++j) ship(i, j) = x(i * m + j);
      return MatrixAssignment{std::move(ship)};
    }
    case ProblemClass::pollution_control: {
      const auto& p = std::get<PollutionInstance>(instance);
      const index_t n = p.emission_rates.size();
      matrix_t alloc(n, n);
      for (index_t i = 0; i < n; ++i)
        for (index_t j = 0; j < n; ++j) alloc(i, j) = x(i * n + j);
      return MatrixAssignment{std::move(alloc)};
    }
    case ProblemClass::min_cost_flow: {
      const auto& f = std::get<MinCostFlowInstance>(instance);
      const index_t n = f.supplies.size(), m = f.demands.size();
      imatrix_t flow(n, m);
      for (index_t i = 0; i < n; ++i)
        for (index_t j = 0; j < m; ++j)
          flow(i, j) = std::llround(x(i * m + j));
      return FlowMatrix{std::move(flow)};
    }
    default:
      throw std::invalid_argument("class has no LP assignment");
  }
}

}  // namespace

SolveOutcome solve_lp(const NumericInstance& instance,
                      const std::vector<AugmentedConstraint>& augs) {
  const auto t0 = Clock::now();
  LpProblem lp = compile_lp(instance, augs);
  LpSolution sol = solve_simplex(lp);
  SolveOutcome outcome;
  outcome.stats.nodes_explored = sol.iterations;
  outcome.stats.elapsed = Clock::now() - t0;
  if (sol.status == LpStatus::infeasible) {
    outcome.status = SolveStatus::infeasible;
    return outcome;
  }
  if (sol.status == LpStatus::unbounded)
    throw std::runtime_error("unbounded LP: generated instances must be bounded");
  outcome.status = SolveStatus::optimal;
  GroundTruth gt;
  gt.objective_value = sol.objective;
  gt.assignment = lp_assignment(instance, sol.x);
  gt.solver_id = "simplex_bland";
  outcome.ground_truth = std::move(gt);
  return outcome;
}

SolveOutcome solve(const NumericInstance& instance,
                   const std::vector<AugmentedConstraint>& augs) {
  switch (class_of(instance)) {
    case ProblemClass::tsp:
      return solve_tsp(std::get<TspInstance>(instance), augs);
    case ProblemClass::knapsack:
      return solve_knapsack(std::get<KnapsackInstance>(instance), augs);
    case ProblemClass::bin_packing:
      if (!augs.empty())
        throw std::invalid_argument("augmentation undefined for class");
      return solve_bin_packing(std::get<BinPackingInstance>(instance));
    case ProblemClass::job_shop:
      if (!augs.empty())
        throw std::invalid_argument("augmentation undefined for class");
      return solve_job_shop(std::get<JobShopInstance>(instance));
    case ProblemClass::min_cost_flow:
      if (!augs.empty())
        throw std::invalid_argument("augmentation undefined for class");
      return solve_min_cost_flow(std::get<MinCostFlowInstance>(instance));
    default:
      return solve_lp(instance, augs);
  }
}

FeasibilityResult check_feasible(const NumericInstance& instance,
                                 const std::vector<AugmentedConstraint>& augs) {
  FeasibilityResult res;
  switch (class_of(instance)) {
    case ProblemClass::tsp: {
      const auto& t = std::get<TspInstance>(instance);
      std::vector<int> tour;
      res.feasible = detail::tsp_feasible(t, augs, &tour);
      if (res.feasible) res.witness = TourOrder{std::move(tour)};
      return res;
    }
    case ProblemClass::knapsack: {
      // Feasible iff some case's pinned-in set fits the reduced capacity;
      // the empty selection settles the unaugmented problem.
      SolveOutcome out = solve_knapsack(std::get<KnapsackInstance>(instance), augs);
      res.feasible = out.status == SolveStatus::optimal;
      if (res.feasible) res.witness = out.ground_truth->assignment;
      return res;
    }
    case ProblemClass::bin_packing: {
      const auto& b = std::get<BinPackingInstance>(instance);
      res.feasible = (b.weights.array() <= b.bin_capacity).all();
      if (res.feasible) {
        BinAssignment each_own;
        each_own.bin_of.resize(b.weights.size());
        for (int i = 0; i < b.weights.size(); ++i) each_own.bin_of[i] = i;
        each_own.bins_used = static_cast<int>(b.weights.size());
        res.witness = std::move(each_own);
      }
      return res;
    }
    case ProblemClass::job_shop: {
      // Any serial order is a schedule.
      const auto& j = std::get<JobShopInstance>(instance);
      OperationStarts serial;
      std::int64_t t = 0;
      for (const auto& job : j.jobs) {
        std::vector<std::int64_t> starts;
        for (const auto& op : job) {
          starts.push_back(t);
          t += op.duration;
        }
        serial.starts.push_back(std::move(starts));
      }
      res.feasible = true;
      res.witness = std::move(serial);
      return res;
    }
    case ProblemClass::min_cost_flow: {
      SolveOutcome out =
          solve_min_cost_flow(std::get<MinCostFlowInstance>(instance));
      res.feasible = out.status == SolveStatus::optimal;
      if (res.feasible) res.witness = out.ground_truth->assignment;
      return res;
    }
    default: {
      // LP classes: phase-1 simplex on the compiled rows.
      LpSolution sol = solve_simplex(compile_lp(instance, augs));
      res.feasible = sol.status != LpStatus::infeasible;
      if (sol.status == LpStatus::optimal)
        res.witness = lp_assignment(instance, sol.x);
      return res;
    }
  }
}

}  // namespace orbench
