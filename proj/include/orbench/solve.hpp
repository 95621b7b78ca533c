#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "orbench/ground_truth.hpp"
#include "orbench/instance.hpp"
#include "orbench/perturbation_spec.hpp"

namespace orbench {

// Exactness caps: beyond these sizes the oracles refuse rather than
// approximate, since ground truth must stay exact.
inline constexpr int kTspMaxCities = 18;
inline constexpr int kBinPackingMaxItems = 20;
inline constexpr int kJobShopMaxOperations = 12;

enum class SolveStatus { optimal, infeasible, size_exceeded };

struct SolveStats {
  std::int64_t nodes_explored = 0;
  std::chrono::duration<double> elapsed{0};
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::infeasible;
  std::optional<GroundTruth> ground_truth;  // present iff optimal
  SolveStats stats;
};

/// Held-Karp subset DP; forbidden edges get infinite weight, forced edges
/// (from exactly-one-of case splits) are realized by chain contraction.
SolveOutcome solve_tsp(const TspInstance& instance,
                       const std::vector<AugmentedConstraint>& augs = {});

/// O(nW) value-maximizing DP; augmentations handled by case expansion over
/// forced-in / removed items and capacity deltas.
SolveOutcome solve_knapsack(const KnapsackInstance& instance,
                            const std::vector<AugmentedConstraint>& augs = {});

/// Branch and bound with open-bin symmetry breaking and the ceil(sum/C)
/// bound.
SolveOutcome solve_bin_packing(const BinPackingInstance& instance);

/// Depth-first branch and bound over ready operations (semi-active
/// schedules), bounding by machine and job heads.
SolveOutcome solve_job_shop(const JobShopInstance& instance);

/// Successive shortest augmenting paths with node potentials; integral.
SolveOutcome solve_min_cost_flow(const MinCostFlowInstance& instance);

/// Simplex on the compiled rows; LP classes only.
SolveOutcome solve_lp(const NumericInstance& instance,
                      const std::vector<AugmentedConstraint>& augs = {});

/// Dispatch on the instance class.
SolveOutcome solve(const NumericInstance& instance,
                   const std::vector<AugmentedConstraint>& augs = {});

struct FeasibilityResult {
  bool feasible = false;
  std::optional<Assignment> witness;
};

/// Cheap feasibility oracle used by the generator's resample loop: phase-1
/// simplex for LP classes, constructive checks for the MIP classes.
FeasibilityResult check_feasible(
    const NumericInstance& instance,
    const std::vector<AugmentedConstraint>& augs = {});

}  // namespace orbench
