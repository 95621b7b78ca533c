#pragma once

#include <variant>

#include "orbench/problem_class.hpp"

namespace orbench {

// Per-class scale knobs.  Counts are strictly positive; capacity_ratio is a
// fraction in (0,1).
struct TspParams {
  int n_cities = 4;
};
struct KnapsackParams {
  int n_items = 5;
  double capacity_ratio = 0.5;
};
struct BinPackingParams {
  int n_items = 6;
};
struct JobShopParams {
  int n_jobs = 2;
  int n_machines = 2;
};
struct MinCostFlowParams {
  int n = 2;  // warehouses == stores == n
};
struct InventoryParams {
  int horizon = 5;
};
struct PortfolioParams {
  int n_assets = 3;
};
struct ProductionParams {
  int n_products = 2;  // operations == products
};
struct TransportationParams {
  int n = 2;  // production sites == destinations == n
};
struct PollutionParams {
  int n = 2;  // emission sources == control methods == n
};

using DifficultyParams =
    std::variant<TspParams, KnapsackParams, BinPackingParams, JobShopParams,
                 MinCostFlowParams, InventoryParams, PortfolioParams,
                 ProductionParams, TransportationParams, PollutionParams>;

ProblemClass class_of(const DifficultyParams& theta);

/// The primary scale knob (number of cities, items, periods, ...); used as
/// the difficulty bucket label carried into grading reports.
int primary_scale(const DifficultyParams& theta);

/// Builds θ for `c` with the primary knob set to `size` and everything else
/// at defaults.
DifficultyParams make_theta(ProblemClass c, int size);

/// Throws std::invalid_argument when a count is non-positive (or below the
/// class minimum) or capacity_ratio leaves (0,1).
void validate(const DifficultyParams& theta);

}  // namespace orbench
