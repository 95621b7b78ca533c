#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "orbench/difficulty.hpp"
#include "orbench/instance.hpp"
#include "orbench/rng.hpp"

namespace orbench {

struct ThetaMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ResampleExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sampling bounds for every class.  Defaults keep instances nondegenerate
/// and feasible with high probability; all keys are overridable through the
/// config file (key = value) and --set flags.
struct ValueRanges {
  // tsp
  scalar_t tsp_coord_min = 0, tsp_coord_max = 200;
  // knapsack
  std::int64_t knapsack_weight_min = 1, knapsack_weight_max = 30;
  std::int64_t knapsack_value_min = 1, knapsack_value_max = 100;
  // bin packing
  std::int64_t binpack_capacity = 100;
  // job shop
  std::int64_t jobshop_duration_min = 1, jobshop_duration_max = 20;
  // min cost flow
  std::int64_t flow_supply_min = 10, flow_supply_max = 100;
  std::int64_t flow_cost_min = 1, flow_cost_max = 20;
  // inventory
  std::int64_t inventory_demand_min = 0, inventory_demand_max = 50;
  std::int64_t inventory_cost_min = 1, inventory_cost_max = 20;
  std::int64_t inventory_warehouse_cap = 100;
  std::int64_t inventory_order_max_min = 30, inventory_order_max_max = 80;
  std::int64_t inventory_order_min = 0;
  int inventory_lead_max = 2;
  // portfolio
  scalar_t portfolio_return_min = 0.01, portfolio_return_max = 0.20;
  scalar_t portfolio_risk_min = 0.05, portfolio_risk_max = 0.50;
  scalar_t portfolio_lower_max = 0.2, portfolio_upper_max = 0.6;
  scalar_t portfolio_liquidity_min = 0.05, portfolio_liquidity_max = 0.5;
  scalar_t portfolio_return_floor_min = 0.01, portfolio_return_floor_max = 0.15;
  scalar_t portfolio_risk_cap_min = 0.10, portfolio_risk_cap_max = 0.50;
  // production
  scalar_t production_profit_min = 1, production_profit_max = 50;
  scalar_t production_time_min = 0, production_time_max = 10;
  std::int64_t production_cap_min = 50, production_cap_max = 500;
  // transportation
  std::int64_t transport_supply_min = 10, transport_supply_max = 100;
  std::int64_t transport_demand_min = 10, transport_demand_max = 100;
  scalar_t transport_cost_min = 1, transport_cost_max = 20;
  // pollution control
  scalar_t pollution_reduction_min = 0.2, pollution_reduction_max = 0.6;
  scalar_t pollution_eff_min = 0.1, pollution_eff_max = 0.95;
  scalar_t pollution_emission_min = 1.0, pollution_emission_max = 10.0;
  std::int64_t pollution_output_min = 50, pollution_output_max = 200;
  scalar_t pollution_cost_min = 1, pollution_cost_max = 20;

  /// Applies "key = value"; throws std::invalid_argument on unknown key or
  /// unparsable value.  Keys are documented in the README.
  void set(const std::string& key, const std::string& value);
};

struct GeneratorConfig {
  std::uint64_t seed = 0;
  int max_resamples = 100;
  ValueRanges ranges;
};

/// Stage G: seeded sampling with constructive feasibility guarantees where
/// possible and resampling as the fallback.  Deterministic function of
/// (cls, theta, config.seed).  Throws ThetaMismatch / ResampleExhausted.
NumericInstance generate(ProblemClass cls, const DifficultyParams& theta,
                         const GeneratorConfig& config);

}  // namespace orbench
