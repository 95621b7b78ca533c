#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "orbench/problem_class.hpp"
#include "orbench/types.hpp"

namespace orbench {

// Numeric payloads carry every statement-visible value exactly as printed:
// distances and monetary values are pre-rounded to one decimal, rates and
// fractions to four, and integer quantities stay integers.  Downstream
// solving always runs on these stored values, never on hidden
// higher-precision ones.

struct TspInstance {
  std::vector<std::string> labels;  // city names, "A", "B", ...
  matrix_t coords;                  // n x 2, km; source of the distances
  matrix_t dist;                    // symmetric, zero diagonal, 1-decimal km
};

struct KnapsackInstance {
  ivector_t weights;  // kg, positive
  ivector_t values;   // positive
  std::int64_t capacity = 0;
};

struct BinPackingInstance {
  ivector_t weights;  // kg, positive, each <= bin_capacity
  std::int64_t bin_capacity = 0;
};

struct JobShopInstance {
  struct Operation {
    int machine = 0;  // 0-based
    std::int64_t duration = 0;
  };
  std::vector<std::vector<Operation>> jobs;  // ordered operation lists
  int n_machines = 0;
};

struct MinCostFlowInstance {
  ivector_t supplies;    // per warehouse; sum(supplies) == sum(demands)
  ivector_t demands;     // per store
  imatrix_t capacities;  // arc upper bounds u[i][j]
  imatrix_t costs;       // unit costs c[i][j]
};

struct InventoryInstance {
  int horizon = 0;  // T
  std::int64_t initial_stock = 0;
  std::int64_t order_min = 0;
  std::int64_t order_max = 0;
  int lead_time = 0;  // days
  ivector_t demands;  // D_t, t = 1..T
  std::int64_t warehouse_cap = 0;
  std::int64_t unit_price = 0;    // p
  std::int64_t holding_cost = 0;  // h
  std::int64_t shortage_cost = 0;  // c
};

struct PortfolioInstance {
  vector_t returns;         // r_i, 4-decimal
  vector_t risks;           // v_i, 4-decimal
  vector_t lower;           // l_i
  vector_t upper;           // u_i, l_i <= u_i
  std::vector<int> liquid;  // indices of the liquid subset, 0-based
  scalar_t min_liquidity = 0;  // L_min
  scalar_t min_return = 0;     // R_min
  scalar_t max_risk = 0;       // V_max
};

struct ProductionInstance {
  vector_t profits;        // p_i per unit, 1-decimal
  matrix_t time_req;       // t[i][j]: product i on operation j, 1-decimal
  ivector_t op_capacities;  // T_j
};

struct TransportationInstance {
  ivector_t supplies;  // e_i
  ivector_t demands;   // d_j, sum(demands) <= sum(supplies)
  matrix_t costs;      // c[i][j], 1-decimal
};

struct PollutionInstance {
  vector_t emission_rates;  // w_i, 1-decimal
  ivector_t outputs;        // p_i
  vector_t removal_eff;     // s_j, 4-decimal
  matrix_t costs;           // c[i][j], 1-decimal
  scalar_t reduction_target = 0;  // P, 4-decimal
};

using NumericInstance =
    std::variant<TspInstance, KnapsackInstance, BinPackingInstance,
                 JobShopInstance, MinCostFlowInstance, InventoryInstance,
                 PortfolioInstance, ProductionInstance, TransportationInstance,
                 PollutionInstance>;

ProblemClass class_of(const NumericInstance& instance);

/// Empty iff every class-specific structural invariant holds.  Messages are
/// short, e.g. "asymmetric distance (1,2)" or "order bounds inverted".
std::vector<std::string> check_structural(const NumericInstance& instance);

}  // namespace orbench
