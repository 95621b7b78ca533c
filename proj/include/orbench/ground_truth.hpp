#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "orbench/types.hpp"

namespace orbench {

// Class-specific optimal decision values.

struct TourOrder {
  std::vector<int> order;  // city visit order; returns to order.front()
};
struct ItemSelection {
  std::vector<int> selected;  // 0-based item indices, ascending
};
struct BinAssignment {
  std::vector<int> bin_of;  // bin index per item, 0-based
  int bins_used = 0;
};
struct OperationStarts {
  std::vector<std::vector<std::int64_t>> starts;  // per job, per operation
};
struct FlowMatrix {
  imatrix_t flow;
};
struct InventoryPlan {
  vector_t orders;     // o_t
  vector_t stocks;     // I_t
  vector_t shortages;  // s_t
};
struct VectorAssignment {
  vector_t x;  // portfolio weights / production quantities
};
struct MatrixAssignment {
  matrix_t x;  // shipments / allocations
};

using Assignment =
    std::variant<TourOrder, ItemSelection, BinAssignment, OperationStarts,
                 FlowMatrix, InventoryPlan, VectorAssignment,
                 MatrixAssignment>;

enum class OptimalityKind { exact };

struct GroundTruth {
  scalar_t objective_value = 0;
  Assignment assignment;
  OptimalityKind optimality_kind = OptimalityKind::exact;
  std::string solver_id;
  scalar_t shift_applied = 0;  // K; 0 when unperturbed
};

}  // namespace orbench
