#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orbench/types.hpp"

namespace orbench {

enum class Tier { easy, medium, hard };

std::string_view to_string(Tier t);
std::optional<Tier> tier_from_string(std::string_view s);

// O(1) extra constraints; none of them introduces a new decision variable.
// City indices are 0-based (matching the rendered sentences); knapsack item
// indices are 0-based internally and rendered 1-based; inventory days are the
// day numbers themselves, 1..T.

struct TspForbidEdge {
  int i = 0, j = 0;  // i != j
};
struct TspExactlyOneOf {
  int a1 = 0, a2 = 0;  // edge A
  int b1 = 0, b2 = 0;  // edge B, distinct from edge A
};
struct KnapsackExactlyOneOf {
  int item_a = 0, item_b = 0;  // distinct
};
struct KnapsackCapacityReduction {
  int trigger_item = 0;
  std::int64_t reduction = 2;  // kg, < capacity
};
struct InventoryOrderCap {
  int day = 1;  // 1..T
  std::int64_t max_order = 0;
};
struct InventoryMinStock {
  int day = 1;  // 1..T
  std::int64_t min_stock = 0;
};

using AugmentedConstraint =
    std::variant<TspForbidEdge, TspExactlyOneOf, KnapsackExactlyOneOf,
                 KnapsackCapacityReduction, InventoryOrderCap,
                 InventoryMinStock>;

/// Rows the constraint adds to the canonical formulation (always 1 here;
/// kept per-kind so future kinds can differ).
int added_rows(const AugmentedConstraint& c);

struct PerturbationSpec {
  Tier tier = Tier::easy;
  std::optional<scalar_t> shift;  // objective shift K, 1-decimal
  std::vector<AugmentedConstraint> augmentations;

  bool has_shift() const { return shift.has_value(); }
  bool has_augmentation() const { return !augmentations.empty(); }
  bool is_none() const { return !has_shift() && !has_augmentation(); }
};

}  // namespace orbench
