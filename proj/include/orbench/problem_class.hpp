#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace orbench {

enum class ProblemClass {
  tsp,
  knapsack,
  bin_packing,
  job_shop,
  min_cost_flow,
  inventory,
  portfolio,
  production,
  transportation,
  pollution_control,
};

enum class Family { mip, lp };

inline constexpr std::array<ProblemClass, 10> kAllClasses = {
    ProblemClass::tsp,           ProblemClass::knapsack,
    ProblemClass::bin_packing,   ProblemClass::job_shop,
    ProblemClass::min_cost_flow, ProblemClass::inventory,
    ProblemClass::portfolio,     ProblemClass::production,
    ProblemClass::transportation, ProblemClass::pollution_control,
};

/// First five tags are combinatorial (MIP), last five continuous (LP).
constexpr Family family_of(ProblemClass c) {
  switch (c) {
    case ProblemClass::tsp:
    case ProblemClass::knapsack:
    case ProblemClass::bin_packing:
    case ProblemClass::job_shop:
    case ProblemClass::min_cost_flow:
      return Family::mip;
    default:
      return Family::lp;
  }
}

std::string_view to_string(ProblemClass c);
std::optional<ProblemClass> class_from_string(std::string_view tag);

enum class Sense { minimize, maximize };

/// Optimization sense of each class's canonical objective.
constexpr Sense sense_of(ProblemClass c) {
  switch (c) {
    case ProblemClass::knapsack:
    case ProblemClass::portfolio:
    case ProblemClass::production:
      return Sense::maximize;
    default:
      return Sense::minimize;
  }
}

}  // namespace orbench
