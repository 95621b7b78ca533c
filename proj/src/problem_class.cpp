#include "orbench/problem_class.hpp"

namespace orbench {

std::string_view to_string(ProblemClass c) {
  switch (c) {
    case ProblemClass::tsp: return "tsp";
    case ProblemClass::knapsack: return "knapsack";
    case ProblemClass::bin_packing: return "bin_packing";
    case ProblemClass::job_shop: return "job_shop";
    case ProblemClass::min_cost_flow: return "min_cost_flow";
    case ProblemClass::inventory: return "inventory";
    case ProblemClass::portfolio: return "portfolio";
    case ProblemClass::production: return "production";
    case ProblemClass::transportation: return "transportation";
    case ProblemClass::pollution_control: return "pollution_control";
  }
  return "?";
}

std::optional<ProblemClass> class_from_string(std::string_view tag) {
  for (ProblemClass c : kAllClasses) {
    if (to_string(c) == tag) return c;
  }
  return std::nullopt;
}

}  // namespace orbench
