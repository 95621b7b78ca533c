#include "orbench/difficulty.hpp"

#include <stdexcept>
#include <string>

namespace orbench {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

ProblemClass class_of(const DifficultyParams& theta) {
  return std::visit(
      overloaded{
          [](const TspParams&) { return ProblemClass::tsp; },
          [](const KnapsackParams&) { return ProblemClass::knapsack; },
          [](const BinPackingParams&) { return ProblemClass::bin_packing; },
          [](const JobShopParams&) { return ProblemClass::job_shop; },
          [](const MinCostFlowParams&) { return ProblemClass::min_cost_flow; },
          [](const InventoryParams&) { return ProblemClass::inventory; },
          [](const PortfolioParams&) { return ProblemClass::portfolio; },
          [](const ProductionParams&) { return ProblemClass::production; },
          [](const TransportationParams&) {
            return ProblemClass::transportation;
          },
          [](const PollutionParams&) {
            return ProblemClass::pollution_control;
          },
      },
      theta);
}

int primary_scale(const DifficultyParams& theta) {
  return std::visit(
      overloaded{
          [](const TspParams& p) { return p.n_cities; },
          [](const KnapsackParams& p) { return p.n_items; },
          [](const BinPackingParams& p) { return p.n_items; },
          [](const JobShopParams& p) { return p.n_jobs; },
          [](const MinCostFlowParams& p) { return p.n; },
          [](const InventoryParams& p) { return p.horizon; },
          [](const PortfolioParams& p) { return p.n_assets; },
          [](const ProductionParams& p) { return p.n_products; },
          [](const TransportationParams& p) { return p.n; },
          [](const PollutionParams& p) { return p.n; },
      },
      theta);
}

DifficultyParams make_theta(ProblemClass c, int size) {
  switch (c) {
    case ProblemClass::tsp: return TspParams{size};
    case ProblemClass::knapsack: return KnapsackParams{size, 0.5};
    case ProblemClass::bin_packing: return BinPackingParams{size};
    case ProblemClass::job_shop: return JobShopParams{size, 2};
    case ProblemClass::min_cost_flow: return MinCostFlowParams{size};
    case ProblemClass::inventory: return InventoryParams{size};
    case ProblemClass::portfolio: return PortfolioParams{size};
    case ProblemClass::production: return ProductionParams{size};
    case ProblemClass::transportation: return TransportationParams{size};
    case ProblemClass::pollution_control: return PollutionParams{size};
  }
  throw std::invalid_argument("unknown problem class");
}

void validate(const DifficultyParams& theta) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("invalid theta: ") + what);
  };
  std::visit(
      overloaded{
          [&](const TspParams& p) { require(p.n_cities >= 3, "n_cities >= 3"); },
          [&](const KnapsackParams& p) {
            require(p.n_items >= 1, "n_items >= 1");
            require(p.capacity_ratio > 0 && p.capacity_ratio < 1,
                    "capacity_ratio in (0,1)");
          },
          [&](const BinPackingParams& p) {
            require(p.n_items >= 1, "n_items >= 1");
          },
          [&](const JobShopParams& p) {
            require(p.n_jobs >= 1 && p.n_machines >= 1, "jobs/machines >= 1");
          },
          [&](const MinCostFlowParams& p) { require(p.n >= 1, "n >= 1"); },
          [&](const InventoryParams& p) { require(p.horizon >= 1, "T >= 1"); },
          [&](const PortfolioParams& p) {
            require(p.n_assets >= 2, "n_assets >= 2");
          },
          [&](const ProductionParams& p) {
            require(p.n_products >= 1, "n_products >= 1");
          },
          [&](const TransportationParams& p) { require(p.n >= 1, "n >= 1"); },
          [&](const PollutionParams& p) { require(p.n >= 1, "n >= 1"); },
      },
      theta);
}

}  // namespace orbench
