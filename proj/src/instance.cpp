#include "orbench/instance.hpp"

#include <cmath>
#include <string>

#include "orbench/format.hpp"

namespace orbench {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

ProblemClass class_of(const NumericInstance& instance) {
  return std::visit(
      overloaded{
          [](const TspInstance&) { return ProblemClass::tsp; },
          [](const KnapsackInstance&) { return ProblemClass::knapsack; },
          [](const BinPackingInstance&) { return ProblemClass::bin_packing; },
          [](const JobShopInstance&) { return ProblemClass::job_shop; },
          [](const MinCostFlowInstance&) { return ProblemClass::min_cost_flow; },
          [](const InventoryInstance&) { return ProblemClass::inventory; },
          [](const PortfolioInstance&) { return ProblemClass::portfolio; },
          [](const ProductionInstance&) { return ProblemClass::production; },
          [](const TransportationInstance&) {
            return ProblemClass::transportation;
          },
          [](const PollutionInstance&) {
            return ProblemClass::pollution_control;
          },
      },
      instance);
}

std::vector<std::string> check_structural(const NumericInstance& instance) {
  std::vector<std::string> bad;
  auto flag = [&](const std::string& msg) { bad.push_back(msg); };

  std::visit(
      overloaded{
          [&](const TspInstance& t) {
            const index_t n = t.dist.rows();
            if (t.dist.cols() != n) flag("distance matrix not square");
            if (static_cast<index_t>(t.labels.size()) != n)
              flag("label count mismatch");
            for (index_t i = 0; i < n; ++i) {
              if (t.dist(i, i) != 0)
                flag("nonzero diagonal at " + fmt_int(i));
              for (index_t j = i + 1; j < n; ++j) {
                if (t.dist(i, j) != t.dist(j, i))
                  flag("asymmetric distance (" + fmt_int(i) + "," + fmt_int(j) +
                       ")");
                if (t.dist(i, j) < 0)
                  flag("negative distance (" + fmt_int(i) + "," + fmt_int(j) +
                       ")");
              }
            }
          },
          [&](const KnapsackInstance& k) {
            if (k.weights.size() != k.values.size())
              flag("weight/value length mismatch");
            if ((k.weights.array() <= 0).any()) flag("non-positive weight");
            if ((k.values.array() <= 0).any()) flag("non-positive value");
            if (k.capacity < 0) flag("negative capacity");
          },
          [&](const BinPackingInstance& b) {
            if (b.bin_capacity <= 0) flag("non-positive bin capacity");
            if ((b.weights.array() <= 0).any()) flag("non-positive weight");
            if ((b.weights.array() > b.bin_capacity).any())
              flag("item heavier than a bin");
          },
          [&](const JobShopInstance& j) {
            if (j.n_machines <= 0) flag("no machines");
            if (j.jobs.empty()) flag("no jobs");
            for (const auto& job : j.jobs) {
              if (job.empty()) flag("empty job");
              for (const auto& op : job) {
                if (op.machine < 0 || op.machine >= j.n_machines)
                  flag("machine index out of range");
                if (op.duration <= 0) flag("non-positive duration");
              }
            }
          },
          [&](const MinCostFlowInstance& f) {
            if (f.supplies.sum() != f.demands.sum())
              flag("supply/demand imbalance");
            if ((f.supplies.array() <= 0).any()) flag("non-positive supply");
            if ((f.demands.array() <= 0).any()) flag("non-positive demand");
            if ((f.capacities.array() < 0).any()) flag("negative capacity");
            if ((f.costs.array() < 0).any()) flag("negative cost");
          },
          [&](const InventoryInstance& v) {
            if (v.order_min > v.order_max) flag("order bounds inverted");
            if (v.horizon != static_cast<int>(v.demands.size()))
              flag("demand length mismatch");
            if (v.initial_stock < 0 || v.initial_stock > v.warehouse_cap)
              flag("initial stock outside warehouse");
            if (v.lead_time < 0) flag("negative lead time");
            if ((v.demands.array() < 0).any()) flag("negative demand");
            if (v.unit_price <= 0 || v.holding_cost <= 0 || v.shortage_cost <= 0)
              flag("non-positive cost");
          },
          [&](const PortfolioInstance& p) {
            const index_t n = p.returns.size();
            if (p.risks.size() != n || p.lower.size() != n || p.upper.size() != n)
              flag("asset vector length mismatch");
            for (index_t i = 0; i < n; ++i) {
              if (p.lower(i) > p.upper(i))
                flag("bounds inverted for asset " + fmt_int(i));
              if (p.lower(i) < 0) flag("negative lower bound");
            }
            if (p.lower.sum() > 1.0) flag("lower bounds exceed budget");
            if (p.upper.sum() < 1.0) flag("upper bounds below budget");
            if (p.liquid.empty()) flag("empty liquid subset");
            for (int i : p.liquid) {
              if (i < 0 || i >= n) flag("liquid index out of range");
            }
          },
          [&](const ProductionInstance& p) {
            const index_t n = p.profits.size();
            if (p.time_req.rows() != n ||
                p.time_req.cols() != p.op_capacities.size())
              flag("time matrix shape mismatch");
            if ((p.time_req.array() < 0).any()) flag("negative time");
            if ((p.op_capacities.array() <= 0).any())
              flag("non-positive capacity");
            for (index_t i = 0; i < n; ++i) {
              if (p.time_req.row(i).maxCoeff() <= 0)
                flag("product " + fmt_int(i) + " uses no operation time");
            }
          },
          [&](const TransportationInstance& t) {
            if (t.costs.rows() != t.supplies.size() ||
                t.costs.cols() != t.demands.size())
              flag("cost matrix shape mismatch");
            if ((t.supplies.array() <= 0).any()) flag("non-positive supply");
            if ((t.demands.array() <= 0).any()) flag("non-positive demand");
            if (t.supplies.sum() < t.demands.sum())
              flag("total demand exceeds total supply");
          },
          [&](const PollutionInstance& p) {
            const index_t n = p.emission_rates.size();
            if (p.outputs.size() != n || p.removal_eff.size() != n ||
                p.costs.rows() != n || p.costs.cols() != n)
              flag("source/method shape mismatch");
            if ((p.emission_rates.array() <= 0).any())
              flag("non-positive emission rate");
            if ((p.outputs.array() <= 0).any()) flag("non-positive output");
            if (p.reduction_target <= 0 || p.reduction_target >= 1)
              flag("reduction target outside (0,1)");
            for (index_t j = 0; j < p.removal_eff.size(); ++j) {
              if (p.removal_eff(j) <= 0 || p.removal_eff(j) >= 1)
                flag("removal efficiency outside (0,1)");
            }
          },
      },
      instance);
  return bad;
}

}  // namespace orbench
