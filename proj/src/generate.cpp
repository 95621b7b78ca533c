#include "orbench/generate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "orbench/solve.hpp"

namespace orbench {

namespace {

std::string city_label(int i) {
  if (i < 26) return std::string(1, static_cast<char>('A' + i));
  return "City " + fmt_int(i);
}

TspInstance sample_tsp(const TspParams& p, const ValueRanges& r, Rng& rng) {
  TspInstance t;
  const int n = p.n_cities;
  t.coords = matrix_t(n, 2);
  for (int i = 0; i < n; ++i) {
    t.coords(i, 0) = rng.money_in(r.tsp_coord_min, r.tsp_coord_max);
    t.coords(i, 1) = rng.money_in(r.tsp_coord_min, r.tsp_coord_max);
    t.labels.push_back(city_label(i));
  }
  t.dist = matrix_t::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const scalar_t d = round1(std::hypot(t.coords(i, 0) - t.coords(j, 0),
                                           t.coords(i, 1) - t.coords(j, 1)));
      t.dist(i, j) = d;
      t.dist(j, i) = d;
    }
  }
  return t;
}

KnapsackInstance sample_knapsack(const KnapsackParams& p, const ValueRanges& r,
                                 Rng& rng) {
  KnapsackInstance k;
  k.weights = ivector_t(p.n_items);
  k.values = ivector_t(p.n_items);
  for (int i = 0; i < p.n_items; ++i) {
    k.weights(i) = rng.int_in(r.knapsack_weight_min, r.knapsack_weight_max);
    k.values(i) = rng.int_in(r.knapsack_value_min, r.knapsack_value_max);
  }
  // Capacity fixed as a ratio of total weight.
  k.capacity = std::max<std::int64_t>(
      1, std::llround(p.capacity_ratio * static_cast<double>(k.weights.sum())));
  return k;
}

BinPackingInstance sample_bin_packing(const BinPackingParams& p,
                                      const ValueRanges& r, Rng& rng) {
  BinPackingInstance b;
  b.bin_capacity = r.binpack_capacity;
  b.weights = ivector_t(p.n_items);
  for (int i = 0; i < p.n_items; ++i)
    b.weights(i) = rng.int_in(1, b.bin_capacity);
  return b;
}

JobShopInstance sample_job_shop(const JobShopParams& p, const ValueRanges& r,
                                Rng& rng) {
  JobShopInstance js;
  js.n_machines = p.n_machines;
  for (int j = 0; j < p.n_jobs; ++j) {
    // Each job visits every machine exactly once, in a random order.
    std::vector<int> machines(p.n_machines);
    std::iota(machines.begin(), machines.end(), 0);
    rng.shuffle(machines);
    std::vector<JobShopInstance::Operation> ops;
    for (int m : machines)
      ops.push_back({m, rng.int_in(r.jobshop_duration_min, r.jobshop_duration_max)});
    js.jobs.push_back(std::move(ops));
  }
  return js;
}

/// Scales raw draws so they sum to exactly `total`, keeping every entry >= 1.
ivector_t rescale_to_total(const ivector_t& raw, std::int64_t total) {
  const index_t m = raw.size();
  ivector_t out(m);
  const double f = static_cast<double>(total) / static_cast<double>(raw.sum());
  for (index_t j = 0; j < m; ++j)
    out(j) = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::floor(raw(j) * f)));
  std::int64_t gap = total - out.sum();
  for (index_t j = 0; gap > 0; j = (j + 1) % m) {
    ++out(j);
    --gap;
  }
  while (gap < 0 && (out.array() > 1).any()) {
    for (index_t j = 0; j < m && gap < 0; ++j) {
      if (out(j) > 1) {
        --out(j);
        ++gap;
      }
    }
  }
  // A leftover gap (total < m) leaves an imbalance for the structural check.
  return out;
}

MinCostFlowInstance sample_flow(const MinCostFlowParams& p, const ValueRanges& r,
                                Rng& rng) {
  MinCostFlowInstance f;
  const int n = p.n;
  f.supplies = ivector_t(n);
  ivector_t raw(n);
  for (int i = 0; i < n; ++i) {
    f.supplies(i) = rng.int_in(r.flow_supply_min, r.flow_supply_max);
    raw(i) = rng.int_in(r.flow_supply_min, r.flow_supply_max);
  }
  f.demands = rescale_to_total(raw, f.supplies.sum());
  const std::int64_t cap_low = (f.demands.maxCoeff() + 1) / 2;
  const std::int64_t cap_high = f.supplies.sum();
  f.capacities = imatrix_t(n, n);
  f.costs = imatrix_t(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      f.capacities(i, j) = rng.int_in(cap_low, cap_high);
      f.costs(i, j) = rng.int_in(r.flow_cost_min, r.flow_cost_max);
    }
  }
  return f;
}

InventoryInstance sample_inventory(const InventoryParams& p, const ValueRanges& r,
                                   Rng& rng) {
  InventoryInstance v;
  v.horizon = p.horizon;
  v.warehouse_cap = r.inventory_warehouse_cap;
  v.initial_stock = rng.int_in(0, v.warehouse_cap / 2);
  v.order_min = r.inventory_order_min;
  v.order_max = rng.int_in(r.inventory_order_max_min, r.inventory_order_max_max);
  v.lead_time = static_cast<int>(rng.int_in(0, r.inventory_lead_max));
  v.demands = ivector_t(p.horizon);
  for (int t = 0; t < p.horizon; ++t)
    v.demands(t) = rng.int_in(r.inventory_demand_min, r.inventory_demand_max);
  v.unit_price = rng.int_in(r.inventory_cost_min, r.inventory_cost_max);
  v.holding_cost = rng.int_in(r.inventory_cost_min, r.inventory_cost_max);
  // Shortage must out-price purchasing or never ordering dominates trivially.
  v.shortage_cost = rng.int_in(v.unit_price + 1, std::max(r.inventory_cost_max, v.unit_price + 1) + 1);
  return v;
}

/// Extreme of c'x over {sum x = 1, l <= x <= u}: fill greedily from the
/// most favorable coefficient.  Exact for a single linear objective.
scalar_t boxed_budget_extreme(const vector_t& coef, const vector_t& lower,
                              const vector_t& upper, bool minimize) {
  std::vector<int> order(coef.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return minimize ? coef(a) < coef(b) : coef(a) > coef(b);
  });
  scalar_t value = coef.dot(lower);
  scalar_t budget = 1.0 - lower.sum();
  for (int i : order) {
    const scalar_t take = std::min(budget, upper(i) - lower(i));
    value += coef(i) * take;
    budget -= take;
    if (budget <= 0) break;
  }
  return value;
}

PortfolioInstance sample_portfolio(const PortfolioParams& p, const ValueRanges& r,
                                   Rng& rng) {
  PortfolioInstance pf;
  const int n = p.n_assets;
  pf.returns = vector_t(n);
  pf.risks = vector_t(n);
  pf.lower = vector_t(n);
  pf.upper = vector_t(n);
  for (int i = 0; i < n; ++i) {
    pf.returns(i) = rng.rate_in(r.portfolio_return_min, r.portfolio_return_max);
    pf.risks(i) = rng.rate_in(r.portfolio_risk_min, r.portfolio_risk_max);
    pf.lower(i) = rng.rate_in(0, r.portfolio_lower_max);
  }
  // The budget row needs sum(l) <= 1; rescale the lower bounds when many
  // assets push the sum past it.
  if (pf.lower.sum() > 0.9) {
    const scalar_t shrink = 0.9 / pf.lower.sum();
    for (int i = 0; i < n; ++i) pf.lower(i) = round4(pf.lower(i) * shrink);
  }
  for (int i = 0; i < n; ++i) {
    pf.upper(i) = std::max(pf.lower(i),
                           rng.rate_in(pf.lower(i), r.portfolio_upper_max));
  }
  // And sum(u) >= 1; lift the tightest boxes when a draw falls short (small
  // n makes that common).
  for (int i = 0; pf.upper.sum() < 1.0 && i < n; ++i) {
    pf.upper(i) = std::max(pf.upper(i), round4(std::min(
        r.portfolio_upper_max, pf.upper(i) + 1.0 - pf.upper.sum())));
  }
  // Nonempty proper subset of liquid assets.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  const int k = static_cast<int>(rng.int_in(1, n - 1));
  pf.liquid.assign(order.begin(), order.begin() + k);
  std::sort(pf.liquid.begin(), pf.liquid.end());

  // Thresholds are drawn inside the range the drawn assets can actually
  // reach, then the phase-1 check arbitrates the cross-constraint residue.
  scalar_t liquid_cap = 0;
  for (int i : pf.liquid) liquid_cap += pf.upper(i);
  const scalar_t liq_hi =
      std::min(r.portfolio_liquidity_max, liquid_cap - 0.01);
  pf.min_liquidity = rng.rate_in(
      std::min(r.portfolio_liquidity_min, std::max(liq_hi, 0.0)),
      std::max(r.portfolio_liquidity_min, liq_hi));

  const scalar_t best_return =
      boxed_budget_extreme(pf.returns, pf.lower, pf.upper, false);
  const scalar_t ret_hi =
      std::min(r.portfolio_return_floor_max, best_return - 0.005);
  pf.min_return = rng.rate_in(
      std::min(r.portfolio_return_floor_min, std::max(ret_hi, 0.0)),
      std::max(r.portfolio_return_floor_min, ret_hi));

  const scalar_t least_risk =
      boxed_budget_extreme(pf.risks, pf.lower, pf.upper, true);
  pf.max_risk = rng.rate_in(std::max(r.portfolio_risk_cap_min, least_risk + 0.01),
                            std::max(r.portfolio_risk_cap_max, least_risk + 0.05));
  return pf;
}

ProductionInstance sample_production(const ProductionParams& p,
                                     const ValueRanges& r, Rng& rng) {
  ProductionInstance pr;
  const int n = p.n_products;
  pr.profits = vector_t(n);
  pr.time_req = matrix_t(n, n);
  pr.op_capacities = ivector_t(n);
  for (int i = 0; i < n; ++i)
    pr.profits(i) = rng.money_in(r.production_profit_min, r.production_profit_max);
  for (int i = 0; i < n; ++i) {
    // A product consuming no time anywhere would unbound the LP; redraw the
    // row a bounded number of times and let the structural check catch the
    // rest (possible only under degenerate range overrides).
    for (int redraw = 0; redraw < 100; ++redraw) {
      for (int j = 0; j < n; ++j)
        pr.time_req(i, j) =
            rng.money_in(r.production_time_min, r.production_time_max);
      if (pr.time_req.row(i).maxCoeff() >= 0.05) break;
    }
  }
  for (int j = 0; j < n; ++j)
    pr.op_capacities(j) = rng.int_in(r.production_cap_min, r.production_cap_max);
  return pr;
}

TransportationInstance sample_transportation(const TransportationParams& p,
                                             const ValueRanges& r, Rng& rng) {
  TransportationInstance t;
  const int n = p.n;
  t.supplies = ivector_t(n);
  ivector_t raw(n);
  for (int i = 0; i < n; ++i) {
    t.supplies(i) = rng.int_in(r.transport_supply_min, r.transport_supply_max);
    raw(i) = rng.int_in(r.transport_demand_min, r.transport_demand_max);
  }
  t.demands = raw.sum() <= t.supplies.sum()
                  ? raw
                  : rescale_to_total(raw, t.supplies.sum());
  t.costs = matrix_t(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t.costs(i, j) = rng.money_in(r.transport_cost_min, r.transport_cost_max);
  return t;
}

PollutionInstance sample_pollution(const PollutionParams& p, const ValueRanges& r,
                                   Rng& rng) {
  PollutionInstance pl;
  const int n = p.n;
  pl.emission_rates = vector_t(n);
  pl.outputs = ivector_t(n);
  pl.removal_eff = vector_t(n);
  pl.costs = matrix_t(n, n);
  pl.reduction_target =
      rng.rate_in(r.pollution_reduction_min, r.pollution_reduction_max);
  for (int i = 0; i < n; ++i) {
    pl.emission_rates(i) =
        rng.money_in(r.pollution_emission_min, r.pollution_emission_max);
    pl.outputs(i) = rng.int_in(r.pollution_output_min, r.pollution_output_max);
    pl.removal_eff(i) = rng.rate_in(r.pollution_eff_min, r.pollution_eff_max);
  }
  // Full adoption of the best method must reach the target.
  if (pl.removal_eff.maxCoeff() < pl.reduction_target) {
    pl.removal_eff(n - 1) =
        rng.rate_in(pl.reduction_target, std::max(r.pollution_eff_max,
                                                  pl.reduction_target));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      pl.costs(i, j) = rng.money_in(r.pollution_cost_min, r.pollution_cost_max);
  return pl;
}

NumericInstance sample_once(ProblemClass cls, const DifficultyParams& theta,
                            const ValueRanges& r, Rng& rng) {
  switch (cls) {
    case ProblemClass::tsp:
      return sample_tsp(std::get<TspParams>(theta), r, rng);
    case ProblemClass::knapsack:
      return sample_knapsack(std::get<KnapsackParams>(theta), r, rng);
    case ProblemClass::bin_packing:
      return sample_bin_packing(std::get<BinPackingParams>(theta), r, rng);
    case ProblemClass::job_shop:
      return sample_job_shop(std::get<JobShopParams>(theta), r, rng);
    case ProblemClass::min_cost_flow:
      return sample_flow(std::get<MinCostFlowParams>(theta), r, rng);
    case ProblemClass::inventory:
      return sample_inventory(std::get<InventoryParams>(theta), r, rng);
    case ProblemClass::portfolio:
      return sample_portfolio(std::get<PortfolioParams>(theta), r, rng);
    case ProblemClass::production:
      return sample_production(std::get<ProductionParams>(theta), r, rng);
    case ProblemClass::transportation:
      return sample_transportation(std::get<TransportationParams>(theta), r, rng);
    case ProblemClass::pollution_control:
      return sample_pollution(std::get<PollutionParams>(theta), r, rng);
  }
  throw std::invalid_argument("unknown class");
}

}  // namespace

NumericInstance generate(ProblemClass cls, const DifficultyParams& theta,
                         const GeneratorConfig& config) {
  if (class_of(theta) != cls)
    throw ThetaMismatch("theta does not match class " +
                        std::string(to_string(cls)));
  validate(theta);
  Rng rng(config.seed);
  for (int attempt = 0; attempt < config.max_resamples; ++attempt) {
    NumericInstance candidate = sample_once(cls, theta, config.ranges, rng);
    if (!check_structural(candidate).empty()) continue;
    if (!check_feasible(candidate).feasible) continue;
    return candidate;
  }
  throw ResampleExhausted("no feasible draw for " +
                          std::string(to_string(cls)) + " after " +
                          fmt_int(config.max_resamples) + " attempts");
}

void ValueRanges::set(const std::string& key, const std::string& value) {
  auto as_int = [&] {
    std::size_t pos = 0;
    std::int64_t v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("bad integer: " + value);
    return v;
  };
  auto as_real = [&] {
    std::size_t pos = 0;
    scalar_t v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("bad number: " + value);
    return v;
  };
  const std::map<std::string, std::function<void()>> table{
      {"tsp.coord_min", [&] { tsp_coord_min = as_real(); }},
      {"tsp.coord_max", [&] { tsp_coord_max = as_real(); }},
      {"knapsack.weight_min", [&] { knapsack_weight_min = as_int(); }},
      {"knapsack.weight_max", [&] { knapsack_weight_max = as_int(); }},
      {"knapsack.value_min", [&] { knapsack_value_min = as_int(); }},
      {"knapsack.value_max", [&] { knapsack_value_max = as_int(); }},
      {"binpack.capacity", [&] { binpack_capacity = as_int(); }},
      {"jobshop.duration_min", [&] { jobshop_duration_min = as_int(); }},
      {"jobshop.duration_max", [&] { jobshop_duration_max = as_int(); }},
      {"flow.supply_min", [&] { flow_supply_min = as_int(); }},
      {"flow.supply_max", [&] { flow_supply_max = as_int(); }},
      {"flow.cost_min", [&] { flow_cost_min = as_int(); }},
      {"flow.cost_max", [&] { flow_cost_max = as_int(); }},
      {"inventory.demand_min", [&] { inventory_demand_min = as_int(); }},
      {"inventory.demand_max", [&] { inventory_demand_max = as_int(); }},
      {"inventory.cost_min", [&] { inventory_cost_min = as_int(); }},
      {"inventory.cost_max", [&] { inventory_cost_max = as_int(); }},
      {"inventory.warehouse_cap", [&] { inventory_warehouse_cap = as_int(); }},
      {"inventory.order_max_min", [&] { inventory_order_max_min = as_int(); }},
      {"inventory.order_max_max", [&] { inventory_order_max_max = as_int(); }},
      {"inventory.order_min", [&] { inventory_order_min = as_int(); }},
      {"inventory.lead_max",
       [&] { inventory_lead_max = static_cast<int>(as_int()); }},
      {"portfolio.return_min", [&] { portfolio_return_min = as_real(); }},
      {"portfolio.return_max", [&] { portfolio_return_max = as_real(); }},
      {"portfolio.risk_min", [&] { portfolio_risk_min = as_real(); }},
      {"portfolio.risk_max", [&] { portfolio_risk_max = as_real(); }},
      {"portfolio.lower_max", [&] { portfolio_lower_max = as_real(); }},
      {"portfolio.upper_max", [&] { portfolio_upper_max = as_real(); }},
      {"portfolio.liquidity_min", [&] { portfolio_liquidity_min = as_real(); }},
      {"portfolio.liquidity_max", [&] { portfolio_liquidity_max = as_real(); }},
      {"portfolio.return_floor_min",
       [&] { portfolio_return_floor_min = as_real(); }},
      {"portfolio.return_floor_max",
       [&] { portfolio_return_floor_max = as_real(); }},
      {"portfolio.risk_cap_min", [&] { portfolio_risk_cap_min = as_real(); }},
      {"portfolio.risk_cap_max", [&] { portfolio_risk_cap_max = as_real(); }},
      {"production.profit_min", [&] { production_profit_min = as_real(); }},
      {"production.profit_max", [&] { production_profit_max = as_real(); }},
      {"production.time_min", [&] { production_time_min = as_real(); }},
      {"production.time_max", [&] { production_time_max = as_real(); }},
      {"production.cap_min", [&] { production_cap_min = as_int(); }},
      {"production.cap_max", [&] { production_cap_max = as_int(); }},
      {"transport.supply_min", [&] { transport_supply_min = as_int(); }},
      {"transport.supply_max", [&] { transport_supply_max = as_int(); }},
      {"transport.demand_min", [&] { transport_demand_min = as_int(); }},
      {"transport.demand_max", [&] { transport_demand_max = as_int(); }},
      {"transport.cost_min", [&] { transport_cost_min = as_real(); }},
      {"transport.cost_max", [&] { transport_cost_max = as_real(); }},
      {"pollution.reduction_min", [&] { pollution_reduction_min = as_real(); }},
      {"pollution.reduction_max", [&] { pollution_reduction_max = as_real(); }},
      {"pollution.eff_min", [&] { pollution_eff_min = as_real(); }},
      {"pollution.eff_max", [&] { pollution_eff_max = as_real(); }},
      {"pollution.emission_min", [&] { pollution_emission_min = as_real(); }},
      {"pollution.emission_max", [&] { pollution_emission_max = as_real(); }},
      {"pollution.output_min", [&] { pollution_output_min = as_int(); }},
      {"pollution.output_max", [&] { pollution_output_max = as_int(); }},
      {"pollution.cost_min", [&] { pollution_cost_min = as_real(); }},
      {"pollution.cost_max", [&] { pollution_cost_max = as_real(); }},
  };
  auto it = table.find(key);
  if (it == table.end())
    throw std::invalid_argument("unknown value-range key: " + key);
  it->second();
}

}  // namespace orbench
