#include "orbench/templating.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "orbench/format.hpp"
#include "orbench/sha256.hpp"

namespace orbench {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// ---------------------------------------------------------------------------
// Built-in template bodies.  The TSP tiers reproduce the published
// easy/medium/hard wording; the other classes follow the same gradient:
// everyday metaphor, neutral planner language, formal OR jargon.  All tiers
// of a class expose the same placeholders so the number multiset is
// tier-invariant.

constexpr const char* kTspEasy =
    "Consider a delivery service that needs to visit {n} cities. The distances "
    "(km) are:\n{distance_text}\nFind the shortest possible route that visits "
    "each city once and returns to the start.";
constexpr const char* kTspMedium =
    "Consider a routing task where a planner constructs a tour visiting {n} "
    "cities. Pairwise travel distances are deterministic and "
    "symmetric:\n{distance_text}\nIdentify a minimum-length cyclic route "
    "visiting each city once and returning to departure.";
constexpr const char* kTspHard =
    "Consider a canonical TSP instance involving {n} nodes in the Euclidean "
    "plane. The symmetric distance matrix (km) is encoded "
    "as:\n{distance_text}\nCompute a shortest Hamiltonian tour, minimizing "
    "aggregate travel distance over all legs.";

constexpr const char* kKnapsackEasy =
    "A hiker is preparing for an outdoor hiking trip. They need to select the "
    "most valuable combination of equipment and supplies from many available "
    "options within the limited backpack capacity. The items "
    "include:\n{items_list}\nAssuming the backpack has a maximum weight "
    "capacity of {capacity} kg, the hiker's goal is to select the combination "
    "of items with the highest total value while not exceeding the weight "
    "limit. Each item must be either taken in its entirety or left behind.";
constexpr const char* kKnapsackMedium =
    "A logistics planner must choose a subset of candidate cargo items for a "
    "single shipment container. The candidate items are:\n{items_list}\nThe "
    "container accepts at most {capacity} kg in total. Select items so that "
    "the combined value is as large as possible without exceeding the weight "
    "allowance. Each item must be either taken in its entirety or left "
    "behind.";
constexpr const char* kKnapsackHard =
    "Consider a binary selection problem over a set of weighted, valued "
    "elements:\n{items_list}\nA single resource budget caps total weight at "
    "{capacity} kg. Maximize the aggregate value of the chosen subset subject "
    "to the capacity restriction; selection is indivisible, so each item must "
    "be either taken in its entirety or left behind.";

constexpr const char* kBinPackingEasy =
    "A warehouse manager needs to pack different products into identical "
    "shipping containers. The available items include:\n{item_lines}\nEach "
    "shipping container has a maximum weight capacity of {bin_capacity} kg. "
    "The manager's goal is to use the minimum number of containers while "
    "ensuring all products are packed. Each product must be assigned to "
    "exactly one container, and the total weight in each container cannot "
    "exceed its capacity.";
constexpr const char* kBinPackingMedium =
    "A fulfillment operation must stow a set of parcels into identical "
    "crates. Parcel weights are:\n{item_lines}\nEvery crate holds at most "
    "{bin_capacity} kg. Determine an assignment of every parcel to exactly "
    "one crate that minimizes the number of crates used, never exceeding any "
    "crate's weight limit.";
constexpr const char* kBinPackingHard =
    "Consider a one-dimensional bin packing instance. The item weight vector "
    "is:\n{item_lines}\nAll bins share a uniform capacity of {bin_capacity} "
    "kg. Compute a partition of the items into the minimum number of bins "
    "such that each item is placed in exactly one bin and no bin's total load "
    "exceeds its capacity.";

constexpr const char* kJobShopEasy =
    "Suppose there are {n_jobs} jobs that need to be processed on "
    "{n_machines} machines. Each job consists of a sequence of operations "
    "represented as pairs (Machine, Processing time), where each pair "
    "specifies the machine on which the operation must run and the amount of "
    "time it requires. The order of pairs indicates the required sequence in "
    "which the operations must be performed. Job details:\n{job_text}\nEach "
    "operation must run continuously once it starts and cannot be "
    "interrupted, and each machine can only process one operation at a time. "
    "The objective is to determine the processing order of all operations on "
    "the machines so that the makespan (i.e., the total completion time of "
    "all jobs) is minimized.";
constexpr const char* kJobShopMedium =
    "A workshop schedules {n_jobs} jobs across {n_machines} machines. Every "
    "job is an ordered list of operations given as (Machine, Processing "
    "time) pairs, and the listed order must be respected. Operation "
    "data:\n{job_text}\nOperations run without interruption, and no machine "
    "handles two operations at once. Choose start times for all operations "
    "so that the time at which the last job finishes is as early as "
    "possible.";
constexpr const char* kJobShopHard =
    "Consider a job-shop scheduling instance with {n_jobs} jobs and "
    "{n_machines} machines. Each job prescribes a fixed machine routing with "
    "deterministic processing times, encoded as (Machine, Processing time) "
    "pairs:\n{job_text}\nPreemption is prohibited and machines are "
    "unary-capacity resources. Determine a non-preemptive schedule honoring "
    "all precedence and disjunctive constraints that minimizes the makespan.";

constexpr const char* kFlowEasy =
    "A logistics company needs to ship goods from {n} warehouses to {n} "
    "retail stores. Each warehouse has a supply "
    "capacity:\n{warehouse_lines}\nEach retail store has a fixed "
    "demand:\n{store_lines}\nThe transportation routes between each warehouse "
    "and store have specific capacity limits and shipping costs (cost per "
    "unit):\n{arc_lines}\nThe company wants to determine how many units of "
    "goods to ship from each warehouse to each store in order to minimize the "
    "total shipping cost, while satisfying all store demands, not exceeding "
    "any warehouse's supply, and respecting the capacity limits of each "
    "transportation route.";
constexpr const char* kFlowMedium =
    "A distribution planner moves a single commodity from {n} origin depots "
    "to {n} destination outlets. Depot availabilities:\n{warehouse_lines}\n"
    "Outlet requirements:\n{store_lines}\nEach depot-outlet lane has a "
    "per-unit cost and a maximum throughput:\n{arc_lines}\nDecide the "
    "shipment quantity on every lane to meet all requirements at minimum "
    "total cost, without exceeding depot availabilities or lane throughput "
    "limits.";
constexpr const char* kFlowHard =
    "Consider a minimum-cost network flow instance on a complete bipartite "
    "graph with {n} supply nodes and {n} demand nodes. Supply "
    "vector:\n{warehouse_lines}\nDemand vector:\n{store_lines}\nArc "
    "capacities and unit costs:\n{arc_lines}\nCompute a feasible flow "
    "saturating all demands that minimizes total cost subject to supply "
    "conservation and arc capacity constraints.";

constexpr const char* kInventoryEasy =
    "A factory must develop an ordering and inventory plan for a key material "
    "over a planning horizon of {T} days. The initial inventory at the "
    "beginning of the planning period is {I0} units. In each period t = 1, "
    "..., {T}, the supplier allows the factory to place an order whose "
    "quantity must lie between {Qmin} and {Qmax} units. However, each order "
    "placed will take {lead} day(s) to arrive before it can be used to "
    "satisfy demand or replenish inventory. The demand for the material in "
    "each period is given as follows:\n{demand_lines}\nShortages are "
    "permitted, but any unmet demand will not be back-ordered. Throughout the "
    "planning horizon, material quantities are allowed to be fractional, and "
    "the total amount of on-hand inventory at any time must not exceed the "
    "warehouse capacity of {C} units. The total cost over the planning "
    "horizon consists of three components: the ordering cost, which equals "
    "{p} per unit ordered; the holding cost, which equals {h} per unit of "
    "inventory carried from one period to the next; and the shortage penalty, "
    "which equals {c} per unit of unmet demand. Please determine the optimal "
    "order quantity for each period and track the resulting inventory and "
    "shortage levels so as to minimize the total cost.";
constexpr const char* kInventoryMedium =
    "A parts depot plans replenishment for one item across {T} consecutive "
    "days, numbered 1 through {T}, starting with {I0} units on hand. A daily "
    "order of between {Qmin} and {Qmax} units may be placed, and every order "
    "arrives after a delay of {lead} day(s). Daily "
    "requirements:\n{demand_lines}\nUnfilled demand is lost rather than "
    "back-ordered, quantities may be fractional, and on-hand stock can never "
    "exceed the storage limit of {C} units. Costs accrue at {p} per unit "
    "ordered, {h} per unit held from one day to the next, and {c} per unit of "
    "requirement left unfilled. Choose daily order quantities minimizing the "
    "total cost over the horizon.";
constexpr const char* kInventoryHard =
    "Consider a finite-horizon, single-item lot-sizing problem with lost "
    "sales over {T} periods indexed t = 1, ..., {T}. Initial stock is {I0} "
    "units; per-period order quantities are bounded between {Qmin} and "
    "{Qmax} units and materialize after a lead time of {lead} period(s). The "
    "demand trajectory is:\n{demand_lines}\nUnsatisfied demand is not "
    "back-ordered, decision quantities are continuous, and on-hand inventory "
    "is capped by a warehouse capacity of {C} units in every period. With "
    "unit procurement cost {p}, per-period unit holding cost {h}, and unit "
    "shortage penalty {c}, determine the ordering policy minimizing total "
    "cost.";

constexpr const char* kPortfolioEasy =
    "An investor wishes to allocate capital among {I} asset classes with the "
    "goal of maximizing the total expected return of the portfolio. The "
    "characteristics of each asset are summarized as "
    "follows:\n{asset_lines}\nEach asset must receive a proportion of the "
    "total investment that satisfies its individual lower and upper bounds, "
    "and the total of all investment proportions must sum to one. To ensure "
    "sufficient liquidity, the investor requires that the group of liquid "
    "assets, represented by the subset L = {L_assets}, collectively receive "
    "at least {L_min} of the total capital. At the same time, the overall "
    "portfolio risk, measured by a specified risk index, must not exceed "
    "{V_max}, and the total expected return of the portfolio must be no less "
    "than {R_min}. Please determine the optimal portfolio weights that "
    "maximize total expected return subject to all constraints.";
constexpr const char* kPortfolioMedium =
    "A fund manager divides a budget across {I} investment categories to earn "
    "the highest expected return. Category data (expected return, risk index, "
    "allocation bounds):\n{asset_lines}\nAllocations are fractions of the "
    "budget that must sum to one and respect each category's bounds. The "
    "liquid categories L = {L_assets} must jointly receive at least {L_min} "
    "of the budget, the weighted risk index of the portfolio may not exceed "
    "{V_max}, and the expected return must reach at least {R_min}. Find the "
    "allocation maximizing expected return.";
constexpr const char* kPortfolioHard =
    "Consider a linear portfolio selection program over {I} assets. Asset "
    "parameters (return coefficient, risk coefficient, box "
    "bounds):\n{asset_lines}\nDecision variables are nonnegative portfolio "
    "weights summing to unity within the stated boxes. Impose a liquidity "
    "floor of {L_min} on the aggregate weight of the subset L = {L_assets}, a "
    "risk budget bounding the weighted risk index by {V_max}, and a return "
    "floor of {R_min}. Maximize the linear expected-return functional subject "
    "to these constraints.";

constexpr const char* kProductionEasy =
    "A factory intends to produce {I} types of products, each of which "
    "requires {I} processing operations to complete. The profit earned per "
    "{unit_label} of each product is given as follows:\n{profit_lines}\nThe "
    "processing time required by each product in every operation is as "
    "follows:\n{time_lines}\nThe available time capacity of each operation "
    "is:\n{op_cap_lines}\nFor each operation, the total processing time "
    "across all products must not exceed its available time. Please schedule "
    "the production plan to maximize total profit.";
constexpr const char* kProductionMedium =
    "A plant manufactures {I} product lines, and every line passes through "
    "{I} work centers. Profit per {unit_label} produced:\n{profit_lines}\n"
    "Per-{unit_label} processing times at each work "
    "center:\n{time_lines}\nWork-center time budgets:\n{op_cap_lines}\n"
    "Production quantities may be fractional. Choose output levels so that no "
    "work center exceeds its time budget and total profit is maximized.";
constexpr const char* kProductionHard =
    "Consider a continuous production planning LP with {I} products and {I} "
    "capacitated operations. Unit profits (per "
    "{unit_label}):\n{profit_lines}\nThe technology matrix of per-"
    "{unit_label} operation times is:\n{time_lines}\nOperation capacity "
    "vector:\n{op_cap_lines}\nMaximize the linear profit objective over "
    "nonnegative production levels subject to the operation-capacity "
    "constraints.";

constexpr const char* kTransportationEasy =
    "Consider a transportation problem that aims to minimize the total "
    "shipping cost from production sites A to sales destinations B. The "
    "available supply at each production site (set A) is given as "
    "follows:\n{supply_lines}\nThe demand that must be met at each sales "
    "destination (set B) is specified below:\n{demand_lines}\nThe unit "
    "shipping cost from each production site to each destination is as "
    "follows:\n{cost_lines}\nPlease choose shipments to minimize the total "
    "cost.";
constexpr const char* kTransportationMedium =
    "A producer ships one good from a set of plants to a set of markets. "
    "Plant supplies:\n{supply_lines}\nMarket demands, each of which must be "
    "satisfied exactly:\n{demand_lines}\nPer-unit shipping rates between "
    "every plant and market:\n{cost_lines}\nDetermine shipment quantities "
    "that satisfy every market demand without exceeding any plant's supply, "
    "at the least total shipping cost.";
constexpr const char* kTransportationHard =
    "Consider a classical Hitchcock transportation LP between a source set A "
    "and a sink set B. Source availabilities:\n{supply_lines}\nSink "
    "requirements (equality constraints):\n{demand_lines}\nThe unit cost "
    "matrix is:\n{cost_lines}\nMinimize total transport cost over nonnegative "
    "flows subject to supply upper bounds at sources and exact demand "
    "satisfaction at sinks.";

constexpr const char* kPollutionEasy =
    "A region seeks to design an air-pollution control plan to reduce total "
    "suspended particulate (TSP) emissions from several industrial point "
    "sources. Initially, no control measures have been applied. The "
    "characteristics of each emission source are as "
    "follows:\n{source_lines}\nTo mitigate emissions, several control methods "
    "are available, each characterized by a specific removal "
    "efficiency:\n{method_lines}\nApplying a control method to a source "
    "incurs an additional cost per unit of production. The cost structure for "
    "all source-method combinations is summarized below:\n{cost_lines}\n"
    "Please choose how to apply control methods to each source (sources may "
    "adopt multiple methods simultaneously), and note that a source may also "
    "remain partially uncontrolled if necessary. The goal is to ensure that "
    "the total TSP emissions are reduced by at least proportion P = {P} of "
    "the initial emissions, while minimizing the total cost.";
constexpr const char* kPollutionMedium =
    "An environmental authority plans emission abatement across several "
    "industrial sources. For each source, the emission rate per unit of "
    "output and the output level are:\n{source_lines}\nCandidate treatment "
    "methods have the following removal efficiencies:\n{method_lines}\nThe "
    "per-unit cost of treating each source's output with each method "
    "is:\n{cost_lines}\nAll of each source's output must be distributed among "
    "the methods (splitting is allowed). Find the cheapest assignment that "
    "cuts total emissions by at least a fraction P = {P} of the untreated "
    "level.";
constexpr const char* kPollutionHard =
    "Consider a linear abatement-planning program with an equal number of "
    "emission sources and treatment technologies. Source data (unit emission "
    "rate, production output):\n{source_lines}\nTechnology removal "
    "efficiencies:\n{method_lines}\nThe source-technology unit cost matrix "
    "is:\n{cost_lines}\nAllocate each source's full output across "
    "technologies with nonnegative, divisible quantities so that aggregate "
    "removed emissions reach at least the fraction P = {P} of the "
    "uncontrolled emission mass, minimizing total treatment cost.";

const char* builtin_body(ProblemClass cls, Tier tier) {
  switch (cls) {
    case ProblemClass::tsp:
      return tier == Tier::easy ? kTspEasy
             : tier == Tier::medium ? kTspMedium : kTspHard;
    case ProblemClass::knapsack:
      return tier == Tier::easy ? kKnapsackEasy
             : tier == Tier::medium ? kKnapsackMedium : kKnapsackHard;
    case ProblemClass::bin_packing:
      return tier == Tier::easy ? kBinPackingEasy
             : tier == Tier::medium ? kBinPackingMedium : kBinPackingHard;
    case ProblemClass::job_shop:
      return tier == Tier::easy ? kJobShopEasy
             : tier == Tier::medium ? kJobShopMedium : kJobShopHard;
    case ProblemClass::min_cost_flow:
      return tier == Tier::easy ? kFlowEasy
             : tier == Tier::medium ? kFlowMedium : kFlowHard;
    case ProblemClass::inventory:
      return tier == Tier::easy ? kInventoryEasy
             : tier == Tier::medium ? kInventoryMedium : kInventoryHard;
    case ProblemClass::portfolio:
      return tier == Tier::easy ? kPortfolioEasy
             : tier == Tier::medium ? kPortfolioMedium : kPortfolioHard;
    case ProblemClass::production:
      return tier == Tier::easy ? kProductionEasy
             : tier == Tier::medium ? kProductionMedium : kProductionHard;
    case ProblemClass::transportation:
      return tier == Tier::easy ? kTransportationEasy
             : tier == Tier::medium ? kTransportationMedium
                                    : kTransportationHard;
    case ProblemClass::pollution_control:
      return tier == Tier::easy ? kPollutionEasy
             : tier == Tier::medium ? kPollutionMedium : kPollutionHard;
  }
  return "";
}

std::vector<std::string> scan_placeholders(const std::string& body) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] != '{') continue;
    const std::size_t end = body.find('}', i);
    if (end == std::string::npos) break;
    std::string name = body.substr(i + 1, end - i - 1);
    if (std::find(names.begin(), names.end(), name) == names.end())
      names.push_back(std::move(name));
    i = end;
  }
  std::sort(names.begin(), names.end());
  return names;
}

// ---------------------------------------------------------------------------
// Placeholder values.  These builders are shared by all tiers of a class.

using PlaceholderMap = std::map<std::string, std::string>;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

PlaceholderMap placeholders(const TspInstance& t) {
  const index_t n = t.dist.rows();
  std::vector<std::string> entries;
  for (index_t i = 0; i < n; ++i) {
    for (index_t j = i + 1; j < n; ++j) {
      entries.push_back(t.labels[i] + "--" + t.labels[j] + ": " +
                        fmt_money(t.dist(i, j)));
    }
  }
  // Three pairs per line, matching the published layout.
  std::vector<std::string> lines;
  for (std::size_t k = 0; k < entries.size(); k += 3) {
    std::vector<std::string> chunk(entries.begin() + k,
                                   entries.begin() + std::min(k + 3, entries.size()));
    lines.push_back(join(chunk, ", "));
  }
  return {{"n", fmt_int(n)}, {"distance_text", join(lines, "\n")}};
}

PlaceholderMap placeholders(const KnapsackInstance& k) {
  std::vector<std::string> lines;
  for (index_t i = 0; i < k.weights.size(); ++i) {
    lines.push_back("Item " + fmt_int(i + 1) + ": weight " +
                    fmt_int(k.weights(i)) + " kg, value " + fmt_int(k.values(i)));
  }
  return {{"items_list", join(lines, "\n")}, {"capacity", fmt_int(k.capacity)}};
}

PlaceholderMap placeholders(const BinPackingInstance& b) {
  std::vector<std::string> lines;
  for (index_t i = 0; i < b.weights.size(); ++i)
    lines.push_back("Product " + fmt_int(i + 1) + ": " + fmt_int(b.weights(i)) +
                    " kg");
  return {{"item_lines", join(lines, "\n")},
          {"bin_capacity", fmt_int(b.bin_capacity)}};
}

PlaceholderMap placeholders(const JobShopInstance& js) {
  std::vector<std::string> lines;
  for (std::size_t j = 0; j < js.jobs.size(); ++j) {
    std::vector<std::string> ops;
    for (const auto& op : js.jobs[j]) {
      ops.push_back("(Machine " + fmt_int(op.machine + 1) + ", " +
                    fmt_int(op.duration) + ")");
    }
    lines.push_back("Job " + fmt_int(j + 1) + ": " + join(ops, ", "));
  }
  return {{"n_jobs", fmt_int(static_cast<std::int64_t>(js.jobs.size()))},
          {"n_machines", fmt_int(js.n_machines)},
          {"job_text", join(lines, "\n")}};
}

PlaceholderMap placeholders(const MinCostFlowInstance& f) {
  std::vector<std::string> wh, st, arcs;
  for (index_t i = 0; i < f.supplies.size(); ++i)
    wh.push_back("Warehouse " + fmt_int(i + 1) + ": " + fmt_int(f.supplies(i)) +
                 " units");
  for (index_t j = 0; j < f.demands.size(); ++j)
    st.push_back("Store " + fmt_int(j + 1) + ": " + fmt_int(f.demands(j)) +
                 " units");
  for (index_t i = 0; i < f.supplies.size(); ++i) {
    for (index_t j = 0; j < f.demands.size(); ++j) {
      arcs.push_back("Warehouse " + fmt_int(i + 1) + " -> Store " +
                     fmt_int(j + 1) + ": capacity " + fmt_int(f.capacities(i, j)) +
                     ", cost " + fmt_int(f.costs(i, j)));
    }
  }
  return {{"n", fmt_int(f.supplies.size())},
          {"warehouse_lines", join(wh, "\n")},
          {"store_lines", join(st, "\n")},
          {"arc_lines", join(arcs, "\n")}};
}

PlaceholderMap placeholders(const InventoryInstance& v) {
  std::vector<std::string> lines;
  for (int t = 0; t < v.horizon; ++t)
    lines.push_back("Day " + fmt_int(t + 1) + ": " + fmt_int(v.demands(t)) +
                    " units");
  return {{"T", fmt_int(v.horizon)},
          {"I0", fmt_int(v.initial_stock)},
          {"Qmin", fmt_int(v.order_min)},
          {"Qmax", fmt_int(v.order_max)},
          {"lead", fmt_int(v.lead_time)},
          {"demand_lines", join(lines, "\n")},
          {"C", fmt_int(v.warehouse_cap)},
          {"p", fmt_int(v.unit_price)},
          {"h", fmt_int(v.holding_cost)},
          {"c", fmt_int(v.shortage_cost)}};
}

PlaceholderMap placeholders(const PortfolioInstance& p) {
  std::vector<std::string> lines, liquid;
  for (index_t i = 0; i < p.returns.size(); ++i) {
    lines.push_back("Asset " + fmt_int(i + 1) + ": expected return " +
                    fmt_rate(p.returns(i)) + ", risk " + fmt_rate(p.risks(i)) +
                    ", bounds [" + fmt_rate(p.lower(i)) + ", " +
                    fmt_rate(p.upper(i)) + "]");
  }
  for (int i : p.liquid) liquid.push_back("Asset " + fmt_int(i + 1));
  return {{"I", fmt_int(p.returns.size())},
          {"asset_lines", join(lines, "\n")},
          {"L_assets", "(" + join(liquid, ", ") + ")"},
          {"L_min", fmt_rate(p.min_liquidity)},
          {"R_min", fmt_rate(p.min_return)},
          {"V_max", fmt_rate(p.max_risk)}};
}

PlaceholderMap placeholders(const ProductionInstance& p) {
  std::vector<std::string> profits, times, caps;
  for (index_t i = 0; i < p.profits.size(); ++i)
    profits.push_back("Product " + fmt_int(i + 1) + ": " +
                      fmt_money(p.profits(i)));
  for (index_t i = 0; i < p.time_req.rows(); ++i) {
    std::vector<std::string> row;
    for (index_t j = 0; j < p.time_req.cols(); ++j)
      row.push_back("Operation " + fmt_int(j + 1) + ": " +
                    fmt_money(p.time_req(i, j)));
    times.push_back("Product " + fmt_int(i + 1) + " - " + join(row, ", "));
  }
  for (index_t j = 0; j < p.op_capacities.size(); ++j)
    caps.push_back("Operation " + fmt_int(j + 1) + ": " +
                   fmt_int(p.op_capacities(j)));
  return {{"I", fmt_int(p.profits.size())},
          {"unit_label", "kg"},
          {"profit_lines", join(profits, "\n")},
          {"time_lines", join(times, "\n")},
          {"op_cap_lines", join(caps, "\n")}};
}

PlaceholderMap placeholders(const TransportationInstance& t) {
  std::vector<std::string> supply, demand, cost;
  for (index_t i = 0; i < t.supplies.size(); ++i)
    supply.push_back("Site A" + fmt_int(i + 1) + ": " + fmt_int(t.supplies(i)) +
                     " units");
  for (index_t j = 0; j < t.demands.size(); ++j)
    demand.push_back("Destination B" + fmt_int(j + 1) + ": " +
                     fmt_int(t.demands(j)) + " units");
  for (index_t i = 0; i < t.supplies.size(); ++i) {
    for (index_t j = 0; j < t.demands.size(); ++j)
      cost.push_back("A" + fmt_int(i + 1) + " -> B" + fmt_int(j + 1) + ": " +
                     fmt_money(t.costs(i, j)));
  }
  return {{"supply_lines", join(supply, "\n")},
          {"demand_lines", join(demand, "\n")},
          {"cost_lines", join(cost, "\n")}};
}

PlaceholderMap placeholders(const PollutionInstance& p) {
  std::vector<std::string> sources, methods, costs;
  for (index_t i = 0; i < p.emission_rates.size(); ++i) {
    sources.push_back("Source " + fmt_int(i + 1) + ": emission rate " +
                      fmt_money(p.emission_rates(i)) +
                      " per unit of output, output " + fmt_int(p.outputs(i)) +
                      " units");
  }
  for (index_t j = 0; j < p.removal_eff.size(); ++j)
    methods.push_back("Method " + fmt_int(j + 1) + ": removal efficiency " +
                      fmt_rate(p.removal_eff(j)));
  for (index_t i = 0; i < p.costs.rows(); ++i) {
    for (index_t j = 0; j < p.costs.cols(); ++j)
      costs.push_back("Source " + fmt_int(i + 1) + " with Method " +
                      fmt_int(j + 1) + ": " + fmt_money(p.costs(i, j)));
  }
  return {{"source_lines", join(sources, "\n")},
          {"method_lines", join(methods, "\n")},
          {"cost_lines", join(costs, "\n")},
          {"P", fmt_rate(p.reduction_target)}};
}

PlaceholderMap placeholders_for(const NumericInstance& instance) {
  return std::visit([](const auto& inst) { return placeholders(inst); },
                    instance);
}

}  // namespace

const TemplateRegistry& TemplateRegistry::builtin() {
  static const TemplateRegistry registry = [] {
    TemplateRegistry r;
    for (ProblemClass cls : kAllClasses) {
      for (Tier tier : {Tier::easy, Tier::medium, Tier::hard}) {
        StatementTemplate t;
        t.cls = cls;
        t.tier = tier;
        t.body = builtin_body(cls, tier);
        t.placeholder_schema = scan_placeholders(t.body);
        r.templates_[{cls, tier}] = std::move(t);
      }
    }
    return r;
  }();
  return registry;
}

TemplateRegistry TemplateRegistry::load_dir(const std::string& dir) {
  TemplateRegistry r = builtin();
  for (ProblemClass cls : kAllClasses) {
    for (Tier tier : {Tier::easy, Tier::medium, Tier::hard}) {
      const std::string path = dir + "/" + std::string(to_string(cls)) + "/" +
                               std::string(to_string(tier)) + ".txt";
      std::ifstream in(path, std::ios::binary);
      if (!in) continue;
      std::ostringstream buf;
      buf << in.rdbuf();
      std::string body = buf.str();
      while (!body.empty() && (body.back() == '\n' || body.back() == '\r'))
        body.pop_back();
      StatementTemplate t;
      t.cls = cls;
      t.tier = tier;
      t.body = std::move(body);
      t.placeholder_schema = scan_placeholders(t.body);
      r.templates_[{cls, tier}] = std::move(t);
    }
  }
  return r;
}

const StatementTemplate& TemplateRegistry::get(ProblemClass cls, Tier tier) const {
  auto it = templates_.find({cls, tier});
  if (it == templates_.end()) {
    throw MissingTemplate("no template for " + std::string(to_string(cls)) +
                          "/" + std::string(to_string(tier)));
  }
  return it->second;
}

std::string TemplateRegistry::template_hash(ProblemClass cls, Tier tier) const {
  return sha256_hex(get(cls, tier).body).substr(0, 16);
}

std::string render(const NumericInstance& instance, Tier tier,
                   const TemplateRegistry& registry) {
  const StatementTemplate& tmpl = registry.get(class_of(instance), tier);
  const PlaceholderMap values = placeholders_for(instance);

  std::string out;
  out.reserve(tmpl.body.size() * 2);
  for (std::size_t i = 0; i < tmpl.body.size(); ++i) {
    if (tmpl.body[i] != '{') {
      out.push_back(tmpl.body[i]);
      continue;
    }
    const std::size_t end = tmpl.body.find('}', i);
    if (end == std::string::npos)
      throw MissingTemplate("unterminated placeholder");
    const std::string name = tmpl.body.substr(i + 1, end - i - 1);
    auto it = values.find(name);
    if (it == values.end())
      throw MissingTemplate("unknown placeholder {" + name + "}");
    out += it->second;
    i = end;
  }
  if (out.find('{') != std::string::npos || out.find('}') != std::string::npos)
    throw MissingTemplate("brace survived rendering");
  return out;
}

std::string render_augmentations(const PerturbationSpec& perturbation) {
  std::vector<std::string> sentences;
  for (const auto& aug : perturbation.augmentations) {
    sentences.push_back(std::visit(
        overloaded{
            [](const TspForbidEdge& e) {
              return "There is no direct road between city " + fmt_int(e.i) +
                     " and city " + fmt_int(e.j) + ".";
            },
            [](const TspExactlyOneOf& e) {
              return "Exactly one of the following two roads must be included "
                     "in the tour: the road between city " +
                     fmt_int(e.a1) + " and city " + fmt_int(e.a2) +
                     ", the road between city " + fmt_int(e.b1) + " and city " +
                     fmt_int(e.b2) + ".";
            },
            [](const KnapsackExactlyOneOf& e) {
              return "Exactly one of item " + fmt_int(e.item_a + 1) +
                     " and item " + fmt_int(e.item_b + 1) +
                     " must be selected.";
            },
            [](const KnapsackCapacityReduction& e) {
              return "If item " + fmt_int(e.trigger_item + 1) +
                     " is selected, the effective backpack capacity is "
                     "reduced by " +
                     fmt_int(e.reduction) + " kg.";
            },
            [](const InventoryOrderCap& e) {
              return "On day " + fmt_int(e.day) +
                     ", the maximum order quantity is " + fmt_int(e.max_order) +
                     " units.";
            },
            [](const InventoryMinStock& e) {
              return "On day " + fmt_int(e.day) +
                     ", the on-hand inventory must be at least " +
                     fmt_int(e.min_stock) + " units.";
            },
        },
        aug));
  }
  return join(sentences, " ");
}

std::string build_statement(const NumericInstance& instance, Tier tier,
                            const PerturbationSpec& perturbation,
                            const TemplateRegistry& registry) {
  std::string text = render(instance, tier, registry);
  if (perturbation.has_augmentation()) {
    text += "\n\nAdditional requirements: " + render_augmentations(perturbation);
  }
  if (perturbation.shift && *perturbation.shift != 0) {
    const bool maximize = sense_of(class_of(instance)) == Sense::maximize;
    text += "\n\nA fixed overhead of " + fmt_money(*perturbation.shift) +
            " is added to the total " + (maximize ? "profit" : "cost") + ".";
  }
  return text;
}

std::vector<std::string> extract_numbers(std::string_view statement) {
  std::vector<std::string> numbers;
  std::size_t i = 0;
  const auto digit = [](char c) { return c >= '0' && c <= '9'; };
  while (i < statement.size()) {
    if (!digit(statement[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < statement.size() && digit(statement[j])) ++j;
    std::string integer(statement.substr(i, j - i));
    std::string fraction;
    if (j + 1 < statement.size() && statement[j] == '.' && digit(statement[j + 1])) {
      std::size_t k = j + 1;
      while (k < statement.size() && digit(statement[k])) ++k;
      fraction = std::string(statement.substr(j + 1, k - j - 1));
      j = k;
    }
    // Normalize: no leading zeros, no trailing fraction zeros.
    while (integer.size() > 1 && integer.front() == '0') integer.erase(0, 1);
    while (!fraction.empty() && fraction.back() == '0') fraction.pop_back();
    numbers.push_back(fraction.empty() ? integer : integer + "." + fraction);
    i = j;
  }
  std::sort(numbers.begin(), numbers.end());
  return numbers;
}

}  // namespace orbench
