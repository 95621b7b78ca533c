#include "orbench/json_io.hpp"

#include <stdexcept>

#include "orbench/sha256.hpp"

namespace orbench {

namespace {

using nlohmann::json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

json vec_to_json(const vector_t& v) {
  json a = json::array();
  for (index_t i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json vec_to_json(const ivector_t& v) {
  json a = json::array();
  for (index_t i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json mat_to_json(const matrix_t& m) {
  json rows = json::array();
  for (index_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (index_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json mat_to_json(const imatrix_t& m) {
  json rows = json::array();
  for (index_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (index_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

vector_t vec_from_json(const json& a) {
  vector_t v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v(i) = a[i].get<scalar_t>();
  return v;
}

ivector_t ivec_from_json(const json& a) {
  ivector_t v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v(i) = a[i].get<std::int64_t>();
  return v;
}

matrix_t mat_from_json(const json& a) {
  const index_t rows = static_cast<index_t>(a.size());
  const index_t cols = rows == 0 ? 0 : static_cast<index_t>(a[0].size());
  matrix_t m(rows, cols);
  for (index_t i = 0; i < rows; ++i)
    for (index_t j = 0; j < cols; ++j) m(i, j) = a[i][j].get<scalar_t>();
  return m;
}

imatrix_t imat_from_json(const json& a) {
  const index_t rows = static_cast<index_t>(a.size());
  const index_t cols = rows == 0 ? 0 : static_cast<index_t>(a[0].size());
  imatrix_t m(rows, cols);
  for (index_t i = 0; i < rows; ++i)
    for (index_t j = 0; j < cols; ++j) m(i, j) = a[i][j].get<std::int64_t>();
  return m;
}

}  // namespace

json to_json(const DifficultyParams& theta) {
  return std::visit(
      overloaded{
          [](const TspParams& p) { return json{{"n_cities", p.n_cities}}; },
          [](const KnapsackParams& p) {
            return json{{"capacity_ratio", p.capacity_ratio},
                        {"n_items", p.n_items}};
          },
          [](const BinPackingParams& p) {
            return json{{"n_items", p.n_items}};
          },
          [](const JobShopParams& p) {
            return json{{"n_jobs", p.n_jobs}, {"n_machines", p.n_machines}};
          },
          [](const MinCostFlowParams& p) { return json{{"n", p.n}}; },
          [](const InventoryParams& p) { return json{{"horizon", p.horizon}}; },
          [](const PortfolioParams& p) {
            return json{{"n_assets", p.n_assets}};
          },
          [](const ProductionParams& p) {
            return json{{"n_products", p.n_products}};
          },
          [](const TransportationParams& p) { return json{{"n", p.n}}; },
          [](const PollutionParams& p) { return json{{"n", p.n}}; },
      },
      theta);
}

DifficultyParams theta_from_json(ProblemClass cls, const json& j) {
  switch (cls) {
    case ProblemClass::tsp:
      return TspParams{j.at("n_cities").get<int>()};
    case ProblemClass::knapsack:
      return KnapsackParams{j.at("n_items").get<int>(),
                            j.at("capacity_ratio").get<double>()};
    case ProblemClass::bin_packing:
      return BinPackingParams{j.at("n_items").get<int>()};
    case ProblemClass::job_shop:
      return JobShopParams{j.at("n_jobs").get<int>(),
                           j.at("n_machines").get<int>()};
    case ProblemClass::min_cost_flow:
      return MinCostFlowParams{j.at("n").get<int>()};
    case ProblemClass::inventory:
      return InventoryParams{j.at("horizon").get<int>()};
    case ProblemClass::portfolio:
      return PortfolioParams{j.at("n_assets").get<int>()};
    case ProblemClass::production:
      return ProductionParams{j.at("n_products").get<int>()};
    case ProblemClass::transportation:
      return TransportationParams{j.at("n").get<int>()};
    case ProblemClass::pollution_control:
      return PollutionParams{j.at("n").get<int>()};
  }
  throw std::invalid_argument("unknown class");
}

json to_json(const NumericInstance& instance) {
  return std::visit(
      overloaded{
          [](const TspInstance& t) {
            return json{{"coords", mat_to_json(t.coords)},
                        {"dist", mat_to_json(t.dist)},
                        {"labels", t.labels}};
          },
          [](const KnapsackInstance& k) {
            return json{{"capacity", k.capacity},
                        {"values", vec_to_json(k.values)},
                        {"weights", vec_to_json(k.weights)}};
          },
          [](const BinPackingInstance& b) {
            return json{{"bin_capacity", b.bin_capacity},
                        {"weights", vec_to_json(b.weights)}};
          },
          [](const JobShopInstance& js) {
            json jobs = json::array();
            for (const auto& job : js.jobs) {
              json ops = json::array();
              for (const auto& op : job)
                ops.push_back(json::array({op.machine, op.duration}));
              jobs.push_back(std::move(ops));
            }
            return json{{"jobs", std::move(jobs)},
                        {"n_machines", js.n_machines}};
          },
          [](const MinCostFlowInstance& f) {
            return json{{"capacities", mat_to_json(f.capacities)},
                        {"costs", mat_to_json(f.costs)},
                        {"demands", vec_to_json(f.demands)},
                        {"supplies", vec_to_json(f.supplies)}};
          },
          [](const InventoryInstance& v) {
            return json{{"demands", vec_to_json(v.demands)},
                        {"holding_cost", v.holding_cost},
                        {"horizon", v.horizon},
                        {"initial_stock", v.initial_stock},
                        {"lead_time", v.lead_time},
                        {"order_max", v.order_max},
                        {"order_min", v.order_min},
                        {"shortage_cost", v.shortage_cost},
                        {"unit_price", v.unit_price},
                        {"warehouse_cap", v.warehouse_cap}};
          },
          [](const PortfolioInstance& p) {
            return json{{"liquid", p.liquid},
                        {"lower", vec_to_json(p.lower)},
                        {"max_risk", p.max_risk},
                        {"min_liquidity", p.min_liquidity},
                        {"min_return", p.min_return},
                        {"returns", vec_to_json(p.returns)},
                        {"risks", vec_to_json(p.risks)},
                        {"upper", vec_to_json(p.upper)}};
          },
          [](const ProductionInstance& p) {
            return json{{"op_capacities", vec_to_json(p.op_capacities)},
                        {"profits", vec_to_json(p.profits)},
                        {"time_req", mat_to_json(p.time_req)}};
          },
          [](const TransportationInstance& t) {
            return json{{"costs", mat_to_json(t.costs)},
                        {"demands", vec_to_json(t.demands)},
                        {"supplies", vec_to_json(t.supplies)}};
          },
          [](const PollutionInstance& p) {
            return json{{"costs", mat_to_json(p.costs)},
                        {"emission_rates", vec_to_json(p.emission_rates)},
                        {"outputs", vec_to_json(p.outputs)},
                        {"reduction_target", p.reduction_target},
                        {"removal_eff", vec_to_json(p.removal_eff)}};
          },
      },
      instance);
}

NumericInstance instance_from_json(ProblemClass cls, const json& j) {
  switch (cls) {
    case ProblemClass::tsp: {
      TspInstance t;
      t.coords = mat_from_json(j.at("coords"));
      t.dist = mat_from_json(j.at("dist"));
      t.labels = j.at("labels").get<std::vector<std::string>>();
      return t;
    }
    case ProblemClass::knapsack: {
      KnapsackInstance k;
      k.capacity = j.at("capacity").get<std::int64_t>();
      k.values = ivec_from_json(j.at("values"));
      k.weights = ivec_from_json(j.at("weights"));
      return k;
    }
    case ProblemClass::bin_packing: {
      BinPackingInstance b;
      b.bin_capacity = j.at("bin_capacity").get<std::int64_t>();
      b.weights = ivec_from_json(j.at("weights"));
      return b;
    }
    case ProblemClass::job_shop: {
      JobShopInstance js;
      js.n_machines = j.at("n_machines").get<int>();
      for (const auto& ops : j.at("jobs")) {
        std::vector<JobShopInstance::Operation> job;
        for (const auto& op : ops)
          job.push_back({op[0].get<int>(), op[1].get<std::int64_t>()});
        js.jobs.push_back(std::move(job));
      }
      return js;
    }
    case ProblemClass::min_cost_flow: {
      MinCostFlowInstance f;
      f.capacities = imat_from_json(j.at("capacities"));
      f.costs = imat_from_json(j.at("costs"));
      f.demands = ivec_from_json(j.at("demands"));
      f.supplies = ivec_from_json(j.at("supplies"));
      return f;
    }
    case ProblemClass::inventory: {
      InventoryInstance v;
      v.demands = ivec_from_json(j.at("demands"));
      v.holding_cost = j.at("holding_cost").get<std::int64_t>();
      v.horizon = j.at("horizon").get<int>();
      v.initial_stock = j.at("initial_stock").get<std::int64_t>();
      v.lead_time = j.at("lead_time").get<int>();
      v.order_max = j.at("order_max").get<std::int64_t>();
      v.order_min = j.at("order_min").get<std::int64_t>();
      v.shortage_cost = j.at("shortage_cost").get<std::int64_t>();
      v.unit_price = j.at("unit_price").get<std::int64_t>();
      v.warehouse_cap = j.at("warehouse_cap").get<std::int64_t>();
      return v;
    }
    case ProblemClass::portfolio: {
      PortfolioInstance p;
      p.liquid = j.at("liquid").get<std::vector<int>>();
      p.lower = vec_from_json(j.at("lower"));
      p.max_risk = j.at("max_risk").get<scalar_t>();
      p.min_liquidity = j.at("min_liquidity").get<scalar_t>();
      p.min_return = j.at("min_return").get<scalar_t>();
      p.returns = vec_from_json(j.at("returns"));
      p.risks = vec_from_json(j.at("risks"));
      p.upper = vec_from_json(j.at("upper"));
      return p;
    }
    case ProblemClass::production: {
      ProductionInstance p;
      p.op_capacities = ivec_from_json(j.at("op_capacities"));
      p.profits = vec_from_json(j.at("profits"));
      p.time_req = mat_from_json(j.at("time_req"));
      return p;
    }
    case ProblemClass::transportation: {
      TransportationInstance t;
      t.costs = mat_from_json(j.at("costs"));
      t.demands = ivec_from_json(j.at("demands"));
      t.supplies = ivec_from_json(j.at("supplies"));
      return t;
    }
    case ProblemClass::pollution_control: {
      PollutionInstance p;
      p.costs = mat_from_json(j.at("costs"));
      p.emission_rates = vec_from_json(j.at("emission_rates"));
      p.outputs = ivec_from_json(j.at("outputs"));
      p.reduction_target = j.at("reduction_target").get<scalar_t>();
      p.removal_eff = vec_from_json(j.at("removal_eff"));
      return p;
    }
  }
  throw std::invalid_argument("unknown class");
}

namespace {

json augmentation_to_json(const AugmentedConstraint& c) {
  return std::visit(
      overloaded{
          [](const TspForbidEdge& e) {
            return json{{"i", e.i}, {"j", e.j}, {"kind", "tsp_forbid_edge"}};
          },
          [](const TspExactlyOneOf& e) {
            return json{{"edge_a", json::array({e.a1, e.a2})},
                        {"edge_b", json::array({e.b1, e.b2})},
                        {"kind", "tsp_exactly_one_of"}};
          },
          [](const KnapsackExactlyOneOf& e) {
            return json{{"item_a", e.item_a},
                        {"item_b", e.item_b},
                        {"kind", "knapsack_exactly_one_of"}};
          },
          [](const KnapsackCapacityReduction& e) {
            return json{{"kind", "knapsack_capacity_reduction"},
                        {"reduction", e.reduction},
                        {"trigger_item", e.trigger_item}};
          },
          [](const InventoryOrderCap& e) {
            return json{{"day", e.day},
                        {"kind", "inventory_order_cap"},
                        {"max_order", e.max_order}};
          },
          [](const InventoryMinStock& e) {
            return json{{"day", e.day},
                        {"kind", "inventory_min_stock"},
                        {"min_stock", e.min_stock}};
          },
      },
      c);
}

AugmentedConstraint augmentation_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "tsp_forbid_edge")
    return TspForbidEdge{j.at("i").get<int>(), j.at("j").get<int>()};
  if (kind == "tsp_exactly_one_of")
    return TspExactlyOneOf{j.at("edge_a")[0].get<int>(),
                           j.at("edge_a")[1].get<int>(),
                           j.at("edge_b")[0].get<int>(),
                           j.at("edge_b")[1].get<int>()};
  if (kind == "knapsack_exactly_one_of")
    return KnapsackExactlyOneOf{j.at("item_a").get<int>(),
                                j.at("item_b").get<int>()};
  if (kind == "knapsack_capacity_reduction")
    return KnapsackCapacityReduction{j.at("trigger_item").get<int>(),
                                     j.at("reduction").get<std::int64_t>()};
  if (kind == "inventory_order_cap")
    return InventoryOrderCap{j.at("day").get<int>(),
                             j.at("max_order").get<std::int64_t>()};
  if (kind == "inventory_min_stock")
    return InventoryMinStock{j.at("day").get<int>(),
                             j.at("min_stock").get<std::int64_t>()};
  throw std::invalid_argument("unknown augmentation kind: " + kind);
}

json assignment_to_json(const Assignment& a) {
  return std::visit(
      overloaded{
          [](const TourOrder& t) { return json{{"tour", t.order}}; },
          [](const ItemSelection& s) { return json{{"selected", s.selected}}; },
          [](const BinAssignment& b) {
            return json{{"bin_of", b.bin_of}, {"bins_used", b.bins_used}};
          },
          [](const OperationStarts& s) { return json{{"starts", s.starts}}; },
          [](const FlowMatrix& f) { return json{{"flow", mat_to_json(f.flow)}}; },
          [](const InventoryPlan& p) {
            return json{{"orders", vec_to_json(p.orders)},
                        {"shortages", vec_to_json(p.shortages)},
                        {"stocks", vec_to_json(p.stocks)}};
          },
          [](const VectorAssignment& v) { return json{{"x", vec_to_json(v.x)}}; },
          [](const MatrixAssignment& m) { return json{{"x", mat_to_json(m.x)}}; },
      },
      a);
}

Assignment assignment_from_json(ProblemClass cls, const json& j) {
  switch (cls) {
    case ProblemClass::tsp:
      return TourOrder{j.at("tour").get<std::vector<int>>()};
    case ProblemClass::knapsack:
      return ItemSelection{j.at("selected").get<std::vector<int>>()};
    case ProblemClass::bin_packing:
      return BinAssignment{j.at("bin_of").get<std::vector<int>>(),
                           j.at("bins_used").get<int>()};
    case ProblemClass::job_shop:
      return OperationStarts{
          j.at("starts").get<std::vector<std::vector<std::int64_t>>>()};
    case ProblemClass::min_cost_flow:
      return FlowMatrix{imat_from_json(j.at("flow"))};
    case ProblemClass::inventory:
      return InventoryPlan{vec_from_json(j.at("orders")),
                           vec_from_json(j.at("stocks")),
                           vec_from_json(j.at("shortages"))};
    case ProblemClass::portfolio:
    case ProblemClass::production:
      return VectorAssignment{vec_from_json(j.at("x"))};
    case ProblemClass::transportation:
    case ProblemClass::pollution_control:
      return MatrixAssignment{mat_from_json(j.at("x"))};
  }
  throw std::invalid_argument("unknown class");
}

}  // namespace

json to_json(const PerturbationSpec& spec) {
  json augs = json::array();
  for (const auto& a : spec.augmentations)
    augs.push_back(augmentation_to_json(a));
  json j{{"augmentations", std::move(augs)},
         {"tier", std::string(to_string(spec.tier))}};
  if (spec.shift) j["shift"] = *spec.shift;
  return j;
}

PerturbationSpec perturbation_from_json(const json& j) {
  PerturbationSpec spec;
  auto tier = tier_from_string(j.at("tier").get<std::string>());
  if (!tier) throw std::invalid_argument("unknown tier");
  spec.tier = *tier;
  if (j.contains("shift")) spec.shift = j.at("shift").get<scalar_t>();
  for (const auto& a : j.at("augmentations"))
    spec.augmentations.push_back(augmentation_from_json(a));
  return spec;
}

json to_json(const GroundTruth& gt, ProblemClass) {
  return json{{"assignment", assignment_to_json(gt.assignment)},
              {"objective_value", gt.objective_value},
              {"optimality_kind", "exact"},
              {"shift_applied", gt.shift_applied},
              {"solver_id", gt.solver_id}};
}

GroundTruth ground_truth_from_json(ProblemClass cls, const json& j) {
  GroundTruth gt;
  gt.assignment = assignment_from_json(cls, j.at("assignment"));
  gt.objective_value = j.at("objective_value").get<scalar_t>();
  gt.shift_applied = j.at("shift_applied").get<scalar_t>();
  gt.solver_id = j.at("solver_id").get<std::string>();
  return gt;
}

json to_json(const ProblemRecord& r) {
  json rephrased = json::array();
  for (const auto& s : r.rephrased_statements) {
    rephrased.push_back(json{{"judge_reason", s.judge_reason},
                             {"text", s.text},
                             {"validated", s.validated}});
  }
  json j{{"canonical_statement", r.canonical_statement},
         {"class", std::string(to_string(r.cls))},
         {"complexity",
          json{{"n_constraints", r.complexity.n_constraints},
               {"n_vars", r.complexity.n_vars}}},
         {"ground_truth", to_json(r.ground_truth, r.cls)},
         {"id", r.id},
         {"instance", to_json(r.instance)},
         {"perturbation", to_json(r.perturbation)},
         {"rephrased_statements", std::move(rephrased)},
         {"seed", r.seed},
         {"template_hash", r.template_hash},
         {"theta", to_json(r.theta)}};
  if (r.external_ppl) j["external_ppl"] = *r.external_ppl;
  return j;
}

ProblemRecord record_from_json(const json& j) {
  ProblemRecord r;
  auto cls = class_from_string(j.at("class").get<std::string>());
  if (!cls) throw std::invalid_argument("unknown class tag");
  r.cls = *cls;
  r.canonical_statement = j.at("canonical_statement").get<std::string>();
  r.complexity.n_constraints =
      j.at("complexity").at("n_constraints").get<std::int64_t>();
  r.complexity.n_vars = j.at("complexity").at("n_vars").get<std::int64_t>();
  r.ground_truth = ground_truth_from_json(r.cls, j.at("ground_truth"));
  r.id = j.at("id").get<std::string>();
  r.instance = instance_from_json(r.cls, j.at("instance"));
  r.perturbation = perturbation_from_json(j.at("perturbation"));
  for (const auto& s : j.at("rephrased_statements")) {
    r.rephrased_statements.push_back(
        {s.at("text").get<std::string>(), s.at("validated").get<bool>(),
         s.at("judge_reason").get<std::string>()});
  }
  r.seed = j.at("seed").get<std::uint64_t>();
  r.template_hash = j.at("template_hash").get<std::string>();
  r.theta = theta_from_json(r.cls, j.at("theta"));
  if (j.contains("external_ppl"))
    r.external_ppl = j.at("external_ppl").get<scalar_t>();
  return r;
}

std::string encode_record(const ProblemRecord& record) {
  return to_json(record).dump();
}

ProblemRecord decode_record(std::string_view line) {
  return record_from_json(json::parse(line));
}

std::string record_id(ProblemClass cls, const DifficultyParams& theta,
                      std::uint64_t seed, const PerturbationSpec& perturbation) {
  json key{{"class", std::string(to_string(cls))},
           {"perturbation", to_json(perturbation)},
           {"seed", seed},
           {"theta", to_json(theta)}};
  return sha256_hex(key.dump());
}

}  // namespace orbench
