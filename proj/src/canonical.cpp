#include "orbench/canonical.hpp"

#include <set>
#include <stdexcept>

namespace orbench {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void mismatch(const char* what) {
  throw std::invalid_argument(std::string("evaluate_objective: ") + what);
}

}  // namespace

CanonicalSummary canonical_form_summary(const NumericInstance& instance) {
  CanonicalSummary s;
  s.sense = sense_of(class_of(instance));
  std::visit(
      overloaded{
          [&](const TspInstance& t) {
            const std::int64_t n = t.dist.rows();
            s.n_vars = n * (n - 1);                       // directed binaries
            s.n_constraints = 2 * n + (n - 1) * (n - 2);  // degree + MTZ rows
          },
          [&](const KnapsackInstance& k) {
            s.n_vars = k.weights.size();
            s.n_constraints = 1;
          },
          [&](const BinPackingInstance& b) {
            const std::int64_t n = b.weights.size();
            s.n_vars = n * n + n;  // x[i][j] plus bin-open indicators
            s.n_constraints = 2 * n;
          },
          [&](const JobShopInstance& j) {
            std::int64_t total_ops = 0, precedence = 0;
            std::vector<std::int64_t> per_machine(j.n_machines, 0);
            for (const auto& job : j.jobs) {
              total_ops += static_cast<std::int64_t>(job.size());
              precedence += static_cast<std::int64_t>(job.size()) - 1;
              for (const auto& op : job) per_machine[op.machine] += 1;
            }
            std::int64_t disjunctive_pairs = 0;
            for (std::int64_t m : per_machine)
              disjunctive_pairs += m * (m - 1) / 2;
            // starts + makespan + one order binary per machine pair
            s.n_vars = total_ops + 1 + disjunctive_pairs;
            s.n_constraints = precedence + 2 * disjunctive_pairs +
                              static_cast<std::int64_t>(j.jobs.size());
          },
          [&](const MinCostFlowInstance& f) {
            const std::int64_t n = f.supplies.size();
            s.n_vars = n * n;
            s.n_constraints = 2 * n + n * n;  // supply + demand + capacity rows
          },
          [&](const InventoryInstance& v) {
            s.n_vars = 3 * v.horizon;  // o_t, I_t, s_t
            s.n_constraints = 3 * v.horizon;  // order + balance + warehouse
          },
          [&](const PortfolioInstance& p) {
            const std::int64_t n = p.returns.size();
            s.n_vars = n;
            // budget, risk, return, liquidity + per-asset box rows
            s.n_constraints = 4 + 2 * n;
          },
          [&](const ProductionInstance& p) {
            s.n_vars = p.profits.size();
            s.n_constraints = p.op_capacities.size();
          },
          [&](const TransportationInstance& t) {
            const std::int64_t n = t.supplies.size();
            s.n_vars = n * static_cast<std::int64_t>(t.demands.size());
            s.n_constraints = n + t.demands.size();
          },
          [&](const PollutionInstance& p) {
            const std::int64_t n = p.emission_rates.size();
            s.n_vars = n * n;
            s.n_constraints = n + 1;  // production rows + reduction row
          },
      },
      instance);
  return s;
}

scalar_t evaluate_objective(const NumericInstance& instance,
                            const PerturbationSpec& perturbation,
                            const Assignment& assignment) {
  scalar_t value = std::visit(
      overloaded{
          [&](const TspInstance& t) -> scalar_t {
            const auto* tour = std::get_if<TourOrder>(&assignment);
            if (!tour) mismatch("tsp expects a tour order");
            const index_t n = t.dist.rows();
            if (static_cast<index_t>(tour->order.size()) != n)
              mismatch("tour length != city count");
            scalar_t total = 0;
            for (index_t k = 0; k < n; ++k) {
              int a = tour->order[k];
              int b = tour->order[(k + 1) % n];
              if (a < 0 || a >= n || b < 0 || b >= n)
                mismatch("tour city out of range");
              total += t.dist(a, b);
            }
            return total;
          },
          [&](const KnapsackInstance& k) -> scalar_t {
            const auto* sel = std::get_if<ItemSelection>(&assignment);
            if (!sel) mismatch("knapsack expects an item selection");
            std::int64_t total = 0;
            for (int i : sel->selected) {
              if (i < 0 || i >= k.values.size()) mismatch("item out of range");
              total += k.values(i);
            }
            return static_cast<scalar_t>(total);
          },
          [&](const BinPackingInstance& b) -> scalar_t {
            const auto* bins = std::get_if<BinAssignment>(&assignment);
            if (!bins) mismatch("bin packing expects a bin assignment");
            if (static_cast<index_t>(bins->bin_of.size()) != b.weights.size())
              mismatch("assignment length != item count");
            std::set<int> used(bins->bin_of.begin(), bins->bin_of.end());
            return static_cast<scalar_t>(used.size());
          },
          [&](const JobShopInstance& j) -> scalar_t {
            const auto* st = std::get_if<OperationStarts>(&assignment);
            if (!st) mismatch("job shop expects operation start times");
            if (st->starts.size() != j.jobs.size())
              mismatch("job count mismatch");
            std::int64_t makespan = 0;
            for (std::size_t jj = 0; jj < j.jobs.size(); ++jj) {
              if (st->starts[jj].size() != j.jobs[jj].size())
                mismatch("operation count mismatch");
              for (std::size_t k = 0; k < j.jobs[jj].size(); ++k) {
                makespan = std::max(
                    makespan, st->starts[jj][k] + j.jobs[jj][k].duration);
              }
            }
            return static_cast<scalar_t>(makespan);
          },
          [&](const MinCostFlowInstance& f) -> scalar_t {
            const auto* fl = std::get_if<FlowMatrix>(&assignment);
            if (!fl) mismatch("flow expects a flow matrix");
            if (fl->flow.rows() != f.costs.rows() ||
                fl->flow.cols() != f.costs.cols())
              mismatch("flow matrix shape");
            return static_cast<scalar_t>(
                (fl->flow.array() * f.costs.array()).sum());
          },
          [&](const InventoryInstance& v) -> scalar_t {
            const auto* plan = std::get_if<InventoryPlan>(&assignment);
            if (!plan) mismatch("inventory expects an order plan");
            if (plan->orders.size() != v.horizon ||
                plan->stocks.size() != v.horizon ||
                plan->shortages.size() != v.horizon)
              mismatch("plan length != horizon");
            return v.unit_price * plan->orders.sum() +
                   v.holding_cost * plan->stocks.sum() +
                   v.shortage_cost * plan->shortages.sum();
          },
          [&](const PortfolioInstance& p) -> scalar_t {
            const auto* w = std::get_if<VectorAssignment>(&assignment);
            if (!w) mismatch("portfolio expects weights");
            if (w->x.size() != p.returns.size()) mismatch("weights length");
            return p.returns.dot(w->x);
          },
          [&](const ProductionInstance& p) -> scalar_t {
            const auto* q = std::get_if<VectorAssignment>(&assignment);
            if (!q) mismatch("production expects quantities");
            if (q->x.size() != p.profits.size()) mismatch("quantities length");
            return p.profits.dot(q->x);
          },
          [&](const TransportationInstance& t) -> scalar_t {
            const auto* m = std::get_if<MatrixAssignment>(&assignment);
            if (!m) mismatch("transportation expects a shipment matrix");
            if (m->x.rows() != t.costs.rows() || m->x.cols() != t.costs.cols())
              mismatch("shipment matrix shape");
            return (m->x.array() * t.costs.array()).sum();
          },
          [&](const PollutionInstance& p) -> scalar_t {
            const auto* m = std::get_if<MatrixAssignment>(&assignment);
            if (!m) mismatch("pollution expects an allocation matrix");
            if (m->x.rows() != p.costs.rows() || m->x.cols() != p.costs.cols())
              mismatch("allocation matrix shape");
            return (m->x.array() * p.costs.array()).sum();
          },
      },
      instance);

  if (perturbation.shift) value += *perturbation.shift;
  return value;
}

}  // namespace orbench
