#include "orbench/perturb.hpp"

#include <stdexcept>

#include "orbench/canonical.hpp"
#include "orbench/generate.hpp"
#include "orbench/json_io.hpp"
#include "orbench/solve.hpp"

namespace orbench {

scalar_t sample_shift(const ShiftPolicy& policy, std::uint64_t seed) {
  if (!(policy.magnitude_low > 0) ||
      policy.magnitude_low > policy.magnitude_high)
    throw std::invalid_argument("invalid shift policy");
  Rng rng(seed);
  scalar_t k = rng.money_in(policy.magnitude_low, policy.magnitude_high);
  if (k < policy.magnitude_low) k = policy.magnitude_low;  // 1-decimal floor
  switch (policy.sign) {
    case ShiftSign::positive: return k;
    case ShiftSign::negative: return -k;
    case ShiftSign::either: return rng.coin() ? k : -k;
  }
  return k;
}

ProblemRecord apply_objective_shift(const ProblemRecord& record, scalar_t k,
                                    const TemplateRegistry& registry) {
  if (record.perturbation.has_shift() || record.ground_truth.shift_applied != 0)
    throw std::invalid_argument("record already shifted");
  ProblemRecord out = record;
  out.perturbation.shift = k;
  out.ground_truth.objective_value += k;
  out.ground_truth.shift_applied = k;
  if (k != 0) {
    out.canonical_statement = build_statement(out.instance, out.perturbation.tier,
                                              out.perturbation, registry);
    out.rephrased_statements.clear();  // narratives describe the old text
  }
  out.id = record_id(out.cls, out.theta, out.seed, out.perturbation);
  return out;
}

namespace {

TspForbidEdge sample_forbid(int n, Rng& rng) {
  const int i = static_cast<int>(rng.int_in(0, n - 1));
  int j = static_cast<int>(rng.int_in(0, n - 2));
  if (j >= i) ++j;
  return {std::min(i, j), std::max(i, j)};
}

bool same_edge(int a1, int a2, int b1, int b2) {
  return (a1 == b1 && a2 == b2) || (a1 == b2 && a2 == b1);
}

std::vector<AugmentedConstraint> sample_items(const ProblemRecord& record,
                                              const AugmentationPolicy& policy,
                                              Rng& rng) {
  std::vector<AugmentedConstraint> items;
  switch (record.cls) {
    case ProblemClass::tsp: {
      const auto& t = std::get<TspInstance>(record.instance);
      const int n = static_cast<int>(t.dist.rows());
      const int count = static_cast<int>(rng.int_in(1, 2));
      const bool want_forbid = count == 2 || rng.coin();
      TspForbidEdge forbid{-1, -1};
      if (want_forbid) {
        forbid = sample_forbid(n, rng);
        items.push_back(forbid);
      }
      if (static_cast<int>(items.size()) < count || !want_forbid) {
        // Two distinct tour edges, also distinct from the forbidden one.
        TspForbidEdge a{-1, -1}, b{-1, -1};
        do {
          a = sample_forbid(n, rng);
        } while (want_forbid && same_edge(a.i, a.j, forbid.i, forbid.j));
        do {
          b = sample_forbid(n, rng);
        } while (same_edge(a.i, a.j, b.i, b.j) ||
                 (want_forbid && same_edge(b.i, b.j, forbid.i, forbid.j)));
        items.push_back(TspExactlyOneOf{a.i, a.j, b.i, b.j});
      }
      break;
    }
    case ProblemClass::knapsack: {
      const auto& k = std::get<KnapsackInstance>(record.instance);
      const int n = static_cast<int>(k.weights.size());
      const bool reduction_ok = policy.capacity_reduction < k.capacity;
      const bool pair_ok = n >= 2;
      if (!reduction_ok && !pair_ok)
        throw std::invalid_argument("instance too small to augment");
      int count = static_cast<int>(rng.int_in(1, 2));
      if (!reduction_ok || !pair_ok) count = 1;
      if (pair_ok && (count == 2 || !reduction_ok || rng.coin())) {
        const int a = static_cast<int>(rng.int_in(0, n - 1));
        int b = static_cast<int>(rng.int_in(0, n - 2));
        if (b >= a) ++b;
        items.push_back(KnapsackExactlyOneOf{a, b});
      }
      if (static_cast<int>(items.size()) < count ||
          (items.empty() && reduction_ok)) {
        const int trigger = static_cast<int>(rng.int_in(0, n - 1));
        items.push_back(
            KnapsackCapacityReduction{trigger, policy.capacity_reduction});
      }
      break;
    }
    case ProblemClass::inventory: {
      const auto& v = std::get<InventoryInstance>(record.instance);
      const int count = static_cast<int>(rng.int_in(1, 2));
      const bool want_cap = count == 2 || rng.coin();
      if (want_cap) {
        const int day = static_cast<int>(rng.int_in(1, v.horizon));
        items.push_back(InventoryOrderCap{
            day, rng.int_in(v.order_min, v.order_max)});
      }
      if (static_cast<int>(items.size()) < count || !want_cap) {
        const int day = static_cast<int>(rng.int_in(1, v.horizon));
        items.push_back(InventoryMinStock{
            day, rng.int_in(1, std::max<std::int64_t>(1, v.warehouse_cap / 2))});
      }
      break;
    }
    default:
      throw std::invalid_argument("augmentation undefined for class");
  }
  return items;
}

}  // namespace

PerturbationSpec sample_augmentation(const ProblemRecord& record,
                                     std::uint64_t seed,
                                     const AugmentationPolicy& policy) {
  Rng rng(seed);
  for (int attempt = 0; attempt < policy.max_resamples; ++attempt) {
    PerturbationSpec spec = record.perturbation;
    spec.augmentations = sample_items(record, policy, rng);
    if (check_feasible(record.instance, spec.augmentations).feasible)
      return spec;
  }
  throw ResampleExhausted("no feasible augmentation after " +
                          fmt_int(policy.max_resamples) + " attempts");
}

ProblemRecord apply_augmentation(const ProblemRecord& record,
                                 const PerturbationSpec& spec,
                                 const TemplateRegistry& registry) {
  SolveOutcome outcome = solve(record.instance, spec.augmentations);
  if (outcome.status != SolveStatus::optimal)
    throw std::runtime_error("augmented instance is infeasible");

  ProblemRecord out = record;
  out.perturbation = spec;
  out.ground_truth = std::move(*outcome.ground_truth);
  if (spec.shift) {
    out.ground_truth.objective_value += *spec.shift;
    out.ground_truth.shift_applied = *spec.shift;
  }
  const CanonicalSummary summary = canonical_form_summary(out.instance);
  out.complexity.n_vars = summary.n_vars;  // augmentation never adds variables
  out.complexity.n_constraints = summary.n_constraints;
  for (const auto& item : spec.augmentations)
    out.complexity.n_constraints += added_rows(item);
  out.canonical_statement =
      build_statement(out.instance, spec.tier, spec, registry);
  out.rephrased_statements.clear();
  out.id = record_id(out.cls, out.theta, out.seed, out.perturbation);
  return out;
}

}  // namespace orbench
