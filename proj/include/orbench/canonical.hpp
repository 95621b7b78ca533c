#pragma once

#include <cstdint>

#include "orbench/ground_truth.hpp"
#include "orbench/instance.hpp"
#include "orbench/perturbation_spec.hpp"

namespace orbench {

struct CanonicalSummary {
  std::int64_t n_vars = 0;
  std::int64_t n_constraints = 0;
  Sense sense = Sense::minimize;
};

/// Variable/constraint counts of the canonical formulation.  TSP counts the
/// directed MTZ model (n(n-1) binaries, 2n degree rows plus (n-1)(n-2)
/// subtour rows) regardless of how the oracle actually solves; job shop
/// counts the disjunctive-graph MIP.  Non-negativity is never counted as a
/// row; formulation-labelled bound rows (portfolio boxes, flow capacities,
/// order-quantity rows) are.
CanonicalSummary canonical_form_summary(const NumericInstance& instance);

/// Objective of `assignment` on the instance's printed numbers, plus the
/// perturbation's shift K when present.  Throws std::invalid_argument on a
/// class or dimension mismatch.
scalar_t evaluate_objective(const NumericInstance& instance,
                            const PerturbationSpec& perturbation,
                            const Assignment& assignment);

}  // namespace orbench
