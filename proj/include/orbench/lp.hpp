#pragma once

#include <string>
#include <vector>

#include "orbench/instance.hpp"
#include "orbench/perturbation_spec.hpp"
#include "orbench/types.hpp"

namespace orbench {

enum class RowKind { le, ge, eq };

/// Row-oriented LP with implicit x >= 0.  Upper/lower variable bounds from
/// the formulations are materialized as rows so the row count matches the
/// written model.
struct LpProblem {
  Sense sense = Sense::minimize;
  vector_t objective;            // c
  matrix_t lhs;                  // A, rows x vars
  vector_t rhs;                  // b
  std::vector<RowKind> kinds;    // per row
  std::vector<std::string> var_names;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  scalar_t objective = 0;
  vector_t x;
  /// Reduced costs of the internal minimization at termination, one per
  /// standard-form column; sign-consistent (>= -1e-9) at an optimum.
  vector_t reduced_costs;
  std::int64_t iterations = 0;
};

/// Primal simplex, Bland's rule, two phases.  Slow but cycle-proof; the
/// generated LPs are small.
LpSolution solve_simplex(const LpProblem& lp);

/// Compiles an LP-family instance (or a min-cost-flow instance, used by the
/// cross-check suite) into the canonical rows.  Inventory augmentations
/// (order caps, stock floors) enter as extra rows.  Throws
/// std::invalid_argument for classes without an LP form.
LpProblem compile_lp(const NumericInstance& instance,
                     const std::vector<AugmentedConstraint>& augmentations = {});

}  // namespace orbench
