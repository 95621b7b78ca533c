#pragma once

#include <cstdint>

#include "orbench/record.hpp"
#include "orbench/templating.hpp"

namespace orbench {

enum class ShiftSign { positive, negative, either };

struct ShiftPolicy {
  scalar_t magnitude_low = 10;    // > 0
  scalar_t magnitude_high = 1000;  // >= low
  ShiftSign sign = ShiftSign::either;
};

/// Draws K as a 1-decimal real under the policy; deterministic in seed.
scalar_t sample_shift(const ShiftPolicy& policy, std::uint64_t seed);

/// min f(x) => min f(x) + K (max-sense classes shift identically).  The
/// statement gains one sentence declaring K; the assignment is untouched and
/// the optimum moves by exactly K.  Requires an unshifted record.
ProblemRecord apply_objective_shift(
    const ProblemRecord& record, scalar_t k,
    const TemplateRegistry& registry = TemplateRegistry::builtin());

struct AugmentationPolicy {
  std::int64_t capacity_reduction = 2;  // kg, the knapsack exemplar value
  int max_resamples = 100;
};

/// Uniformly sampled constraint parameters for the record's class (tsp,
/// knapsack, inventory only), resampled until feasible.  Deterministic in
/// seed.  Throws std::invalid_argument for other classes and
/// ResampleExhausted when no feasible draw is found.
PerturbationSpec sample_augmentation(const ProblemRecord& record,
                                     std::uint64_t seed,
                                     const AugmentationPolicy& policy = {});

/// Re-solves under the constraints, extends the statement, bumps the row
/// count; n_vars never changes.
ProblemRecord apply_augmentation(
    const ProblemRecord& record, const PerturbationSpec& spec,
    const TemplateRegistry& registry = TemplateRegistry::builtin());

}  // namespace orbench
