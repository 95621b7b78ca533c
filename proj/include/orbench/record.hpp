#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbench/difficulty.hpp"
#include "orbench/ground_truth.hpp"
#include "orbench/instance.hpp"
#include "orbench/perturbation_spec.hpp"

namespace orbench {

struct RephrasedStatement {
  std::string text;
  bool validated = false;  // true only after judge + numeric verifier agree
  std::string judge_reason;
};

struct Complexity {
  std::int64_t n_vars = 0;
  std::int64_t n_constraints = 0;
};

/// The shippable unit: one problem, its statement(s), perturbations, and
/// solver-verified ground truth, plus enough provenance (seed, θ, template
/// hash) to regenerate it bit-for-bit.
struct ProblemRecord {
  std::string id;  // hex content hash of (class, θ, seed, perturbation)
  ProblemClass cls = ProblemClass::tsp;
  DifficultyParams theta;
  std::uint64_t seed = 0;
  NumericInstance instance;
  PerturbationSpec perturbation;
  std::string canonical_statement;
  std::vector<RephrasedStatement> rephrased_statements;
  GroundTruth ground_truth;
  Complexity complexity;
  std::optional<scalar_t> external_ppl;  // attached externally, never computed
  std::string template_hash;
};

/// Content hash over (class, theta, seed, perturbation); lowercase hex,
/// stable across runs and platforms.
std::string record_id(ProblemClass cls, const DifficultyParams& theta,
                      std::uint64_t seed, const PerturbationSpec& perturbation);

}  // namespace orbench
