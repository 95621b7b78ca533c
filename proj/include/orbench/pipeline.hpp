#pragma once

#include "orbench/generate.hpp"
#include "orbench/record.hpp"
#include "orbench/templating.hpp"

namespace orbench {

struct SizeExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Generate, solve exactly, render, and stamp provenance: the full per-record
/// path behind `generate` batches.  Throws SizeExceeded beyond the exactness
/// caps and propagates generator errors.
ProblemRecord make_record(ProblemClass cls, const DifficultyParams& theta,
                          std::uint64_t seed, Tier tier,
                          const GeneratorConfig& config,
                          const TemplateRegistry& registry =
                              TemplateRegistry::builtin());

}  // namespace orbench
