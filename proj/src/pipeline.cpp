#include "orbench/pipeline.hpp"

#include "orbench/canonical.hpp"
#include "orbench/json_io.hpp"
#include "orbench/solve.hpp"

namespace orbench {

namespace {

std::string cap_message(ProblemClass cls) {
  switch (cls) {
    case ProblemClass::tsp:
      return "size_exceeded: exact cap " + fmt_int(kTspMaxCities);
    case ProblemClass::bin_packing:
      return "size_exceeded: exact cap " + fmt_int(kBinPackingMaxItems);
    case ProblemClass::job_shop:
      return "size_exceeded: exact cap " + fmt_int(kJobShopMaxOperations) +
             " operations";
    default:
      return "size_exceeded";
  }
}

}  // namespace

ProblemRecord make_record(ProblemClass cls, const DifficultyParams& theta,
                          std::uint64_t seed, Tier tier,
                          const GeneratorConfig& config,
                          const TemplateRegistry& registry) {
  GeneratorConfig cfg = config;
  cfg.seed = seed;

  ProblemRecord record;
  record.cls = cls;
  record.theta = theta;
  record.seed = seed;
  record.perturbation.tier = tier;
  record.instance = generate(cls, theta, cfg);

  SolveOutcome outcome = solve(record.instance);
  if (outcome.status == SolveStatus::size_exceeded)
    throw SizeExceeded(cap_message(cls));
  if (outcome.status != SolveStatus::optimal)
    throw std::runtime_error("generated instance unexpectedly infeasible");
  record.ground_truth = std::move(*outcome.ground_truth);

  const CanonicalSummary summary = canonical_form_summary(record.instance);
  record.complexity = {summary.n_vars, summary.n_constraints};
  record.canonical_statement =
      build_statement(record.instance, tier, record.perturbation, registry);
  record.template_hash = registry.template_hash(cls, tier);
  record.id = record_id(cls, theta, seed, record.perturbation);
  return record;
}

}  // namespace orbench
