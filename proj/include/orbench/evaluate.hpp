#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbench/record.hpp"

namespace orbench {

struct UnknownRecordId : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Pass criterion: |y_hat - y*| / (|y*| + eps) < tol, strict.
inline constexpr scalar_t kGradeRelTol = 1e-3;
inline constexpr scalar_t kGradeEps = 1e-6;

enum class Paradigm { ptr, tir };

std::string_view to_string(Paradigm p);
std::optional<Paradigm> paradigm_from_string(std::string_view s);

enum class ExecutionStatus { executed_ok, execution_failed };

struct ModelResult {
  std::string record_id;
  Paradigm paradigm = Paradigm::ptr;
  std::optional<scalar_t> reported_objective;  // TIR: from the external runner
  std::string raw_output;
  std::optional<ExecutionStatus> execution_status;  // TIR only
};

struct InstanceGrade {
  std::string record_id;
  bool passed = false;
  scalar_t relative_error = 0;  // +inf when no answer was extracted
};

struct BucketGrade {
  ProblemClass cls = ProblemClass::tsp;
  int scale = 0;  // θ's primary knob, carried from the record
  std::string label;  // "<class>/<scale>"
  int graded = 0;
  int passed = 0;
  scalar_t avg_pass_at_1 = 0;
};

struct GradeReport {
  std::vector<InstanceGrade> per_instance;  // sorted (class, scale, record_id)
  int graded = 0;
  int passed = 0;
  scalar_t avg_pass_at_1 = 0;  // meaningless when graded == 0
  std::optional<scalar_t> execution_rate;  // over TIR results; absent if none
  std::vector<BucketGrade> buckets;
};

const std::string& tir_prompt_template();
const std::string& ptr_prompt_template();

/// Paradigm prompt with the record's statement at the question slot.
/// Prefers the first validated narrative; falls back to the canonical
/// statement (always, when prefer_rephrased is false).
std::string emit_prompt(const ProblemRecord& record, Paradigm paradigm,
                        bool prefer_rephrased = true);

/// PTR: numeral inside the last well-formed <answer>...</answer> tag, else
/// the last numeral in the output.  TIR: passthrough of reported_objective.
/// Accepts signs and scientific notation; rejects comma-grouped digits.
std::optional<scalar_t> extract_answer(const std::string& raw_output,
                                       Paradigm paradigm,
                                       std::optional<scalar_t> reported = {});

struct GradeOutcome {
  bool passed = false;
  scalar_t relative_error = 0;
};

GradeOutcome grade(const ProblemRecord& record, const ModelResult& result);

/// Folds results against records; throws UnknownRecordId listing the first
/// orphan.  Deterministic output order, independent of input order.
GradeReport aggregate(const std::vector<ProblemRecord>& records,
                      const std::vector<ModelResult>& results);

nlohmann::json to_json(const GradeReport& report);
nlohmann::json to_json(const ModelResult& result);
ModelResult model_result_from_json(const nlohmann::json& j);

/// Human-readable per-bucket table.
std::string summary_table(const GradeReport& report);

/// class,scale,graded,passed,avg_pass_at_1 rows.
std::string bucket_csv(const GradeReport& report);

}  // namespace orbench
