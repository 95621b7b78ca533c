#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "orbench/record.hpp"

namespace orbench {

// JSONL wire format: one UTF-8 JSON object per line, keys in fixed
// alphabetical order so identical values hash identically.

nlohmann::json to_json(const DifficultyParams& theta);
nlohmann::json to_json(const NumericInstance& instance);
nlohmann::json to_json(const PerturbationSpec& spec);
nlohmann::json to_json(const GroundTruth& gt, ProblemClass cls);
nlohmann::json to_json(const ProblemRecord& record);

DifficultyParams theta_from_json(ProblemClass cls, const nlohmann::json& j);
NumericInstance instance_from_json(ProblemClass cls, const nlohmann::json& j);
PerturbationSpec perturbation_from_json(const nlohmann::json& j);
GroundTruth ground_truth_from_json(ProblemClass cls, const nlohmann::json& j);
ProblemRecord record_from_json(const nlohmann::json& j);

/// One line, no trailing newline.
std::string encode_record(const ProblemRecord& record);
ProblemRecord decode_record(std::string_view line);

}  // namespace orbench
