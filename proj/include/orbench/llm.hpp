#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbench/record.hpp"

namespace orbench {

struct TransportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyCompletion : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct JudgeParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigurationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelEndpoint {
  std::string base_url;    // e.g. http://127.0.0.1:8080
  std::string model_name;
  std::string auth_token_env_var;  // empty = no auth header
  std::chrono::milliseconds timeout{30000};
  int max_retries = 3;
  int max_parallel = 4;
  std::chrono::milliseconds backoff_base{200};  // doubled per retry
};

struct ValidationVerdict {
  bool judge_equivalent = false;
  std::string judge_reason;
  bool numeric_match = false;
  bool accepted() const { return judge_equivalent && numeric_match; }
};

// Prompt texts are shipped under prompts/ and mirrored here at build time.
const std::string& rephrase_prompt_template();
const std::string& judge_prompt_template();

std::string build_rephrase_prompt(const std::string& canonical_statement);
std::string build_judge_prompt(const std::string& original,
                               const std::string& rephrased);

/// POST {base_url}/v1/chat/completions with a chat-completions body
/// (model, messages, temperature); returns the first choice's content.
/// Retries transport failures with exponential backoff.
std::string chat_completion(const ModelEndpoint& endpoint,
                            const std::string& prompt, double temperature);

/// Stage R: one raw rephrase candidate (temperature 0.8).
std::string rephrase(const std::string& canonical_statement,
                     const ModelEndpoint& endpoint);

struct JudgeAnswer {
  bool equivalent = false;
  std::string reason;
};

/// Extracts the first well-formed {"equivalent": ..., "reason": ...} object
/// from a completion; tolerant of surrounding prose.
JudgeAnswer parse_judge_completion(const std::string& completion);

/// Stage V, model half (temperature 0).  Throws JudgeParseError when no
/// valid object is found.
JudgeAnswer judge(const std::string& original, const std::string& rephrased,
                  const ModelEndpoint& endpoint);

/// Stage V, rule-based half: number multisets must match exactly.
bool verify_numeric(const std::string& original, const std::string& rephrased);

struct RephraseAttempt {
  std::string candidate;       // empty when the rephrase call itself failed
  ValidationVerdict verdict;
  std::string failure;  // transport/model/parse note, empty otherwise
};

struct RephraseOutcome {
  ProblemRecord record;  // gains at most one validated narrative
  std::vector<RephraseAttempt> attempts;
};

/// Repeats rephrase+judge until a candidate passes both checks or
/// max_attempts is exhausted.  The canonical statement and ground truth are
/// never modified.  Throws TransportError only when every attempt failed at
/// the transport level.
RephraseOutcome augment_with_retry(const ProblemRecord& record,
                                   const ModelEndpoint& endpoint,
                                   int max_attempts = 5);

}  // namespace orbench
