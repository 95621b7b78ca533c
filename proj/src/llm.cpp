#include "orbench/llm.hpp"

#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "orbench/templating.hpp"

namespace orbench {

namespace {

using nlohmann::json;

constexpr double kRephraseTemperature = 0.8;  // diversity for R
constexpr double kJudgeTemperature = 0.0;     // determinism for V

constexpr const char* kRephrasePrompt =
    R"(You are an expert in operations research problem design and NLP data augmentation.
Your task is to take the following optimization problem and rewrite it according to the instructions.

Original Problem:
{{Original problem}}

Instructions:
- Rewrite the problem in a different real-world scenario or application context, while preserving its mathematical structure, optimization goal, and logical constraints.
- All numerical values, quantities, and parameter relationships must remain exactly the same.
- Use different terminology, phrasing, and narrative style to describe the problem, but ensure that the underlying model and relationships are identical.
- Do not add or remove any mathematical constraints, variables, or objectives.
- The rewritten problem should read naturally and clearly as a self-contained description in the new scenario.
- Do not include any explanations, reasoning, or headers.
- Output only the rewritten problem description, without commentary.

Output:
[Start your output below. No headers, no comments.])";

constexpr const char* kJudgePrompt =
    R"(You are an expert in operations research and mathematical modeling.

Below are two optimization problem descriptions.
Please check if the mathematical structure of the rephrased problem
is fully equivalent to the original one - meaning they have the same decision variables,
objective function type (min or max), and constraint relationships.

Original Problem:
{{Original problem}}

Rephrased Problem:
{{Rephrased problem}}

Answer only in the following JSON format:
{
  "equivalent": true/false,
  "reason": "your short reasoning"
})";

std::string replace_slot(std::string text, const std::string& slot,
                         const std::string& value) {
  const std::size_t at = text.find(slot);
  if (at == std::string::npos)
    throw std::runtime_error("prompt slot missing: " + slot);
  return text.replace(at, slot.size(), value);
}

std::string auth_token(const ModelEndpoint& endpoint) {
  if (endpoint.auth_token_env_var.empty()) return {};
  const char* token = std::getenv(endpoint.auth_token_env_var.c_str());
  if (!token || !*token) {
    throw ConfigurationError("auth environment variable not set: " +
                             endpoint.auth_token_env_var);
  }
  return token;
}

}  // namespace

const std::string& rephrase_prompt_template() {
  static const std::string text = kRephrasePrompt;
  return text;
}

const std::string& judge_prompt_template() {
  static const std::string text = kJudgePrompt;
  return text;
}

std::string build_rephrase_prompt(const std::string& canonical_statement) {
  return replace_slot(rephrase_prompt_template(), "{{Original problem}}",
                      canonical_statement);
}

std::string build_judge_prompt(const std::string& original,
                               const std::string& rephrased) {
  std::string prompt = replace_slot(judge_prompt_template(),
                                    "{{Original problem}}", original);
  return replace_slot(std::move(prompt), "{{Rephrased problem}}", rephrased);
}

std::string chat_completion(const ModelEndpoint& endpoint,
                            const std::string& prompt, double temperature) {
  const std::string token = auth_token(endpoint);

  json body{{"model", endpoint.model_name},
            {"messages", json::array({json{{"content", prompt},
                                           {"role", "user"}}})},
            {"temperature", temperature}};
  const std::string payload = body.dump();

  std::string last_error;
  for (int attempt = 0; attempt <= endpoint.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(endpoint.backoff_base * (1LL << (attempt - 1)));
    }
    httplib::Client client(endpoint.base_url);
    client.set_connection_timeout(endpoint.timeout);
    client.set_read_timeout(endpoint.timeout);
    httplib::Headers headers;
    if (!token.empty()) headers.emplace("Authorization", "Bearer " + token);
    auto res = client.Post("/v1/chat/completions", headers, payload,
                           "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;  // transport failure: retry with backoff
    }
    if (res->status < 200 || res->status >= 300) {
      throw ModelError("model endpoint returned status " +
                       std::to_string(res->status));
    }
    json reply = json::parse(res->body, nullptr, false);
    if (reply.is_discarded() || !reply.contains("choices") ||
        reply["choices"].empty()) {
      throw ModelError("malformed completion payload");
    }
    std::string content =
        reply["choices"][0].value("message", json::object()).value("content", "");
    if (content.empty()) throw EmptyCompletion("model returned no text");
    return content;
  }
  throw TransportError("endpoint unreachable after " +
                       std::to_string(endpoint.max_retries + 1) +
                       " attempts: " + last_error);
}

std::string rephrase(const std::string& canonical_statement,
                     const ModelEndpoint& endpoint) {
  return chat_completion(endpoint, build_rephrase_prompt(canonical_statement),
                         kRephraseTemperature);
}

JudgeAnswer parse_judge_completion(const std::string& completion) {
  // The model may wrap the object in prose; take the first balanced object
  // that parses and carries the expected keys.
  for (std::size_t start = 0; start < completion.size(); ++start) {
    if (completion[start] != '{') continue;
    int depth = 0;
    bool in_string = false;
    for (std::size_t i = start; i < completion.size(); ++i) {
      const char c = completion[i];
      if (in_string) {
        if (c == '\\') ++i;
        else if (c == '"') in_string = false;
        continue;
      }
      if (c == '"') in_string = true;
      else if (c == '{') ++depth;
      else if (c == '}') {
        if (--depth == 0) {
          json obj = json::parse(completion.substr(start, i - start + 1),
                                 nullptr, false);
          if (!obj.is_discarded() && obj.contains("equivalent") &&
              obj["equivalent"].is_boolean()) {
            return {obj["equivalent"].get<bool>(), obj.value("reason", "")};
          }
          break;  // balanced but not the verdict object; try the next '{'
        }
      }
    }
  }
  throw JudgeParseError("no valid judge object in completion");
}

JudgeAnswer judge(const std::string& original, const std::string& rephrased,
                  const ModelEndpoint& endpoint) {
  if (original.empty() || rephrased.empty())
    throw std::invalid_argument("judge requires nonempty texts");
  return parse_judge_completion(chat_completion(
      endpoint, build_judge_prompt(original, rephrased), kJudgeTemperature));
}

bool verify_numeric(const std::string& original, const std::string& rephrased) {
  return extract_numbers(original) == extract_numbers(rephrased);
}

RephraseOutcome augment_with_retry(const ProblemRecord& record,
                                   const ModelEndpoint& endpoint,
                                   int max_attempts) {
  if (max_attempts < 1) throw std::invalid_argument("max_attempts >= 1");
  RephraseOutcome out{record, {}};
  int transport_failures = 0;
  std::string last_transport;

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    RephraseAttempt log;
    try {
      log.candidate = rephrase(record.canonical_statement, endpoint);
    } catch (const TransportError& e) {
      ++transport_failures;
      last_transport = e.what();
      log.failure = std::string("transport: ") + e.what();
      out.attempts.push_back(std::move(log));
      continue;
    } catch (const std::runtime_error& e) {
      log.failure = e.what();
      out.attempts.push_back(std::move(log));
      continue;
    }

    log.verdict.numeric_match =
        verify_numeric(record.canonical_statement, log.candidate);
    if (log.verdict.numeric_match) {
      try {
        JudgeAnswer answer =
            judge(record.canonical_statement, log.candidate, endpoint);
        log.verdict.judge_equivalent = answer.equivalent;
        log.verdict.judge_reason = answer.reason;
      } catch (const JudgeParseError& e) {
        // Fail closed: an unparseable verdict never admits a narrative.
        log.verdict.judge_equivalent = false;
        log.verdict.judge_reason = "judge parse error";
        log.failure = e.what();
      } catch (const TransportError& e) {
        ++transport_failures;
        last_transport = e.what();
        log.failure = std::string("transport: ") + e.what();
        out.attempts.push_back(std::move(log));
        continue;
      }
    } else {
      log.verdict.judge_reason = "numeric mismatch, judge skipped";
    }

    const bool accepted = log.verdict.accepted();
    out.attempts.push_back(log);
    if (accepted) {
      out.record.rephrased_statements.push_back(
          {log.candidate, true, log.verdict.judge_reason});
      return out;
    }
  }

  if (transport_failures == max_attempts) {
    throw TransportError("all rephrase attempts failed at transport level: " +
                         last_transport);
  }
  return out;  // exhausted: record returned unchanged, attempts logged
}

}  // namespace orbench
