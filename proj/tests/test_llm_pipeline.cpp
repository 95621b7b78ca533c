#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <thread>

// Eigen-bearing headers must precede httplib: resolv.h's _res macro mangles
// Eigen parameter names otherwise.
#include "orbench/llm.hpp"
#include "orbench/pipeline.hpp"

#include <httplib.h>
#include <json.hpp>

using namespace orbench;
using nlohmann::json;

namespace {

/// In-process chat-completions stub.  The handler sees the user prompt and
/// returns the completion text; requests are counted and schema-checked.
class MockModel {
 public:
  using Handler = std::function<std::string(const std::string& prompt,
                                            double temperature)>;

  explicit MockModel(Handler handler) : handler_(std::move(handler)) {
    server_.Post("/v1/chat/completions", [this](const httplib::Request& req,
                                                httplib::Response& res) {
      ++calls_;
      json body = json::parse(req.body);
      schema_ok_ = schema_ok_ && body.contains("model") &&
                   body.contains("messages") && body.contains("temperature") &&
                   body["messages"][0]["role"] == "user";
      const std::string prompt = body["messages"][0]["content"];
      const double temperature = body["temperature"].get<double>();
      json reply{{"choices",
                  json::array({json{{"message",
                                     json{{"content",
                                           handler_(prompt, temperature)}}}}})}};
      res.set_content(reply.dump(), "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~MockModel() {
    server_.stop();
    thread_.join();
  }

  ModelEndpoint endpoint() const {
    ModelEndpoint e;
    e.base_url = "http://127.0.0.1:" + std::to_string(port_);
    e.model_name = "mock-model";
    e.auth_token_env_var = "";  // the mock needs no auth
    e.max_retries = 1;
    e.timeout = std::chrono::milliseconds(5000);
    e.backoff_base = std::chrono::milliseconds(1);
    return e;
  }

  int calls() const { return calls_; }
  bool schema_ok() const { return schema_ok_; }

 private:
  Handler handler_;
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> calls_{0};
  bool schema_ok_ = true;
};

bool is_judge_prompt(const std::string& prompt) {
  return prompt.find("Rephrased Problem:") != std::string::npos;
}

std::string slice_original(const std::string& prompt) {
  // Text between "Original Problem:\n" and "\n\nInstructions:".
  const std::string open = "Original Problem:\n";
  const std::size_t a = prompt.find(open) + open.size();
  const std::size_t b = prompt.find("\n\nInstructions:");
  return prompt.substr(a, b - a);
}

ProblemRecord small_record() {
  GeneratorConfig cfg;
  cfg.seed = 12;
  return make_record(ProblemClass::knapsack, KnapsackParams{3, 0.5}, 12,
                     Tier::easy, cfg);
}

}  // namespace

TEST_SUITE("llm_pipeline") {

TEST_CASE("judge completions are parsed leniently but fail closed") {
  const JudgeAnswer yes =
      parse_judge_completion(R"({"equivalent": true, "reason": "same model"})");
  CHECK(yes.equivalent);
  CHECK(yes.reason == "same model");

  const JudgeAnswer no = parse_judge_completion(
      R"(Sure! Here is my verdict: {"equivalent": false, "reason": "objective changed"} hope that helps)");
  CHECK(!no.equivalent);
  CHECK(no.reason == "objective changed");

  CHECK_THROWS_AS(parse_judge_completion("no braces at all"), JudgeParseError);
  CHECK_THROWS_AS(parse_judge_completion("{\"other\": 1}"), JudgeParseError);
}

TEST_CASE("verify_numeric compares multisets only") {
  CHECK(verify_numeric("pay 184.2 then 71.6", "pay 184.2 then 71.6"));
  CHECK(!verify_numeric("pay 184.2 then 71.6", "pay 184.3 then 71.6"));
  CHECK(verify_numeric("first 71.6, later 184.2", "184.2 before, 71.6 after"));
  CHECK(verify_numeric("64.0 km", "64 km"));
}

TEST_CASE("prompt builders embed the statement verbatim") {
  const std::string rephrase_prompt = build_rephrase_prompt("THE STATEMENT");
  CHECK(rephrase_prompt.find("Original Problem:\nTHE STATEMENT") !=
        std::string::npos);
  CHECK(rephrase_prompt.find("All numerical values, quantities, and parameter "
                             "relationships must remain exactly the same.") !=
        std::string::npos);
  const std::string judge_prompt = build_judge_prompt("ORIGINAL", "REPHRASED");
  CHECK(judge_prompt.find("Answer only in the following JSON format") !=
        std::string::npos);
  CHECK(judge_prompt.find("Rephrased Problem:\nREPHRASED") != std::string::npos);
}

TEST_CASE("happy path: echo rephraser and agreeable judge validate in one try") {
  MockModel mock([](const std::string& prompt, double temperature) {
    if (is_judge_prompt(prompt)) {
      CHECK(temperature == 0.0);
      return std::string(R"({"equivalent": true, "reason": "same model"})");
    }
    CHECK(temperature == doctest::Approx(0.8));
    return "In a different scenario: " + slice_original(prompt);
  });

  const ProblemRecord record = small_record();
  const RephraseOutcome outcome =
      augment_with_retry(record, mock.endpoint(), 5);
  CHECK(outcome.attempts.size() == 1);
  REQUIRE(outcome.record.rephrased_statements.size() == 1);
  CHECK(outcome.record.rephrased_statements[0].validated);
  CHECK(verify_numeric(record.canonical_statement,
                       outcome.record.rephrased_statements[0].text));
  CHECK(mock.schema_ok());
  CHECK(mock.calls() == 2);  // one rephrase + one judge
  // Ground truth and canonical statement are untouched.
  CHECK(outcome.record.canonical_statement == record.canonical_statement);
  CHECK(outcome.record.ground_truth.objective_value ==
        record.ground_truth.objective_value);
}

TEST_CASE("adversarial rephraser that edits one numeral never validates") {
  MockModel mock([](const std::string& prompt, double) {
    if (is_judge_prompt(prompt))
      return std::string(R"({"equivalent": true, "reason": "looks fine"})");
    return slice_original(prompt) + " Also consider 99999 extra units.";
  });

  const ProblemRecord record = small_record();
  const RephraseOutcome outcome =
      augment_with_retry(record, mock.endpoint(), 5);
  CHECK(outcome.record.rephrased_statements.empty());
  CHECK(outcome.attempts.size() == 5);
  for (const auto& attempt : outcome.attempts) {
    CHECK(!attempt.verdict.accepted());
    CHECK(!attempt.verdict.numeric_match);
  }
  // Numeric failures skip the judge call entirely.
  CHECK(mock.calls() == 5);
}

TEST_CASE("judge rejection then acceptance uses two attempts") {
  std::atomic<int> judge_calls{0};
  MockModel mock([&](const std::string& prompt, double) {
    if (is_judge_prompt(prompt)) {
      return judge_calls.fetch_add(1) == 0
                 ? std::string(R"({"equivalent": false, "reason": "objective changed"})")
                 : std::string(R"({"equivalent": true, "reason": "equivalent"})");
    }
    return "Retold: " + slice_original(prompt);
  });

  const RephraseOutcome outcome =
      augment_with_retry(small_record(), mock.endpoint(), 5);
  CHECK(outcome.attempts.size() == 2);
  CHECK(!outcome.attempts[0].verdict.judge_equivalent);
  CHECK(outcome.attempts[0].verdict.judge_reason == "objective changed");
  CHECK(outcome.attempts[1].verdict.accepted());
  REQUIRE(outcome.record.rephrased_statements.size() == 1);
}

TEST_CASE("unparseable judge output is a fail-closed rejection") {
  MockModel mock([](const std::string& prompt, double) {
    if (is_judge_prompt(prompt)) return std::string("I think it is fine!");
    return "Copy: " + slice_original(prompt);
  });
  const RephraseOutcome outcome =
      augment_with_retry(small_record(), mock.endpoint(), 2);
  CHECK(outcome.record.rephrased_statements.empty());
  CHECK(outcome.attempts.size() == 2);
  CHECK(outcome.attempts[0].verdict.judge_reason == "judge parse error");
}

TEST_CASE("empty completion raises EmptyCompletion") {
  MockModel mock([](const std::string&, double) { return std::string(); });
  CHECK_THROWS_AS(rephrase("text", mock.endpoint()), EmptyCompletion);
}

TEST_CASE("model errors carry the status") {
  httplib::Server server;
  server.Post("/v1/chat/completions",
              [](const httplib::Request&, httplib::Response& res) {
                res.status = 500;
                res.set_content("boom", "text/plain");
              });
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  ModelEndpoint endpoint;
  endpoint.base_url = "http://127.0.0.1:" + std::to_string(port);
  endpoint.model_name = "mock";
  endpoint.max_retries = 0;
  CHECK_THROWS_AS(rephrase("text", endpoint), ModelError);
  server.stop();
  thread.join();
}

TEST_CASE("unreachable endpoint raises TransportError after retries") {
  ModelEndpoint endpoint;
  endpoint.base_url = "http://127.0.0.1:9";  // discard port, nothing listens
  endpoint.model_name = "mock";
  endpoint.max_retries = 1;
  endpoint.timeout = std::chrono::milliseconds(200);
  endpoint.backoff_base = std::chrono::milliseconds(1);
  CHECK_THROWS_AS(rephrase("text", endpoint), TransportError);
  CHECK_THROWS_AS(augment_with_retry(small_record(), endpoint, 2),
                  TransportError);
}

TEST_CASE("missing auth variable fails before any network traffic") {
  ModelEndpoint endpoint;
  endpoint.base_url = "http://127.0.0.1:9";
  endpoint.model_name = "mock";
  endpoint.auth_token_env_var = "ORBENCH_TEST_SURELY_UNSET_VAR";
  unsetenv("ORBENCH_TEST_SURELY_UNSET_VAR");
  CHECK_THROWS_AS(rephrase("text", endpoint), ConfigurationError);
}

TEST_CASE("shipped prompt files mirror the built-ins") {
  const std::string root = std::string(ORBENCH_SOURCE_DIR) + "/prompts/";
  const std::pair<const char*, const std::string*> files[] = {
      {"rephrase.txt", &rephrase_prompt_template()},
      {"judge.txt", &judge_prompt_template()},
  };
  for (const auto& [name, body] : files) {
    std::ifstream in(root + name, std::ios::binary);
    REQUIRE(in.good());
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    while (!text.empty() && text.back() == '\n') text.pop_back();
    CHECK(text == *body);
  }
}

}  // TEST_SUITE
