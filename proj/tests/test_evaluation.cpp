#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "orbench/evaluate.hpp"
#include "orbench/json_io.hpp"
#include "orbench/pipeline.hpp"

using namespace orbench;

namespace {

ProblemRecord record_with_truth(scalar_t objective) {
  GeneratorConfig cfg;
  cfg.seed = 23;
  ProblemRecord r = make_record(ProblemClass::knapsack, KnapsackParams{3, 0.5},
                                23, Tier::easy, cfg);
  r.ground_truth.objective_value = objective;
  return r;
}

ModelResult ptr_result(const std::string& id, const std::string& output) {
  ModelResult m;
  m.record_id = id;
  m.paradigm = Paradigm::ptr;
  m.raw_output = output;
  return m;
}

}  // namespace

TEST_SUITE("evaluation") {

TEST_CASE("prompt emission substitutes the statement") {
  GeneratorConfig cfg;
  cfg.seed = 40;
  ProblemRecord record = make_record(ProblemClass::tsp, TspParams{4}, 40,
                                     Tier::easy, cfg);

  const std::string ptr = emit_prompt(record, Paradigm::ptr);
  CHECK(ptr.find("<answer> optimal value here </answer>") != std::string::npos);
  CHECK(ptr.find(record.canonical_statement) != std::string::npos);
  CHECK(ptr.find("purely analytical") != std::string::npos);

  const std::string tir = emit_prompt(record, Paradigm::tir);
  CHECK(tir.find("import gurobipy as gp") != std::string::npos);
  CHECK(tir.find("from gurobipy import GRB") != std::string::npos);
  CHECK(tir.find(record.canonical_statement) != std::string::npos);

  // A validated narrative takes precedence; canonical is the fallback.
  record.rephrased_statements.push_back({"rejected text", false, "nope"});
  CHECK(emit_prompt(record, Paradigm::ptr).find(record.canonical_statement) !=
        std::string::npos);
  record.rephrased_statements.push_back({"validated NARRATIVE", true, "ok"});
  CHECK(emit_prompt(record, Paradigm::ptr).find("validated NARRATIVE") !=
        std::string::npos);
  CHECK(emit_prompt(record, Paradigm::ptr, /*prefer_rephrased=*/false)
            .find(record.canonical_statement) != std::string::npos);
}

TEST_CASE("answer extraction follows the tag-then-fallback rule") {
  CHECK(extract_answer("... <answer> 387.5 </answer>", Paradigm::ptr) ==
        doctest::Approx(387.5));
  CHECK(!extract_answer("the tour costs about four hundred", Paradigm::ptr)
             .has_value());
  CHECK(extract_answer("<answer> 10 </answer> then <answer> 12 </answer>",
                       Paradigm::ptr) == doctest::Approx(12.0));
  CHECK(extract_answer("value is 12 or maybe 15, final: 13", Paradigm::ptr) ==
        doctest::Approx(13.0));
  CHECK(extract_answer("<answer> -42.5 </answer>", Paradigm::ptr) ==
        doctest::Approx(-42.5));
  CHECK(extract_answer("<answer> 1.5e2 </answer>", Paradigm::ptr) ==
        doctest::Approx(150.0));
  // Comma-grouped digits are not one numeral; the fallback sees 234.
  CHECK(extract_answer("<answer> 1,234 </answer>", Paradigm::ptr) ==
        doctest::Approx(234.0));
  // Malformed tag falls back to the last numeral anywhere.
  CHECK(extract_answer("<answer> none </answer> but cost 55 total",
                       Paradigm::ptr) == doctest::Approx(55.0));
  // TIR passes through the externally executed objective.
  CHECK(extract_answer("ignored", Paradigm::tir, 99.0) == doctest::Approx(99.0));
  CHECK(!extract_answer("ignored", Paradigm::tir, std::nullopt).has_value());
}

TEST_CASE("grading criterion is strict relative error with epsilon") {
  const ProblemRecord hundred = record_with_truth(100.0);

  SUBCASE("100.05 passes") {
    const auto g = grade(hundred, ptr_result(hundred.id, "<answer>100.05</answer>"));
    CHECK(g.passed);
    CHECK(g.relative_error == doctest::Approx(5.0e-4).epsilon(1e-3));
  }
  SUBCASE("100.2 fails") {
    const auto g = grade(hundred, ptr_result(hundred.id, "<answer>100.2</answer>"));
    CHECK(!g.passed);
    CHECK(g.relative_error == doctest::Approx(2.0e-3).epsilon(1e-3));
  }
  SUBCASE("exact answer has zero error") {
    const auto g = grade(hundred, ptr_result(hundred.id, "<answer>100</answer>"));
    CHECK(g.passed);
    CHECK(g.relative_error == 0.0);
  }
  SUBCASE("zero optimum shows the epsilon guard") {
    const ProblemRecord zero = record_with_truth(0.0);
    const auto g = grade(zero, ptr_result(zero.id, "<answer>0.0001</answer>"));
    CHECK(!g.passed);
    CHECK(g.relative_error == doctest::Approx(100.0));
  }
  SUBCASE("missing answer grades as infinite error") {
    const auto g = grade(hundred, ptr_result(hundred.id, "no number here"));
    CHECK(!g.passed);
    CHECK(std::isinf(g.relative_error));
  }
  SUBCASE("the boundary itself fails, anything inside passes") {
    // Walk to the exact float where the computed error first reaches the
    // tolerance; the inequality must be strict on both sides of it.
    scalar_t boundary = 100.0 + kGradeRelTol * (100.0 + kGradeEps);
    auto error_of = [](scalar_t answer) {
      return std::abs(answer - 100.0) / (100.0 + kGradeEps);
    };
    while (error_of(boundary) < kGradeRelTol)
      boundary = std::nextafter(boundary, 200.0);
    while (error_of(std::nextafter(boundary, 100.0)) >= kGradeRelTol)
      boundary = std::nextafter(boundary, 100.0);
    ModelResult at;
    at.record_id = hundred.id;
    at.paradigm = Paradigm::tir;
    at.execution_status = ExecutionStatus::executed_ok;
    at.reported_objective = boundary;
    CHECK(!grade(hundred, at).passed);
    at.reported_objective = std::nextafter(boundary, 100.0);
    CHECK(grade(hundred, at).passed);
  }
}

TEST_CASE("aggregate computes pass rates, buckets, execution rate") {
  GeneratorConfig cfg;
  std::vector<ProblemRecord> records;
  std::vector<ModelResult> results;
  for (int i = 0; i < 10; ++i) {
    cfg.seed = derive_instance_seed(7000, i);
    ProblemRecord r = make_record(ProblemClass::knapsack,
                                  KnapsackParams{3 + (i % 2), 0.5}, cfg.seed,
                                  Tier::easy, cfg);
    ModelResult m;
    m.record_id = r.id;
    m.paradigm = Paradigm::ptr;
    const scalar_t y = r.ground_truth.objective_value;
    m.raw_output = "<answer> " + fmt_money(i < 7 ? y : y + 100.0) + " </answer>";
    // 1-decimal formatting is lossless here: values are integers.
    records.push_back(std::move(r));
    results.push_back(std::move(m));
  }
  const GradeReport report = aggregate(records, results);
  CHECK(report.graded == 10);
  CHECK(report.passed == 7);
  CHECK(report.avg_pass_at_1 == doctest::Approx(0.7));
  CHECK(!report.execution_rate.has_value());
  CHECK(report.buckets.size() == 2);  // knapsack/3 and knapsack/4

  SUBCASE("permutation invariance") {
    std::vector<ModelResult> shuffled = results;
    std::mt19937 gen(3);
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    CHECK(to_json(aggregate(records, shuffled)).dump() ==
          to_json(report).dump());
  }
  SUBCASE("execution rate counts only TIR results") {
    for (int i = 0; i < 8; ++i) {
      results[i].paradigm = Paradigm::tir;
      results[i].reported_objective = 1.0;
      results[i].execution_status = i < 2 ? ExecutionStatus::executed_ok
                                          : ExecutionStatus::execution_failed;
    }
    const GradeReport report2 = aggregate(records, results);
    REQUIRE(report2.execution_rate.has_value());
    CHECK(*report2.execution_rate == doctest::Approx(0.25));
  }
  SUBCASE("orphans are rejected") {
    results[0].record_id = "deadbeef";
    CHECK_THROWS_AS(aggregate(records, results), UnknownRecordId);
  }
}

TEST_CASE("model result schema enforces the TIR/PTR execution marker") {
  nlohmann::json tir{{"record_id", "x"},
                     {"paradigm", "TIR"},
                     {"raw_output", ""},
                     {"reported_objective", 5.0}};
  CHECK_THROWS_AS(model_result_from_json(tir), std::invalid_argument);
  tir["execution_status"] = "executed_ok";
  CHECK(model_result_from_json(tir).execution_status ==
        ExecutionStatus::executed_ok);

  nlohmann::json ptr{{"record_id", "x"},
                     {"paradigm", "PTR"},
                     {"raw_output", "<answer>1</answer>"},
                     {"execution_status", "executed_ok"}};
  CHECK_THROWS_AS(model_result_from_json(ptr), std::invalid_argument);

  // Round trip.
  ModelResult m;
  m.record_id = "abc";
  m.paradigm = Paradigm::tir;
  m.reported_objective = 3.5;
  m.execution_status = ExecutionStatus::execution_failed;
  const ModelResult back = model_result_from_json(to_json(m));
  CHECK(back.record_id == "abc");
  CHECK(back.paradigm == Paradigm::tir);
  CHECK(*back.reported_objective == 3.5);
}

TEST_CASE("report serialization carries null for missing answers") {
  const ProblemRecord r = record_with_truth(50.0);
  const GradeReport report =
      aggregate({r}, {ptr_result(r.id, "nothing numeric")});
  const nlohmann::json j = to_json(report);
  CHECK(j["per_instance"][0]["relative_error"].is_null());
  CHECK(j["graded"] == 1);
  const std::string csv = bucket_csv(report);
  CHECK(csv.rfind("class,scale,graded,passed,avg_pass_at_1\n", 0) == 0);
  CHECK(summary_table(report).find("overall: 0/1") != std::string::npos);
}

}  // TEST_SUITE
