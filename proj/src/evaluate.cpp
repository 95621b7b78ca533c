#include "orbench/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "orbench/format.hpp"

namespace orbench {

namespace {

using nlohmann::json;

constexpr const char* kTirPrompt =
    R"(You are an operation research and Gurobi solver expert. Below is an operations research question:
{{Question}}

Carefully analyze the problem to identify the core elements such as Decision Variables, Objective Function, and Constraints, determine whether the variable is an integer or a continuous variable; Build a mathematical model and corresponding gurobi codes start with:
python
import gurobipy as gp
from gurobipy import GRB
- Make sure the model variable is named `model'.
- Avoid using "<" and ">" in Gurobi constraints; instead, use "<=" or ">=" as appropriate.
Think step by step to ensure flawless translation from math to code.)";

constexpr const char* kPtrPrompt =
    R"(You are a Mathematical Modeling and Optimization Consultant specializing in analytical solutions.
Below is an operations research question:
{{Question}}

Your task is to rigorously formulate and solve the following optimization problem.

Follow this structured approach: Begin with understanding the problem -> Extract the set and parameters -> Identify the variables -> Provide the objective function -> Analyze the constraints -> Develop the mathematical model -> Solve it step-by-step, output the corresponding decision variables

Instruct:
 1.) All equations and mathematical definitions must be presented clearly.
 2.) Provide a clear, step-by-step solution process. Absolutely do not use or reference any external OR solvers or software (e.g., Gurobi, PuLP, Solver). The solution must be purely analytical.
Output the final optimal objective function value in markdown with the exact tag: <answer> optimal value here </answer>)";

/// Strict numeral parse: optional sign, decimal or scientific notation, no
/// digit grouping.  Returns nullopt when `text` is not exactly one numeral.
std::optional<scalar_t> parse_numeral(std::string_view text) {
  std::size_t a = text.find_first_not_of(" \t\r\n");
  if (a == std::string_view::npos) return std::nullopt;
  std::size_t b = text.find_last_not_of(" \t\r\n");
  text = text.substr(a, b - a + 1);
  if (text.empty()) return std::nullopt;

  std::size_t i = 0;
  auto digit = [&](std::size_t k) {
    return k < text.size() && text[k] >= '0' && text[k] <= '9';
  };
  if (text[i] == '+' || text[i] == '-') ++i;
  if (!digit(i)) return std::nullopt;
  while (digit(i)) ++i;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (digit(i)) ++i;
  }
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (!digit(i)) return std::nullopt;
    while (digit(i)) ++i;
  }
  if (i != text.size()) return std::nullopt;
  return std::stod(std::string(text));
}

/// Last numeral appearing anywhere in free text.
std::optional<scalar_t> last_numeral(const std::string& text) {
  std::optional<scalar_t> found;
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_digit(text[i])) continue;
    std::size_t start = i;
    // A sign counts only when it does not join two numbers ("3-4" is a dash).
    if (start > 0 && (text[start - 1] == '-' || text[start - 1] == '+') &&
        (start < 2 || !is_digit(text[start - 2])))
      --start;
    std::size_t j = i;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    if (j + 1 < text.size() && text[j] == '.' && text[j + 1] >= '0' &&
        text[j + 1] <= '9') {
      ++j;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    }
    if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
      std::size_t k = j + 1;
      if (k < text.size() && (text[k] == '+' || text[k] == '-')) ++k;
      if (k < text.size() && text[k] >= '0' && text[k] <= '9') {
        while (k < text.size() && text[k] >= '0' && text[k] <= '9') ++k;
        j = k;
      }
    }
    if (auto v = parse_numeral(text.substr(start, j - start))) found = v;
    i = j;
  }
  return found;
}

}  // namespace

std::string_view to_string(Paradigm p) {
  return p == Paradigm::ptr ? "PTR" : "TIR";
}

std::optional<Paradigm> paradigm_from_string(std::string_view s) {
  if (s == "PTR" || s == "ptr") return Paradigm::ptr;
  if (s == "TIR" || s == "tir") return Paradigm::tir;
  return std::nullopt;
}

const std::string& tir_prompt_template() {
  static const std::string text = kTirPrompt;
  return text;
}

const std::string& ptr_prompt_template() {
  static const std::string text = kPtrPrompt;
  return text;
}

std::string emit_prompt(const ProblemRecord& record, Paradigm paradigm,
                        bool prefer_rephrased) {
  const std::string* statement = &record.canonical_statement;
  if (prefer_rephrased) {
    for (const auto& s : record.rephrased_statements) {
      if (s.validated) {
        statement = &s.text;
        break;
      }
    }
  }
  std::string prompt =
      paradigm == Paradigm::tir ? tir_prompt_template() : ptr_prompt_template();
  const std::string slot = "{{Question}}";
  const std::size_t at = prompt.find(slot);
  return prompt.replace(at, slot.size(), *statement);
}

std::optional<scalar_t> extract_answer(const std::string& raw_output,
                                       Paradigm paradigm,
                                       std::optional<scalar_t> reported) {
  if (paradigm == Paradigm::tir) return reported;

  // Last well-formed <answer>...</answer> tag wins.
  std::optional<scalar_t> tagged;
  std::size_t pos = 0;
  while (true) {
    const std::size_t open = raw_output.find("<answer>", pos);
    if (open == std::string::npos) break;
    const std::size_t close = raw_output.find("</answer>", open);
    if (close == std::string::npos) break;
    const std::string inner =
        raw_output.substr(open + 8, close - open - 8);
    if (auto v = parse_numeral(inner)) tagged = v;
    pos = close + 9;
  }
  if (tagged) return tagged;
  return last_numeral(raw_output);
}

GradeOutcome grade(const ProblemRecord& record, const ModelResult& result) {
  GradeOutcome out;
  const std::optional<scalar_t> answer =
      extract_answer(result.raw_output, result.paradigm,
                     result.reported_objective);
  if (!answer) {
    out.passed = false;
    out.relative_error = std::numeric_limits<scalar_t>::infinity();
    return out;
  }
  const scalar_t truth = record.ground_truth.objective_value;
  out.relative_error = std::abs(*answer - truth) / (std::abs(truth) + kGradeEps);
  out.passed = out.relative_error < kGradeRelTol;  // strict inequality
  return out;
}

GradeReport aggregate(const std::vector<ProblemRecord>& records,
                      const std::vector<ModelResult>& results) {
  std::map<std::string, const ProblemRecord*> by_id;
  for (const auto& r : records) by_id[r.id] = &r;

  struct Row {
    ProblemClass cls;
    int scale;
    InstanceGrade grade;
  };
  std::vector<Row> rows;
  int tir_total = 0, tir_ok = 0;
  for (const auto& result : results) {
    auto it = by_id.find(result.record_id);
    if (it == by_id.end())
      throw UnknownRecordId("result references unknown record: " +
                            result.record_id);
    const ProblemRecord& record = *it->second;
    GradeOutcome g = grade(record, result);
    rows.push_back({record.cls, primary_scale(record.theta),
                    {record.id, g.passed, g.relative_error}});
    if (result.paradigm == Paradigm::tir) {
      ++tir_total;
      if (result.execution_status &&
          *result.execution_status == ExecutionStatus::executed_ok)
        ++tir_ok;
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.cls, a.scale, a.grade.record_id) <
           std::tie(b.cls, b.scale, b.grade.record_id);
  });

  GradeReport report;
  std::map<std::pair<ProblemClass, int>, BucketGrade> buckets;
  for (const Row& row : rows) {
    report.per_instance.push_back(row.grade);
    ++report.graded;
    if (row.grade.passed) ++report.passed;
    BucketGrade& bucket = buckets[{row.cls, row.scale}];
    bucket.cls = row.cls;
    bucket.scale = row.scale;
    bucket.label =
        std::string(to_string(row.cls)) + "/" + fmt_int(row.scale);
    ++bucket.graded;
    if (row.grade.passed) ++bucket.passed;
  }
  for (auto& [key, bucket] : buckets) {
    bucket.avg_pass_at_1 =
        static_cast<scalar_t>(bucket.passed) / bucket.graded;
    report.buckets.push_back(bucket);
  }
  report.avg_pass_at_1 =
      report.graded == 0
          ? 0
          : static_cast<scalar_t>(report.passed) / report.graded;
  if (tir_total > 0)
    report.execution_rate = static_cast<scalar_t>(tir_ok) / tir_total;
  return report;
}

json to_json(const GradeReport& report) {
  json per = json::array();
  for (const auto& g : report.per_instance) {
    json row{{"passed", g.passed}, {"record_id", g.record_id}};
    // JSON has no infinity; an absent answer grades as null error.
    if (std::isinf(g.relative_error))
      row["relative_error"] = nullptr;
    else
      row["relative_error"] = g.relative_error;
    per.push_back(std::move(row));
  }
  json buckets = json::array();
  for (const auto& b : report.buckets) {
    buckets.push_back(json{{"avg_pass_at_1", b.avg_pass_at_1},
                           {"class", std::string(to_string(b.cls))},
                           {"graded", b.graded},
                           {"label", b.label},
                           {"passed", b.passed},
                           {"scale", b.scale}});
  }
  json j{{"buckets", std::move(buckets)},
         {"graded", report.graded},
         {"passed", report.passed},
         {"per_instance", std::move(per)}};
  j["avg_pass_at_1"] =
      report.graded == 0 ? json(nullptr) : json(report.avg_pass_at_1);
  if (report.execution_rate) j["execution_rate"] = *report.execution_rate;
  return j;
}

json to_json(const ModelResult& result) {
  json j{{"paradigm", std::string(to_string(result.paradigm))},
         {"raw_output", result.raw_output},
         {"record_id", result.record_id}};
  if (result.reported_objective)
    j["reported_objective"] = *result.reported_objective;
  if (result.execution_status) {
    j["execution_status"] = *result.execution_status == ExecutionStatus::executed_ok
                                ? "executed_ok"
                                : "execution_failed";
  }
  return j;
}

ModelResult model_result_from_json(const json& j) {
  ModelResult r;
  r.record_id = j.at("record_id").get<std::string>();
  auto paradigm = paradigm_from_string(j.at("paradigm").get<std::string>());
  if (!paradigm) throw std::invalid_argument("unknown paradigm");
  r.paradigm = *paradigm;
  r.raw_output = j.value("raw_output", "");
  if (j.contains("reported_objective") && !j["reported_objective"].is_null())
    r.reported_objective = j["reported_objective"].get<scalar_t>();
  if (j.contains("execution_status") && !j["execution_status"].is_null()) {
    const std::string s = j["execution_status"].get<std::string>();
    if (s == "executed_ok") r.execution_status = ExecutionStatus::executed_ok;
    else if (s == "execution_failed")
      r.execution_status = ExecutionStatus::execution_failed;
    else
      throw std::invalid_argument("unknown execution status: " + s);
  }
  if (r.paradigm == Paradigm::tir && !r.execution_status)
    throw std::invalid_argument("TIR result lacks execution_status");
  if (r.paradigm == Paradigm::ptr && r.execution_status)
    throw std::invalid_argument("PTR result carries execution_status");
  return r;
}

std::string summary_table(const GradeReport& report) {
  std::ostringstream out;
  out << "bucket                     graded  passed  avg-pass@1\n";
  for (const auto& b : report.buckets) {
    out << b.label;
    for (std::size_t i = b.label.size(); i < 27; ++i) out << ' ';
    std::string graded = fmt_int(b.graded), passed = fmt_int(b.passed);
    for (std::size_t i = graded.size(); i < 6; ++i) out << ' ';
    out << graded << "  ";
    for (std::size_t i = passed.size(); i < 6; ++i) out << ' ';
    out << passed << "  " << fmt_rate(b.avg_pass_at_1) << "\n";
  }
  out << "overall: " << report.passed << "/" << report.graded;
  if (report.graded > 0)
    out << " (avg-pass@1 = " << fmt_rate(report.avg_pass_at_1) << ")";
  if (report.execution_rate)
    out << ", execution rate " << fmt_rate(*report.execution_rate);
  out << "\n";
  return out.str();
}

std::string bucket_csv(const GradeReport& report) {
  std::string out = "class,scale,graded,passed,avg_pass_at_1\n";
  for (const auto& b : report.buckets) {
    out += std::string(to_string(b.cls)) + "," + fmt_int(b.scale) + "," +
           fmt_int(b.graded) + "," + fmt_int(b.passed) + "," +
           fmt_rate(b.avg_pass_at_1) + "\n";
  }
  return out;
}

}  // namespace orbench
