#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbench/evaluate.hpp"
#include "orbench/json_io.hpp"
#include "orbench/llm.hpp"
#include "orbench/perturb.hpp"
#include "orbench/pipeline.hpp"

namespace {

using namespace orbench;
using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

// ---------------------------------------------------------------------------
// Shared plumbing

struct ConfigFile {
  std::map<std::string, std::string> entries;
};

ConfigFile load_config(const std::string& path) {
  ConfigFile cfg;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r\"");
      const auto b = s.find_last_not_of(" \t\r\"");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!key.empty()) cfg.entries[key] = value;
  }
  return cfg;
}

/// Applies range keys from the config file; other keys are command settings
/// read by the callers.
void apply_range_entries(const ConfigFile& cfg, ValueRanges& ranges) {
  for (const auto& [key, value] : cfg.entries) {
    if (key.rfind("endpoint.", 0) == 0 || key.rfind("perturb.", 0) == 0 ||
        key.rfind("rephrase.", 0) == 0)
      continue;
    ranges.set(key, value);
  }
}

json run_header(const std::string& command, json config_echo) {
  return json{{"run", json{{"command", command},
                           {"config", std::move(config_echo)},
                           {"version", kVersion}}}};
}

std::vector<ProblemRecord> read_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset: " + path);
  std::vector<ProblemRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    if (j.contains("run")) continue;  // run-metadata header
    records.push_back(record_from_json(j));
  }
  return records;
}

void write_lines(const std::string& path, const json& header,
                 const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output: " + path);
  out << header.dump() << "\n";
  for (const auto& line : lines) out << line << "\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

/// Index-sharded worker pool; output slots keep input order so the result is
/// independent of the worker count.
void parallel_for(int jobs, std::size_t total,
                  const std::function<void(std::size_t)>& work) {
  if (jobs <= 1 || total <= 1) {
    for (std::size_t i = 0; i < total; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  const int n_workers = std::min<std::size_t>(jobs, total);
  for (int w = 0; w < n_workers; ++w) {
    workers.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= total) return;
        work(i);
      }
    });
  }
  for (auto& t : workers) t.join();
}

std::vector<int> parse_sizes(const std::string& text) {
  const auto dots = text.find("..");
  std::vector<int> sizes;
  if (dots == std::string::npos) {
    sizes.push_back(std::stoi(text));
  } else {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (hi < lo) throw std::runtime_error("bad size range: " + text);
    for (int s = lo; s <= hi; ++s) sizes.push_back(s);
  }
  return sizes;
}

int default_scale(ProblemClass cls) {
  switch (cls) {
    case ProblemClass::tsp: return 6;
    case ProblemClass::knapsack: return 8;
    case ProblemClass::bin_packing: return 6;
    case ProblemClass::job_shop: return 3;
    case ProblemClass::min_cost_flow: return 3;
    case ProblemClass::inventory: return 7;
    case ProblemClass::portfolio: return 4;
    case ProblemClass::production: return 3;
    case ProblemClass::transportation: return 3;
    case ProblemClass::pollution_control: return 3;
  }
  return 3;
}

std::vector<ProblemClass> parse_classes(const std::string& text) {
  std::vector<ProblemClass> classes;
  if (text == "all") {
    classes.assign(kAllClasses.begin(), kAllClasses.end());
    return classes;
  }
  std::stringstream ss(text);
  std::string tag;
  while (std::getline(ss, tag, ',')) {
    auto cls = class_from_string(tag);
    if (!cls) throw std::runtime_error("unknown class: " + tag);
    classes.push_back(*cls);
  }
  if (classes.empty()) throw std::runtime_error("no classes given");
  return classes;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateArgs {
  std::string classes = "tsp";
  std::string sizes;
  int count = 10;
  std::uint64_t seed = 42;
  std::string tier = "easy";
  int machines = 2;
  double capacity_ratio = 0.5;
  std::string output;
  std::string config_path;
  std::vector<std::string> overrides;
  std::string templates_dir;
  int jobs = 1;
  int max_resamples = 100;
};

int cmd_generate(const GenerateArgs& args) {
  GeneratorConfig gen;
  gen.seed = args.seed;
  gen.max_resamples = args.max_resamples;
  if (!args.config_path.empty())
    apply_range_entries(load_config(args.config_path), gen.ranges);
  for (const auto& kv : args.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("--set expects key=value");
    gen.ranges.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  const TemplateRegistry registry = args.templates_dir.empty()
                                        ? TemplateRegistry::builtin()
                                        : TemplateRegistry::load_dir(args.templates_dir);
  auto tier = tier_from_string(args.tier);
  if (!tier) throw std::runtime_error("unknown tier: " + args.tier);

  const std::vector<ProblemClass> classes = parse_classes(args.classes);
  std::vector<std::pair<ProblemClass, DifficultyParams>> points;
  for (ProblemClass cls : classes) {
    const std::vector<int> sizes = args.sizes.empty()
                                       ? std::vector<int>{default_scale(cls)}
                                       : parse_sizes(args.sizes);
    for (int size : sizes) {
      DifficultyParams theta = make_theta(cls, size);
      if (auto* js = std::get_if<JobShopParams>(&theta))
        js->n_machines = args.machines;
      if (auto* ks = std::get_if<KnapsackParams>(&theta))
        ks->capacity_ratio = args.capacity_ratio;
      points.emplace_back(cls, theta);
    }
  }

  const std::size_t total = points.size() * static_cast<std::size_t>(args.count);
  std::vector<std::string> lines(total);
  std::atomic<bool> failed{false};
  std::string first_error;
  std::mutex error_mutex;

  parallel_for(args.jobs, total, [&](std::size_t index) {
    if (failed.load()) return;
    try {
      const auto& [cls, theta] = points[index / args.count];
      const std::uint64_t seed = derive_instance_seed(gen.seed, index);
      ProblemRecord record =
          make_record(cls, theta, seed, *tier, gen, registry);
      lines[index] = encode_record(record);
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!failed.exchange(true)) first_error = e.what();
    }
  });
  if (failed) {
    std::cerr << "error: " << first_error << "\n";
    return 1;
  }

  json echo{{"capacity_ratio", args.capacity_ratio},
            {"classes", args.classes},
            {"count", args.count},
            {"machines", args.machines},
            {"overrides", args.overrides},
            {"seed", gen.seed},
            {"sizes", args.sizes},
            {"tier", args.tier}};
  write_lines(args.output, run_header("generate", std::move(echo)), lines);
  std::cerr << lines.size() << " records -> " << args.output << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// perturb

struct PerturbArgs {
  std::string input;
  std::string output;
  bool shift = false;
  std::string shift_range;
  std::string shift_sign;
  bool augment = false;
  std::int64_t capacity_reduction = -1;  // -1: config or default
  std::uint64_t seed = 42;
  int jobs = 1;
  std::string config_path;
  std::string templates_dir;
};

// Recipe keys: perturb.shift (true/false), perturb.shift_low/high,
// perturb.shift_sign, perturb.augment, perturb.capacity_reduction,
// perturb.seed.  Flags override the file.
int cmd_perturb(PerturbArgs args) {
  ShiftPolicy policy;
  AugmentationPolicy aug_policy;
  if (!args.config_path.empty()) {
    const ConfigFile cfg = load_config(args.config_path);
    auto lookup = [&](const char* key) -> const std::string* {
      auto it = cfg.entries.find(key);
      return it == cfg.entries.end() ? nullptr : &it->second;
    };
    if (const auto* v = lookup("perturb.shift")) args.shift |= *v == "true";
    if (const auto* v = lookup("perturb.augment")) args.augment |= *v == "true";
    if (const auto* v = lookup("perturb.shift_low"))
      policy.magnitude_low = std::stod(*v);
    if (const auto* v = lookup("perturb.shift_high"))
      policy.magnitude_high = std::stod(*v);
    if (const auto* v = lookup("perturb.shift_sign"); v && args.shift_sign.empty())
      args.shift_sign = *v;
    if (const auto* v = lookup("perturb.capacity_reduction");
        v && args.capacity_reduction < 0)
      args.capacity_reduction = std::stoll(*v);
    if (const auto* v = lookup("perturb.seed")) args.seed = std::stoull(*v);
  }
  const bool do_shift = args.shift || !args.shift_range.empty();
  if (!do_shift && !args.augment)
    throw std::runtime_error("nothing to do: pass --shift/--shift-range or --augment");

  if (!args.shift_range.empty()) {
    const auto comma = args.shift_range.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("--shift-range expects low,high");
    policy.magnitude_low = std::stod(args.shift_range.substr(0, comma));
    policy.magnitude_high = std::stod(args.shift_range.substr(comma + 1));
  }
  if (args.shift_sign.empty()) args.shift_sign = "either";
  if (args.shift_sign == "positive") policy.sign = ShiftSign::positive;
  else if (args.shift_sign == "negative") policy.sign = ShiftSign::negative;
  else if (args.shift_sign == "either") policy.sign = ShiftSign::either;
  else throw std::runtime_error("unknown --shift-sign: " + args.shift_sign);

  if (args.capacity_reduction >= 0)
    aug_policy.capacity_reduction = args.capacity_reduction;

  const TemplateRegistry registry =
      args.templates_dir.empty() ? TemplateRegistry::builtin()
                                 : TemplateRegistry::load_dir(args.templates_dir);
  const std::vector<ProblemRecord> records = read_dataset(args.input);
  std::vector<std::string> lines(records.size());
  std::vector<std::string> errors(records.size());

  parallel_for(args.jobs, records.size(), [&](std::size_t i) {
    try {
      ProblemRecord record = records[i];
      if (args.augment) {
        const PerturbationSpec spec =
            sample_augmentation(record, derive_instance_seed(args.seed, 2 * i),
                                aug_policy);
        record = apply_augmentation(record, spec, registry);
      }
      if (do_shift) {
        const scalar_t k =
            sample_shift(policy, derive_instance_seed(args.seed, 2 * i + 1));
        record = apply_objective_shift(record, k, registry);
      }
      lines[i] = encode_record(record);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });

  std::vector<std::string> kept;
  int failures = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!errors[i].empty()) {
      ++failures;
      std::cerr << "record " << records[i].id << ": " << errors[i] << "\n";
    } else {
      kept.push_back(lines[i]);
    }
  }
  json echo{{"augment", args.augment},
            {"capacity_reduction", aug_policy.capacity_reduction},
            {"seed", args.seed},
            {"shift", do_shift},
            {"shift_low", policy.magnitude_low},
            {"shift_high", policy.magnitude_high},
            {"shift_sign", args.shift_sign}};
  write_lines(args.output, run_header("perturb", std::move(echo)), kept);
  std::cerr << kept.size() << " records -> " << args.output;
  if (failures) std::cerr << " (" << failures << " failed)";
  std::cerr << "\n";
  return failures ? 1 : 0;
}

// ---------------------------------------------------------------------------
// rephrase

struct RephraseArgs {
  std::string input;
  std::string output;
  std::string endpoint_url;
  std::string model;
  std::string auth_env;
  int attempts = 5;
  int retries = 3;
  int timeout_ms = 30000;
  int backoff_ms = 200;
  int jobs = 1;
  std::string config_path;
};

// Endpoint keys: endpoint.base_url, endpoint.model_name, endpoint.auth_env,
// endpoint.timeout_ms, endpoint.max_retries, endpoint.max_parallel.  Flags
// override the file.
int cmd_rephrase(const RephraseArgs& args) {
  ModelEndpoint endpoint;
  endpoint.base_url = args.endpoint_url;
  endpoint.model_name = args.model;
  endpoint.auth_token_env_var = args.auth_env;
  endpoint.max_retries = args.retries;
  endpoint.timeout = std::chrono::milliseconds(args.timeout_ms);
  endpoint.backoff_base = std::chrono::milliseconds(args.backoff_ms);
  if (!args.config_path.empty()) {
    const ConfigFile cfg = load_config(args.config_path);
    auto lookup = [&](const char* key) -> const std::string* {
      auto it = cfg.entries.find(key);
      return it == cfg.entries.end() ? nullptr : &it->second;
    };
    if (const auto* v = lookup("endpoint.base_url"); v && endpoint.base_url.empty())
      endpoint.base_url = *v;
    if (const auto* v = lookup("endpoint.model_name");
        v && endpoint.model_name.empty())
      endpoint.model_name = *v;
    if (const auto* v = lookup("endpoint.auth_env");
        v && endpoint.auth_token_env_var.empty())
      endpoint.auth_token_env_var = *v;
    if (const auto* v = lookup("endpoint.timeout_ms"))
      endpoint.timeout = std::chrono::milliseconds(std::stoll(*v));
    if (const auto* v = lookup("endpoint.max_retries"))
      endpoint.max_retries = std::stoi(*v);
    if (const auto* v = lookup("endpoint.max_parallel"))
      endpoint.max_parallel = std::stoi(*v);
  }
  if (endpoint.base_url.empty())
    throw ConfigurationError("no endpoint configured (--endpoint)");
  if (endpoint.model_name.empty()) endpoint.model_name = "rephrase-model";
  if (endpoint.auth_token_env_var.empty())
    endpoint.auth_token_env_var = "ORBENCH_API_KEY";
  // Fail before any network traffic when the token variable is absent.
  if (!endpoint.auth_token_env_var.empty() &&
      !std::getenv(endpoint.auth_token_env_var.c_str()))
    throw ConfigurationError("auth environment variable not set: " +
                             endpoint.auth_token_env_var);

  const std::vector<ProblemRecord> records = read_dataset(args.input);
  std::vector<std::string> lines(records.size());
  std::vector<std::string> errors(records.size());
  std::atomic<int> validated{0};

  const int jobs = std::min(args.jobs, endpoint.max_parallel);
  parallel_for(jobs, records.size(), [&](std::size_t i) {
    try {
      RephraseOutcome outcome =
          augment_with_retry(records[i], endpoint, args.attempts);
      ProblemRecord record = std::move(outcome.record);
      bool got_validated = false;
      for (const auto& s : record.rephrased_statements)
        got_validated |= s.validated;
      if (got_validated) validated.fetch_add(1);
      // Embed the rejected attempts after the validated narrative.
      for (const auto& attempt : outcome.attempts) {
        if (attempt.candidate.empty() || attempt.verdict.accepted()) continue;
        record.rephrased_statements.push_back(
            {attempt.candidate, false,
             attempt.verdict.judge_reason.empty() ? attempt.failure
                                                  : attempt.verdict.judge_reason});
      }
      lines[i] = encode_record(record);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });

  std::vector<std::string> kept;
  int failures = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!errors[i].empty()) {
      ++failures;
      std::cerr << "record " << records[i].id << ": " << errors[i] << "\n";
    } else {
      kept.push_back(lines[i]);
    }
  }
  json echo{{"attempts", args.attempts},
            {"auth_env", args.auth_env},
            {"endpoint", endpoint.base_url},
            {"model", endpoint.model_name}};
  write_lines(args.output, run_header("rephrase", std::move(echo)), kept);
  std::cerr << validated.load() << "/" << records.size()
            << " records gained a validated narrative\n";
  if (failures) return 3;
  return validated.load() == static_cast<int>(records.size()) ? 0 : 1;
}

// ---------------------------------------------------------------------------
// prompts

struct PromptArgs {
  std::string input;
  std::string output;
  std::string paradigm = "PTR";
  bool canonical_only = false;
};

int cmd_prompts(const PromptArgs& args) {
  const std::vector<ProblemRecord> records = read_dataset(args.input);
  std::vector<Paradigm> paradigms;
  if (args.paradigm == "both") {
    paradigms = {Paradigm::ptr, Paradigm::tir};
  } else {
    auto p = paradigm_from_string(args.paradigm);
    if (!p) throw std::runtime_error("unknown paradigm: " + args.paradigm);
    paradigms = {*p};
  }
  std::vector<std::string> lines;
  for (const auto& record : records) {
    for (Paradigm p : paradigms) {
      json j{{"paradigm", std::string(to_string(p))},
             {"prompt", emit_prompt(record, p, !args.canonical_only)},
             {"record_id", record.id}};
      lines.push_back(j.dump());
    }
  }
  json echo{{"canonical_only", args.canonical_only},
            {"paradigm", args.paradigm}};
  write_lines(args.output, run_header("prompts", std::move(echo)), lines);
  std::cerr << lines.size() << " prompts -> " << args.output << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// grade

struct GradeArgs {
  std::string dataset;
  std::string results;
  std::string output;
  std::string csv;
};

int cmd_grade(const GradeArgs& args) {
  const std::vector<ProblemRecord> records = read_dataset(args.dataset);
  std::ifstream in(args.results);
  if (!in) throw std::runtime_error("cannot open results: " + args.results);
  std::vector<ModelResult> results;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    if (j.contains("run")) continue;
    results.push_back(model_result_from_json(j));
  }

  std::set<std::string> known;
  for (const auto& r : records) known.insert(r.id);
  std::vector<std::string> orphans;
  for (const auto& r : results) {
    if (!known.count(r.record_id)) orphans.push_back(r.record_id);
  }
  if (!orphans.empty()) {
    std::cerr << "error: results reference unknown records:\n";
    for (const auto& id : orphans) std::cerr << "  " << id << "\n";
    return 2;
  }

  if (results.empty())
    std::cerr << "warning: results file is empty, 0 instances graded\n";

  const GradeReport report = aggregate(records, results);
  json echo{{"dataset", args.dataset}, {"results", args.results}};
  write_lines(args.output, run_header("grade", std::move(echo)),
              {to_json(report).dump()});
  if (!args.csv.empty()) {
    std::ofstream csv(args.csv, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot open csv output: " + args.csv);
    csv << bucket_csv(report);
  }
  std::cout << summary_table(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seeded generator, perturber, and grader for NL optimization "
               "benchmarks"};
  app.set_version_flag("--version", std::string("orbench ") + kVersion);
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate",
                                      "Generate solved problem records");
  generate->add_option("--class", gen.classes,
                       "Comma-separated class tags, or 'all'");
  generate->add_option("--size", gen.sizes, "Primary scale, e.g. 6 or 4..8");
  generate->add_option("--count", gen.count, "Records per (class, size)");
  generate->add_option("--seed", gen.seed, "Master seed");
  generate->add_option("--tier", gen.tier, "easy | medium | hard");
  generate->add_option("--machines", gen.machines, "Job-shop machine count");
  generate->add_option("--capacity-ratio", gen.capacity_ratio,
                       "Knapsack capacity / total weight");
  generate->add_option("-o,--output", gen.output, "Output JSONL")->required();
  generate->add_option("--config", gen.config_path, "key=value config file");
  generate->add_option("--set", gen.overrides, "Override a value-range key");
  generate->add_option("--templates", gen.templates_dir,
                       "Template directory override");
  generate->add_option("--jobs", gen.jobs, "Worker threads");
  generate->add_option("--max-resamples", gen.max_resamples,
                       "Feasibility resample cap");

  PerturbArgs pert;
  auto* perturb = app.add_subcommand("perturb",
                                     "Shift objectives / augment constraints");
  perturb->add_option("-i,--input", pert.input, "Input JSONL")->required();
  perturb->add_option("-o,--output", pert.output, "Output JSONL")->required();
  perturb->add_flag("--shift", pert.shift, "Apply an objective shift");
  perturb->add_option("--shift-range", pert.shift_range,
                      "Shift magnitude low,high (implies --shift)");
  perturb->add_option("--shift-sign", pert.shift_sign,
                      "positive | negative | either");
  perturb->add_flag("--augment", pert.augment, "Add sampled constraints");
  perturb->add_option("--capacity-reduction", pert.capacity_reduction,
                      "Knapsack capacity reduction (kg)");
  perturb->add_option("--seed", pert.seed, "Perturbation seed");
  perturb->add_option("--jobs", pert.jobs, "Worker threads");
  perturb->add_option("--config", pert.config_path,
                      "key=value recipe file (perturb.* keys)");
  perturb->add_option("--templates", pert.templates_dir,
                      "Template directory override");

  RephraseArgs reph;
  auto* rephrase = app.add_subcommand("rephrase",
                                      "Rephrase + validate via a model endpoint");
  rephrase->add_option("-i,--input", reph.input, "Input JSONL")->required();
  rephrase->add_option("-o,--output", reph.output, "Output JSONL")->required();
  rephrase->add_option("--endpoint", reph.endpoint_url, "Base URL");
  rephrase->add_option("--model", reph.model, "Model name");
  rephrase->add_option("--auth-env", reph.auth_env,
                       "Env var holding the API token");
  rephrase->add_option("--attempts", reph.attempts, "Rephrase attempts cap");
  rephrase->add_option("--retries", reph.retries, "Transport retries");
  rephrase->add_option("--timeout-ms", reph.timeout_ms, "Request timeout");
  rephrase->add_option("--backoff-ms", reph.backoff_ms, "Backoff base");
  rephrase->add_option("--jobs", reph.jobs, "Worker threads");
  rephrase->add_option("--config", reph.config_path, "key=value config file");

  PromptArgs prom;
  auto* prompts = app.add_subcommand("prompts", "Emit evaluation prompts");
  prompts->add_option("-i,--input", prom.input, "Input JSONL")->required();
  prompts->add_option("-o,--output", prom.output, "Output JSONL")->required();
  prompts->add_option("--paradigm", prom.paradigm, "PTR | TIR | both");
  prompts->add_flag("--canonical-only", prom.canonical_only,
                    "Ignore validated narratives");

  GradeArgs grad;
  auto* grade = app.add_subcommand("grade", "Grade external model results");
  grade->add_option("--dataset", grad.dataset, "Dataset JSONL")->required();
  grade->add_option("--results", grad.results, "Model results JSONL")->required();
  grade->add_option("-o,--output", grad.output, "Report JSONL")->required();
  grade->add_option("--csv", grad.csv, "Per-bucket CSV export");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) return cmd_generate(gen);
    if (*perturb) return cmd_perturb(pert);
    if (*rephrase) return cmd_rephrase(reph);
    if (*prompts) return cmd_prompts(prom);
    if (*grade) return cmd_grade(grad);
  } catch (const ConfigurationError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
