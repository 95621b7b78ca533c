#include <doctest.h>

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "orbench/generate.hpp"
#include "orbench/templating.hpp"

using namespace orbench;

namespace {

TspInstance figure_instance() {
  TspInstance t;
  t.labels = {"A", "B", "C", "D"};
  t.coords = matrix_t::Zero(4, 2);
  t.dist = matrix_t::Zero(4, 4);
  auto set = [&](int i, int j, scalar_t d) {
    t.dist(i, j) = d;
    t.dist(j, i) = d;
  };
  set(0, 1, 184.2);
  set(0, 2, 71.6);
  set(0, 3, 94.6);
  set(1, 2, 126.8);
  set(1, 3, 94.5);
  set(2, 3, 64.0);
  return t;
}

std::string squash_whitespace(const std::string& text) {
  std::string out;
  bool in_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out.push_back(' ');
    in_space = false;
    out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_SUITE("templating") {

TEST_CASE("easy tier reproduces the published delivery-service text") {
  const std::string rendered = render(NumericInstance{figure_instance()},
                                      Tier::easy);
  const std::string expected =
      "Consider a delivery service that needs to visit 4 cities. "
      "The distances (km) are: "
      "A--B: 184.2, A--C: 71.6, A--D: 94.6 "
      "B--C: 126.8, B--D: 94.5, C--D: 64.0 "
      "Find the shortest possible route that visits each city once and "
      "returns to the start.";
  CHECK(squash_whitespace(rendered) == squash_whitespace(expected));
}

TEST_CASE("hard tier keeps the numbers and swaps the framing") {
  const std::string rendered = render(NumericInstance{figure_instance()},
                                      Tier::hard);
  CHECK(rendered.find("shortest Hamiltonian tour") != std::string::npos);
  CHECK(rendered.find("184.2") != std::string::npos);
  const std::string medium = render(NumericInstance{figure_instance()},
                                    Tier::medium);
  CHECK(medium.find("minimum-length cyclic route") != std::string::npos);
}

TEST_CASE("knapsack statement quotes the capacity and the all-or-nothing rule") {
  GeneratorConfig cfg;
  cfg.seed = 77;
  const auto inst = generate(ProblemClass::knapsack, KnapsackParams{4, 0.5}, cfg);
  for (Tier tier : {Tier::easy, Tier::medium, Tier::hard}) {
    const std::string text = render(inst, tier);
    CHECK(text.find("either taken in its entirety or left behind") !=
          std::string::npos);
    CHECK(text.find(fmt_int(std::get<KnapsackInstance>(inst).capacity)) !=
          std::string::npos);
  }
}

TEST_CASE("number multiset is tier-invariant for every class") {
  GeneratorConfig cfg;
  for (ProblemClass cls : kAllClasses) {
    CAPTURE(to_string(cls));
    for (int trial = 0; trial < 3; ++trial) {
      cfg.seed = derive_instance_seed(1000 + static_cast<int>(cls), trial);
      const auto inst = generate(cls, make_theta(cls, 3), cfg);
      const auto easy = extract_numbers(render(inst, Tier::easy));
      const auto medium = extract_numbers(render(inst, Tier::medium));
      const auto hard = extract_numbers(render(inst, Tier::hard));
      CHECK(easy == medium);
      CHECK(easy == hard);
    }
  }
}

TEST_CASE("render is deterministic and brace-free") {
  GeneratorConfig cfg;
  for (ProblemClass cls : kAllClasses) {
    cfg.seed = derive_instance_seed(17, static_cast<int>(cls));
    const auto inst = generate(cls, make_theta(cls, 3), cfg);
    const std::string a = render(inst, Tier::medium);
    CHECK(a == render(inst, Tier::medium));
    CHECK(a.find('{') == std::string::npos);
    CHECK(a.find('}') == std::string::npos);
  }
}

TEST_CASE("all tiers of a class expose the same placeholder schema") {
  const TemplateRegistry& r = TemplateRegistry::builtin();
  for (ProblemClass cls : kAllClasses) {
    CAPTURE(to_string(cls));
    const auto easy = r.get(cls, Tier::easy).placeholder_schema;
    CHECK(easy == r.get(cls, Tier::medium).placeholder_schema);
    CHECK(easy == r.get(cls, Tier::hard).placeholder_schema);
    CHECK(!easy.empty());
  }
}

TEST_CASE("extract_numbers normalizes and ignores order") {
  CHECK(extract_numbers("A--B: 184.2, A--C: 71.6") ==
        std::vector<std::string>{"184.2", "71.6"});
  CHECK(extract_numbers("").empty());
  CHECK(extract_numbers("64.0 km and 64 km") ==
        std::vector<std::string>{"64", "64"});
  CHECK(extract_numbers("x then 2.50 and 0.25") ==
        std::vector<std::string>{"0.25", "2.5"});
}

TEST_CASE("augmentation sentences match the published wording") {
  PerturbationSpec spec;
  spec.augmentations = {TspForbidEdge{0, 1}};
  CHECK(render_augmentations(spec) ==
        "There is no direct road between city 0 and city 1.");

  spec.augmentations = {KnapsackExactlyOneOf{0, 1}};
  CHECK(render_augmentations(spec) ==
        "Exactly one of item 1 and item 2 must be selected.");

  spec.augmentations = {InventoryOrderCap{2, 40}};
  CHECK(render_augmentations(spec) ==
        "On day 2, the maximum order quantity is 40 units.");

  spec.augmentations = {TspExactlyOneOf{1, 2, 2, 3}};
  CHECK(render_augmentations(spec) ==
        "Exactly one of the following two roads must be included in the tour: "
        "the road between city 1 and city 2, the road between city 2 and "
        "city 3.");

  spec.augmentations = {KnapsackCapacityReduction{2, 2}};
  CHECK(render_augmentations(spec) ==
        "If item 3 is selected, the effective backpack capacity is reduced by "
        "2 kg.");

  spec.augmentations = {InventoryMinStock{3, 25}};
  CHECK(render_augmentations(spec) ==
        "On day 3, the on-hand inventory must be at least 25 units.");
}

TEST_CASE("build_statement appends requirement block and shift sentence") {
  PerturbationSpec spec;
  spec.tier = Tier::easy;
  spec.augmentations = {TspForbidEdge{1, 2}};
  spec.shift = 100.0;
  const std::string text =
      build_statement(NumericInstance{figure_instance()}, Tier::easy, spec);
  CHECK(text.find("Additional requirements: There is no direct road between "
                  "city 1 and city 2.") != std::string::npos);
  CHECK(text.find("A fixed overhead of 100.0 is added to the total cost.") !=
        std::string::npos);
}

TEST_CASE("template directory override wins, absent files fall back") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "orbench_tmpl_test";
  fs::create_directories(dir / "tsp");
  {
    std::ofstream out(dir / "tsp" / "easy.txt");
    out << "Custom text with {n} cities and distances {distance_text}\n";
  }
  const TemplateRegistry registry = TemplateRegistry::load_dir(dir.string());
  const std::string rendered =
      render(NumericInstance{figure_instance()}, Tier::easy, registry);
  CHECK(rendered.rfind("Custom text with 4 cities", 0) == 0);
  // Tiers without an override keep the built-in body.
  CHECK(render(NumericInstance{figure_instance()}, Tier::hard, registry) ==
        render(NumericInstance{figure_instance()}, Tier::hard));
  fs::remove_all(dir);
}

TEST_CASE("shipped template files mirror the built-ins") {
  const std::string root = std::string(ORBENCH_SOURCE_DIR) + "/templates";
  const TemplateRegistry& builtin = TemplateRegistry::builtin();
  for (ProblemClass cls : kAllClasses) {
    for (Tier tier : {Tier::easy, Tier::medium, Tier::hard}) {
      const std::string path = root + "/" + std::string(to_string(cls)) + "/" +
                               std::string(to_string(tier)) + ".txt";
      CAPTURE(path);
      std::ifstream in(path, std::ios::binary);
      REQUIRE(in.good());
      std::string body((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
      while (!body.empty() && (body.back() == '\n' || body.back() == '\r'))
        body.pop_back();
      CHECK(body == builtin.get(cls, tier).body);
    }
  }
}

TEST_CASE("template hash is stable and tier-specific") {
  const TemplateRegistry& r = TemplateRegistry::builtin();
  CHECK(r.template_hash(ProblemClass::tsp, Tier::easy) ==
        r.template_hash(ProblemClass::tsp, Tier::easy));
  CHECK(r.template_hash(ProblemClass::tsp, Tier::easy) !=
        r.template_hash(ProblemClass::tsp, Tier::hard));
  CHECK(r.template_hash(ProblemClass::tsp, Tier::easy).size() == 16);
}

}  // TEST_SUITE
