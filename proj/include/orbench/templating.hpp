#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbench/instance.hpp"
#include "orbench/perturbation_spec.hpp"

namespace orbench {

struct MissingTemplate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StatementTemplate {
  ProblemClass cls = ProblemClass::tsp;
  Tier tier = Tier::easy;
  std::string body;  // placeholders written {name}
  std::vector<std::string> placeholder_schema;
};

/// Immutable after construction; render is reentrant.
class TemplateRegistry {
 public:
  /// The built-in templates (mirrored under templates/<class>/<tier>.txt).
  static const TemplateRegistry& builtin();

  /// Loads <class>/<tier>.txt files from `dir`, falling back to the built-in
  /// text for any file that is absent.
  static TemplateRegistry load_dir(const std::string& dir);

  const StatementTemplate& get(ProblemClass cls, Tier tier) const;

  /// Hash of the template body, recorded in each record for provenance.
  std::string template_hash(ProblemClass cls, Tier tier) const;

 private:
  std::map<std::pair<ProblemClass, Tier>, StatementTemplate> templates_;
};

/// Stage M: deterministic canonical statement.  Every instance number is
/// printed under the fixed formatting rules; the output never contains a
/// brace character.
std::string render(const NumericInstance& instance, Tier tier,
                   const TemplateRegistry& registry = TemplateRegistry::builtin());

/// One sentence per augmented constraint, in the order given.
std::string render_augmentations(const PerturbationSpec& perturbation);

/// Full statement: canonical text, then the "Additional requirements:" block
/// when constraints were added, then the declared objective shift.
std::string build_statement(const NumericInstance& instance, Tier tier,
                            const PerturbationSpec& perturbation,
                            const TemplateRegistry& registry =
                                TemplateRegistry::builtin());

/// Locale-independent decimal numerals, normalized ("64.0" == "64"),
/// order-insensitive.  Returned sorted so equal multisets compare equal.
std::vector<std::string> extract_numbers(std::string_view statement);

}  // namespace orbench
