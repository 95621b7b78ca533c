#include "orbench/perturbation_spec.hpp"

namespace orbench {

std::string_view to_string(Tier t) {
  switch (t) {
    case Tier::easy: return "easy";
    case Tier::medium: return "medium";
    case Tier::hard: return "hard";
  }
  return "?";
}

std::optional<Tier> tier_from_string(std::string_view s) {
  if (s == "easy") return Tier::easy;
  if (s == "medium") return Tier::medium;
  if (s == "hard") return Tier::hard;
  return std::nullopt;
}

int added_rows(const AugmentedConstraint&) { return 1; }

}  // namespace orbench
