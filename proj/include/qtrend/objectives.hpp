#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qtrend/transitions.hpp"

namespace qtrend {

enum class Grade { AcceleratingMatch, Match, Miss };

std::string_view to_string(Grade g);

/// How well a variable's state meets its desired trend. INCREASE wants d1 = +
/// (accelerating when d2 = +); DECREASE wants d1 = - (accelerating when d2 = -).
/// Throws Error(NeutralDesire).
Grade grade(Triplet t, Desire desire);

struct ScenarioGrades {
  std::size_t index = 0;
  std::vector<Grade> grades;  // one per objective variable
  std::size_t accelerating = 0;
  std::size_t matched = 0;  // AcceleratingMatch or Match
  bool steady = false;
  bool terminal = false;

  bool satisfies_all() const noexcept { return matched == grades.size(); }
};

struct ObjectiveReport {
  std::vector<std::string> objectives;  // variables with a non-neutral desire
  std::vector<Desire> desires;
  /// Best first: most matches, then most accelerating matches, then index.
  std::vector<ScenarioGrades> ranked;

  /// Lookup by 1-based scenario index; nullptr if absent.
  const ScenarioGrades* find(std::size_t index) const noexcept;
};

/// Throws Error(NoObjectives) when every variable is neutral.
ObjectiveReport rank(const ScenarioSet& scenarios, const TransitionGraph& graph);

}  // namespace qtrend
