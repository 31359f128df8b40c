#include "qtrend/objectives.hpp"

#include <algorithm>

#include "qtrend/error.hpp"

namespace qtrend {

std::string_view to_string(Grade g) {
  switch (g) {
    case Grade::AcceleratingMatch: return "accelerating";
    case Grade::Match: return "match";
    case Grade::Miss: return "miss";
  }
  return "?";
}

Grade grade(Triplet t, Desire desire) {
  if (desire == Desire::Neutral) {
    throw Error(ErrorCode::NeutralDesire, "neutral variables carry no objective");
  }
  const Sign wanted = desire == Desire::Increase ? Sign::Plus : Sign::Minus;
  if (t.d1 != wanted) return Grade::Miss;
  return t.d2 == wanted ? Grade::AcceleratingMatch : Grade::Match;
}

const ScenarioGrades* ObjectiveReport::find(std::size_t index) const noexcept {
  auto it = std::find_if(ranked.begin(), ranked.end(),
                         [index](const ScenarioGrades& g) { return g.index == index; });
  return it == ranked.end() ? nullptr : &*it;
}

ObjectiveReport rank(const ScenarioSet& scenarios, const TransitionGraph& graph) {
  ObjectiveReport report;
  std::vector<std::size_t> columns;
  const auto& vars = scenarios.model().variables();
  for (std::size_t v = 0; v < vars.size(); ++v) {
    if (vars[v].desire == Desire::Neutral) continue;
    columns.push_back(v);
    report.objectives.push_back(vars[v].name);
    report.desires.push_back(vars[v].desire);
  }
  if (columns.empty()) {
    throw Error(ErrorCode::NoObjectives, "model declares no variable with a desired trend");
  }

  const auto ends = terminals(graph);
  for (const auto& s : scenarios.scenarios()) {
    ScenarioGrades g;
    g.index = s.index;
    g.steady = s.is_steady();
    g.terminal = std::binary_search(ends.begin(), ends.end(), s.index);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const Grade gr = grade(s.triplets[columns[c]], report.desires[c]);
      g.grades.push_back(gr);
      if (gr != Grade::Miss) ++g.matched;
      if (gr == Grade::AcceleratingMatch) ++g.accelerating;
    }
    report.ranked.push_back(std::move(g));
  }
  std::sort(report.ranked.begin(), report.ranked.end(),
            [](const ScenarioGrades& a, const ScenarioGrades& b) {
              if (a.matched != b.matched) return a.matched > b.matched;
              if (a.accelerating != b.accelerating) return a.accelerating > b.accelerating;
              return a.index < b.index;
            });
  return report;
}

}  // namespace qtrend
