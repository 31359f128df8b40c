#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qtrend/objectives.hpp"
#include "qtrend/rectifier.hpp"

namespace qtrend::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Plain-text renderings. All output is deterministic and LF-terminated.
std::string scenarios_text(const ScenarioSet& set, bool expanded = false);
std::string graph_text(const TransitionGraph& graph);
std::string paths_text(std::size_t from, std::size_t to, std::size_t max_len,
                       const std::vector<Path>& found);
std::string cycles_text(const std::vector<Path>& found);
std::string removals_text(const TrendModel& model, Objective objective, bool restrictive,
                          const std::vector<RemovalSet>& removals);
std::string rank_text(const ScenarioSet& set, const ObjectiveReport& report);
std::string check_text(const TrendModel& model, const ScenarioSet& set, bool restrictive);

// JSON fragments of the pipeline output document.
Json document(std::string_view command, const TrendModel& model);
Json model_json(const TrendModel& model);
Json scenarios_json(const ScenarioSet& set);
Json display_rows_json(const ScenarioSet& set);
Json arcs_json(const TransitionGraph& graph);
Json removals_json(const std::vector<RemovalSet>& removals);
Json grades_json(const ObjectiveReport& report);

/// Rebuilds the scenario set recorded in a solve/graph document.
ScenarioSet scenarios_from_json(const Json& doc);

/// Re-renders a solve or graph JSON document as the equivalent text output.
std::string render_json_as_text(const Json& doc);

}  // namespace qtrend::report
