#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qtrend/model.hpp"

namespace qtrend {

/// Triplet with possibly collapsed slots; nullopt renders as "*".
struct TripletPattern {
  std::optional<Sign> value;
  std::optional<Sign> d1;
  std::optional<Sign> d2;

  std::string to_string() const;
  std::vector<Triplet> expand() const;

  friend bool operator==(const TripletPattern&, const TripletPattern&) = default;
};

using DisplayRow = std::vector<TripletPattern>;

/// Collapses fully enumerated slot families into "*". Second derivatives are
/// collapsed first, then first derivatives, then values; a slot collapses only
/// when the three rows differing in that slot alone are all present. Rows are
/// ordered by their first expanded scenario.
std::vector<DisplayRow> group_for_display(std::span<const Scenario> scenarios);

/// Every scenario (as triplet vectors) a display row stands for, in canonical order.
std::vector<std::vector<Triplet>> expand(const DisplayRow& row);

/// The complete solution set of a model, canonically sorted and 1-based indexed.
class ScenarioSet {
 public:
  ScenarioSet() = default;
  ScenarioSet(TrendModel model, std::vector<Scenario> scenarios);

  const TrendModel& model() const noexcept { return model_; }
  const std::vector<Scenario>& scenarios() const noexcept { return scenarios_; }
  const std::vector<DisplayRow>& display_rows() const noexcept { return display_rows_; }

  std::size_t size() const noexcept { return scenarios_.size(); }
  bool empty() const noexcept { return scenarios_.empty(); }
  /// 1-based lookup; throws Error(UnknownNode).
  const Scenario& at(std::size_t index) const;

 private:
  TrendModel model_;
  std::vector<Scenario> scenarios_;
  std::vector<DisplayRow> display_rows_;
};

ScenarioSet solve(const TrendModel& model);

/// Whether solutions exist and none of them moves: every scenario has all
/// first derivatives zero.
bool is_restrictive(const TrendModel& model);

/// Scenarios unchanging in time (all first and second derivatives zero).
std::vector<Scenario> steady_scenarios(const ScenarioSet& set);

}  // namespace qtrend
