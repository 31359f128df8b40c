#pragma once

#include <cstddef>
#include <vector>

#include "qtrend/model.hpp"

namespace qtrend {

enum class Objective {
  O1,  // fewest removed relations
  O2,  // smallest total weight of removed relations
};

/// 1-based relation rows to delete from a model, with their total weight.
struct RemovalSet {
  std::vector<std::size_t> rows;  // ascending
  double cost = 0.0;

  friend bool operator==(const RemovalSet&, const RemovalSet&) = default;
};

/// Copy of the model without the listed rows. Throws Error(IndexOutOfRange).
TrendModel apply_removal(const TrendModel& model, const RemovalSet& removal);

/// Every optimal set of relation rows whose removal makes a restrictive model
/// admit dynamic scenarios, ordered lexicographically by rows. Returns one
/// empty set when the model is not restrictive. Missing weights count as 1.
///
/// O1 searches subsets by increasing size; O2 walks subsets depth-first with
/// a cost bound. Both stop extending a subset once it already rectifies the
/// model, since removing further rows only enlarges the scenario set. Every
/// returned set is minimal: putting back any one row restores restrictiveness.
std::vector<RemovalSet> rectify(const TrendModel& model, Objective objective);

}  // namespace qtrend
