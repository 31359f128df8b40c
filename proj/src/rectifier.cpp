#include "qtrend/rectifier.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>

#include "qtrend/error.hpp"
#include "qtrend/solver.hpp"

namespace qtrend {

namespace {

constexpr std::size_t kMaxRelations = 63;

double cost_of(const TrendModel& model, const std::vector<std::size_t>& rows) {
  double sum = 0.0;
  for (std::size_t r : rows) sum += model.relations()[r - 1].effective_weight();
  return sum;
}

bool rectifies(const TrendModel& model, const std::vector<std::size_t>& rows) {
  return !is_restrictive(apply_removal(model, RemovalSet{rows, 0.0}));
}

bool is_minimal(const TrendModel& model, const std::vector<std::size_t>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto smaller = rows;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
    if (rectifies(model, smaller)) return false;
  }
  return true;
}

std::vector<RemovalSet> fewest_rows(const TrendModel& model) {
  const std::size_t w = model.relation_count();
  for (std::size_t k = 1; k <= w; ++k) {
    std::vector<RemovalSet> found;
    std::vector<std::size_t> rows;
    std::function<void(std::size_t)> choose = [&](std::size_t next) {
      if (rows.size() == k) {
        if (rectifies(model, rows)) found.push_back({rows, cost_of(model, rows)});
        return;
      }
      for (std::size_t r = next; r + (k - rows.size()) <= w + 1; ++r) {
        rows.push_back(r);
        choose(r + 1);
        rows.pop_back();
      }
    };
    choose(1);
    if (!found.empty()) return found;
  }
  return {};
}

std::vector<RemovalSet> lightest_rows(const TrendModel& model) {
  const std::size_t w = model.relation_count();
  double best = std::numeric_limits<double>::infinity();
  auto tolerance = [&best] { return 1e-9 * std::max(1.0, best); };

  std::vector<RemovalSet> candidates;
  std::vector<std::size_t> rows;
  std::function<void(std::size_t, double)> extend = [&](std::size_t next, double cost) {
    for (std::size_t r = next; r <= w; ++r) {
      const double total = cost + model.relations()[r - 1].effective_weight();
      if (total > best + tolerance()) continue;
      rows.push_back(r);
      if (rectifies(model, rows)) {
        best = std::min(best, total);
        candidates.push_back({rows, total});
      } else {
        extend(r + 1, total);
      }
      rows.pop_back();
    }
  };
  extend(1, 0.0);

  std::vector<RemovalSet> out;
  for (auto& c : candidates) {
    if (c.cost <= best + tolerance() && is_minimal(model, c.rows)) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

TrendModel apply_removal(const TrendModel& model, const RemovalSet& removal) {
  std::vector<bool> drop(model.relation_count(), false);
  for (std::size_t r : removal.rows) {
    if (r == 0 || r > model.relation_count()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "relation row " + std::to_string(r) + " does not exist (model has " +
                      std::to_string(model.relation_count()) + " rows)");
    }
    drop[r - 1] = true;
  }
  std::vector<Relation> kept;
  for (std::size_t i = 0; i < model.relation_count(); ++i) {
    if (!drop[i]) kept.push_back(model.relations()[i]);
  }
  return model.with_relations(std::move(kept));
}

std::vector<RemovalSet> rectify(const TrendModel& model, Objective objective) {
  if (!is_restrictive(model)) return {RemovalSet{}};
  if (model.relation_count() > kMaxRelations) {
    throw Error(ErrorCode::InvalidArgument, "rectification supports at most 63 relations");
  }

  auto found = objective == Objective::O1 ? fewest_rows(model) : lightest_rows(model);
  if (found.empty()) {
    throw Error(ErrorCode::NoRectificationPossible,
                "no removal of relations yields a non-restrictive model");
  }
  std::sort(found.begin(), found.end(),
            [](const RemovalSet& a, const RemovalSet& b) { return a.rows < b.rows; });
  return found;
}

}  // namespace qtrend
