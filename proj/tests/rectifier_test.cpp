#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qtrend/error.hpp"
#include "qtrend/rectifier.hpp"
#include "qtrend/solver.hpp"

namespace qtrend {
namespace {

using namespace qtrend::testing;

std::vector<std::vector<std::size_t>> rows_of(const std::vector<RemovalSet>& sets) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : sets) out.push_back(s.rows);
  return out;
}

using Rows = std::vector<std::vector<std::size_t>>;

TEST(Rectify, Model2FewestRemovals) {
  const auto found = rectify(model2(), Objective::O1);
  EXPECT_EQ(rows_of(found), (Rows{{1}, {2}, {3}}));
  for (const auto& s : found) EXPECT_DOUBLE_EQ(s.cost, 1.0);
  EXPECT_EQ(rows_of(found), brute_force_rectify(model2()).min_count);
}

TEST(Rectify, Model2LightestRemoval) {
  const auto m = load_fixture("model2_weighted.qtm");
  const auto found = rectify(m, Objective::O2);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].rows, (std::vector<std::size_t>{2}));
  EXPECT_DOUBLE_EQ(found[0].cost, 0.2);
  EXPECT_EQ(rows_of(found), brute_force_rectify(m).min_cost);
}

TEST(Rectify, NonRestrictiveModelNeedsNothing) {
  for (Objective o : {Objective::O1, Objective::O2}) {
    const auto found = rectify(model4(), o);
    ASSERT_EQ(found.size(), 1u);
    EXPECT_TRUE(found[0].rows.empty());
    EXPECT_EQ(found[0].cost, 0.0);
  }
}

TEST(Rectify, ImpossibleWithoutVariables) {
  // Nothing can move when there is nothing to move.
  try {
    rectify(TrendModel{}, Objective::O1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoRectificationPossible);
  }
}

TEST(Rectify, AgreesWithSubsetOracleOnRandomModels) {
  std::mt19937 rng(4242);
  int restrictive_seen = 0;
  for (int trial = 0; trial < 400 && restrictive_seen < 60; ++trial) {
    const TrendModel m = random_model(rng, 2 + trial % 2, 5, false);
    if (!is_restrictive(m)) continue;
    ++restrictive_seen;
    const auto oracle = brute_force_rectify(m);
    const auto o1 = rectify(m, Objective::O1);
    const auto o2 = rectify(m, Objective::O2);
    EXPECT_EQ(rows_of(o1), oracle.min_count) << serialize_model(m);
    EXPECT_EQ(rows_of(o2), oracle.min_cost) << serialize_model(m);
    for (const auto* family : {&o1, &o2}) {
      for (const auto& s : *family) {
        EXPECT_FALSE(is_restrictive(apply_removal(m, s))) << serialize_model(m);
        for (std::size_t i = 0; i < s.rows.size(); ++i) {
          RemovalSet smaller = s;
          smaller.rows.erase(smaller.rows.begin() + static_cast<std::ptrdiff_t>(i));
          EXPECT_TRUE(is_restrictive(apply_removal(m, smaller))) << serialize_model(m);
        }
      }
    }
  }
  EXPECT_GE(restrictive_seen, 20);
}

TEST(Rectify, EqualWeightsMakeBothObjectivesAgree) {
  std::mt19937 rng(77);
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 30; ++trial) {
    const TrendModel raw = random_model(rng, 3, 6, false);
    std::vector<Relation> rels = raw.relations();
    for (auto& r : rels) r.weight = 0.5;
    const TrendModel m = raw.with_relations(rels);
    if (!is_restrictive(m)) continue;
    ++checked;
    const auto o1 = rectify(m, Objective::O1);
    const auto o2 = rectify(m, Objective::O2);
    ASSERT_FALSE(o1.empty());
    std::size_t smallest = o2.front().rows.size();
    for (const auto& s : o2) smallest = std::min(smallest, s.rows.size());
    EXPECT_EQ(o1.front().rows.size(), smallest);
    EXPECT_EQ(rows_of(o1), rows_of(o2));
  }
  EXPECT_GE(checked, 10);
}

TEST(ApplyRemoval, KeepsRowOrderAndChecksIndices) {
  const auto m = model2();
  const auto kept = apply_removal(m, RemovalSet{{2}, 0.0});
  ASSERT_EQ(kept.relation_count(), 2u);
  EXPECT_EQ(kept.relations()[0], m.relations()[0]);
  EXPECT_EQ(kept.relations()[1], m.relations()[2]);
  EXPECT_EQ(kept.variables(), m.variables());
  EXPECT_EQ(apply_removal(m, RemovalSet{}), m);
  EXPECT_EQ(solve(apply_removal(m, RemovalSet{})).scenarios(), solve(m).scenarios());
  for (std::size_t bad : {std::size_t{0}, std::size_t{4}}) {
    try {
      apply_removal(m, RemovalSet{{bad}, 0.0});
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
    }
  }
}

}  // namespace
}  // namespace qtrend
