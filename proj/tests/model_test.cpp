#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "qtrend/error.hpp"
#include "qtrend/model.hpp"

namespace qtrend {
namespace {

Triplet T(const char* s) { return *Triplet::parse(s); }

Relation rel(RelationType type, std::optional<Coupling> coupling = std::nullopt) {
  return Relation{type, "X", "Y", std::nullopt, coupling};
}

TEST(RelationAdmissible, Examples) {
  EXPECT_TRUE(relation_admissible(rel(RelationType::Inc, Coupling::Weak), T("+++"), T("++-")));
  EXPECT_FALSE(relation_admissible(rel(RelationType::Inc, Coupling::Weak), T("+++"), T("+-+")));
  EXPECT_FALSE(relation_admissible(rel(RelationType::DG), T("++0"), T("++0")));
  EXPECT_TRUE(relation_admissible(rel(RelationType::DG), T("++0"), T("++-")));
  EXPECT_TRUE(relation_admissible(rel(RelationType::Dec, Coupling::Strong), T("+++"), T("+--")));
  EXPECT_FALSE(relation_admissible(rel(RelationType::Dec, Coupling::Strong), T("+++"), T("+-+")));
}

TEST(RelationAdmissible, ModelCouplingAppliesWithoutOverride) {
  const Relation r = rel(RelationType::Inc);
  EXPECT_TRUE(relation_admissible(r, T("+++"), T("++-"), Polarity::Standard, Coupling::Weak));
  EXPECT_FALSE(relation_admissible(r, T("+++"), T("++-"), Polarity::Standard, Coupling::Strong));
  const Relation weak = rel(RelationType::Inc, Coupling::Weak);
  EXPECT_TRUE(relation_admissible(weak, T("+++"), T("++-"), Polarity::Standard, Coupling::Strong));
}

TEST(RelationAdmissible, SwappedPolarityExchangesIncAndDec) {
  for (int a = 0; a < Triplet::kCount; ++a) {
    for (int b = 0; b < Triplet::kCount; ++b) {
      const Triplet tx = Triplet::from_index(a);
      const Triplet ty = Triplet::from_index(b);
      for (Coupling c : {Coupling::Weak, Coupling::Strong}) {
        EXPECT_EQ(relation_admissible(rel(RelationType::Inc), tx, ty, Polarity::Swapped, c),
                  relation_admissible(rel(RelationType::Dec), tx, ty, Polarity::Standard, c));
      }
      for (RelationType t : kAllRelationTypes) {
        if (!is_shape(t)) continue;
        EXPECT_EQ(relation_admissible(rel(t), tx, ty, Polarity::Swapped),
                  relation_admissible(rel(t), tx, ty, Polarity::Standard));
      }
    }
  }
}

TEST(RelationAdmissible, SymmetricTypes) {
  const RelationType symmetric[] = {RelationType::Inc, RelationType::Dec, RelationType::LG,
                                    RelationType::LD};
  for (RelationType t : symmetric) {
    for (Coupling c : {Coupling::Weak, Coupling::Strong}) {
      for (int a = 0; a < Triplet::kCount; ++a) {
        for (int b = 0; b < Triplet::kCount; ++b) {
          const Triplet tx = Triplet::from_index(a);
          const Triplet ty = Triplet::from_index(b);
          EXPECT_EQ(relation_admissible(rel(t, c), tx, ty), relation_admissible(rel(t, c), ty, tx))
              << to_string(t) << " " << tx.to_string() << " " << ty.to_string();
        }
      }
    }
  }
}

TEST(RelationAdmissible, SteadyStatePropagates) {
  for (RelationType t : kAllRelationTypes) {
    for (Coupling c : {Coupling::Weak, Coupling::Strong}) {
      const RelationSemantics sem = semantics(t, Polarity::Standard, c);
      for (Sign v : kAllSigns) {
        const Triplet tx{v, Sign::Zero, Sign::Zero};
        for (int b = 0; b < Triplet::kCount; ++b) {
          const Triplet ty = Triplet::from_index(b);
          if (!admissible(sem, tx, ty)) continue;
          EXPECT_EQ(ty.d1, Sign::Zero);
          if (sem.shape || c == Coupling::Strong) EXPECT_EQ(ty.d2, Sign::Zero);
        }
      }
    }
  }
}

TEST(RelationAdmissible, EveryTypeAdmitsTheSteadyPair) {
  for (RelationType t : kAllRelationTypes) {
    for (Coupling c : {Coupling::Weak, Coupling::Strong}) {
      int count = 0;
      for (int a = 0; a < Triplet::kCount; ++a) {
        for (int b = 0; b < Triplet::kCount; ++b) {
          count += relation_admissible(rel(t, c), Triplet::from_index(a), Triplet::from_index(b));
        }
      }
      EXPECT_GT(count, 0);
      EXPECT_TRUE(relation_admissible(rel(t, c), T("+00"), T("+00")));
    }
  }
}

TEST(RelationSemantics, SlopeAndCurvature) {
  struct Row {
    RelationType type;
    Sign slope;
    std::optional<Sign> curvature;
  };
  const Row rows[] = {
      {RelationType::Inc, Sign::Plus, std::nullopt},  {RelationType::Dec, Sign::Minus, std::nullopt},
      {RelationType::AG, Sign::Plus, Sign::Plus},     {RelationType::LG, Sign::Plus, Sign::Zero},
      {RelationType::DG, Sign::Plus, Sign::Minus},    {RelationType::AD, Sign::Minus, Sign::Minus},
      {RelationType::LD, Sign::Minus, Sign::Zero},    {RelationType::DD, Sign::Minus, Sign::Plus},
  };
  for (const auto& row : rows) {
    const auto sem = semantics(row.type, Polarity::Standard, Coupling::Weak);
    EXPECT_EQ(sem.slope, row.slope);
    EXPECT_EQ(sem.curvature, row.curvature);
    EXPECT_EQ(sem.shape, is_shape(row.type));
  }
}

// Concrete curves y = f(x) with the sign pattern of each shape relation on
// x > 0. Differentiating y(t) = f(x(t)) numerically exact at t = 0 must always
// produce an admissible pair of sign triplets.
struct Curve {
  RelationType type;
  std::function<double(double)> f, df, ddf;
};

Sign sign_of(double v) { return v > 0 ? Sign::Plus : v < 0 ? Sign::Minus : Sign::Zero; }

TEST(RelationAdmissible, SoundForConcreteCurves) {
  const Curve curves[] = {
      {RelationType::AG, [](double x) { return x * x + x; }, [](double x) { return 2 * x + 1; },
       [](double) { return 2.0; }},
      {RelationType::LG, [](double x) { return 2 * x + 1; }, [](double) { return 2.0; },
       [](double) { return 0.0; }},
      {RelationType::DG, [](double x) { return std::log1p(x) + 1; },
       [](double x) { return 1 / (1 + x); }, [](double x) { return -1 / ((1 + x) * (1 + x)); }},
      {RelationType::AD, [](double x) { return 10 - x * x; }, [](double x) { return -2 * x; },
       [](double) { return -2.0; }},
      {RelationType::LD, [](double x) { return 10 - x; }, [](double) { return -1.0; },
       [](double) { return 0.0; }},
      {RelationType::DD, [](double x) { return 1 / (1 + x); },
       [](double x) { return -1 / ((1 + x) * (1 + x)); },
       [](double x) { return 2 / ((1 + x) * (1 + x) * (1 + x)); }},
  };
  const double magnitudes[] = {0.1, 1.0, 2.5};
  for (const auto& c : curves) {
    for (double x : {0.5, 1.0, 2.0}) {
      for (int s1 = -1; s1 <= 1; ++s1) {
        for (int s2 = -1; s2 <= 1; ++s2) {
          for (double m1 : magnitudes) {
            for (double m2 : magnitudes) {
              const double dx = s1 * m1;
              const double ddx = s2 * m2;
              const double y = c.f(x);
              const double dy = c.df(x) * dx;
              const double ddy = c.ddf(x) * dx * dx + c.df(x) * ddx;
              const Triplet tx{sign_of(x), sign_of(dx), sign_of(ddx)};
              const Triplet ty{sign_of(y), sign_of(dy), sign_of(ddy)};
              EXPECT_TRUE(relation_admissible(rel(c.type), tx, ty))
                  << to_string(c.type) << " " << tx.to_string() << " -> " << ty.to_string();
            }
          }
        }
      }
    }
  }
}

TEST(RelationAdmissible, SoundForWeakMonotoneCurves) {
  // y = k (x^3 + x) is strictly monotone for every x, so no value constraint.
  for (double k : {-2.0, 2.0}) {
    const Relation r = rel(k > 0 ? RelationType::Inc : RelationType::Dec, Coupling::Weak);
    for (double x : {-1.5, 0.0, 0.7}) {
      for (double dx : {-1.0, 0.0, 0.3}) {
        for (double ddx : {-2.0, 0.0, 0.4}) {
          const double dy = k * (3 * x * x + 1) * dx;
          const double ddy = k * (6 * x * dx * dx + (3 * x * x + 1) * ddx);
          const Triplet tx{sign_of(x), sign_of(dx), sign_of(ddx)};
          const Triplet ty{sign_of(k * (x * x * x + x)), sign_of(dy), sign_of(ddy)};
          EXPECT_TRUE(relation_admissible(r, tx, ty));
        }
      }
    }
  }
}

TEST(TrendModel, Validation) {
  using V = std::vector<Variable>;
  using R = std::vector<Relation>;
  EXPECT_NO_THROW(TrendModel(V{{"X"}, {"Y"}}, R{rel(RelationType::Inc)}));
  try {
    TrendModel(V{{"X"}, {"X"}}, R{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicateVariable);
  }
  try {
    TrendModel(V{{"X"}}, R{rel(RelationType::Inc)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UndeclaredVariable);
  }
  try {
    TrendModel(V{{"X"}}, R{Relation{RelationType::Inc, "X", "X", std::nullopt, std::nullopt}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SelfRelation);
  }
  try {
    TrendModel(V{{"X"}, {"Y"}}, R{Relation{RelationType::Inc, "X", "Y", -0.5, std::nullopt}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(TrendModel, ImplicitVariablesInFirstUseOrder) {
  const auto m = TrendModel::with_implicit_variables(
      {Variable{"Z"}},
      {Relation{RelationType::Inc, "X", "Y", std::nullopt, std::nullopt},
       Relation{RelationType::Dec, "X", "Z", std::nullopt, std::nullopt}});
  ASSERT_EQ(m.variable_count(), 3u);
  EXPECT_EQ(m.variables()[0].name, "Z");
  EXPECT_EQ(m.variables()[1].name, "X");
  EXPECT_EQ(m.variables()[2].name, "Y");
  EXPECT_EQ(m.variables()[1].value_domain, SignSet{Sign::Plus});
  EXPECT_EQ(m.variables()[1].desire, Desire::Neutral);
  EXPECT_EQ(m.variable_index("Y"), 2u);
  EXPECT_FALSE(m.find_variable("Q"));
  EXPECT_THROW(m.variable_index("Q"), Error);
}

TEST(TrendModel, WithCouplingDropsOverrides) {
  const auto m = TrendModel::with_implicit_variables(
      {}, {Relation{RelationType::Inc, "X", "Y", 0.5, Coupling::Strong}});
  const auto weak = m.with_coupling(Coupling::Weak);
  EXPECT_FALSE(weak.relations()[0].coupling);
  EXPECT_EQ(weak.effective_coupling(weak.relations()[0]), Coupling::Weak);
  EXPECT_EQ(weak.relations()[0].weight, 0.5);
  EXPECT_EQ(m.with_polarity(Polarity::Swapped).polarity(), Polarity::Swapped);
}

TEST(Relation, WeightDefaultsToOne) {
  EXPECT_EQ(rel(RelationType::Inc).effective_weight(), 1.0);
}

TEST(Enums, ParseCaseInsensitive) {
  EXPECT_EQ(relation_type_from_string("dg"), RelationType::DG);
  EXPECT_EQ(relation_type_from_string("Inc"), RelationType::Inc);
  EXPECT_FALSE(relation_type_from_string("FOO"));
  EXPECT_EQ(coupling_from_string("STRONG"), Coupling::Strong);
  EXPECT_EQ(polarity_from_string("Swapped"), Polarity::Swapped);
  EXPECT_EQ(desire_from_string("DEC"), Desire::Decrease);
  for (RelationType t : kAllRelationTypes) EXPECT_EQ(relation_type_from_string(to_string(t)), t);
}

TEST(Scenario, SteadyAndStationary) {
  EXPECT_TRUE((Scenario{{T("+00"), T("-00")}, 1}).is_steady());
  EXPECT_TRUE((Scenario{{T("+0+"), T("+00")}, 1}).is_stationary());
  EXPECT_FALSE((Scenario{{T("+0+"), T("+00")}, 1}).is_steady());
  EXPECT_FALSE((Scenario{{T("++0"), T("+00")}, 1}).is_stationary());
}

}  // namespace
}  // namespace qtrend
