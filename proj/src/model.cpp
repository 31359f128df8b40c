#include "qtrend/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <unordered_set>

#include "qtrend/error.hpp"

namespace qtrend {

namespace {

bool iequals(std::string_view a, std::string_view b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](char l, char r) {
    return std::tolower(static_cast<unsigned char>(l)) ==
           std::tolower(static_cast<unsigned char>(r));
  });
}

}  // namespace

std::string_view to_string(RelationType t) {
  switch (t) {
    case RelationType::Inc: return "INC";
    case RelationType::Dec: return "DEC";
    case RelationType::AG: return "AG";
    case RelationType::LG: return "LG";
    case RelationType::DG: return "DG";
    case RelationType::AD: return "AD";
    case RelationType::LD: return "LD";
    case RelationType::DD: return "DD";
  }
  return "?";
}

std::string_view to_string(Coupling c) { return c == Coupling::Weak ? "weak" : "strong"; }

std::string_view to_string(Polarity p) {
  return p == Polarity::Standard ? "standard" : "swapped";
}

std::string_view to_string(Desire d) {
  switch (d) {
    case Desire::Neutral: return "neutral";
    case Desire::Increase: return "inc";
    case Desire::Decrease: return "dec";
  }
  return "?";
}

std::optional<RelationType> relation_type_from_string(std::string_view s) {
  for (RelationType t : kAllRelationTypes) {
    if (iequals(s, to_string(t))) return t;
  }
  return std::nullopt;
}

std::optional<Coupling> coupling_from_string(std::string_view s) {
  if (iequals(s, "weak")) return Coupling::Weak;
  if (iequals(s, "strong")) return Coupling::Strong;
  return std::nullopt;
}

std::optional<Polarity> polarity_from_string(std::string_view s) {
  if (iequals(s, "standard")) return Polarity::Standard;
  if (iequals(s, "swapped")) return Polarity::Swapped;
  return std::nullopt;
}

std::optional<Desire> desire_from_string(std::string_view s) {
  if (iequals(s, "neutral")) return Desire::Neutral;
  if (iequals(s, "inc") || iequals(s, "increase")) return Desire::Increase;
  if (iequals(s, "dec") || iequals(s, "decrease")) return Desire::Decrease;
  return std::nullopt;
}

bool is_shape(RelationType t) noexcept {
  return t != RelationType::Inc && t != RelationType::Dec;
}

RelationSemantics semantics(RelationType type, Polarity polarity, Coupling coupling) noexcept {
  RelationSemantics sem;
  sem.coupling = coupling;
  switch (type) {
    case RelationType::Inc:
      sem.slope = polarity == Polarity::Standard ? Sign::Plus : Sign::Minus;
      break;
    case RelationType::Dec:
      sem.slope = polarity == Polarity::Standard ? Sign::Minus : Sign::Plus;
      break;
    case RelationType::AG: sem = {Sign::Plus, Sign::Plus, true, coupling}; break;
    case RelationType::LG: sem = {Sign::Plus, Sign::Zero, true, coupling}; break;
    case RelationType::DG: sem = {Sign::Plus, Sign::Minus, true, coupling}; break;
    case RelationType::AD: sem = {Sign::Minus, Sign::Minus, true, coupling}; break;
    case RelationType::LD: sem = {Sign::Minus, Sign::Zero, true, coupling}; break;
    case RelationType::DD: sem = {Sign::Minus, Sign::Plus, true, coupling}; break;
  }
  return sem;
}

bool admissible(const RelationSemantics& sem, Triplet tx, Triplet ty) noexcept {
  if (ty.d1 != qmul(sem.slope, tx.d1)) return false;
  if (sem.shape) {
    if (tx.value != Sign::Plus || ty.value != Sign::Plus) return false;
    // Chain rule: y'' = f''(x) * x'^2 + f'(x) * x''.
    const Sign curvature = sem.curvature.value_or(Sign::Zero);
    return qadd(qmul(curvature, qsquare(tx.d1)), qmul(sem.slope, tx.d2)).contains(ty.d2);
  }
  if (sem.coupling == Coupling::Strong) return ty.d2 == qmul(sem.slope, tx.d2);
  return true;
}

bool relation_admissible(const Relation& rel, Triplet tx, Triplet ty, Polarity polarity,
                         Coupling model_coupling) noexcept {
  return admissible(semantics(rel.type, polarity, rel.coupling.value_or(model_coupling)), tx, ty);
}

TrendModel::TrendModel(std::vector<Variable> variables, std::vector<Relation> relations,
                       Polarity polarity, Coupling coupling)
    : variables_(std::move(variables)),
      relations_(std::move(relations)),
      polarity_(polarity),
      coupling_(coupling) {
  validate();
}

TrendModel TrendModel::with_implicit_variables(std::vector<Variable> variables,
                                               std::vector<Relation> relations,
                                               Polarity polarity, Coupling coupling) {
  std::unordered_set<std::string> known;
  for (const auto& v : variables) known.insert(v.name);
  for (const auto& r : relations) {
    for (const std::string* name : {&r.x, &r.y}) {
      if (known.insert(*name).second) variables.push_back(Variable{*name});
    }
  }
  return TrendModel(std::move(variables), std::move(relations), polarity, coupling);
}

void TrendModel::validate() const {
  std::unordered_set<std::string_view> names;
  for (const auto& v : variables_) {
    if (v.name.empty()) throw Error(ErrorCode::InvalidArgument, "variable name must not be empty");
    if (!names.insert(v.name).second) {
      throw Error(ErrorCode::DuplicateVariable, "variable '" + v.name + "' declared twice");
    }
  }
  for (const auto& r : relations_) {
    for (const std::string* name : {&r.x, &r.y}) {
      if (!names.contains(*name)) {
        throw Error(ErrorCode::UndeclaredVariable, "relation uses undeclared variable '" + *name + "'");
      }
    }
    if (r.x == r.y) {
      throw Error(ErrorCode::SelfRelation, "relation links '" + r.x + "' to itself");
    }
    if (r.weight && (!std::isfinite(*r.weight) || *r.weight < 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "relation weight must be a finite nonnegative number");
    }
  }
}

std::optional<std::size_t> TrendModel::find_variable(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t TrendModel::variable_index(std::string_view name) const {
  if (auto i = find_variable(name)) return *i;
  throw Error(ErrorCode::UndeclaredVariable, "unknown variable '" + std::string(name) + "'");
}

TrendModel TrendModel::with_relations(std::vector<Relation> relations) const {
  return TrendModel(variables_, std::move(relations), polarity_, coupling_);
}

TrendModel TrendModel::with_polarity(Polarity polarity) const {
  return TrendModel(variables_, relations_, polarity, coupling_);
}

TrendModel TrendModel::with_coupling(Coupling coupling) const {
  auto relations = relations_;
  for (auto& r : relations) r.coupling.reset();
  return TrendModel(variables_, std::move(relations), polarity_, coupling);
}

bool Scenario::is_stationary() const noexcept {
  return std::all_of(triplets.begin(), triplets.end(),
                     [](const Triplet& t) { return t.d1 == Sign::Zero; });
}

bool Scenario::is_steady() const noexcept {
  return std::all_of(triplets.begin(), triplets.end(), [](const Triplet& t) {
    return t.d1 == Sign::Zero && t.d2 == Sign::Zero;
  });
}

}  // namespace qtrend
