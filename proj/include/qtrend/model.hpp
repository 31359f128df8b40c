#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtrend/sign.hpp"

namespace qtrend {

enum class RelationType { Inc, Dec, AG, LG, DG, AD, LD, DD };

inline constexpr std::array<RelationType, 8> kAllRelationTypes = {
    RelationType::Inc, RelationType::Dec, RelationType::AG, RelationType::LG,
    RelationType::DG,  RelationType::AD,  RelationType::LD, RelationType::DD};

/// Whether an INC/DEC relation also links second derivatives.
enum class Coupling { Weak, Strong };

/// STANDARD: INC couples derivatives positively, DEC negatively.
/// SWAPPED: the first-derivative polarities of INC and DEC are exchanged.
enum class Polarity { Standard, Swapped };

enum class Desire { Neutral, Increase, Decrease };

std::string_view to_string(RelationType t);
std::string_view to_string(Coupling c);
std::string_view to_string(Polarity p);
std::string_view to_string(Desire d);

/// Case-insensitive lookups; nullopt for unknown tokens.
std::optional<RelationType> relation_type_from_string(std::string_view s);
std::optional<Coupling> coupling_from_string(std::string_view s);
std::optional<Polarity> polarity_from_string(std::string_view s);
std::optional<Desire> desire_from_string(std::string_view s);

/// True for AG, LG, DG, AD, LD and DD.
bool is_shape(RelationType t) noexcept;

struct Variable {
  std::string name;
  SignSet value_domain = SignSet{Sign::Plus};
  Desire desire = Desire::Neutral;

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Pairwise trend relation y = f(x). For shape relations x is the
/// independent variable.
struct Relation {
  RelationType type = RelationType::Inc;
  std::string x;
  std::string y;
  std::optional<double> weight;
  /// Overrides the model-level coupling; meaningful for INC/DEC only.
  std::optional<Coupling> coupling;

  double effective_weight() const noexcept { return weight.value_or(1.0); }

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Constraint parameters of a relation once polarity and coupling are resolved.
struct RelationSemantics {
  Sign slope = Sign::Plus;             // sign of f'
  std::optional<Sign> curvature;       // sign of f''; nullopt when unrestricted
  bool shape = false;
  Coupling coupling = Coupling::Weak;
};

RelationSemantics semantics(RelationType type, Polarity polarity, Coupling coupling) noexcept;

bool admissible(const RelationSemantics& sem, Triplet tx, Triplet ty) noexcept;

/// Whether the pair of states (tx for rel.x, ty for rel.y) satisfies rel.
bool relation_admissible(const Relation& rel, Triplet tx, Triplet ty,
                         Polarity polarity = Polarity::Standard,
                         Coupling model_coupling = Coupling::Weak) noexcept;

/// Named variables plus an ordered list of pairwise relations. Relation rows
/// are addressed by 1-based index. Validated on construction and immutable.
class TrendModel {
 public:
  TrendModel() = default;
  /// Throws Error on duplicate names, undeclared endpoints, self relations,
  /// or negative weights.
  TrendModel(std::vector<Variable> variables, std::vector<Relation> relations,
             Polarity polarity = Polarity::Standard, Coupling coupling = Coupling::Weak);

  /// Declares relation endpoints that are not yet variables, with defaults,
  /// in order of first appearance.
  static TrendModel with_implicit_variables(std::vector<Variable> variables,
                                            std::vector<Relation> relations,
                                            Polarity polarity = Polarity::Standard,
                                            Coupling coupling = Coupling::Weak);

  const std::vector<Variable>& variables() const noexcept { return variables_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  Polarity polarity() const noexcept { return polarity_; }
  Coupling coupling() const noexcept { return coupling_; }

  std::size_t variable_count() const noexcept { return variables_.size(); }
  std::size_t relation_count() const noexcept { return relations_.size(); }

  std::optional<std::size_t> find_variable(std::string_view name) const noexcept;
  /// Throws Error(UndeclaredVariable).
  std::size_t variable_index(std::string_view name) const;

  Coupling effective_coupling(const Relation& rel) const noexcept {
    return rel.coupling.value_or(coupling_);
  }
  RelationSemantics semantics_of(const Relation& rel) const noexcept {
    return semantics(rel.type, polarity_, effective_coupling(rel));
  }

  TrendModel with_relations(std::vector<Relation> relations) const;
  TrendModel with_polarity(Polarity polarity) const;
  /// Sets the model coupling and drops per-relation overrides.
  TrendModel with_coupling(Coupling coupling) const;

  friend bool operator==(const TrendModel&, const TrendModel&) = default;

 private:
  void validate() const;

  std::vector<Variable> variables_;
  std::vector<Relation> relations_;
  Polarity polarity_ = Polarity::Standard;
  Coupling coupling_ = Coupling::Weak;
};

/// One triplet per model variable, in declaration order.
struct Scenario {
  std::vector<Triplet> triplets;
  std::size_t index = 0;  // 1-based position in the sorted scenario set

  /// Every first derivative is zero (the variables are momentarily still).
  bool is_stationary() const noexcept;
  /// Every first and second derivative is zero: unchanging in time.
  bool is_steady() const noexcept;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

}  // namespace qtrend
