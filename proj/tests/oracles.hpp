#pragma once

// Test-only reference implementations. They share nothing with the search
// code paths they check beyond relation_admissible itself.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qtrend/ingest.hpp"
#include "qtrend/model.hpp"
#include "qtrend/solver.hpp"
#include "qtrend/transitions.hpp"

namespace qtrend::testing {

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(QTREND_FIXTURES_DIR) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline TrendModel load_fixture(const std::string& name) { return parse_model(read_fixture(name)); }

/// Every triplet assignment over the declared value domains that satisfies
/// every relation, in canonical (lexicographic) order.
inline std::vector<std::vector<Triplet>> brute_force_solve(const TrendModel& model) {
  const std::size_t n = model.variable_count();
  std::vector<std::vector<Triplet>> out;
  std::vector<int> digits(n, 0);
  std::vector<std::size_t> xs;
  std::vector<std::size_t> ys;
  for (const auto& r : model.relations()) {
    xs.push_back(model.variable_index(r.x));
    ys.push_back(model.variable_index(r.y));
  }
  while (true) {
    std::vector<Triplet> candidate;
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      candidate.push_back(Triplet::from_index(digits[v]));
      ok = model.variables()[v].value_domain.contains(candidate.back().value);
    }
    for (std::size_t k = 0; k < model.relation_count() && ok; ++k) {
      ok = relation_admissible(model.relations()[k], candidate[xs[k]], candidate[ys[k]],
                               model.polarity(), model.coupling());
    }
    if (ok) out.push_back(candidate);
    bool carry = true;
    for (std::size_t pos = n; carry && pos > 0; --pos) {
      if (++digits[pos - 1] < Triplet::kCount) {
        carry = false;
      } else {
        digits[pos - 1] = 0;
      }
    }
    if (carry) return out;
  }
}

/// Restrictive by definition: solutions exist and all have zero first derivatives.
inline bool brute_force_restrictive(const TrendModel& model) {
  const auto all = brute_force_solve(model);
  if (all.empty()) return false;
  return std::all_of(all.begin(), all.end(), [](const std::vector<Triplet>& s) {
    return std::all_of(s.begin(), s.end(), [](Triplet t) { return t.d1 == Sign::Zero; });
  });
}

struct SubsetOracleResult {
  std::vector<std::vector<std::size_t>> min_count;
  std::vector<std::vector<std::size_t>> min_cost;
};

/// Enumerates every removal subset (as 1-based rows) and keeps the optimal,
/// minimal rectifying ones under both objectives.
inline SubsetOracleResult brute_force_rectify(const TrendModel& model) {
  const std::size_t w = model.relation_count();
  struct Candidate {
    std::vector<std::size_t> rows;
    double cost;
  };
  std::vector<bool> fixes(std::size_t{1} << w, false);
  std::vector<Candidate> all;
  for (std::uint32_t mask = 0; mask < (1u << w); ++mask) {
    std::vector<Relation> kept;
    Candidate c{{}, 0.0};
    for (std::size_t i = 0; i < w; ++i) {
      if (mask >> i & 1u) {
        c.rows.push_back(i + 1);
        c.cost += model.relations()[i].effective_weight();
      } else {
        kept.push_back(model.relations()[i]);
      }
    }
    fixes[mask] = !brute_force_restrictive(model.with_relations(kept));
    all.push_back(std::move(c));
  }
  auto minimal = [&](std::uint32_t mask) {
    for (std::size_t i = 0; i < w; ++i) {
      if ((mask >> i & 1u) && fixes[mask & ~(1u << i)]) return false;
    }
    return true;
  };
  SubsetOracleResult out;
  std::size_t best_count = w + 1;
  double best_cost = 1e300;
  for (std::uint32_t mask = 1; mask < (1u << w); ++mask) {
    if (!fixes[mask] || !minimal(mask)) continue;
    best_count = std::min(best_count, all[mask].rows.size());
    best_cost = std::min(best_cost, all[mask].cost);
  }
  for (std::uint32_t mask = 1; mask < (1u << w); ++mask) {
    if (!fixes[mask] || !minimal(mask)) continue;
    if (all[mask].rows.size() == best_count) out.min_count.push_back(all[mask].rows);
    if (all[mask].cost <= best_cost + 1e-9) out.min_cost.push_back(all[mask].rows);
  }
  std::sort(out.min_count.begin(), out.min_count.end());
  std::sort(out.min_cost.begin(), out.min_cost.end());
  return out;
}

/// Random structurally valid model over n variables named A, B, C, ...
inline TrendModel random_model(std::mt19937& rng, std::size_t n, std::size_t max_relations,
                               bool full_domains) {
  std::vector<Variable> vars;
  std::uniform_int_distribution<int> mask(1, 7);
  for (std::size_t i = 0; i < n; ++i) {
    Variable v{std::string(1, static_cast<char>('A' + i))};
    if (full_domains) {
      v.value_domain = SignSet::full();
    } else {
      v.value_domain = SignSet::from_mask(static_cast<std::uint8_t>(mask(rng)));
    }
    vars.push_back(std::move(v));
  }
  std::vector<Relation> rels;
  if (n >= 2) {
    std::uniform_int_distribution<std::size_t> count(0, max_relations);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> type(0, 7);
    std::uniform_int_distribution<int> coin(0, 2);
    std::uniform_real_distribution<double> weight(0.0, 1.0);
    const std::size_t k = count(rng);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t a = pick(rng);
      std::size_t b = pick(rng);
      while (b == a) b = pick(rng);
      Relation r{static_cast<RelationType>(type(rng)), vars[a].name, vars[b].name, std::nullopt,
                 std::nullopt};
      if (coin(rng) == 0) r.weight = weight(rng);
      const int c = coin(rng);
      if (c == 1) r.coupling = Coupling::Weak;
      if (c == 2) r.coupling = Coupling::Strong;
      rels.push_back(std::move(r));
    }
  }
  std::uniform_int_distribution<int> coin(0, 1);
  return TrendModel(std::move(vars), std::move(rels),
                    coin(rng) ? Polarity::Standard : Polarity::Swapped,
                    coin(rng) ? Coupling::Weak : Coupling::Strong);
}

inline std::vector<std::vector<Triplet>> triplets_of(const std::vector<Scenario>& scenarios) {
  std::vector<std::vector<Triplet>> out;
  for (const auto& s : scenarios) out.push_back(s.triplets);
  return out;
}

/// Display rows as space-joined patterns, e.g. "+0* +0* +0*".
inline std::vector<std::string> display_strings(const ScenarioSet& set) {
  std::vector<std::string> out;
  for (const auto& row : set.display_rows()) {
    std::string line;
    for (const auto& p : row) line += (line.empty() ? "" : " ") + p.to_string();
    out.push_back(std::move(line));
  }
  return out;
}

inline std::vector<std::string> scenario_strings(const ScenarioSet& set) {
  std::vector<std::string> out;
  for (const auto& s : set.scenarios()) {
    std::string line;
    for (const auto& t : s.triplets) line += (line.empty() ? "" : " ") + t.to_string();
    out.push_back(std::move(line));
  }
  return out;
}

inline TrendModel model2() { return load_fixture("model2.qtm"); }
inline TrendModel model4() { return load_fixture("model4.qtm"); }
inline TrendModel case_study() { return load_fixture("case_study.qtm"); }

// Published reference results.
inline const std::vector<std::string> kModel2Rows = {"+0* +0* +0*"};
inline const std::vector<std::string> kModel2WithoutRow3Rows = {
    "++* ++* +-*", "+0* +0* +0*", "+-* +-* ++*"};
inline const std::vector<std::string> kModel2WithoutRow2Rows = {
    "++* ++* ++*", "+0* +0* +0*", "+-* +-* +-*"};
inline const std::vector<std::string> kModel4Rows = {
    "++* +-* +-*", "+0* +0* +0*", "+-* ++* ++*"};
// Variables PI SD EE SS SA SE KS.
inline const std::vector<std::string> kCaseStudyScenarios = {
    "+++ +++ +++ +++ +++ +-- +++", "++- ++- ++- ++- ++- +-+ ++-",
    "+0+ +0+ +0+ +0+ +0+ +0- +0+", "+00 +00 +00 +00 +00 +00 +00",
    "+0- +0- +0- +0- +0- +0+ +0-", "+-+ +-+ +-+ +-+ +-+ ++- +-+",
    "+-- +-- +-- +-- +-- +++ +--"};
inline const std::vector<Arc> kCaseStudyArcs = {{2, 4}, {2, 5}, {3, 1}, {4, 1},
                                                {4, 7}, {5, 7}, {6, 3}, {6, 4}};
inline const std::vector<std::string> kOscillationCycle = {"+0-", "+--", "0-0", "--+",
                                                           "-0+", "-++", "0+0", "++-"};

}  // namespace qtrend::testing
