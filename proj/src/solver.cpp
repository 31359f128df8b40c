#include "qtrend/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>

#include "qtrend/error.hpp"

namespace qtrend {

namespace {

using Domain = std::uint32_t;  // bit i set <=> Triplet::from_index(i) allowed

Domain domain_of(SignSet values) {
  Domain d = 0;
  for (int i = 0; i < Triplet::kCount; ++i) {
    if (values.contains(Triplet::from_index(i).value)) d |= Domain{1} << i;
  }
  return d;
}

Domain filter(Domain d, const std::function<bool(Triplet)>& keep) {
  Domain out = 0;
  for (int i = 0; i < Triplet::kCount; ++i) {
    if ((d >> i & 1u) && keep(Triplet::from_index(i))) out |= Domain{1} << i;
  }
  return out;
}

struct Constraint {
  std::size_t x = 0;
  std::size_t y = 0;
  std::array<Domain, Triplet::kCount> forward{};   // tx -> admissible ty
  std::array<Domain, Triplet::kCount> backward{};  // ty -> admissible tx
};

// Backtracking with arc-consistency propagation over 27-value bitset domains.
class Search {
 public:
  explicit Search(const TrendModel& model) : n_(model.variable_count()), incident_(n_) {
    for (const auto& rel : model.relations()) {
      Constraint c;
      c.x = model.variable_index(rel.x);
      c.y = model.variable_index(rel.y);
      const auto sem = model.semantics_of(rel);
      for (int a = 0; a < Triplet::kCount; ++a) {
        for (int b = 0; b < Triplet::kCount; ++b) {
          if (admissible(sem, Triplet::from_index(a), Triplet::from_index(b))) {
            c.forward[a] |= Domain{1} << b;
            c.backward[b] |= Domain{1} << a;
          }
        }
      }
      incident_[c.x].push_back(constraints_.size());
      incident_[c.y].push_back(constraints_.size());
      constraints_.push_back(c);
    }
    root_.reserve(n_);
    for (const auto& v : model.variables()) root_.push_back(domain_of(v.value_domain));

    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [this](std::size_t a, std::size_t b) {
      return incident_[a].size() > incident_[b].size();
    });
  }

  std::vector<Domain> root() const { return root_; }

  /// Calls visit with every solution; stops early when visit returns false.
  /// Returns false if stopped early.
  bool enumerate(std::vector<Domain> domains,
                 const std::function<bool(const std::vector<Domain>&)>& visit) const {
    std::vector<std::size_t> all(n_);
    std::iota(all.begin(), all.end(), std::size_t{0});
    if (!propagate(domains, all)) return true;
    return descend(domains, 0, visit);
  }

  bool satisfiable(std::vector<Domain> domains) const {
    bool found = false;
    enumerate(std::move(domains), [&found](const std::vector<Domain>&) {
      found = true;
      return false;
    });
    return found;
  }

 private:
  static Domain image(const std::array<Domain, Triplet::kCount>& table, Domain from) {
    Domain out = 0;
    while (from != 0) {
      const int i = std::countr_zero(from);
      out |= table[static_cast<std::size_t>(i)];
      from &= from - 1;
    }
    return out;
  }

  bool propagate(std::vector<Domain>& domains, std::vector<std::size_t> queue) const {
    std::vector<bool> queued(n_, false);
    for (std::size_t v : queue) queued[v] = true;
    for (std::size_t v : queue) {
      if (domains[v] == 0) return false;
    }
    while (!queue.empty()) {
      const std::size_t v = queue.back();
      queue.pop_back();
      queued[v] = false;
      for (std::size_t ci : incident_[v]) {
        const Constraint& c = constraints_[ci];
        const bool from_x = c.x == v;
        const std::size_t other = from_x ? c.y : c.x;
        const Domain reduced =
            domains[other] & image(from_x ? c.forward : c.backward, domains[v]);
        if (reduced == domains[other]) continue;
        if (reduced == 0) return false;
        domains[other] = reduced;
        if (!queued[other]) {
          queued[other] = true;
          queue.push_back(other);
        }
      }
    }
    return true;
  }

  bool descend(const std::vector<Domain>& domains, std::size_t depth,
               const std::function<bool(const std::vector<Domain>&)>& visit) const {
    if (depth == n_) return visit(domains);
    const std::size_t var = order_[depth];
    Domain candidates = domains[var];
    while (candidates != 0) {
      const int i = std::countr_zero(candidates);
      candidates &= candidates - 1;
      auto next = domains;
      next[var] = Domain{1} << i;
      if (!propagate(next, {var})) continue;
      if (!descend(next, depth + 1, visit)) return false;
    }
    return true;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<Constraint> constraints_;
  std::vector<Domain> root_;
  std::vector<std::size_t> order_;
};

constexpr std::uint8_t kWildcard = 3;

std::optional<Sign> slot_sign(std::uint8_t code) {
  if (code == kWildcard) return std::nullopt;
  return static_cast<Sign>(code);
}

}  // namespace

std::string TripletPattern::to_string() const {
  auto ch = [](const std::optional<Sign>& s) { return s ? to_char(*s) : '*'; };
  return {ch(value), ch(d1), ch(d2)};
}

std::vector<Triplet> TripletPattern::expand() const {
  auto options = [](const std::optional<Sign>& s) {
    return s ? std::vector<Sign>{*s} : std::vector<Sign>(kAllSigns.begin(), kAllSigns.end());
  };
  std::vector<Triplet> out;
  for (Sign v : options(value)) {
    for (Sign a : options(d1)) {
      for (Sign b : options(d2)) out.push_back(Triplet{v, a, b});
    }
  }
  return out;
}

std::vector<DisplayRow> group_for_display(std::span<const Scenario> scenarios) {
  if (scenarios.empty()) return {};
  const std::size_t n = scenarios.front().triplets.size();
  using Row = std::vector<std::uint8_t>;  // 3 slots per variable

  std::vector<Row> rows;
  rows.reserve(scenarios.size());
  for (const auto& s : scenarios) {
    Row r;
    r.reserve(3 * n);
    for (const auto& t : s.triplets) {
      r.push_back(static_cast<std::uint8_t>(index_of(t.value)));
      r.push_back(static_cast<std::uint8_t>(index_of(t.d1)));
      r.push_back(static_cast<std::uint8_t>(index_of(t.d2)));
    }
    rows.push_back(std::move(r));
  }

  std::vector<std::size_t> slot_order;
  for (std::size_t offset : {2u, 1u, 0u}) {
    for (std::size_t v = 0; v < n; ++v) slot_order.push_back(3 * v + offset);
  }

  for (std::size_t slot : slot_order) {
    std::map<Row, std::uint8_t> groups;  // row with slot wildcarded -> signs seen
    for (const auto& r : rows) {
      Row key = r;
      key[slot] = kWildcard;
      groups[key] |= static_cast<std::uint8_t>(1u << r[slot]);
    }
    std::vector<Row> next;
    next.reserve(rows.size());
    for (const auto& [key, seen] : groups) {
      if (seen == SignSet::kFullMask) {
        next.push_back(key);
        continue;
      }
      for (std::uint8_t s = 0; s < 3; ++s) {
        if (seen >> s & 1u) {
          Row r = key;
          r[slot] = s;
          next.push_back(std::move(r));
        }
      }
    }
    rows = std::move(next);
  }

  auto first_expansion = [](const Row& r) {
    Row m = r;
    for (auto& c : m) {
      if (c == kWildcard) c = 0;
    }
    return m;
  };
  std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    return first_expansion(a) < first_expansion(b);
  });

  std::vector<DisplayRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    DisplayRow row;
    row.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
      row.push_back({slot_sign(r[3 * v]), slot_sign(r[3 * v + 1]), slot_sign(r[3 * v + 2])});
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<Triplet>> expand(const DisplayRow& row) {
  std::vector<std::vector<Triplet>> out{{}};
  for (const auto& pattern : row) {
    std::vector<std::vector<Triplet>> next;
    for (const auto& prefix : out) {
      for (const auto& t : pattern.expand()) {
        auto extended = prefix;
        extended.push_back(t);
        next.push_back(std::move(extended));
      }
    }
    out = std::move(next);
  }
  return out;
}

ScenarioSet::ScenarioSet(TrendModel model, std::vector<Scenario> scenarios)
    : model_(std::move(model)), scenarios_(std::move(scenarios)) {
  std::sort(scenarios_.begin(), scenarios_.end(),
            [](const Scenario& a, const Scenario& b) { return a.triplets < b.triplets; });
  scenarios_.erase(std::unique(scenarios_.begin(), scenarios_.end(),
                               [](const Scenario& a, const Scenario& b) {
                                 return a.triplets == b.triplets;
                               }),
                   scenarios_.end());
  for (std::size_t i = 0; i < scenarios_.size(); ++i) scenarios_[i].index = i + 1;
  display_rows_ = group_for_display(scenarios_);
}

const Scenario& ScenarioSet::at(std::size_t index) const {
  if (index == 0 || index > scenarios_.size()) {
    throw Error(ErrorCode::UnknownNode, "no scenario with index " + std::to_string(index));
  }
  return scenarios_[index - 1];
}

ScenarioSet solve(const TrendModel& model) {
  const Search search(model);
  std::vector<Scenario> found;
  search.enumerate(search.root(), [&found](const std::vector<Domain>& domains) {
    Scenario s;
    s.triplets.reserve(domains.size());
    for (Domain d : domains) s.triplets.push_back(Triplet::from_index(std::countr_zero(d)));
    found.push_back(std::move(s));
    return true;
  });
  return ScenarioSet(model, std::move(found));
}

bool is_restrictive(const TrendModel& model) {
  const Search search(model);
  const auto root = search.root();

  auto steady = root;
  for (auto& d : steady) d = filter(d, [](Triplet t) { return t.d1 == Sign::Zero; });
  if (!search.satisfiable(steady)) return false;

  for (std::size_t v = 0; v < root.size(); ++v) {
    auto moving = root;
    moving[v] = filter(moving[v], [](Triplet t) { return t.d1 != Sign::Zero; });
    if (search.satisfiable(moving)) return false;
  }
  return true;
}

std::vector<Scenario> steady_scenarios(const ScenarioSet& set) {
  std::vector<Scenario> out;
  std::copy_if(set.scenarios().begin(), set.scenarios().end(), std::back_inserter(out),
               [](const Scenario& s) { return s.is_steady(); });
  return out;
}

}  // namespace qtrend
