#include "qtrend/report.hpp"

#include <algorithm>
#include <sstream>

#include "qtrend/error.hpp"
#include "qtrend/ingest.hpp"

namespace qtrend::report {

namespace {

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string str() const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      if (width.size() < row.size()) width.resize(row.size(), 0);
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line.append(width[c] - row[c].size() + (c == 0 ? 2 : 1), ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line + '\n';
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::vector<std::string> header_for(const TrendModel& model) {
  std::vector<std::string> h{"no"};
  for (const auto& v : model.variables()) h.push_back(v.name);
  return h;
}

std::string join(const std::vector<std::size_t>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += sep;
    out += std::to_string(items[i]);
  }
  return out;
}

std::string scenario_table(const ScenarioSet& set) {
  Table t(header_for(set.model()));
  for (const auto& s : set.scenarios()) {
    std::vector<std::string> row{std::to_string(s.index)};
    for (const auto& tr : s.triplets) row.push_back(tr.to_string());
    t.add(std::move(row));
  }
  return t.str();
}

Triplet triplet_from(const std::string& text) {
  auto t = Triplet::parse(text);
  if (!t) throw Error(ErrorCode::SyntaxError, "malformed triplet '" + text + "' in JSON document");
  return *t;
}

}  // namespace

std::string scenarios_text(const ScenarioSet& set, bool expanded) {
  std::ostringstream os;
  os << "scenarios: " << set.size() << '\n';
  if (expanded) {
    os << scenario_table(set);
    return os.str();
  }
  os << "display rows: " << set.display_rows().size() << '\n';
  Table t(header_for(set.model()));
  std::size_t no = 0;
  for (const auto& row : set.display_rows()) {
    std::vector<std::string> cells{std::to_string(++no)};
    for (const auto& p : row) cells.push_back(p.to_string());
    t.add(std::move(cells));
  }
  os << t.str();
  return os.str();
}

std::string graph_text(const TransitionGraph& graph) {
  std::ostringstream os;
  os << "scenarios: " << graph.node_count() << '\n';
  os << scenario_table(graph.nodes());
  os << "transitions: " << graph.arcs().size() << '\n';
  for (const auto& [a, b] : graph.arcs()) os << a << " -> " << b << '\n';
  os << "terminals: " << join(terminals(graph), " ") << '\n';
  std::vector<std::size_t> steady;
  for (const auto& s : steady_scenarios(graph.nodes())) steady.push_back(s.index);
  os << "steady: " << join(steady, " ") << '\n';
  os << "acyclic: " << (is_acyclic(graph) ? "yes" : "no") << '\n';
  return os.str();
}

std::string paths_text(std::size_t from, std::size_t to, std::size_t max_len,
                       const std::vector<Path>& found) {
  std::ostringstream os;
  os << "paths " << from << " -> " << to << " (max length " << max_len << "): " << found.size()
     << '\n';
  for (const auto& p : found) os << join(p, " -> ") << '\n';
  return os.str();
}

std::string cycles_text(const std::vector<Path>& found) {
  std::ostringstream os;
  os << "cycles: " << found.size() << '\n';
  for (const auto& c : found) os << join(c, " -> ") << " -> " << c.front() << '\n';
  return os.str();
}

std::string removals_text(const TrendModel& model, Objective objective, bool restrictive,
                          const std::vector<RemovalSet>& removals) {
  std::ostringstream os;
  os << "restrictive: " << (restrictive ? "yes" : "no") << '\n';
  os << "objective: " << (objective == Objective::O1 ? "O1" : "O2") << '\n';
  if (!restrictive) {
    os << "nothing to remove\n";
    return os.str();
  }
  os << "alternatives: " << removals.size() << '\n';
  std::size_t no = 0;
  for (const auto& r : removals) {
    os << ++no << ". remove rows " << join(r.rows, ",") << " (count " << r.rows.size()
       << ", cost " << format_real(r.cost) << ")\n";
    for (std::size_t row : r.rows) {
      const auto& rel = model.relations()[row - 1];
      os << "   " << row << ": " << to_string(rel.type) << ' ' << rel.x << ' ' << rel.y << '\n';
    }
  }
  return os.str();
}

std::string rank_text(const ScenarioSet& set, const ObjectiveReport& report) {
  std::ostringstream os;
  os << "objectives:";
  for (std::size_t i = 0; i < report.objectives.size(); ++i) {
    os << ' ' << report.objectives[i] << '=' << to_string(report.desires[i]);
  }
  os << "\ngrades: A accelerating match, M match, - miss\n";

  std::vector<std::size_t> columns;
  for (const auto& name : report.objectives) columns.push_back(set.model().variable_index(name));

  std::vector<std::string> header{"rank", "no"};
  for (const auto& name : report.objectives) header.push_back(name);
  header.insert(header.end(), {"matched", "accelerating", "flags"});
  Table t(std::move(header));
  std::size_t rank = 0;
  for (const auto& g : report.ranked) {
    std::vector<std::string> row{std::to_string(++rank), std::to_string(g.index)};
    const auto& s = set.at(g.index);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const char code = g.grades[c] == Grade::AcceleratingMatch ? 'A'
                        : g.grades[c] == Grade::Match           ? 'M'
                                                                : '-';
      row.push_back(s.triplets[columns[c]].to_string() + ' ' + code);
    }
    row.push_back(std::to_string(g.matched));
    row.push_back(std::to_string(g.accelerating));
    std::string flags;
    if (g.terminal) flags += "terminal";
    if (g.steady) flags += flags.empty() ? "steady" : ",steady";
    row.push_back(flags);
    t.add(std::move(row));
  }
  os << t.str();

  std::vector<std::size_t> all;
  std::vector<std::size_t> ends;
  for (const auto& g : report.ranked) {
    if (g.satisfies_all()) all.push_back(g.index);
    if (g.terminal) ends.push_back(g.index);
  }
  std::sort(all.begin(), all.end());
  std::sort(ends.begin(), ends.end());
  os << "satisfying all objectives: " << (all.empty() ? "none" : join(all, " ")) << '\n';
  os << "terminal scenarios: " << (ends.empty() ? "none" : join(ends, " ")) << '\n';
  return os.str();
}

std::string check_text(const TrendModel& model, const ScenarioSet& set, bool restrictive) {
  std::ostringstream os;
  os << "variables: " << model.variable_count() << '\n';
  os << "relations: " << model.relation_count() << '\n';
  os << "polarity: " << to_string(model.polarity()) << '\n';
  os << "coupling: " << to_string(model.coupling()) << '\n';
  os << "scenarios: " << set.size() << '\n';
  os << "steady scenarios: " << steady_scenarios(set).size() << '\n';
  os << "restrictive: " << (restrictive ? "yes" : "no") << '\n';
  if (set.empty()) {
    os << "diagnosis: inconsistent, no scenario satisfies every relation\n";
  } else if (restrictive) {
    os << "diagnosis: over-restrictive, only steady states are admissible; "
          "run 'rectify' to find relations to remove\n";
  } else {
    os << "diagnosis: dynamic scenarios exist\n";
  }
  return os.str();
}

Json document(std::string_view command, const TrendModel& model) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["model"] = model_json(model);
  return doc;
}

Json model_json(const TrendModel& model) {
  Json vars = Json::array();
  for (const auto& v : model.variables()) {
    vars.push_back({{"name", v.name},
                    {"value", v.value_domain.to_string()},
                    {"desire", to_string(v.desire)}});
  }
  Json rels = Json::array();
  std::size_t row = 0;
  for (const auto& r : model.relations()) {
    Json j{{"row", ++row},
           {"type", to_string(r.type)},
           {"x", r.x},
           {"y", r.y},
           {"weight", nullptr},
           {"coupling", to_string(model.effective_coupling(r))}};
    if (r.weight) j["weight"] = *r.weight;
    rels.push_back(std::move(j));
  }
  return {{"polarity", to_string(model.polarity())},
          {"coupling", to_string(model.coupling())},
          {"variables", std::move(vars)},
          {"relations", std::move(rels)},
          {"text", serialize_model(model)}};
}

Json scenarios_json(const ScenarioSet& set) {
  Json out = Json::array();
  for (const auto& s : set.scenarios()) {
    Json row = Json::array();
    for (const auto& t : s.triplets) row.push_back(t.to_string());
    out.push_back(std::move(row));
  }
  return out;
}

Json display_rows_json(const ScenarioSet& set) {
  Json out = Json::array();
  for (const auto& r : set.display_rows()) {
    Json row = Json::array();
    for (const auto& p : r) row.push_back(p.to_string());
    out.push_back(std::move(row));
  }
  return out;
}

Json arcs_json(const TransitionGraph& graph) {
  Json out = Json::array();
  for (const auto& [a, b] : graph.arcs()) out.push_back({a, b});
  return out;
}

Json removals_json(const std::vector<RemovalSet>& removals) {
  Json out = Json::array();
  for (const auto& r : removals) out.push_back({{"rows", r.rows}, {"cost", r.cost}});
  return out;
}

Json grades_json(const ObjectiveReport& report) {
  Json out = Json::array();
  for (const auto& g : report.ranked) {
    Json grades = Json::object();
    for (std::size_t c = 0; c < report.objectives.size(); ++c) {
      grades[report.objectives[c]] = to_string(g.grades[c]);
    }
    out.push_back({{"index", g.index},
                   {"grades", std::move(grades)},
                   {"matched", g.matched},
                   {"accelerating", g.accelerating},
                   {"steady", g.steady},
                   {"terminal", g.terminal}});
  }
  return out;
}

ScenarioSet scenarios_from_json(const Json& doc) {
  const TrendModel model = parse_model(doc.at("model").at("text").get<std::string>());
  std::vector<Scenario> scenarios;
  for (const auto& row : doc.at("scenarios")) {
    Scenario s;
    for (const auto& cell : row) s.triplets.push_back(triplet_from(cell.get<std::string>()));
    if (s.triplets.size() != model.variable_count()) {
      throw Error(ErrorCode::SyntaxError, "scenario width differs from the model's variable count");
    }
    scenarios.push_back(std::move(s));
  }
  return ScenarioSet(model, std::move(scenarios));
}

std::string render_json_as_text(const Json& doc) {
  if (doc.at("schema_version").get<int>() != kSchemaVersion) {
    throw Error(ErrorCode::InvalidArgument, "unsupported schema_version");
  }
  const auto command = doc.at("command").get<std::string>();
  auto set = scenarios_from_json(doc);
  if (command == "solve") return scenarios_text(set, doc.value("expanded", false));
  if (command == "graph") {
    std::vector<Arc> arcs;
    for (const auto& a : doc.at("transitions")) {
      arcs.emplace_back(a.at(0).get<std::size_t>(), a.at(1).get<std::size_t>());
    }
    return graph_text(TransitionGraph(std::move(set), std::move(arcs)));
  }
  throw Error(ErrorCode::InvalidArgument, "only solve and graph documents can be re-rendered");
}

}  // namespace qtrend::report
