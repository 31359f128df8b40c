// qtrend: command-line front end for trend models.
//
// Exit status: 0 success, 1 domain error, 2 usage or input error.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qtrend/error.hpp"
#include "qtrend/ingest.hpp"
#include "qtrend/objectives.hpp"
#include "qtrend/rectifier.hpp"
#include "qtrend/report.hpp"

namespace {

using qtrend::report::Json;

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input;
  std::string format = "text";
  std::string objective = "o1";
  std::string polarity;
  std::string coupling;
  double threshold = 0.0;
  bool expand = false;
  bool list_cycles = false;
  std::optional<std::size_t> from;
  std::optional<std::size_t> to;
  std::size_t max_path_len = 10;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

qtrend::TrendModel load_model(const RunConfig& cfg) {
  auto model = qtrend::parse_model(read_file(cfg.input));
  if (!cfg.polarity.empty()) model = model.with_polarity(*qtrend::polarity_from_string(cfg.polarity));
  if (!cfg.coupling.empty()) model = model.with_coupling(*qtrend::coupling_from_string(cfg.coupling));
  return model;
}

void require_format(const RunConfig& cfg, bool dot_allowed) {
  if (cfg.format == "dot" && !dot_allowed) throw UsageError("--format dot is only valid for 'graph'");
}

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

int cmd_solve(const RunConfig& cfg) {
  require_format(cfg, false);
  const auto model = load_model(cfg);
  const auto set = qtrend::solve(model);
  if (cfg.format == "json") {
    auto doc = qtrend::report::document("solve", model);
    doc["expanded"] = cfg.expand;
    doc["scenarios"] = qtrend::report::scenarios_json(set);
    doc["display_rows"] = qtrend::report::display_rows_json(set);
    emit(doc);
  } else {
    std::cout << qtrend::report::scenarios_text(set, cfg.expand);
  }
  return 0;
}

int cmd_graph(const RunConfig& cfg) {
  const auto model = load_model(cfg);
  const auto graph = qtrend::build_graph(qtrend::solve(model));
  std::optional<std::vector<qtrend::Path>> found;
  if (cfg.from && cfg.to) found = qtrend::paths(graph, *cfg.from, *cfg.to, cfg.max_path_len);
  std::optional<std::vector<std::size_t>> reach;
  if (cfg.from && !cfg.to) reach = qtrend::reachable(graph, *cfg.from);
  if (cfg.to && !cfg.from) throw UsageError("--to requires --from");

  if (cfg.format == "dot") {
    std::cout << qtrend::to_dot(graph);
    return 0;
  }
  if (cfg.format == "json") {
    auto doc = qtrend::report::document("graph", model);
    doc["scenarios"] = qtrend::report::scenarios_json(graph.nodes());
    doc["transitions"] = qtrend::report::arcs_json(graph);
    doc["terminals"] = qtrend::terminals(graph);
    if (found) doc["paths"] = *found;
    if (reach) doc["reachable"] = *reach;
    if (cfg.list_cycles) doc["cycles"] = qtrend::cycles(graph);
    emit(doc);
    return 0;
  }
  std::cout << qtrend::report::graph_text(graph);
  if (found) std::cout << qtrend::report::paths_text(*cfg.from, *cfg.to, cfg.max_path_len, *found);
  if (reach) {
    std::cout << "reachable from " << *cfg.from << ":";
    for (auto v : *reach) std::cout << ' ' << v;
    std::cout << '\n';
  }
  if (cfg.list_cycles) std::cout << qtrend::report::cycles_text(qtrend::cycles(graph));
  return 0;
}

int cmd_rectify(const RunConfig& cfg) {
  require_format(cfg, false);
  const auto model = load_model(cfg);
  const auto objective = cfg.objective == "o2" ? qtrend::Objective::O2 : qtrend::Objective::O1;
  const bool restrictive = qtrend::is_restrictive(model);
  const auto removals = qtrend::rectify(model, objective);
  if (cfg.format == "json") {
    auto doc = qtrend::report::document("rectify", model);
    doc["objective"] = objective == qtrend::Objective::O1 ? "O1" : "O2";
    doc["restrictive"] = restrictive;
    doc["removals"] = qtrend::report::removals_json(restrictive ? removals : std::vector<qtrend::RemovalSet>{});
    emit(doc);
  } else {
    std::cout << qtrend::report::removals_text(model, objective, restrictive, removals);
  }
  return 0;
}

int cmd_ingest(const RunConfig& cfg) {
  require_format(cfg, false);
  const auto matrix = qtrend::parse_correlation_csv(read_file(cfg.input));
  const auto model = qtrend::from_correlation(matrix, cfg.threshold);
  if (cfg.format == "json") {
    auto doc = qtrend::report::document("ingest", model);
    doc["threshold"] = cfg.threshold;
    emit(doc);
  } else {
    std::cout << qtrend::serialize_model(model);
  }
  return 0;
}

int cmd_rank(const RunConfig& cfg) {
  require_format(cfg, false);
  const auto model = load_model(cfg);
  const auto set = qtrend::solve(model);
  const auto graph = qtrend::build_graph(set);
  const auto report = qtrend::rank(set, graph);
  if (cfg.format == "json") {
    auto doc = qtrend::report::document("rank", model);
    doc["scenarios"] = qtrend::report::scenarios_json(set);
    doc["transitions"] = qtrend::report::arcs_json(graph);
    doc["terminals"] = qtrend::terminals(graph);
    doc["grades"] = qtrend::report::grades_json(report);
    emit(doc);
  } else {
    std::cout << qtrend::report::rank_text(set, report);
  }
  return 0;
}

int cmd_check(const RunConfig& cfg) {
  require_format(cfg, false);
  const auto model = load_model(cfg);
  const auto set = qtrend::solve(model);
  const bool restrictive = qtrend::is_restrictive(model);
  if (cfg.format == "json") {
    auto doc = qtrend::report::document("check", model);
    doc["scenario_count"] = set.size();
    doc["steady_count"] = qtrend::steady_scenarios(set).size();
    doc["restrictive"] = restrictive;
    emit(doc);
  } else {
    std::cout << qtrend::report::check_text(model, set, restrictive);
  }
  return 0;
}

int cmd_render(const RunConfig& cfg) {
  Json doc;
  try {
    doc = Json::parse(read_file(cfg.input));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
  std::cout << qtrend::report::render_json_as_text(doc);
  return 0;
}

bool is_input_error(qtrend::ErrorCode code) {
  switch (code) {
    case qtrend::ErrorCode::SyntaxError:
    case qtrend::ErrorCode::UnknownRelationType:
    case qtrend::ErrorCode::DuplicateVariable:
    case qtrend::ErrorCode::SelfRelation:
    case qtrend::ErrorCode::UndeclaredVariable:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qualitative trend models: scenarios, transitions, rectification, objectives"};
  app.require_subcommand(1, 1);
  RunConfig cfg;

  const auto format_check = CLI::IsMember({"text", "json", "dot"});
  const auto polarity_check = CLI::IsMember({"standard", "swapped"});
  const auto coupling_check = CLI::IsMember({"weak", "strong"});

  auto add_model_options = [&](CLI::App* sub) {
    sub->add_option("model", cfg.input, "Model file (.qtm)")->required();
    sub->add_option("--format", cfg.format, "Output format")->check(format_check);
    sub->add_option("--polarity", cfg.polarity, "Override the model polarity")->check(polarity_check);
    sub->add_option("--coupling", cfg.coupling, "Override INC/DEC coupling")->check(coupling_check);
  };

  auto* solve = app.add_subcommand("solve", "Enumerate all scenarios of a model");
  add_model_options(solve);
  solve->add_flag("--expand", cfg.expand, "List expanded scenarios instead of grouped rows");

  auto* graph = app.add_subcommand("graph", "Build the transition graph");
  add_model_options(graph);
  graph->add_option("--from", cfg.from, "Path or reachability query start");
  graph->add_option("--to", cfg.to, "Path query end");
  graph->add_option("--max-path-len", cfg.max_path_len, "Longest path to report, in arcs")
      ->check(CLI::PositiveNumber);
  graph->add_flag("--cycles", cfg.list_cycles, "List elementary cycles");

  auto* rectify = app.add_subcommand("rectify", "Find optimal relation removals");
  add_model_options(rectify);
  rectify->add_option("--objective", cfg.objective, "o1: fewest rows, o2: least weight")
      ->check(CLI::IsMember({"o1", "o2"}, CLI::ignore_case));

  auto* ingest = app.add_subcommand("ingest", "Convert a correlation matrix CSV to a model");
  ingest->add_option("csv", cfg.input, "Correlation matrix (.csv)")->required();
  ingest->add_option("--threshold", cfg.threshold, "Drop |c| at or below this value")
      ->check(CLI::NonNegativeNumber);
  ingest->add_option("--format", cfg.format, "Output format")->check(format_check);

  auto* rank = app.add_subcommand("rank", "Grade scenarios against desired trends");
  add_model_options(rank);

  auto* check = app.add_subcommand("check", "Validate a model and diagnose restrictiveness");
  add_model_options(check);

  auto* render = app.add_subcommand("render", "Render a solve/graph JSON document as text");
  render->add_option("json", cfg.input, "JSON document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }
  std::transform(cfg.objective.begin(), cfg.objective.end(), cfg.objective.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

  try {
    if (solve->parsed()) return cmd_solve(cfg);
    if (graph->parsed()) return cmd_graph(cfg);
    if (rectify->parsed()) return cmd_rectify(cfg);
    if (ingest->parsed()) return cmd_ingest(cfg);
    if (rank->parsed()) return cmd_rank(cfg);
    if (check->parsed()) return cmd_check(cfg);
    if (render->parsed()) return cmd_render(cfg);
  } catch (const UsageError& e) {
    std::cerr << "qtrend: " << e.what() << '\n';
    return kUsageError;
  } catch (const qtrend::Error& e) {
    std::cerr << "qtrend: " << cfg.input << ": " << qtrend::to_string(e.code()) << ": " << e.what()
              << '\n';
    return is_input_error(e.code()) ? kUsageError : kDomainError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "qtrend: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
