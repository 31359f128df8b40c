#include "qtrend/ingest.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "qtrend/error.hpp"

namespace qtrend {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

std::optional<double> parse_real(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

bool iequals(std::string_view a, std::string_view b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](char l, char r) {
    return std::tolower(static_cast<unsigned char>(l)) ==
           std::tolower(static_cast<unsigned char>(r));
  });
}

struct Option {
  std::string_view key;
  std::string_view value;
};

std::optional<Option> split_option(std::string_view word) {
  const auto eq = word.find('=');
  if (eq == std::string_view::npos || eq == 0) return std::nullopt;
  return Option{word.substr(0, eq), word.substr(eq + 1)};
}

class ModelParser {
 public:
  TrendModel parse(std::string_view text) {
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      line_ = i + 1;
      std::string_view line = lines[i];
      if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      const auto words = split_words(line);
      if (words.empty()) continue;
      if (words.front().front() == '@') {
        directive(words);
      } else {
        relation(words);
      }
    }
    return TrendModel(std::move(variables_), std::move(relations_),
                      polarity_.value_or(Polarity::Standard),
                      coupling_.value_or(Coupling::Weak));
  }

 private:
  [[noreturn]] void fail(ErrorCode code, const std::string& message) const {
    throw Error(code, message, line_);
  }

  std::string name(std::string_view word) const {
    if (!is_identifier(word)) fail(ErrorCode::SyntaxError, "invalid variable name '" + std::string(word) + "'");
    return std::string(word);
  }

  void directive(const std::vector<std::string_view>& words) {
    const std::string_view kw = words[0].substr(1);
    if (iequals(kw, "polarity")) {
      if (words.size() != 2) fail(ErrorCode::SyntaxError, "expected '@polarity standard|swapped'");
      if (polarity_) fail(ErrorCode::SyntaxError, "@polarity given twice");
      polarity_ = polarity_from_string(words[1]);
      if (!polarity_) fail(ErrorCode::SyntaxError, "unknown polarity '" + std::string(words[1]) + "'");
    } else if (iequals(kw, "coupling")) {
      if (words.size() != 2) fail(ErrorCode::SyntaxError, "expected '@coupling weak|strong'");
      if (coupling_) fail(ErrorCode::SyntaxError, "@coupling given twice");
      coupling_ = coupling_from_string(words[1]);
      if (!coupling_) fail(ErrorCode::SyntaxError, "unknown coupling '" + std::string(words[1]) + "'");
    } else if (iequals(kw, "var")) {
      declare(words);
    } else {
      fail(ErrorCode::SyntaxError, "unknown directive '" + std::string(words[0]) + "'");
    }
  }

  void declare(const std::vector<std::string_view>& words) {
    if (words.size() < 2) fail(ErrorCode::SyntaxError, "expected '@var NAME [value=SET] [desire=...]'");
    Variable v{name(words[1])};
    if (auto it = declared_.find(v.name); it != declared_.end()) {
      fail(ErrorCode::DuplicateVariable,
           "variable '" + v.name + "' already declared on line " + std::to_string(it->second));
    }
    bool has_value = false;
    bool has_desire = false;
    for (std::size_t i = 2; i < words.size(); ++i) {
      const auto opt = split_option(words[i]);
      if (!opt) fail(ErrorCode::SyntaxError, "expected key=value, got '" + std::string(words[i]) + "'");
      if (iequals(opt->key, "value") && !has_value) {
        const auto set = SignSet::parse(opt->value);
        if (!set) fail(ErrorCode::SyntaxError, "invalid sign set '" + std::string(opt->value) + "'");
        v.value_domain = *set;
        has_value = true;
      } else if (iequals(opt->key, "desire") && !has_desire) {
        const auto d = desire_from_string(opt->value);
        if (!d) fail(ErrorCode::SyntaxError, "invalid desire '" + std::string(opt->value) + "'");
        v.desire = *d;
        has_desire = true;
      } else {
        fail(ErrorCode::SyntaxError, "unexpected or repeated option '" + std::string(opt->key) + "'");
      }
    }
    declared_.emplace(v.name, line_);
    variables_.push_back(std::move(v));
  }

  void relation(const std::vector<std::string_view>& words) {
    const auto type = relation_type_from_string(words[0]);
    if (!type) fail(ErrorCode::UnknownRelationType, "unknown relation type '" + std::string(words[0]) + "'");
    if (words.size() < 3) fail(ErrorCode::SyntaxError, "expected 'TYPE X Y [w=REAL] [coupling=...]'");
    Relation rel{*type, name(words[1]), name(words[2]), std::nullopt, std::nullopt};
    if (rel.x == rel.y) fail(ErrorCode::SelfRelation, "relation links '" + rel.x + "' to itself");
    for (std::size_t i = 3; i < words.size(); ++i) {
      const auto opt = split_option(words[i]);
      if (!opt) fail(ErrorCode::SyntaxError, "expected key=value, got '" + std::string(words[i]) + "'");
      if ((iequals(opt->key, "w") || iequals(opt->key, "weight")) && !rel.weight) {
        rel.weight = parse_real(opt->value);
        if (!rel.weight || !std::isfinite(*rel.weight) || *rel.weight < 0.0) {
          fail(ErrorCode::SyntaxError, "weight must be a nonnegative real, got '" + std::string(opt->value) + "'");
        }
      } else if (iequals(opt->key, "coupling") && !rel.coupling) {
        rel.coupling = coupling_from_string(opt->value);
        if (!rel.coupling) fail(ErrorCode::SyntaxError, "unknown coupling '" + std::string(opt->value) + "'");
      } else {
        fail(ErrorCode::SyntaxError, "unexpected or repeated option '" + std::string(opt->key) + "'");
      }
    }
    for (const std::string* n : {&rel.x, &rel.y}) {
      if (declared_.emplace(*n, line_).second) variables_.push_back(Variable{*n});
    }
    relations_.push_back(std::move(rel));
  }

  std::size_t line_ = 0;
  std::vector<Variable> variables_;
  std::vector<Relation> relations_;
  std::unordered_map<std::string, std::size_t> declared_;
  std::optional<Polarity> polarity_;
  std::optional<Coupling> coupling_;
};

bool is_default(const Variable& v) {
  return v.value_domain == SignSet{Sign::Plus} && v.desire == Desire::Neutral;
}

// Number of leading variables that need an explicit @var line: the rest must
// be default and reappear in exactly the order relations first mention them.
std::size_t explicit_prefix(const TrendModel& model) {
  const auto& vars = model.variables();
  for (std::size_t k = 0; k <= vars.size(); ++k) {
    bool ok = std::all_of(vars.begin() + static_cast<std::ptrdiff_t>(k), vars.end(), is_default);
    if (!ok) continue;
    std::unordered_set<std::string_view> seen;
    for (std::size_t i = 0; i < k; ++i) seen.insert(vars[i].name);
    std::vector<std::string_view> implicit;
    for (const auto& r : model.relations()) {
      for (const std::string* n : {&r.x, &r.y}) {
        if (seen.insert(*n).second) implicit.push_back(*n);
      }
    }
    if (implicit.size() != vars.size() - k) continue;
    bool same = true;
    for (std::size_t i = 0; i < implicit.size() && same; ++i) same = implicit[i] == vars[k + i].name;
    if (same) return k;
  }
  return vars.size();
}

}  // namespace

bool is_identifier(std::string_view name) noexcept {
  if (name.empty()) return false;
  const auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

std::string format_real(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

TrendModel parse_model(std::string_view text) { return ModelParser{}.parse(text); }

std::string serialize_model(const TrendModel& model) {
  std::string out;
  if (model.polarity() != Polarity::Standard) {
    out += "@polarity ";
    out += to_string(model.polarity());
    out += '\n';
  }
  if (model.coupling() != Coupling::Weak) {
    out += "@coupling ";
    out += to_string(model.coupling());
    out += '\n';
  }
  const std::size_t k = explicit_prefix(model);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& v = model.variables()[i];
    out += "@var " + v.name;
    if (v.value_domain != SignSet{Sign::Plus}) out += " value=" + v.value_domain.to_string();
    if (v.desire != Desire::Neutral) {
      out += " desire=";
      out += to_string(v.desire);
    }
    out += '\n';
  }
  for (const auto& r : model.relations()) {
    out += to_string(r.type);
    out += ' ' + r.x + ' ' + r.y;
    if (r.weight) out += " w=" + format_real(*r.weight);
    if (r.coupling) {
      out += " coupling=";
      out += to_string(*r.coupling);
    }
    out += '\n';
  }
  return out;
}

void CorrelationMatrix::validate(double tolerance) const {
  const std::size_t n = names.size();
  if (entries.size() != n) throw Error(ErrorCode::NotSquare, "matrix row count differs from name count");
  for (const auto& row : entries) {
    if (row.size() != n) throw Error(ErrorCode::NotSquare, "matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double c = entries[i][j];
      if (!std::isfinite(c) || std::abs(c) > 1.0 + tolerance) {
        throw Error(ErrorCode::EntryOutOfRange,
                    "entry (" + names[i] + ", " + names[j] + ") outside [-1, 1]");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(entries[i][i] - 1.0) > tolerance) {
      throw Error(ErrorCode::DiagonalNotUnit, "diagonal entry for " + names[i] + " is not 1");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(entries[i][j] - entries[j][i]) > tolerance) {
        throw Error(ErrorCode::NotSymmetric,
                    "entries (" + names[i] + ", " + names[j] + ") and its transpose differ");
      }
    }
  }
}

CorrelationMatrix parse_correlation_csv(std::string_view text) {
  struct Line {
    std::size_t number;
    std::vector<std::string_view> cells;
  };
  std::vector<Line> rows;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    Line l{i + 1, {}};
    std::string_view rest = lines[i];
    while (true) {
      const auto comma = rest.find(',');
      l.cells.push_back(trim(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    rows.push_back(std::move(l));
  }
  if (rows.empty()) throw Error(ErrorCode::SyntaxError, "empty correlation file");

  const std::size_t n = rows.size() - 1;
  auto header = rows.front().cells;
  if (header.size() == n + 1) header.erase(header.begin());
  if (header.size() != n) {
    throw Error(ErrorCode::NotSquare,
                "header names " + std::to_string(header.size()) + " variables but there are " +
                    std::to_string(n) + " data rows",
                rows.front().number);
  }

  CorrelationMatrix m;
  for (auto h : header) {
    if (!is_identifier(h)) {
      throw Error(ErrorCode::SyntaxError, "invalid variable name '" + std::string(h) + "'",
                  rows.front().number);
    }
    m.names.emplace_back(h);
  }
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.cells.size() != n + 1) {
      throw Error(ErrorCode::NotSquare, "expected a name and " + std::to_string(n) + " values",
                  row.number);
    }
    if (row.cells.front() != m.names[r - 1]) {
      throw Error(ErrorCode::SyntaxError,
                  "row name '" + std::string(row.cells.front()) + "' does not match header '" +
                      m.names[r - 1] + "'",
                  row.number);
    }
    std::vector<double> values;
    for (std::size_t c = 1; c < row.cells.size(); ++c) {
      const auto v = parse_real(row.cells[c]);
      if (!v) {
        throw Error(ErrorCode::SyntaxError, "invalid number '" + std::string(row.cells[c]) + "'",
                    row.number);
      }
      values.push_back(*v);
    }
    m.entries.push_back(std::move(values));
  }
  return m;
}

TrendModel from_correlation(const CorrelationMatrix& matrix, double threshold) {
  if (!(threshold >= 0.0)) throw Error(ErrorCode::InvalidArgument, "threshold must be nonnegative");
  matrix.validate();
  std::vector<Variable> vars;
  for (const auto& name : matrix.names) {
    if (!is_identifier(name)) throw Error(ErrorCode::InvalidArgument, "invalid variable name '" + name + "'");
    vars.push_back(Variable{name});
  }
  std::vector<Relation> relations;
  const std::size_t n = matrix.names.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double c = matrix.entries[i][j];
      if (std::abs(c) <= threshold) continue;
      relations.push_back(Relation{c > 0.0 ? RelationType::Inc : RelationType::Dec,
                                   matrix.names[i], matrix.names[j], std::abs(c), std::nullopt});
    }
  }
  return TrendModel(std::move(vars), std::move(relations));
}

}  // namespace qtrend
