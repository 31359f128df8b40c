#include "qtrend/transitions.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>
#include <string_view>

#include "qtrend/error.hpp"

namespace qtrend {

namespace {

struct RawRow {
  std::string_view from;
  std::vector<std::string_view> to;  // "To" column followed by the alternatives
};

// One-dimensional transition tables, transcribed row by row.
const std::vector<RawRow>& raw_table() {
  static const std::vector<RawRow> rows = {
      // initially positive-valued
      {"+++", {"++0"}},
      {"++0", {"+++", "++-"}},
      {"++-", {"++0", "+0-", "+00"}},
      {"+0+", {"+++"}},
      {"+00", {"+++", "+--"}},
      {"+0-", {"+--"}},
      {"+-+", {"+-0", "+0+", "+00", "0-+", "00+", "000", "0-0"}},
      {"+-0", {"+-+", "+--", "0-0"}},
      {"+--", {"+-0", "0--", "0-0"}},
      // initially negative-valued
      {"-++", {"-+0", "0++", "0+0"}},
      {"-+0", {"-+-", "-++", "0+0"}},
      {"-+-", {"-+0", "-0-", "-00", "0+-", "00-", "000", "0+0"}},
      {"-0+", {"-++"}},
      {"-00", {"-++", "---"}},
      {"-0-", {"---"}},
      {"--+", {"--0", "-0+", "-00"}},
      {"--0", {"---", "--+"}},
      {"---", {"--0"}},
      // initially zero-valued
      {"0++", {"++0", "++-", "+++"}},
      {"0+0", {"++0", "++-", "+++"}},
      {"0+-", {"++-"}},
      {"00+", {"+++"}},
      {"000", {"+++", "---"}},
      {"00-", {"---"}},
      {"0-+", {"--+"}},
      {"0-0", {"--0", "--+", "---"}},
      {"0--", {"--0", "--+", "---"}},
  };
  return rows;
}

Triplet must_parse(std::string_view s) {
  auto t = Triplet::parse(s);
  if (!t) throw Error(ErrorCode::InvalidArgument, "malformed triplet in transition table");
  return *t;
}

const std::array<std::uint32_t, Triplet::kCount>& successor_masks() {
  static const auto masks = [] {
    std::array<std::uint32_t, Triplet::kCount> m{};
    for (const auto& row : transition_table()) {
      for (const auto& t : row.to) m[row.from.index()] |= std::uint32_t{1} << t.index();
    }
    return m;
  }();
  return masks;
}

bool can_move(Triplet from, Triplet to) {
  return (successor_masks()[from.index()] >> to.index() & 1u) != 0;
}

void require_node(const TransitionGraph& g, std::size_t node) {
  if (node == 0 || node > g.node_count()) {
    throw Error(ErrorCode::UnknownNode, "no scenario with index " + std::to_string(node));
  }
}

}  // namespace

const std::vector<TransitionRow>& transition_table() {
  static const std::vector<TransitionRow> table = [] {
    std::vector<TransitionRow> out;
    for (const auto& raw : raw_table()) {
      TransitionRow row{must_parse(raw.from), {}};
      for (auto t : raw.to) row.to.push_back(must_parse(t));
      out.push_back(std::move(row));
    }
    return out;
  }();
  return table;
}

std::vector<Triplet> one_dim_transitions(Triplet from) {
  std::vector<Triplet> out;
  const std::uint32_t mask = successor_masks()[from.index()];
  for (int i = 0; i < Triplet::kCount; ++i) {
    if (mask >> i & 1u) out.push_back(Triplet::from_index(i));
  }
  return out;
}

TransitionGraph::TransitionGraph(ScenarioSet nodes, std::vector<Arc> arcs)
    : nodes_(std::move(nodes)), arcs_(std::move(arcs)), adjacency_(nodes_.size() + 1) {
  for (const auto& [a, b] : arcs_) {
    if (a == 0 || b == 0 || a > nodes_.size() || b > nodes_.size() || a == b) {
      throw Error(ErrorCode::UnknownNode, "arc must connect two distinct existing scenarios");
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  for (const auto& [a, b] : arcs_) adjacency_[a].push_back(b);
}

const std::vector<std::size_t>& TransitionGraph::successors(std::size_t node) const {
  require_node(*this, node);
  return adjacency_[node];
}

TransitionGraph build_graph(const ScenarioSet& scenarios) {
  std::vector<Arc> arcs;
  const auto& all = scenarios.scenarios();
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (a.index == b.index) continue;
      bool legal = true;
      for (std::size_t v = 0; v < a.triplets.size() && legal; ++v) {
        legal = a.triplets[v] == b.triplets[v] || can_move(a.triplets[v], b.triplets[v]);
      }
      if (legal) arcs.emplace_back(a.index, b.index);
    }
  }
  return TransitionGraph(scenarios, std::move(arcs));
}

std::vector<std::size_t> terminals(const TransitionGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 1; v <= g.node_count(); ++v) {
    if (g.successors(v).empty()) out.push_back(v);
  }
  return out;
}

std::vector<Path> paths(const TransitionGraph& g, std::size_t from, std::size_t to,
                        std::size_t max_len) {
  require_node(g, from);
  require_node(g, to);
  if (max_len == 0) throw Error(ErrorCode::InvalidArgument, "max path length must be at least 1");
  if (from == to) return {Path{from}};

  std::vector<Path> out;
  Path current{from};
  std::vector<bool> on_path(g.node_count() + 1, false);
  on_path[from] = true;
  std::function<void(std::size_t)> dfs = [&](std::size_t node) {
    if (current.size() - 1 == max_len) return;
    for (std::size_t next : g.successors(node)) {
      if (on_path[next]) continue;
      current.push_back(next);
      if (next == to) {
        out.push_back(current);
      } else {
        on_path[next] = true;
        dfs(next);
        on_path[next] = false;
      }
      current.pop_back();
    }
  };
  dfs(from);
  std::sort(out.begin(), out.end());
  return out;
}

// Johnson's elementary circuit enumeration on the subgraph of nodes >= start.
std::vector<Path> cycles(const TransitionGraph& g, std::size_t max_cycles) {
  const std::size_t n = g.node_count();
  std::vector<Path> out;
  std::vector<bool> blocked(n + 1, false);
  std::vector<std::set<std::size_t>> blocked_by(n + 1);
  Path stack;
  bool stop = false;

  std::function<void(std::size_t)> unblock = [&](std::size_t u) {
    blocked[u] = false;
    auto waiting = std::move(blocked_by[u]);
    blocked_by[u].clear();
    for (std::size_t w : waiting) {
      if (blocked[w]) unblock(w);
    }
  };

  for (std::size_t start = 1; start <= n && !stop; ++start) {
    std::fill(blocked.begin(), blocked.end(), false);
    for (auto& b : blocked_by) b.clear();

    std::function<bool(std::size_t)> circuit = [&](std::size_t v) {
      bool found = false;
      stack.push_back(v);
      blocked[v] = true;
      for (std::size_t w : g.successors(v)) {
        if (stop) break;
        if (w < start) continue;
        if (w == start) {
          out.push_back(stack);
          found = true;
          if (max_cycles != 0 && out.size() >= max_cycles) stop = true;
        } else if (!blocked[w] && circuit(w)) {
          found = true;
        }
      }
      if (found) {
        unblock(v);
      } else {
        for (std::size_t w : g.successors(v)) {
          if (w >= start) blocked_by[w].insert(v);
        }
      }
      stack.pop_back();
      return found;
    };
    circuit(start);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_acyclic(const TransitionGraph& g) { return cycles(g, 1).empty(); }

std::vector<std::size_t> reachable(const TransitionGraph& g, std::size_t from) {
  require_node(g, from);
  std::vector<bool> seen(g.node_count() + 1, false);
  std::vector<std::size_t> todo{from};
  seen[from] = true;
  while (!todo.empty()) {
    const std::size_t v = todo.back();
    todo.pop_back();
    for (std::size_t w : g.successors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        todo.push_back(w);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 1; v <= g.node_count(); ++v) {
    if (seen[v]) out.push_back(v);
  }
  return out;
}

std::string to_dot(const TransitionGraph& g) {
  std::ostringstream os;
  os << "digraph transitions {\n";
  os << "  // variables:";
  for (const auto& v : g.nodes().model().variables()) os << ' ' << v.name;
  os << "\n  node [shape=box, fontname=\"monospace\"];\n";
  for (const auto& s : g.nodes().scenarios()) {
    os << "  " << s.index << " [label=\"" << s.index << "\\n";
    for (std::size_t v = 0; v < s.triplets.size(); ++v) {
      if (v != 0) os << ' ';
      os << s.triplets[v].to_string();
    }
    os << "\"];\n";
  }
  for (const auto& [a, b] : g.arcs()) os << "  " << a << " -> " << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace qtrend
