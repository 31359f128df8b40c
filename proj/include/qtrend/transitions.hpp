#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qtrend/solver.hpp"

namespace qtrend {

/// Admissible smooth one-step successors of a single-variable state, in
/// canonical order. Covers all 27 triplets.
std::vector<Triplet> one_dim_transitions(Triplet from);

/// The transition table rows as printed: source followed by its "To" and
/// alternative targets, in table order (positive, negative, zero value).
struct TransitionRow {
  Triplet from;
  std::vector<Triplet> to;
};
const std::vector<TransitionRow>& transition_table();

using Arc = std::pair<std::size_t, std::size_t>;  // 1-based scenario indices
using Path = std::vector<std::size_t>;

/// Directed graph over a scenario set. An arc a -> b exists when every
/// variable either keeps its triplet or moves to a one-dimensional successor,
/// and at least one variable moves.
class TransitionGraph {
 public:
  TransitionGraph() = default;
  explicit TransitionGraph(ScenarioSet nodes, std::vector<Arc> arcs);

  const ScenarioSet& nodes() const noexcept { return nodes_; }
  /// Sorted by (from, to).
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  /// Successors of a 1-based node, ascending. Throws Error(UnknownNode).
  const std::vector<std::size_t>& successors(std::size_t node) const;

 private:
  ScenarioSet nodes_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

TransitionGraph build_graph(const ScenarioSet& scenarios);

/// Nodes without outgoing arcs, ascending.
std::vector<std::size_t> terminals(const TransitionGraph& g);

/// All simple paths from -> to with at most max_len arcs, lexicographically
/// ordered. from == to yields the single zero-length path.
std::vector<Path> paths(const TransitionGraph& g, std::size_t from, std::size_t to,
                        std::size_t max_len);

/// Elementary cycles, each rotated to start at its smallest node and listed
/// without repeating the start; sorted lexicographically. Stops after
/// max_cycles when it is nonzero.
std::vector<Path> cycles(const TransitionGraph& g, std::size_t max_cycles = 0);

bool is_acyclic(const TransitionGraph& g);

/// Nodes reachable from `from` (including itself), ascending.
std::vector<std::size_t> reachable(const TransitionGraph& g, std::size_t from);

/// Graphviz rendering; node labels carry the index and per-variable triplets.
std::string to_dot(const TransitionGraph& g);

}  // namespace qtrend
