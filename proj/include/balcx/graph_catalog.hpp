#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "balcx/complex.hpp"
#include "balcx/enumeration.hpp"

namespace balcx {

enum class GraphTag {
  EvenCycle,
  TwoOddCyclesSharedVertex,
  TwoOddCyclesDisjoint,
  TwoOddCyclesPath,
  NotMinimalPattern,
};

std::string to_string(GraphTag tag);
/// Inverse of to_string; throws DomainError on an unknown name.
GraphTag parse_graph_tag(std::string_view name);

/// A structural pattern of a 1-complex. Loops are cycles of length 1.
struct GraphShape {
  GraphTag tag = GraphTag::NotMinimalPattern;
  /// One length for EvenCycle, two ascending lengths for the odd-cycle
  /// patterns, none for NotMinimalPattern.
  std::vector<int> cycle_lengths;
  /// Edges on the connecting chain; TwoOddCyclesPath only.
  std::optional<int> path_length;

  bool is_minimal() const { return tag != GraphTag::NotMinimalPattern; }

  friend bool operator==(const GraphShape&, const GraphShape&) = default;
};

/// Matches the graph against the minimal patterns valid in the field's
/// characteristic. Throws DomainError unless the simplices have cardinality 2.
GraphShape classify_graph(const Complex& graph, FieldSpec field);

/// Minimal pattern, no loop, and not the 4-cycle. Requires n >= 6 and the
/// graph's labels inside [n-1].
bool is_irreducible_degree_two(const Complex& graph, FieldSpec field, int n);

/// Relabeling-invariant form: vertices compressed to 1..k, then the least
/// sorted edge list over the relabelings that respect a refined degree
/// coloring.
Complex canonical_graph(const Complex& graph);

/// One representative per isomorphism class of loop-allowed graphs on at most
/// `max_vertices` vertices that is_minimal() accepts, in canonical form with
/// n = max_vertices + 1, sorted. Candidates are generated exhaustively with
/// min degree 2 and at most k + 2 edges on k vertices, bounds every minimal
/// graph meets for linear-algebra reasons alone.
std::vector<Complex> enumerate_minimal_graphs(
    int max_vertices, FieldSpec field,
    const EnumerationOptions& options = EnumerationOptions::from_environment());

}  // namespace balcx
