#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "betapath/hypergraph.hpp"

namespace betapath {

// Alternating vertex/edge sequence. Paths start with a vertex and may end
// with an edge (v1 e1 ... vn en) or a vertex (v1 e1 ... en v(n+1)). Cycles
// start with an edge (e1 v1 e2 v2 ... en vn) and close implicitly to e1.
struct BetaSequence {
  enum class Kind { Path, Cycle };
  Kind kind = Kind::Path;
  std::vector<Vertex> vertices;
  std::vector<int> edges;

  bool ends_with_edge() const { return vertices.size() == edges.size(); }
};

// Throws MalformedSequence unless the arity/alternation rules for the kind
// hold and every reference exists in h.
void check_shape(const Hypergraph& h, const BetaSequence& s);

// v_i must lie in e_{i-1} and e_i (with e_0 = e_1) and in no other edge of
// the sequence; a trailing vertex must lie in the final edge only.
bool is_beta_path(const Hypergraph& h, const BetaSequence& s);

// e_1 v_1 ... e_n v_n closing to e_1, n >= 3; v_i lies in e_i and e_{i+1}
// and in no other edge of the sequence.
bool is_beta_cycle(const Hypergraph& h, const BetaSequence& s);

// Cycle identity is up to rotation and reversal: rotate to the least edge
// index, orient toward the lexicographically smaller edge sequence.
struct CanonicalCycle {
  std::vector<int> edges;
  std::vector<Vertex> vertices;

  auto operator<=>(const CanonicalCycle&) const = default;
};

CanonicalCycle canonicalize(const BetaSequence& cycle);

BetaSequence to_sequence(const CanonicalCycle& c);

struct Through {
  enum class Mode { All, AtVertex, AtEdge };
  Mode mode = Mode::All;
  Vertex vertex;
  int edge = -1;

  static Through all() { return {}; }
  static Through at_vertex(Vertex v) { return {Mode::AtVertex, std::move(v), -1}; }
  static Through at_edge(int e) { return {Mode::AtEdge, {}, e}; }
};

struct CycleEnumeration {
  std::vector<CanonicalCycle> cycles;
  bool truncated = false;
};

// Backtracking enumeration of all beta-cycles involving the given vertex or
// edge (or all), deduplicated by canonical form. Stops early and sets the
// truncated flag once `limit` cycles have been emitted.
CycleEnumeration enumerate_beta_cycles(const Hypergraph& h, const Through& through,
                                       std::size_t limit);

// Lemma-style reduction: from beta-paths P1 = u ... v f and P2 = u ... w f
// (shared first vertex, shared final edge, v != w) in a linear hypergraph,
// builds the beta-cycle f v ... w by the max-index recurrence.
BetaSequence reduce_paths_to_cycle(const Hypergraph& h, const BetaSequence& p1,
                                   const BetaSequence& p2);

// Splices a beta-path P1 = v_C ... v_1 (vertex-ended; a single vertex is the
// trivial prefix) with P2 = v_1 e_1 ... v_i e_i and reduces the concatenation
// to a beta-path v_C ... v_i e_i by the same max-index recurrence.
BetaSequence splice_reduce(const Hypergraph& h, const BetaSequence& p1,
                           const BetaSequence& p2);

// Proposition-style transform v1 e1 v2 e2 ... -> e1 v2* e2 v3* ... mapping a
// beta-path of h to a beta-path of dual(h) via the dual correspondence.
BetaSequence dual_transform(const Hypergraph& h, const BetaSequence& p,
                            const DualCorrespondence& corr);

}  // namespace betapath
