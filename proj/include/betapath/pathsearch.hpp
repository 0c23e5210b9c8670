#pragma once

#include <map>
#include <string>
#include <vector>

#include "betapath/hypergraph.hpp"

namespace betapath {

// Bijection from a target set (vertex ids, or edge names) onto {1, ..., n}.
struct Labeling {
  enum class Target { Vertices, Edges };
  Target target = Target::Vertices;
  std::map<std::string, int> map;
};

// Throws MalformedLabeling unless the values are exactly 1..n.
Labeling make_labeling(Labeling::Target target, std::map<std::string, int> map);

// Identity-style labeling: sorted target ids get labels 1..n in order.
Labeling identity_labeling(const Hypergraph& h, Labeling::Target target);

// Vertex sequence whose consecutive k-blocks, overlapping in exactly one
// vertex, are all edges of the hypergraph.
struct LoosePath {
  int k = 0;
  std::vector<Vertex> vertex_seq;
  std::vector<int> edge_seq;

  bool empty() const { return vertex_seq.empty(); }
  int edge_count() const { return static_cast<int>(edge_seq.size()); }
};

// Splits the sequence into overlapping k-blocks and matches each against an
// edge of h. Errors: BadLength, NotAnEdge(i), PreconditionViolated on
// repeated vertices.
LoosePath derive_edges(const Hypergraph& h, int k, const std::vector<Vertex>& seq);

enum class IncreasingMode { Full, Skip, Edge };

IncreasingMode mode_from_string(const std::string& name);
std::string mode_to_string(IncreasingMode mode);

// Full: every consecutive vertex pair increases. Skip: each block's first
// vertex is below its last.
bool is_increasing(const LoosePath& p, const Labeling& phi, IncreasingMode mode);

// Edge labels increase along the edge sequence; labels are keyed by edge
// name in phi.
bool is_edge_increasing(const Hypergraph& h, const LoosePath& p, const Labeling& phi);

// Exact search for a loose path with the most edges satisfying the mode's
// predicate; ties go to the lexicographically least vertex sequence. The
// empty path is returned only when h has no edges.
LoosePath longest_increasing_path(const Hypergraph& h, int k, const Labeling& phi,
                                  IncreasingMode mode);

struct AdversarialResult {
  // Path size under the minimizing labeling: vertices for full/skip,
  // edges for edge mode.
  int min_max = 0;
  Labeling labeling;
};

// Exhausts all bijective labelings of the mode's target set (TooLarge above
// `bound` elements) and reports the one minimizing the longest increasing
// path, ties broken by lexicographically least label vector.
AdversarialResult adversarial_min_max(const Hypergraph& h, int k, IncreasingMode mode,
                                      int bound = 9);

}  // namespace betapath
