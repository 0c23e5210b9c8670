#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "betapath/beta.hpp"
#include "betapath/hypergraph.hpp"

namespace betapath {

using IncidencePair = std::pair<Vertex, int>;

// A set T of incidence pairs (v, e). Canonical generators also record the
// chosen root per component and one witnessing beta-path per pair.
struct GeneratorSet {
  std::set<IncidencePair> pairs;
  std::map<std::string, Vertex> roots;  // component id -> root vertex
  std::map<IncidencePair, BetaSequence> witnesses;
};

// Simple graph on the hypergraph's vertex set; pairs stored with the
// lexicographically smaller endpoint first.
struct SkeletonGraph {
  std::vector<Vertex> vertices;
  std::set<std::pair<Vertex, Vertex>> edges;
};

// Connected components under shared-vertex edge adjacency, sorted by least
// vertex. Isolated vertices form their own components.
struct Component {
  std::string id;  // "component0", "component1", ...
  VertexSet vertices;
  std::set<int> edges;
};
std::vector<Component> connected_components(const Hypergraph& h);

// E(G) = union over (v,e) in T of {{v,w} : w in e, w != v}. Loops are
// dropped; InvalidPair when v is not in e.
SkeletonGraph build_skeleton(const Hypergraph& h, const GeneratorSet& t);

struct RootRule {
  // Explicit roots claim their components; any component not covered falls
  // back to its least vertex.
  std::vector<Vertex> explicit_roots;

  static RootRule least_vertex() { return {}; }
};

struct CanonicalGenerator {
  GeneratorSet generator;
  std::map<int, int> fiber_sizes;  // |T_f| per edge index
  int max_fiber = 0;
};

// T = {(v,e) : a beta-path v_C ... v e exists from the component root},
// found by exhaustive backtracking; the degenerate path "v_C e" counts when
// v_C is in e. Reports the per-edge fiber sizes |T_f|.
CanonicalGenerator canonical_generator(const Hypergraph& h, const RootRule& rule);

// For every unordered pair of distinct (v,f), (w,f) in T_f, the beta-cycle
// obtained by reducing their witnessing beta-paths. Requires |T_f| >= 2.
std::vector<BetaSequence> generator_cycle_certificates(const Hypergraph& h,
                                                       const GeneratorSet& t, int f);

struct WitnessExtraction {
  std::set<int> edges;  // E' = edges meeting Gprime in >= m vertices
  std::map<Vertex, bool> covered;  // v -> some e in E' has (v,e) in T
};

// E' = {e : |e ∩ gprime| >= m}; checks first that every vertex of gprime has
// degree >= m inside the skeleton subgraph induced by gprime (DegreeTooLow).
WitnessExtraction extract_witness(const Hypergraph& h, const GeneratorSet& t,
                                  const VertexSet& gprime, int m);

}  // namespace betapath
