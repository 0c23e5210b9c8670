#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace betapath {

using Vertex = std::string;
using VertexSet = std::set<Vertex>;

// Finite hypergraph: an ordered vertex set plus an ordered list of edges.
// Edge identity everywhere downstream is the edge's index in this list.
// Construction rejects duplicate vertices, duplicate edge sets, empty edges
// and edges touching unknown vertices. Immutable after construction.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::vector<Vertex> vertices, std::vector<VertexSet> edges,
             std::optional<std::vector<std::string>> edge_names = std::nullopt);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<VertexSet>& edges() const { return edges_; }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_vertex(const Vertex& v) const { return vertex_set_.count(v) > 0; }
  const VertexSet& edge(int i) const;

  // Default names are "e0", "e1", ... unless explicit names were given.
  std::string edge_name(int i) const;
  bool has_custom_edge_names() const { return !edge_names_.empty(); }

  // Resolves an edge reference: a decimal string is an index, anything else
  // a name. Returns std::nullopt when unknown.
  std::optional<int> resolve_edge(const std::string& ref) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<VertexSet> edges_;
  std::vector<std::string> edge_names_;
  VertexSet vertex_set_;
  std::map<std::string, int> name_to_edge_;
};

// star(v) = set of indices of edges containing v. Rebuilt deterministically
// from the hypergraph; equals v* in the dual direction.
class IncidenceIndex {
 public:
  explicit IncidenceIndex(const Hypergraph& h);

  const std::set<int>& star(const Vertex& v) const;
  int degree(const Vertex& v) const { return static_cast<int>(star(v).size()); }
  const std::map<Vertex, std::set<int>>& stars() const { return star_; }

 private:
  std::map<Vertex, std::set<int>> star_;
  std::set<int> empty_;
};

struct ValidationReport {
  struct UniformityViolation {
    int edge = 0;
    int size = 0;
  };
  struct LinearityViolation {
    int edge_a = 0;
    int edge_b = 0;
    std::vector<Vertex> shared;
  };
  std::vector<UniformityViolation> uniformity;
  std::vector<LinearityViolation> linearity;

  bool ok() const { return uniformity.empty() && linearity.empty(); }
};

// Checks k-uniformity (when k is given) and linearity (when requested).
// Report-based: never throws on violations.
ValidationReport validate(const Hypergraph& h, std::optional<int> k,
                          bool require_linear);

bool is_linear(const Hypergraph& h);
bool is_uniform(const Hypergraph& h, int k);

// Bidirectional tables tying a dual hypergraph back to its source:
// vertices of the dual correspond to edges of H, edges of the dual to
// vertices of H.
struct DualCorrespondence {
  std::vector<std::string> edge_to_dual_vertex;  // H edge index -> dual vertex id
  std::map<std::string, int> dual_vertex_to_edge;
  std::map<Vertex, int> vertex_to_dual_edge;  // H vertex id -> dual edge index
  std::vector<Vertex> dual_edge_to_vertex;
};

struct DualResult {
  Hypergraph dual;
  DualCorrespondence correspondence;
};

// H* with V* = E and E* = {v* : v in V}. Fails loudly when dualization would
// lose information: IsolatedVertex (empty star) or DuplicateStar (two
// vertices with identical stars).
DualResult dual(const Hypergraph& h);

struct Isomorphism {
  std::map<Vertex, Vertex> vertex_map;  // vertex of dual(dual(H)) -> vertex of H
  std::vector<int> edge_map;            // edge index of dual(dual(H)) -> edge index of H
};

// Composes the two dualization correspondences and verifies that the result
// identifies dual(dual(H)) with H edge-for-edge. Throws NotInvolutive when
// the composed map is not an isomorphism.
Isomorphism double_dual_correspondence(const Hypergraph& h);

}  // namespace betapath
