#include "betapath/hypergraph.hpp"

#include <algorithm>
#include <sstream>

#include "betapath/errors.hpp"

namespace betapath {

namespace {

std::string join(const VertexSet& s) {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : s) {
    if (!first) out << ",";
    out << v;
    first = false;
  }
  return out.str();
}

}  // namespace

Hypergraph::Hypergraph(std::vector<Vertex> vertices, std::vector<VertexSet> edges,
                       std::optional<std::vector<std::string>> edge_names)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (const auto& v : vertices_) {
    if (!vertex_set_.insert(v).second)
      fail("MalformedHypergraph", "duplicate vertex id '" + v + "'");
    if (v.empty()) fail("MalformedHypergraph", "empty vertex id");
  }
  std::set<VertexSet> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.empty())
      fail("MalformedHypergraph", "edge " + std::to_string(i) + " is empty");
    for (const auto& v : e)
      if (!vertex_set_.count(v))
        fail("MalformedHypergraph",
             "edge " + std::to_string(i) + " uses unknown vertex '" + v + "'");
    if (!seen.insert(e).second)
      fail("MalformedHypergraph",
           "duplicate edge set {" + join(e) + "} at index " + std::to_string(i));
  }
  if (edge_names) {
    if (edge_names->size() != edges_.size())
      fail("MalformedHypergraph", "edge_names length does not match edge count");
    edge_names_ = std::move(*edge_names);
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!name_to_edge_.emplace(edge_name(static_cast<int>(i)), static_cast<int>(i)).second)
      fail("MalformedHypergraph", "duplicate edge name '" + edge_name(static_cast<int>(i)) + "'");
  }
}

const VertexSet& Hypergraph::edge(int i) const {
  if (i < 0 || i >= edge_count())
    fail("MalformedSequence", "edge index " + std::to_string(i) + " out of range");
  return edges_[static_cast<std::size_t>(i)];
}

std::string Hypergraph::edge_name(int i) const {
  if (i < 0 || i >= edge_count())
    fail("MalformedSequence", "edge index " + std::to_string(i) + " out of range");
  if (!edge_names_.empty()) return edge_names_[static_cast<std::size_t>(i)];
  return "e" + std::to_string(i);
}

std::optional<int> Hypergraph::resolve_edge(const std::string& ref) const {
  if (!ref.empty() && std::all_of(ref.begin(), ref.end(),
                                  [](unsigned char c) { return std::isdigit(c); })) {
    int i = std::stoi(ref);
    if (i >= 0 && i < edge_count()) return i;
    return std::nullopt;
  }
  auto it = name_to_edge_.find(ref);
  if (it == name_to_edge_.end()) return std::nullopt;
  return it->second;
}

IncidenceIndex::IncidenceIndex(const Hypergraph& h) {
  for (const auto& v : h.vertices()) star_[v];
  for (int i = 0; i < h.edge_count(); ++i)
    for (const auto& v : h.edge(i)) star_[v].insert(i);
}

const std::set<int>& IncidenceIndex::star(const Vertex& v) const {
  auto it = star_.find(v);
  return it == star_.end() ? empty_ : it->second;
}

ValidationReport validate(const Hypergraph& h, std::optional<int> k,
                          bool require_linear) {
  ValidationReport report;
  if (k) {
    for (int i = 0; i < h.edge_count(); ++i) {
      int size = static_cast<int>(h.edge(i).size());
      if (size != *k) report.uniformity.push_back({i, size});
    }
  }
  if (require_linear) {
    for (int i = 0; i < h.edge_count(); ++i) {
      for (int j = i + 1; j < h.edge_count(); ++j) {
        std::vector<Vertex> shared;
        std::set_intersection(h.edge(i).begin(), h.edge(i).end(),
                              h.edge(j).begin(), h.edge(j).end(),
                              std::back_inserter(shared));
        if (shared.size() >= 2) report.linearity.push_back({i, j, std::move(shared)});
      }
    }
  }
  return report;
}

bool is_linear(const Hypergraph& h) {
  return validate(h, std::nullopt, true).linearity.empty();
}

bool is_uniform(const Hypergraph& h, int k) {
  return validate(h, k, false).uniformity.empty();
}

DualResult dual(const Hypergraph& h) {
  IncidenceIndex index(h);
  for (const auto& v : h.vertices())
    if (index.star(v).empty()) fail("IsolatedVertex", "vertex '" + v + "' lies in no edge");
  std::map<std::set<int>, Vertex> star_owners;
  for (const auto& v : h.vertices()) {
    auto [it, inserted] = star_owners.emplace(index.star(v), v);
    if (!inserted)
      fail("DuplicateStar",
           "vertices '" + it->second + "' and '" + v + "' have identical stars");
  }

  DualResult result;
  std::vector<Vertex> dual_vertices;
  dual_vertices.reserve(static_cast<std::size_t>(h.edge_count()));
  for (int i = 0; i < h.edge_count(); ++i) {
    std::string id = h.edge_name(i);
    dual_vertices.push_back(id);
    result.correspondence.edge_to_dual_vertex.push_back(id);
    result.correspondence.dual_vertex_to_edge[id] = i;
  }

  std::vector<VertexSet> dual_edges;
  std::vector<std::string> dual_edge_names;
  int j = 0;
  for (const auto& v : h.vertices()) {
    VertexSet star_edge;
    for (int e : index.star(v)) star_edge.insert(h.edge_name(e));
    dual_edges.push_back(std::move(star_edge));
    dual_edge_names.push_back(v);
    result.correspondence.vertex_to_dual_edge[v] = j;
    result.correspondence.dual_edge_to_vertex.push_back(v);
    ++j;
  }

  result.dual = Hypergraph(std::move(dual_vertices), std::move(dual_edges),
                           std::move(dual_edge_names));
  return result;
}

Isomorphism double_dual_correspondence(const Hypergraph& h) {
  DualResult first = dual(h);
  DualResult second = dual(first.dual);
  const Hypergraph& dd = second.dual;

  Isomorphism iso;
  // vertex of dd ->(second) edge of dual ->(first) vertex of H
  for (const auto& v : dd.vertices()) {
    auto it = second.correspondence.dual_vertex_to_edge.find(v);
    if (it == second.correspondence.dual_vertex_to_edge.end())
      fail("NotInvolutive", "no correspondence for double-dual vertex '" + v + "'");
    iso.vertex_map[v] = first.correspondence.dual_edge_to_vertex.at(
        static_cast<std::size_t>(it->second));
  }
  // edge of dd ->(second) vertex of dual ->(first) edge of H
  iso.edge_map.resize(static_cast<std::size_t>(dd.edge_count()));
  for (int i = 0; i < dd.edge_count(); ++i) {
    const Vertex& dual_vertex = second.correspondence.dual_edge_to_vertex.at(
        static_cast<std::size_t>(i));
    auto it = first.correspondence.dual_vertex_to_edge.find(dual_vertex);
    if (it == first.correspondence.dual_vertex_to_edge.end())
      fail("NotInvolutive", "no correspondence for double-dual edge " + std::to_string(i));
    iso.edge_map[static_cast<std::size_t>(i)] = it->second;
  }

  // The composition must be a bijection that carries edges onto edges.
  std::set<Vertex> image;
  for (const auto& [from, to] : iso.vertex_map) image.insert(to);
  if (static_cast<int>(image.size()) != h.vertex_count() ||
      static_cast<int>(iso.vertex_map.size()) != dd.vertex_count() ||
      dd.vertex_count() != h.vertex_count())
    fail("NotInvolutive", "vertex correspondence is not a bijection");
  if (dd.edge_count() != h.edge_count())
    fail("NotInvolutive", "edge counts differ between H and its double dual");
  for (int i = 0; i < dd.edge_count(); ++i) {
    VertexSet mapped;
    for (const auto& v : dd.edge(i)) mapped.insert(iso.vertex_map.at(v));
    if (mapped != h.edge(iso.edge_map[static_cast<std::size_t>(i)]))
      fail("NotInvolutive",
           "double-dual edge " + std::to_string(i) + " does not map onto its source edge");
  }
  return iso;
}

}  // namespace betapath
