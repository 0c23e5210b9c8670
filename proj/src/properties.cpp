#include "betapath/properties.hpp"

#include <algorithm>

#include "betapath/errors.hpp"

namespace betapath {

namespace {

// Edges e containing v with |alive ∩ e| >= ell.
int qualifying_edges(const Hypergraph& h, const IncidenceIndex& index,
                     const VertexSet& alive, const Vertex& v, int ell) {
  int count = 0;
  for (int e : index.star(v)) {
    int inside = 0;
    for (const auto& u : h.edge(e))
      if (alive.count(u)) ++inside;
    if (inside >= ell) ++count;
  }
  return count;
}

// Vertices of e shared with some other alive edge.
int shared_vertices(const Hypergraph& h, const IncidenceIndex& index,
                    const std::set<int>& alive, int e) {
  int count = 0;
  for (const auto& v : h.edge(e)) {
    for (int f : index.star(v)) {
      if (f != e && alive.count(f)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace

PeelResult<Vertex> peel_P_ell(const Hypergraph& h, int ell, int d) {
  if (ell < 1) fail("PreconditionViolated", "ell must be >= 1");
  if (d < 1) fail("PreconditionViolated", "d must be >= 1");
  IncidenceIndex index(h);

  PeelResult<Vertex> result;
  int max_edge_size = 0;
  for (int e = 0; e < h.edge_count(); ++e)
    max_edge_size = std::max(max_edge_size, static_cast<int>(h.edge(e).size()));
  if (h.edge_count() > 0 && ell > max_edge_size)
    result.warning = "ell exceeds the largest edge size; the witness is empty by definition";

  VertexSet alive(h.vertices().begin(), h.vertices().end());
  int round = 1;
  while (true) {
    std::vector<Vertex> removed;
    for (const auto& v : alive)
      if (qualifying_edges(h, index, alive, v, ell) < d) removed.push_back(v);
    if (removed.empty()) break;
    for (const auto& v : removed) alive.erase(v);
    result.trace.push_back({round++, std::move(removed)});
  }
  result.witness = alive;
  for (const auto& v : alive)
    result.counts[v] = qualifying_edges(h, index, alive, v, ell);
  return result;
}

PeelResult<int> peel_P2_star(const Hypergraph& h, int d) {
  if (d < 1) fail("PreconditionViolated", "d must be >= 1");
  IncidenceIndex index(h);

  PeelResult<int> result;
  std::set<int> alive;
  for (int e = 0; e < h.edge_count(); ++e) alive.insert(e);
  int round = 1;
  while (true) {
    std::vector<int> removed;
    for (int e : alive)
      if (shared_vertices(h, index, alive, e) < d) removed.push_back(e);
    if (removed.empty()) break;
    for (int e : removed) alive.erase(e);
    result.trace.push_back({round++, std::move(removed)});
  }
  result.witness = alive;
  for (int e : alive) result.counts[e] = shared_vertices(h, index, alive, e);
  return result;
}

bool p2_duality_check(const Hypergraph& h, int d) {
  DualResult dualized = dual(h);
  PeelResult<Vertex> primal = peel_P_ell(h, 2, d);
  PeelResult<int> dual_side = peel_P2_star(dualized.dual, d);

  std::set<int> mapped;
  for (const auto& v : primal.witness)
    mapped.insert(dualized.correspondence.vertex_to_dual_edge.at(v));
  return mapped == dual_side.witness;
}

}  // namespace betapath
