#include "betapath/skeleton.hpp"

#include <algorithm>
#include <functional>

#include "betapath/errors.hpp"

namespace betapath {

std::vector<Component> connected_components(const Hypergraph& h) {
  std::map<Vertex, int> parent_index;
  std::vector<Vertex> ids;
  for (const auto& v : h.vertices()) {
    parent_index[v] = static_cast<int>(ids.size());
    ids.push_back(v);
  }
  std::vector<int> parent(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(b)] = a;
  };

  for (int e = 0; e < h.edge_count(); ++e) {
    const auto& members = h.edge(e);
    auto it = members.begin();
    int first = parent_index.at(*it);
    for (++it; it != members.end(); ++it) unite(first, parent_index.at(*it));
  }

  std::map<int, Component> grouped;
  for (const auto& v : h.vertices()) grouped[find(parent_index.at(v))].vertices.insert(v);
  for (int e = 0; e < h.edge_count(); ++e)
    grouped[find(parent_index.at(*h.edge(e).begin()))].edges.insert(e);

  std::vector<Component> components;
  for (auto& [root, comp] : grouped) components.push_back(std::move(comp));
  std::sort(components.begin(), components.end(),
            [](const Component& a, const Component& b) {
              return *a.vertices.begin() < *b.vertices.begin();
            });
  for (std::size_t i = 0; i < components.size(); ++i)
    components[i].id = "component" + std::to_string(i);
  return components;
}

SkeletonGraph build_skeleton(const Hypergraph& h, const GeneratorSet& t) {
  SkeletonGraph g;
  g.vertices = h.vertices();
  for (const auto& [v, e] : t.pairs) {
    if (e < 0 || e >= h.edge_count() || !h.edge(e).count(v))
      fail("InvalidPair",
           "pair ('" + v + "', " + std::to_string(e) + ") is not an incidence");
    for (const auto& w : h.edge(e)) {
      if (w == v) continue;
      g.edges.insert(v < w ? std::make_pair(v, w) : std::make_pair(w, v));
    }
  }
  return g;
}

namespace {

// Exhaustive search over beta-paths v_C e_1 v_2 e_2 ... from the root,
// recording (last vertex, appended edge) with the first witness found.
void collect_reachable_pairs(const Hypergraph& h, const Component& comp,
                             const Vertex& root, GeneratorSet& out) {
  std::vector<Vertex> vs{root};
  std::vector<int> es;
  VertexSet used_vertices{root};
  std::set<int> used_edges;

  std::function<void()> extend = [&]() {
    const Vertex& tip = vs.back();
    for (int e : comp.edges) {
      if (used_edges.count(e) || !h.edge(e).count(tip)) continue;
      bool clean = true;
      for (std::size_t i = 0; i + 1 < vs.size() && clean; ++i)
        if (h.edge(e).count(vs[i])) clean = false;
      if (!clean) continue;

      es.push_back(e);
      used_edges.insert(e);
      IncidencePair pair{tip, e};
      if (out.pairs.insert(pair).second) {
        BetaSequence witness;
        witness.kind = BetaSequence::Kind::Path;
        witness.vertices = vs;
        witness.edges = es;
        out.witnesses.emplace(pair, std::move(witness));
      }
      for (const Vertex& w : h.edge(e)) {
        if (used_vertices.count(w)) continue;
        bool fresh = true;
        for (std::size_t i = 0; i + 1 < es.size() && fresh; ++i)
          if (h.edge(es[i]).count(w)) fresh = false;
        if (!fresh) continue;
        vs.push_back(w);
        used_vertices.insert(w);
        extend();
        vs.pop_back();
        used_vertices.erase(w);
      }
      es.pop_back();
      used_edges.erase(e);
    }
  };
  extend();
}

}  // namespace

CanonicalGenerator canonical_generator(const Hypergraph& h, const RootRule& rule) {
  for (const auto& r : rule.explicit_roots)
    if (!h.has_vertex(r)) fail("PreconditionViolated", "unknown root vertex '" + r + "'");

  CanonicalGenerator result;
  auto components = connected_components(h);
  for (const auto& comp : components) {
    Vertex root = *comp.vertices.begin();
    int claims = 0;
    for (const auto& r : rule.explicit_roots) {
      if (comp.vertices.count(r)) {
        root = r;
        ++claims;
      }
    }
    if (claims > 1)
      fail("PreconditionViolated", "multiple explicit roots in " + comp.id);
    result.generator.roots[comp.id] = root;
    collect_reachable_pairs(h, comp, root, result.generator);
  }

  for (int e = 0; e < h.edge_count(); ++e) result.fiber_sizes[e] = 0;
  for (const auto& [v, e] : result.generator.pairs) ++result.fiber_sizes[e];
  for (const auto& [e, size] : result.fiber_sizes)
    result.max_fiber = std::max(result.max_fiber, size);
  return result;
}

std::vector<BetaSequence> generator_cycle_certificates(const Hypergraph& h,
                                                       const GeneratorSet& t, int f) {
  if (f < 0 || f >= h.edge_count())
    fail("PreconditionViolated", "edge index " + std::to_string(f) + " out of range");
  if (t.roots.empty())
    fail("PreconditionViolated", "generator set has no recorded roots");

  std::vector<IncidencePair> fiber;
  for (const auto& pair : t.pairs)
    if (pair.second == f) fiber.push_back(pair);
  if (fiber.size() < 2)
    fail("PreconditionViolated",
         "|T_f| = " + std::to_string(fiber.size()) + " for edge " + h.edge_name(f) +
             "; need at least 2");

  std::vector<BetaSequence> certificates;
  for (std::size_t a = 0; a < fiber.size(); ++a) {
    for (std::size_t b = a + 1; b < fiber.size(); ++b) {
      auto wa = t.witnesses.find(fiber[a]);
      auto wb = t.witnesses.find(fiber[b]);
      if (wa == t.witnesses.end() || wb == t.witnesses.end())
        fail("PreconditionViolated", "generator set lacks witnessing beta-paths");
      if (wa->second.vertices.front() != wb->second.vertices.front()) continue;
      certificates.push_back(reduce_paths_to_cycle(h, wa->second, wb->second));
    }
  }
  return certificates;
}

WitnessExtraction extract_witness(const Hypergraph& h, const GeneratorSet& t,
                                  const VertexSet& gprime, int m) {
  if (m < 1) fail("PreconditionViolated", "m must be >= 1");
  for (const auto& v : gprime)
    if (!h.has_vertex(v)) fail("PreconditionViolated", "unknown vertex '" + v + "'");

  SkeletonGraph skeleton = build_skeleton(h, t);
  for (const auto& v : gprime) {
    int degree = 0;
    for (const auto& [a, b] : skeleton.edges) {
      if ((a == v && gprime.count(b)) || (b == v && gprime.count(a))) ++degree;
    }
    if (degree < m)
      fail("DegreeTooLow", "vertex '" + v + "' has induced skeleton degree " +
                               std::to_string(degree) + " < " + std::to_string(m));
  }

  WitnessExtraction result;
  for (int e = 0; e < h.edge_count(); ++e) {
    int inside = 0;
    for (const auto& v : h.edge(e))
      if (gprime.count(v)) ++inside;
    if (inside >= m) result.edges.insert(e);
  }
  for (const auto& v : gprime) {
    bool covered = false;
    for (int e : result.edges)
      if (t.pairs.count({v, e})) {
        covered = true;
        break;
      }
    result.covered[v] = covered;
  }
  return result;
}

}  // namespace betapath
