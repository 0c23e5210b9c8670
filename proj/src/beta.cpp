#include "betapath/beta.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "betapath/errors.hpp"

namespace betapath {

namespace {

bool all_distinct_vertices(const std::vector<Vertex>& vs) {
  std::set<Vertex> seen(vs.begin(), vs.end());
  return seen.size() == vs.size();
}

bool all_distinct_edges(const std::vector<int>& es) {
  std::set<int> seen(es.begin(), es.end());
  return seen.size() == es.size();
}

}  // namespace

void check_shape(const Hypergraph& h, const BetaSequence& s) {
  if (s.edges.empty() || s.vertices.empty())
    fail("MalformedSequence", "sequence must contain at least one vertex and one edge");
  if (s.kind == BetaSequence::Kind::Path) {
    if (s.vertices.size() != s.edges.size() && s.vertices.size() != s.edges.size() + 1)
      fail("MalformedSequence", "path must alternate v e v e ... ending in a vertex or an edge");
  } else {
    if (s.vertices.size() != s.edges.size())
      fail("MalformedSequence", "cycle must alternate e v e v ... with equal counts");
  }
  for (const auto& v : s.vertices)
    if (!h.has_vertex(v)) fail("MalformedSequence", "unknown vertex '" + v + "'");
  for (int e : s.edges)
    if (e < 0 || e >= h.edge_count())
      fail("MalformedSequence", "edge index " + std::to_string(e) + " out of range");
}

bool is_beta_path(const Hypergraph& h, const BetaSequence& s) {
  check_shape(h, s);
  if (s.kind != BetaSequence::Kind::Path)
    fail("MalformedSequence", "expected a path-form sequence");
  if (!all_distinct_vertices(s.vertices) || !all_distinct_edges(s.edges)) return false;
  const int n = static_cast<int>(s.edges.size());
  for (int i = 0; i < static_cast<int>(s.vertices.size()); ++i) {
    // v_1 lies in e_1 only (e_0 = e_1); interior v_i in e_{i-1} and e_i; a
    // trailing vertex in the final edge only.
    for (int j = 0; j < n; ++j) {
      bool allowed = (i == 0) ? (j == 0) : (j == i - 1 || j == i);
      bool member = h.edge(s.edges[static_cast<std::size_t>(j)]).count(
                        s.vertices[static_cast<std::size_t>(i)]) > 0;
      if (member != allowed) return false;
    }
  }
  return true;
}

bool is_beta_cycle(const Hypergraph& h, const BetaSequence& s) {
  check_shape(h, s);
  if (s.kind != BetaSequence::Kind::Cycle)
    fail("MalformedSequence", "expected a cycle-form sequence");
  const int n = static_cast<int>(s.edges.size());
  if (n < 3) return false;
  if (!all_distinct_vertices(s.vertices) || !all_distinct_edges(s.edges)) return false;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool allowed = (j == i || j == (i + 1) % n);
      bool member = h.edge(s.edges[static_cast<std::size_t>(j)]).count(
                        s.vertices[static_cast<std::size_t>(i)]) > 0;
      if (member != allowed) return false;
    }
  }
  return true;
}

CanonicalCycle canonicalize(const BetaSequence& s) {
  if (s.kind != BetaSequence::Kind::Cycle || s.vertices.size() != s.edges.size() ||
      s.edges.empty())
    fail("MalformedSequence", "canonicalize expects a cycle-form sequence");
  const int n = static_cast<int>(s.edges.size());
  auto at = [&](int i) { return static_cast<std::size_t>(((i % n) + n) % n); };

  CanonicalCycle best;
  bool have = false;
  for (int r = 0; r < n; ++r) {
    CanonicalCycle fwd, bwd;
    for (int i = 0; i < n; ++i) {
      fwd.edges.push_back(s.edges[at(r + i)]);
      fwd.vertices.push_back(s.vertices[at(r + i)]);
      // Reversed traversal starting at edge r visits e_r, e_{r-1}, ... with
      // vertex v_{r-1} between e_r and e_{r-1}.
      bwd.edges.push_back(s.edges[at(r - i)]);
      bwd.vertices.push_back(s.vertices[at(r - i - 1)]);
    }
    for (auto* cand : {&fwd, &bwd}) {
      if (!have || *cand < best) {
        best = *cand;
        have = true;
      }
    }
  }
  return best;
}

BetaSequence to_sequence(const CanonicalCycle& c) {
  BetaSequence s;
  s.kind = BetaSequence::Kind::Cycle;
  s.edges = c.edges;
  s.vertices = c.vertices;
  return s;
}

CycleEnumeration enumerate_beta_cycles(const Hypergraph& h, const Through& through,
                                       std::size_t limit) {
  CycleEnumeration out;
  const int m = h.edge_count();
  std::set<CanonicalCycle> found;

  std::vector<int> es;
  std::vector<Vertex> vs;
  std::vector<char> edge_used(static_cast<std::size_t>(m), 0);
  VertexSet vertex_used;

  auto passes = [&](const Vertex& closing) {
    switch (through.mode) {
      case Through::Mode::All:
        return true;
      case Through::Mode::AtVertex:
        return closing == through.vertex ||
               std::find(vs.begin(), vs.end(), through.vertex) != vs.end();
      case Through::Mode::AtEdge:
        return std::find(es.begin(), es.end(), through.edge) != es.end();
    }
    return true;
  };

  // Extends e_1 v_1 ... e_t: edges after e_1 keep a larger index and the
  // closing step requires e_2 < e_t, so each cycle appears exactly once in
  // canonical orientation. Returns false to abort once the limit is hit.
  std::function<bool()> step = [&]() -> bool {
    const int t = static_cast<int>(es.size());
    const int last = es[static_cast<std::size_t>(t - 1)];
    for (const Vertex& w : h.edge(last)) {
      if (vertex_used.count(w)) continue;
      if (t >= 3 && h.edge(es[0]).count(w) && es[1] < last) {
        bool interior_clean = true;
        for (int j = 1; j + 1 < t && interior_clean; ++j)
          if (h.edge(es[static_cast<std::size_t>(j)]).count(w)) interior_clean = false;
        if (interior_clean && passes(w)) {
          if (found.size() == limit) {
            out.truncated = true;
            return false;
          }
          BetaSequence cycle;
          cycle.kind = BetaSequence::Kind::Cycle;
          cycle.edges = es;
          cycle.vertices = vs;
          cycle.vertices.push_back(w);
          found.insert(canonicalize(cycle));
        }
      }
      bool extendable = true;
      for (int j = 0; j + 1 < t && extendable; ++j)
        if (h.edge(es[static_cast<std::size_t>(j)]).count(w)) extendable = false;
      if (!extendable) continue;
      vs.push_back(w);
      vertex_used.insert(w);
      for (int f = es[0] + 1; f < m; ++f) {
        if (edge_used[static_cast<std::size_t>(f)] || !h.edge(f).count(w)) continue;
        bool disjoint = true;
        for (const Vertex& x : h.edge(f))
          if (x != w && vertex_used.count(x)) {
            disjoint = false;
            break;
          }
        if (!disjoint) continue;
        es.push_back(f);
        edge_used[static_cast<std::size_t>(f)] = 1;
        bool keep_going = step();
        es.pop_back();
        edge_used[static_cast<std::size_t>(f)] = 0;
        if (!keep_going) {
          vs.pop_back();
          vertex_used.erase(w);
          return false;
        }
      }
      vs.pop_back();
      vertex_used.erase(w);
    }
    return true;
  };

  for (int e1 = 0; e1 < m; ++e1) {
    es.assign(1, e1);
    vs.clear();
    edge_used.assign(static_cast<std::size_t>(m), 0);
    edge_used[static_cast<std::size_t>(e1)] = 1;
    vertex_used.clear();
    if (!step()) break;
  }

  out.cycles.assign(found.begin(), found.end());
  return out;
}

namespace {

// Parallel (edge, vertex) slots e_1 u_1 ... e_n u_n with u_j in e_j.
struct SlotSequence {
  std::vector<int> edges;
  std::vector<Vertex> verts;
};

// The max-index recurrence: f_1 = e_1, v_1 = u_1, then
// f_i = e_{max{j : v_{i-1} in e_j}} and v_i = u_{max{j : u_j in f_i}}
// until v_m equals the target vertex.
void max_index_reduce(const Hypergraph& h, const SlotSequence& seq, const Vertex& target,
                      std::vector<int>& out_edges, std::vector<Vertex>& out_verts) {
  const std::size_t n = seq.edges.size();
  int f = seq.edges[0];
  Vertex v = seq.verts[0];
  out_edges.push_back(f);
  out_verts.push_back(v);
  std::size_t guard = 0;
  while (v != target) {
    if (++guard > n + 1)
      fail("PreconditionViolated", "max-index reduction did not terminate");
    int next_edge = -1;
    for (std::size_t j = 0; j < n; ++j)
      if (h.edge(seq.edges[j]).count(v)) next_edge = seq.edges[j];
    if (next_edge < 0)
      fail("PreconditionViolated", "reduction lost track of vertex '" + v + "'");
    f = next_edge;
    bool found = false;
    for (std::size_t j = 0; j < n; ++j)
      if (h.edge(f).count(seq.verts[j])) {
        v = seq.verts[j];
        found = true;
      }
    if (!found) fail("PreconditionViolated", "reduction produced an empty edge step");
    out_edges.push_back(f);
    out_verts.push_back(v);
  }
}

void require(bool condition, const std::string& message) {
  if (!condition) fail("PreconditionViolated", message);
}

}  // namespace

BetaSequence reduce_paths_to_cycle(const Hypergraph& h, const BetaSequence& p1,
                                   const BetaSequence& p2) {
  require(is_beta_path(h, p1), "P1 is not a beta-path");
  require(is_beta_path(h, p2), "P2 is not a beta-path");
  require(p1.ends_with_edge() && p2.ends_with_edge(),
          "both paths must end with their shared final edge");
  require(p1.vertices.front() == p2.vertices.front(),
          "paths must share their first vertex");
  require(p1.edges.back() == p2.edges.back(), "paths must share their final edge");
  const Vertex v = p1.vertices.back();
  const Vertex w = p2.vertices.back();
  require(v != w, "final vertices before the shared edge must differ");
  require(is_linear(h), "hypergraph must be linear");

  // Traverse P1 backward (f v ... u), then P2 forward with the final edge
  // removed, giving slots e_1 u_1 ... e_n u_n.
  SlotSequence slots;
  for (std::size_t i = p1.edges.size(); i-- > 0;) {
    slots.edges.push_back(p1.edges[i]);
    slots.verts.push_back(p1.vertices[i]);
  }
  for (std::size_t i = 0; i + 1 < p2.edges.size(); ++i) {
    slots.edges.push_back(p2.edges[i]);
    slots.verts.push_back(p2.vertices[i + 1]);
  }

  BetaSequence cycle;
  cycle.kind = BetaSequence::Kind::Cycle;
  max_index_reduce(h, slots, w, cycle.edges, cycle.vertices);
  return cycle;
}

BetaSequence splice_reduce(const Hypergraph& h, const BetaSequence& p1,
                           const BetaSequence& p2) {
  const bool trivial_prefix = p1.vertices.size() == 1 && p1.edges.empty();
  if (!trivial_prefix) {
    require(is_beta_path(h, p1), "P1 is not a beta-path");
    require(!p1.ends_with_edge(), "P1 must end with a vertex");
  } else {
    require(h.has_vertex(p1.vertices.front()), "P1 names an unknown vertex");
  }
  require(is_beta_path(h, p2), "P2 is not a beta-path");
  require(p2.ends_with_edge(), "P2 must end with an edge");
  const Vertex junction = p1.vertices.back();
  require(junction == p2.vertices.front(), "P1 must end where P2 starts");

  std::set<int> p1_edges(p1.edges.begin(), p1.edges.end());
  for (int e : p2.edges)
    require(!p1_edges.count(e), "paths share edge " + h.edge_name(e));
  std::set<Vertex> p1_vertices(p1.vertices.begin(), p1.vertices.end());
  for (const auto& z : p2.vertices)
    require(z == junction || !p1_vertices.count(z),
            "paths share interior vertex '" + z + "'");
  for (int e : p2.edges)
    for (const auto& y : p1.vertices)
      require(y == junction || !h.edge(e).count(y),
              "edge " + h.edge_name(e) + " of P2 meets P1 at '" + y + "'");

  // Reverse the concatenation so it starts with P2's final edge, reduce to a
  // beta-path ending at v_C, then flip the result back.
  SlotSequence slots;
  for (std::size_t i = p2.edges.size(); i-- > 0;) {
    slots.edges.push_back(p2.edges[i]);
    slots.verts.push_back(p2.vertices[i]);
  }
  for (std::size_t i = p1.edges.size(); i-- > 0;) {
    slots.edges.push_back(p1.edges[i]);
    slots.verts.push_back(p1.vertices[i]);
  }

  const Vertex root = p1.vertices.front();
  std::vector<int> red_edges;
  std::vector<Vertex> red_verts;
  max_index_reduce(h, slots, root, red_edges, red_verts);

  BetaSequence path;
  path.kind = BetaSequence::Kind::Path;
  path.vertices.assign(red_verts.rbegin(), red_verts.rend());
  path.edges.assign(red_edges.rbegin(), red_edges.rend());
  return path;
}

BetaSequence dual_transform(const Hypergraph& h, const BetaSequence& p,
                            const DualCorrespondence& corr) {
  check_shape(h, p);
  if (p.vertices.size() < 2)
    fail("MalformedSequence", "transform of a single-vertex path would not alternate");
  require(is_beta_path(h, p), "input is not a beta-path");

  BetaSequence image;
  image.kind = BetaSequence::Kind::Path;
  for (int e : p.edges) {
    if (e < 0 || e >= static_cast<int>(corr.edge_to_dual_vertex.size()))
      fail("PreconditionViolated", "correspondence does not cover edge " + std::to_string(e));
    image.vertices.push_back(corr.edge_to_dual_vertex[static_cast<std::size_t>(e)]);
  }
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    auto it = corr.vertex_to_dual_edge.find(p.vertices[i]);
    if (it == corr.vertex_to_dual_edge.end())
      fail("PreconditionViolated",
           "correspondence does not cover vertex '" + p.vertices[i] + "'");
    image.edges.push_back(it->second);
  }
  return image;
}

}  // namespace betapath
