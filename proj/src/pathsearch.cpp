#include "betapath/pathsearch.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "betapath/errors.hpp"

namespace betapath {

Labeling make_labeling(Labeling::Target target, std::map<std::string, int> map) {
  std::set<int> values;
  for (const auto& [key, value] : map) values.insert(value);
  const int n = static_cast<int>(map.size());
  if (static_cast<int>(values.size()) != n ||
      (n > 0 && (*values.begin() != 1 || *values.rbegin() != n)))
    fail("MalformedLabeling", "labels must be a bijection onto 1..n");
  Labeling phi;
  phi.target = target;
  phi.map = std::move(map);
  return phi;
}

Labeling identity_labeling(const Hypergraph& h, Labeling::Target target) {
  std::vector<std::string> ids;
  if (target == Labeling::Target::Vertices) {
    ids = h.vertices();
  } else {
    for (int e = 0; e < h.edge_count(); ++e) ids.push_back(h.edge_name(e));
  }
  std::sort(ids.begin(), ids.end());
  std::map<std::string, int> map;
  for (std::size_t i = 0; i < ids.size(); ++i) map[ids[i]] = static_cast<int>(i) + 1;
  return make_labeling(target, std::move(map));
}

LoosePath derive_edges(const Hypergraph& h, int k, const std::vector<Vertex>& seq) {
  if (k < 2) fail("BadLength", "loose paths need k >= 2");
  if (seq.size() < static_cast<std::size_t>(k) ||
      (seq.size() - static_cast<std::size_t>(k)) % static_cast<std::size_t>(k - 1) != 0)
    fail("BadLength", "sequence length must be (k-1)m + k");
  std::set<Vertex> distinct(seq.begin(), seq.end());
  if (distinct.size() != seq.size())
    fail("PreconditionViolated", "loose path vertices must be distinct");

  std::map<VertexSet, int> edge_of_set;
  for (int e = 0; e < h.edge_count(); ++e) edge_of_set[h.edge(e)] = e;

  LoosePath path;
  path.k = k;
  path.vertex_seq = seq;
  const int blocks = static_cast<int>((seq.size() - 1) / static_cast<std::size_t>(k - 1));
  for (int i = 0; i < blocks; ++i) {
    VertexSet block;
    for (int j = 0; j < k; ++j)
      block.insert(seq[static_cast<std::size_t>((k - 1) * i + j)]);
    auto it = edge_of_set.find(block);
    if (it == edge_of_set.end())
      fail("NotAnEdge", "block " + std::to_string(i) + " is not an edge");
    path.edge_seq.push_back(it->second);
  }
  return path;
}

IncreasingMode mode_from_string(const std::string& name) {
  if (name == "full") return IncreasingMode::Full;
  if (name == "skip") return IncreasingMode::Skip;
  if (name == "edge") return IncreasingMode::Edge;
  fail("PreconditionViolated", "unknown mode '" + name + "'");
}

std::string mode_to_string(IncreasingMode mode) {
  switch (mode) {
    case IncreasingMode::Full:
      return "full";
    case IncreasingMode::Skip:
      return "skip";
    case IncreasingMode::Edge:
      return "edge";
  }
  return "full";
}

namespace {

int vertex_label(const Labeling& phi, const Vertex& v) {
  auto it = phi.map.find(v);
  if (it == phi.map.end()) fail("MissingLabel", "no label for vertex '" + v + "'");
  return it->second;
}

}  // namespace

bool is_increasing(const LoosePath& p, const Labeling& phi, IncreasingMode mode) {
  if (mode == IncreasingMode::Edge)
    fail("PreconditionViolated", "edge mode takes an edge labeling; use is_edge_increasing");
  if (phi.target != Labeling::Target::Vertices)
    fail("PreconditionViolated", "vertex labeling required");
  if (p.empty()) return true;
  if (mode == IncreasingMode::Full) {
    for (std::size_t j = 0; j + 1 < p.vertex_seq.size(); ++j)
      if (vertex_label(phi, p.vertex_seq[j]) >= vertex_label(phi, p.vertex_seq[j + 1]))
        return false;
    return true;
  }
  for (int i = 0; i < p.edge_count(); ++i) {
    const auto& first = p.vertex_seq[static_cast<std::size_t>((p.k - 1) * i)];
    const auto& last = p.vertex_seq[static_cast<std::size_t>((p.k - 1) * i + p.k - 1)];
    if (vertex_label(phi, first) >= vertex_label(phi, last)) return false;
  }
  return true;
}

bool is_edge_increasing(const Hypergraph& h, const LoosePath& p, const Labeling& phi) {
  if (phi.target != Labeling::Target::Edges)
    fail("PreconditionViolated", "edge labeling required");
  std::vector<int> labels;
  for (int e : p.edge_seq) {
    auto it = phi.map.find(h.edge_name(e));
    if (it == phi.map.end())
      fail("MissingLabel", "no label for edge " + h.edge_name(e));
    labels.push_back(it->second);
  }
  for (std::size_t i = 0; i + 1 < labels.size(); ++i)
    if (labels[i] >= labels[i + 1]) return false;
  return true;
}

namespace {

struct ResolvedLabels {
  std::map<Vertex, int> vertex;
  std::vector<int> edge;  // by edge index
};

struct Searcher {
  const Hypergraph& h;
  int k;
  IncreasingMode mode;
  const ResolvedLabels& labels;

  std::vector<Vertex> seq;
  VertexSet used;
  std::vector<int> edge_seq;
  std::vector<char> edge_used;

  LoosePath best;

  int vlab(const Vertex& v) const { return labels.vertex.at(v); }

  bool block_ok(const Vertex& first, const std::vector<Vertex>& rest) const {
    if (mode == IncreasingMode::Edge) return true;
    if (mode == IncreasingMode::Skip)
      return vlab(first) < vlab(rest.back());
    int prev = vlab(first);
    for (const auto& v : rest) {
      int cur = vlab(v);
      if (prev >= cur) return false;
      prev = cur;
    }
    return true;
  }

  void consider() {
    const int count = static_cast<int>(edge_seq.size());
    if (count > best.edge_count() ||
        (count == best.edge_count() && seq < best.vertex_seq)) {
      best.k = k;
      best.vertex_seq = seq;
      best.edge_seq = edge_seq;
    }
  }

  void extend() {
    consider();
    const int remaining = h.edge_count() - static_cast<int>(edge_seq.size());
    if (static_cast<int>(edge_seq.size()) + remaining < best.edge_count()) return;
    const Vertex tip = seq.back();
    for (int f = 0; f < h.edge_count(); ++f) {
      if (edge_used[static_cast<std::size_t>(f)] || !h.edge(f).count(tip)) continue;
      if (mode == IncreasingMode::Edge &&
          labels.edge[static_cast<std::size_t>(f)] <=
              labels.edge[static_cast<std::size_t>(edge_seq.back())])
        continue;
      bool overlap_ok = true;
      for (const auto& w : h.edge(f))
        if (w != tip && used.count(w)) {
          overlap_ok = false;
          break;
        }
      if (!overlap_ok) continue;

      std::vector<Vertex> rest;
      for (const auto& w : h.edge(f))
        if (w != tip) rest.push_back(w);
      std::sort(rest.begin(), rest.end());
      do {
        if (!block_ok(tip, rest)) continue;
        for (const auto& w : rest) {
          seq.push_back(w);
          used.insert(w);
        }
        edge_seq.push_back(f);
        edge_used[static_cast<std::size_t>(f)] = 1;
        extend();
        edge_used[static_cast<std::size_t>(f)] = 0;
        edge_seq.pop_back();
        for (const auto& w : rest) {
          used.erase(w);
          seq.pop_back();
        }
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  }

  LoosePath run() {
    best.k = k;
    edge_used.assign(static_cast<std::size_t>(h.edge_count()), 0);
    for (int e = 0; e < h.edge_count(); ++e) {
      std::vector<Vertex> block(h.edge(e).begin(), h.edge(e).end());
      std::sort(block.begin(), block.end());
      do {
        std::vector<Vertex> rest(block.begin() + 1, block.end());
        if (!block_ok(block.front(), rest)) continue;
        seq = block;
        used = VertexSet(block.begin(), block.end());
        edge_seq.assign(1, e);
        edge_used[static_cast<std::size_t>(e)] = 1;
        extend();
        edge_used[static_cast<std::size_t>(e)] = 0;
      } while (std::next_permutation(block.begin(), block.end()));
    }
    seq.clear();
    used.clear();
    edge_seq.clear();
    return best;
  }
};

ResolvedLabels resolve_labels(const Hypergraph& h, const Labeling& phi,
                              IncreasingMode mode) {
  ResolvedLabels labels;
  if (mode == IncreasingMode::Edge) {
    if (phi.target != Labeling::Target::Edges)
      fail("PreconditionViolated", "edge mode requires an edge labeling");
    labels.edge.resize(static_cast<std::size_t>(h.edge_count()));
    for (int e = 0; e < h.edge_count(); ++e) {
      auto it = phi.map.find(h.edge_name(e));
      if (it == phi.map.end())
        fail("MissingLabel", "no label for edge " + h.edge_name(e));
      labels.edge[static_cast<std::size_t>(e)] = it->second;
    }
  } else {
    if (phi.target != Labeling::Target::Vertices)
      fail("PreconditionViolated", "vertex modes require a vertex labeling");
    for (const auto& v : h.vertices()) {
      auto it = phi.map.find(v);
      if (it == phi.map.end()) fail("MissingLabel", "no label for vertex '" + v + "'");
      labels.vertex[v] = it->second;
    }
  }
  return labels;
}

void require_uniform(const Hypergraph& h, int k) {
  if (k < 2) fail("PreconditionViolated", "k must be >= 2");
  if (!is_uniform(h, k))
    fail("PreconditionViolated", "hypergraph is not " + std::to_string(k) + "-uniform");
}

}  // namespace

LoosePath longest_increasing_path(const Hypergraph& h, int k, const Labeling& phi,
                                  IncreasingMode mode) {
  require_uniform(h, k);
  ResolvedLabels labels = resolve_labels(h, phi, mode);
  Searcher searcher{h, k, mode, labels};
  return searcher.run();
}

AdversarialResult adversarial_min_max(const Hypergraph& h, int k, IncreasingMode mode,
                                      int bound) {
  require_uniform(h, k);
  const auto target =
      mode == IncreasingMode::Edge ? Labeling::Target::Edges : Labeling::Target::Vertices;
  std::vector<std::string> ids;
  if (target == Labeling::Target::Vertices) {
    ids = h.vertices();
  } else {
    for (int e = 0; e < h.edge_count(); ++e) ids.push_back(h.edge_name(e));
  }
  std::sort(ids.begin(), ids.end());
  if (static_cast<int>(ids.size()) > bound)
    fail("TooLarge", "target set has " + std::to_string(ids.size()) +
                         " elements; exhaustive bound is " + std::to_string(bound));

  AdversarialResult result;
  result.min_max = -1;
  std::vector<int> labels(ids.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i) + 1;
  do {
    std::map<std::string, int> map;
    for (std::size_t i = 0; i < ids.size(); ++i) map[ids[i]] = labels[i];
    Labeling phi = make_labeling(target, std::move(map));
    ResolvedLabels resolved = resolve_labels(h, phi, mode);
    Searcher searcher{h, k, mode, resolved};
    LoosePath longest = searcher.run();
    const int size = mode == IncreasingMode::Edge
                         ? longest.edge_count()
                         : static_cast<int>(longest.vertex_seq.size());
    if (result.min_max < 0 || size < result.min_max) {
      result.min_max = size;
      result.labeling = std::move(phi);
    }
  } while (std::next_permutation(labels.begin(), labels.end()));
  return result;
}

}  // namespace betapath
