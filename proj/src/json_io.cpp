#include "betapath/json_io.hpp"

#include <string>

#include "betapath/errors.hpp"

namespace betapath {

namespace {

const Json& expect(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail("ParseError", std::string("missing key '") + key + "'");
  return j.at(key);
}

std::string expect_string(const Json& j, const char* what) {
  if (!j.is_string()) fail("ParseError", std::string(what) + " must be a string");
  return j.get<std::string>();
}

int expect_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail("ParseError", std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

Json to_json(const Hypergraph& h) {
  Json j;
  j["vertices"] = h.vertices();
  Json edges = Json::array();
  for (int e = 0; e < h.edge_count(); ++e) {
    Json edge = Json::array();
    for (const auto& v : h.edge(e)) edge.push_back(v);
    edges.push_back(std::move(edge));
  }
  j["edges"] = std::move(edges);
  if (h.has_custom_edge_names()) {
    Json names = Json::array();
    for (int e = 0; e < h.edge_count(); ++e) names.push_back(h.edge_name(e));
    j["edge_names"] = std::move(names);
  }
  return j;
}

Hypergraph hypergraph_from_json(const Json& j) {
  const Json& vertices_json = expect(j, "vertices");
  const Json& edges_json = expect(j, "edges");
  if (!vertices_json.is_array()) fail("ParseError", "'vertices' must be an array");
  if (!edges_json.is_array()) fail("ParseError", "'edges' must be an array");

  std::vector<Vertex> vertices;
  for (const auto& v : vertices_json) vertices.push_back(expect_string(v, "vertex id"));
  std::vector<VertexSet> edges;
  for (const auto& e : edges_json) {
    if (!e.is_array()) fail("ParseError", "each edge must be an array of vertex ids");
    VertexSet edge;
    for (const auto& v : e) edge.insert(expect_string(v, "vertex id"));
    edges.push_back(std::move(edge));
  }
  std::optional<std::vector<std::string>> names;
  if (j.contains("edge_names")) {
    const Json& names_json = j.at("edge_names");
    if (!names_json.is_array()) fail("ParseError", "'edge_names' must be an array");
    names.emplace();
    for (const auto& n : names_json) names->push_back(expect_string(n, "edge name"));
  }
  return Hypergraph(std::move(vertices), std::move(edges), std::move(names));
}

Json to_json(const BetaSequence& s) {
  Json j;
  j["kind"] = s.kind == BetaSequence::Kind::Path ? "path" : "cycle";
  Json items = Json::array();
  if (s.kind == BetaSequence::Kind::Path) {
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
      items.push_back("v:" + s.vertices[i]);
      if (i < s.edges.size()) items.push_back("e:" + std::to_string(s.edges[i]));
    }
  } else {
    for (std::size_t i = 0; i < s.edges.size(); ++i) {
      items.push_back("e:" + std::to_string(s.edges[i]));
      if (i < s.vertices.size()) items.push_back("v:" + s.vertices[i]);
    }
  }
  j["items"] = std::move(items);
  return j;
}

BetaSequence beta_sequence_from_json(const Hypergraph& h, const Json& j) {
  BetaSequence s;
  const std::string kind = expect_string(expect(j, "kind"), "'kind'");
  if (kind == "path") {
    s.kind = BetaSequence::Kind::Path;
  } else if (kind == "cycle") {
    s.kind = BetaSequence::Kind::Cycle;
  } else {
    fail("ParseError", "'kind' must be \"path\" or \"cycle\"");
  }
  const Json& items = expect(j, "items");
  if (!items.is_array()) fail("ParseError", "'items' must be an array");

  bool expect_vertex = s.kind == BetaSequence::Kind::Path;
  for (const auto& item : items) {
    const std::string text = expect_string(item, "sequence item");
    if (text.size() < 3 || text[1] != ':' || (text[0] != 'v' && text[0] != 'e'))
      fail("MalformedSequence", "item '" + text + "' must look like v:<id> or e:<ref>");
    const bool is_vertex = text[0] == 'v';
    if (is_vertex != expect_vertex)
      fail("MalformedSequence", "items must alternate, starting with a " +
                                    std::string(s.kind == BetaSequence::Kind::Path
                                                    ? "vertex for paths"
                                                    : "edge for cycles"));
    const std::string ref = text.substr(2);
    if (is_vertex) {
      s.vertices.push_back(ref);
    } else {
      auto e = h.resolve_edge(ref);
      if (!e) fail("MalformedSequence", "unknown edge reference '" + ref + "'");
      s.edges.push_back(*e);
    }
    expect_vertex = !expect_vertex;
  }
  return s;
}

Json to_json(const ValidationReport& report) {
  Json j;
  j["ok"] = report.ok();
  Json uniformity = Json::array();
  for (const auto& v : report.uniformity)
    uniformity.push_back(Json{{"edge", v.edge}, {"size", v.size}});
  Json linearity = Json::array();
  for (const auto& v : report.linearity)
    linearity.push_back(Json{{"edges", Json::array({v.edge_a, v.edge_b})},
                             {"shared", v.shared}});
  j["uniformity"] = std::move(uniformity);
  j["linearity"] = std::move(linearity);
  return j;
}

Json to_json(const DualCorrespondence& corr) {
  Json j;
  j["edge_to_dual_vertex"] = corr.edge_to_dual_vertex;
  Json map = Json::object();
  for (const auto& [v, e] : corr.vertex_to_dual_edge) map[v] = e;
  j["vertex_to_dual_edge"] = std::move(map);
  return j;
}

Json to_json(const Isomorphism& iso) {
  Json j;
  Json vmap = Json::object();
  for (const auto& [from, to] : iso.vertex_map) vmap[from] = to;
  j["vertex_map"] = std::move(vmap);
  j["edge_map"] = iso.edge_map;
  return j;
}

Json to_json(const CycleEnumeration& enumeration) {
  Json j;
  j["count"] = enumeration.cycles.size();
  j["truncated"] = enumeration.truncated;
  Json cycles = Json::array();
  for (const auto& c : enumeration.cycles) cycles.push_back(to_json(to_sequence(c)));
  j["cycles"] = std::move(cycles);
  return j;
}

namespace {

template <class Element>
Json peel_to_json(const PeelResult<Element>& result) {
  Json j;
  j["witness"] = result.witness;
  Json counts = Json::object();
  for (const auto& [element, count] : result.counts) {
    if constexpr (std::is_same_v<Element, int>) {
      counts[std::to_string(element)] = count;
    } else {
      counts[element] = count;
    }
  }
  j["counts"] = std::move(counts);
  Json trace = Json::array();
  for (const auto& round : result.trace)
    trace.push_back(Json{{"round", round.round}, {"removed", round.removed}});
  j["trace"] = std::move(trace);
  if (result.warning) j["warning"] = *result.warning;
  return j;
}

}  // namespace

Json to_json(const PeelResult<Vertex>& result) { return peel_to_json(result); }
Json to_json(const PeelResult<int>& result) { return peel_to_json(result); }

Json to_json(const GeneratorSet& t) {
  Json j;
  Json pairs = Json::array();
  for (const auto& [v, e] : t.pairs) pairs.push_back(Json::array({v, e}));
  j["pairs"] = std::move(pairs);
  Json roots = Json::object();
  for (const auto& [component, root] : t.roots) roots[component] = root;
  j["roots"] = std::move(roots);
  return j;
}

GeneratorSet generator_set_from_json(const Hypergraph& h, const Json& j) {
  GeneratorSet t;
  const Json& pairs = expect(j, "pairs");
  if (!pairs.is_array()) fail("ParseError", "'pairs' must be an array");
  for (const auto& pair : pairs) {
    if (!pair.is_array() || pair.size() != 2)
      fail("ParseError", "each pair must be [vertex, edge]");
    Vertex v = expect_string(pair.at(0), "pair vertex");
    int e = -1;
    if (pair.at(1).is_number_integer()) {
      e = pair.at(1).get<int>();
    } else {
      auto resolved = h.resolve_edge(expect_string(pair.at(1), "pair edge"));
      if (!resolved) fail("InvalidPair", "unknown edge reference in pair");
      e = *resolved;
    }
    t.pairs.insert({std::move(v), e});
  }
  if (j.contains("roots")) {
    const Json& roots = j.at("roots");
    if (!roots.is_object()) fail("ParseError", "'roots' must be an object");
    for (const auto& [component, root] : roots.items())
      t.roots[component] = expect_string(root, "root vertex");
  }
  return t;
}

Json to_json(const SkeletonGraph& g) {
  Json j;
  j["vertices"] = g.vertices;
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges) edges.push_back(Json::array({a, b}));
  j["edges"] = std::move(edges);
  return j;
}

Json to_json(const WitnessExtraction& extraction) {
  Json j;
  j["edges"] = extraction.edges;
  Json covered = Json::object();
  for (const auto& [v, flag] : extraction.covered) covered[v] = flag;
  j["covered"] = std::move(covered);
  return j;
}

Json to_json(const Labeling& phi) {
  Json j;
  j["target"] = phi.target == Labeling::Target::Vertices ? "vertices" : "edges";
  Json map = Json::object();
  for (const auto& [key, value] : phi.map) map[key] = value;
  j["map"] = std::move(map);
  return j;
}

Labeling labeling_from_json(const Json& j) {
  const std::string target = expect_string(expect(j, "target"), "'target'");
  Labeling::Target t;
  if (target == "vertices") {
    t = Labeling::Target::Vertices;
  } else if (target == "edges") {
    t = Labeling::Target::Edges;
  } else {
    fail("ParseError", "'target' must be \"vertices\" or \"edges\"");
  }
  const Json& map_json = expect(j, "map");
  if (!map_json.is_object()) fail("ParseError", "'map' must be an object");
  std::map<std::string, int> map;
  for (const auto& [key, value] : map_json.items())
    map[key] = expect_int(value, "label value");
  return make_labeling(t, std::move(map));
}

Json to_json(const LoosePath& p) {
  Json j;
  j["k"] = p.k;
  j["vertex_seq"] = p.vertex_seq;
  j["edge_seq"] = p.edge_seq;
  return j;
}

Json to_json(const AdversarialResult& result) {
  Json j;
  j["value"] = result.min_max;
  j["labeling"] = to_json(result.labeling);
  return j;
}

FamilySpec family_spec_from_json(const Json& j) {
  FamilySpec spec;
  spec.family = expect_string(expect(j, "family"), "'family'");
  if (j.contains("k")) spec.k = expect_int(j.at("k"), "'k'");
  if (j.contains("m")) spec.m = expect_int(j.at("m"), "'m'");
  if (j.contains("n")) spec.n = expect_int(j.at("n"), "'n'");
  if (j.contains("p")) spec.p = expect_int(j.at("p"), "'p'");
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_integer()) fail("ParseError", "'seed' must be an integer");
    spec.seed = j.at("seed").get<std::uint64_t>();
  }
  return spec;
}

}  // namespace betapath
