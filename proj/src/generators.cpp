#include "betapath/generators.hpp"

#include <algorithm>
#include <random>

#include "betapath/errors.hpp"

namespace betapath {

namespace {

// Bounded draws implemented on the raw engine so instances are identical
// across standard libraries.
struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}

  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine();
    } while (x >= limit);
    return x % n;
  }
};

std::vector<Vertex> numbered_vertices(int n) {
  std::vector<Vertex> vs;
  vs.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
  return vs;
}

Hypergraph make_loose_path(int k, int m) {
  if (k < 2 || m < 1) fail("InfeasibleParameters", "loose_path needs k >= 2 and m >= 1");
  const int n = (k - 1) * m + 1;
  std::vector<VertexSet> edges;
  for (int i = 0; i < m; ++i) {
    VertexSet e;
    for (int j = 0; j < k; ++j) e.insert(std::to_string((k - 1) * i + j + 1));
    edges.push_back(std::move(e));
  }
  return Hypergraph(numbered_vertices(n), std::move(edges));
}

Hypergraph make_sunflower(int k, int p) {
  if (k < 2 || p < 1) fail("InfeasibleParameters", "sunflower needs k >= 2 and p >= 1");
  if (k - 1 > 26) fail("InfeasibleParameters", "sunflower leaf naming supports k <= 27");
  std::vector<Vertex> vertices{"c"};
  std::vector<VertexSet> edges;
  for (int i = 1; i <= p; ++i) {
    VertexSet petal{"c"};
    for (int j = 0; j < k - 1; ++j) {
      Vertex leaf = std::string(1, static_cast<char>('a' + j)) + std::to_string(i);
      vertices.push_back(leaf);
      petal.insert(leaf);
    }
    edges.push_back(std::move(petal));
  }
  return Hypergraph(std::move(vertices), std::move(edges));
}

Hypergraph make_pasch() {
  return Hypergraph(numbered_vertices(6), {{"1", "2", "3"},
                                           {"1", "4", "5"},
                                           {"2", "4", "6"},
                                           {"3", "5", "6"}});
}

Hypergraph make_triangle2() {
  return Hypergraph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

// One concrete instance consistent with the worked skeleton figure: under
// T = {(u,e),(v,e),(u,f),(w,g)} it spans exactly the eight adjacencies
// uv (twice), ux1, ux2, vx1, vx2, uy, vw, wz.
Hypergraph make_fig1() {
  return Hypergraph({"u", "v", "w", "x1", "x2", "y", "z"},
                    {{"u", "v", "x1", "x2"}, {"u", "y"}, {"v", "w", "z"}},
                    std::vector<std::string>{"e", "f", "g"});
}

Hypergraph make_random_linear(int k, int n, int m, std::uint64_t seed) {
  if (k < 2 || n < k || m < 0)
    fail("InfeasibleParameters", "random_linear needs k >= 2, n >= k, m >= 0");
  Rng rng(seed);
  std::vector<VertexSet> edges;
  std::vector<std::set<int>> chosen;  // index form for intersection tests
  const long attempts_cap = 2000L * (m + 1);
  long attempts = 0;
  while (static_cast<int>(edges.size()) < m) {
    if (++attempts > attempts_cap)
      fail("InfeasibleParameters",
           "could not place " + std::to_string(m) + " linear edges on " +
               std::to_string(n) + " vertices");
    std::set<int> candidate;
    while (static_cast<int>(candidate.size()) < k)
      candidate.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
    bool ok = true;
    for (const auto& e : chosen) {
      int common = 0;
      for (int v : candidate)
        if (e.count(v)) ++common;
      if (common >= 2) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(candidate);
    VertexSet named;
    for (int v : candidate) named.insert(std::to_string(v + 1));
    edges.push_back(std::move(named));
  }
  return Hypergraph(numbered_vertices(n), std::move(edges));
}

}  // namespace

Hypergraph make(const FamilySpec& spec) {
  if (spec.family == "loose_path") return make_loose_path(spec.k, spec.m);
  if (spec.family == "sunflower") return make_sunflower(spec.k, spec.p);
  if (spec.family == "pasch") return make_pasch();
  if (spec.family == "triangle2") return make_triangle2();
  if (spec.family == "fig1") return make_fig1();
  if (spec.family == "random_linear")
    return make_random_linear(spec.k, spec.n, spec.m, spec.seed);
  fail("InfeasibleParameters", "unknown family '" + spec.family + "'");
}

}  // namespace betapath
