#pragma once

#include <cstdint>
#include <string>

#include "betapath/hypergraph.hpp"

namespace betapath {

// Named instance family with parameters; the same spec always produces the
// same hypergraph.
//
// Families:
//   loose_path(k, m)          m-edge prefix of the infinite loose path
//   sunflower(k, p)           p petals through one core vertex
//   pasch                     the 4-edge linear triple system
//   triangle2                 2-uniform triangle
//   fig1                      7-vertex, 3-edge worked skeleton example
//   random_linear(k, n, m, seed)   greedy random k-sets, pairwise sharing <= 1 vertex
struct FamilySpec {
  std::string family;
  int k = 0;
  int m = 0;
  int n = 0;
  int p = 0;
  std::uint64_t seed = 0;
};

Hypergraph make(const FamilySpec& spec);

}  // namespace betapath
