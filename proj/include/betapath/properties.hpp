#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "betapath/hypergraph.hpp"

namespace betapath {

// Fixpoint of threshold peeling: the unique maximal witness set, the
// qualifying counts of its members, and the synchronous removal rounds.
template <class Element>
struct PeelResult {
  struct Round {
    int round = 0;
    std::vector<Element> removed;
  };
  std::set<Element> witness;
  std::map<Element, int> counts;
  std::vector<Round> trace;
  std::optional<std::string> warning;
};

// Finite-threshold analog of property P_ell: the maximal V' such that every
// v in V' lies in at least d edges e with |V' ∩ e| >= ell. Peels all
// violating vertices per round until stable.
PeelResult<Vertex> peel_P_ell(const Hypergraph& h, int ell, int d);

// Dual-side analog: the maximal E' such that every e in E' has at least d
// vertices shared with some other edge of E'. Peels edge indices.
PeelResult<int> peel_P2_star(const Hypergraph& h, int d);

// Checks that peel_P_ell(h, 2, d).witness maps onto peel_P2_star(dual(h), d)
// .witness under v -> v*, element for element.
bool p2_duality_check(const Hypergraph& h, int d);

}  // namespace betapath
