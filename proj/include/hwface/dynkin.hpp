#pragma once

#include <algorithm>
#include <vector>

#include "hwface/errors.hpp"
#include "hwface/nodeset.hpp"
#include "hwface/rootsystem.hpp"

namespace hwface {
namespace dynkin {

// Connected components of the subdiagram induced on J, ordered by least node.
inline std::vector<NodeSet> components(const RootSystem& rs, NodeSet J) {
  require(J.subsetOf(rs.allNodes()), "components: J not within the diagram");
  std::vector<NodeSet> out;
  NodeSet left = J;
  while (!left.empty()) {
    int seed = left.indices().front();
    NodeSet comp = NodeSet::single(seed);
    std::vector<int> stack{seed};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : left.indices()) {
        if (!comp.contains(u) && rs.adjacent(v, u)) {
          comp |= NodeSet::single(u);
          stack.push_back(u);
        }
      }
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

inline bool isConnected(const RootSystem& rs, NodeSet J) {
  return J.empty() || components(rs, J).size() == 1;
}

// True iff (alpha_j, alpha_k) = 0 for every j in J, k in K. Vacuous on empty sets;
// overlapping sets are never orthogonal ((alpha_j, alpha_j) > 0).
inline bool isOrthogonal(const RootSystem& rs, NodeSet J, NodeSet K) {
  if (J.intersects(K)) return false;
  for (int j : J.indices())
    for (int k : K.indices())
      if (rs.cartanEntry(j, k) != 0) return false;
  return true;
}

namespace detail {

inline DynkinComponentType classifyOne(const RootSystem& rs, const std::vector<int>& nodes) {
  int n = int(nodes.size());
  if (n == 1) return {Family::A, 1};

  // Edge multiplicities and degrees of the induced subdiagram.
  int doubles = 0, triples = 0;
  std::pair<int, int> doubleEdge{-1, -1};
  std::vector<int> degree(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      int i = nodes[a], j = nodes[b];
      if (!rs.adjacent(i, j)) continue;
      ++degree[a];
      ++degree[b];
      int m = rs.cartanEntry(i, j) * rs.cartanEntry(j, i);
      if (m == 2) { ++doubles; doubleEdge = {a, b}; }
      if (m == 3) ++triples;
    }
  }
  int maxDeg = *std::max_element(degree.begin(), degree.end());

  if (triples > 0) {
    check(n == 2 && triples == 1 && doubles == 0, "classify: bad triple bond");
    return {Family::G, 2};
  }
  if (doubles > 0) {
    check(doubles == 1 && maxDeg <= 2, "classify: bad double bond");
    if (n == 2) return {Family::B, 2};  // B2 and C2 carry one canonical tag
    auto [a, b] = doubleEdge;
    if (degree[a] == 2 && degree[b] == 2) {
      check(n == 4, "classify: interior double bond outside F4");
      return {Family::F, 4};
    }
    // Path with the double bond at one end; the short node's Cartan row
    // holds the -2 entry.
    int endLocal = degree[a] == 1 ? a : b;
    int otherLocal = endLocal == a ? b : a;
    bool endShort = rs.cartanEntry(nodes[endLocal], nodes[otherLocal]) == -2;
    return {endShort ? Family::B : Family::C, n};
  }

  // Simply laced.
  if (maxDeg <= 2) return {Family::A, n};
  check(maxDeg == 3 && std::count(degree.begin(), degree.end(), 3) == 1,
        "classify: not a classical branch pattern");
  int center = nodes[int(std::find(degree.begin(), degree.end(), 3) - degree.begin())];
  std::vector<int> branchLens;
  NodeSet rest = NodeSet::of(nodes) - NodeSet::single(center);
  for (NodeSet br : components(rs, rest)) branchLens.push_back(br.size());
  std::sort(branchLens.begin(), branchLens.end());
  check(branchLens.size() == 3, "classify: branch count");
  if (branchLens[0] == 1 && branchLens[1] == 1) return {Family::D, branchLens[2] + 3};
  if (branchLens[0] == 1 && branchLens[1] == 2 && branchLens[2] >= 2 && branchLens[2] <= 4)
    return {Family::E, branchLens[2] + 4};
  throw InternalError("classify: unrecognized simply-laced branch diagram");
}

}  // namespace detail

// Type of each connected component of the subdiagram induced on J.
inline std::vector<DynkinComponentType> classify(const RootSystem& rs, NodeSet J) {
  std::vector<DynkinComponentType> out;
  for (NodeSet comp : components(rs, J))
    out.push_back(detail::classifyOne(rs, comp.indices()));
  return out;
}

// One extra node attached to the base diagram: the affine node (adjacent where
// the highest root pairs nonzero) or the -lambda node of the extended Coxeter
// diagram (adjacent where (lambda, alpha_i) > 0).
struct ExtendedDiagram {
  enum class Mode { Affine, MinusLambda };
  const RootSystem* rs;
  Mode mode;
  std::vector<bool> extraAdjacent;
};

inline ExtendedDiagram affineDiagram(const RootSystem& rs) {
  require(rs.components().size() == 1, "affine diagram needs a connected base");
  Weight theta = rs.highestRoot(rs.allNodes());
  std::vector<bool> adj(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) adj[i] = theta.c[i] != 0;
  return {&rs, ExtendedDiagram::Mode::Affine, std::move(adj)};
}

inline ExtendedDiagram minusLambdaDiagram(const RootSystem& rs, std::vector<bool> positivePairing) {
  require(int(positivePairing.size()) == rs.rank(), "adjacency vector has wrong rank");
  return {&rs, ExtendedDiagram::Mode::MinusLambda, std::move(positivePairing)};
}

struct ExtendedComponent {
  NodeSet iPart;  // base-diagram nodes of the component containing the extra node
};

// Connected component of the extra node in the extended diagram minus J.
inline ExtendedComponent extendedComponentContaining(const ExtendedDiagram& e, NodeSet J) {
  const RootSystem& rs = *e.rs;
  require(J.subsetOf(rs.allNodes()), "extendedComponentContaining: J not within the diagram");
  NodeSet avail = rs.allNodes() - J;
  NodeSet comp;
  std::vector<int> stack;
  for (int i : avail.indices())
    if (e.extraAdjacent[i]) { comp |= NodeSet::single(i); stack.push_back(i); }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : avail.indices())
      if (!comp.contains(u) && rs.adjacent(v, u)) {
        comp |= NodeSet::single(u);
        stack.push_back(u);
      }
  }
  return {comp};
}

// Whether the extended diagram minus J is connected as a whole.
inline bool extendedMinusIsConnected(const ExtendedDiagram& e, NodeSet J) {
  return extendedComponentContaining(e, J).iPart == (e.rs->allNodes() - J);
}

}  // namespace dynkin
}  // namespace hwface
