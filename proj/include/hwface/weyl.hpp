#pragma once

#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hwface/dynkin.hpp"
#include "hwface/errors.hpp"
#include "hwface/rootsystem.hpp"

namespace hwface {

// Product of simple reflections, applied right-to-left: (s_a s_b)(x) = s_a(s_b(x)).
struct WeylWord {
  std::vector<int> letters;

  bool operator==(const WeylWord&) const = default;
  bool identity() const { return letters.empty(); }

  WeylWord inverse() const {
    WeylWord w = *this;
    std::reverse(w.letters.begin(), w.letters.end());
    return w;
  }
  WeylWord then(const WeylWord& right) const {
    // *this composed with right on its right: (*this * right)(x) = this(right(x))
    WeylWord w = *this;
    w.letters.insert(w.letters.end(), right.letters.begin(), right.letters.end());
    return w;
  }
  NodeSet supportSet() const { return NodeSet::of(letters); }
};

namespace weyl {

// Default cap on orbit/coset enumeration; HWFACE_ORBIT_CAP overrides.
inline std::size_t orbitCap() {
  static std::size_t cap = [] {
    if (const char* env = std::getenv("HWFACE_ORBIT_CAP")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return std::size_t(v);
    }
    return std::size_t(1000000);
  }();
  return cap;
}

inline Weight reflect(const RootSystem& rs, int i, const Weight& mu) {
  require(i >= 0 && i < rs.rank(), "reflect: node out of range");
  Rat p = mu.c[i];
  if (p == 0) return mu;
  Weight out = mu;
  for (int k = 0; k < rs.rank(); ++k)
    if (rs.cartanEntry(k, i) != 0) out.c[k] -= p * rs.cartanEntry(k, i);
  return out;
}

inline Weight applyWord(const RootSystem& rs, const WeylWord& w, Weight mu) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    mu = reflect(rs, *it, mu);
  return mu;
}

// W_J-orbit of mu, as a sorted set of weights.
inline std::vector<Weight> orbit(const RootSystem& rs, NodeSet J, const Weight& mu,
                                 std::size_t cap = 0) {
  if (cap == 0) cap = orbitCap();
  std::set<Weight> seen{mu};
  std::vector<Weight> frontier{mu};
  std::vector<int> gens = J.indices();
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& w : frontier) {
      for (int j : gens) {
        Weight r = reflect(rs, j, w);
        if (seen.insert(r).second) {
          if (seen.size() > cap) throw ResourceError("orbit enumeration cap exceeded");
          next.push_back(std::move(r));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// Orbit elements paired with a shortest word sending the seed to them,
// in breadth-first discovery order (seed and identity first).
inline std::vector<std::pair<Weight, WeylWord>> orbitWithWords(const RootSystem& rs, NodeSet J,
                                                               const Weight& mu,
                                                               std::size_t cap = 0) {
  if (cap == 0) cap = orbitCap();
  std::vector<std::pair<Weight, WeylWord>> out{{mu, WeylWord{}}};
  std::set<Weight> seen{mu};
  std::size_t head = 0;
  std::vector<int> gens = J.indices();
  while (head < out.size()) {
    auto [w, word] = out[head];
    ++head;
    for (int j : gens) {
      Weight r = reflect(rs, j, w);
      if (seen.insert(r).second) {
        if (seen.size() > cap) throw ResourceError("orbit enumeration cap exceeded");
        WeylWord nw;
        nw.letters.reserve(word.letters.size() + 1);
        nw.letters.push_back(j);
        nw.letters.insert(nw.letters.end(), word.letters.begin(), word.letters.end());
        out.emplace_back(std::move(r), std::move(nw));
      }
    }
  }
  return out;
}

inline Int parabolicOrder(const RootSystem& rs, NodeSet J) {
  Int order = 1;
  for (DynkinComponentType t : dynkin::classify(rs, J)) order *= weylOrderOf(t);
  return order;
}

inline Int parabolicIndex(const RootSystem& rs, NodeSet J, NodeSet K) {
  require(K.subsetOf(J), "parabolicIndex: K must be contained in J");
  Int oj = parabolicOrder(rs, J);
  Int ok = parabolicOrder(rs, K);
  check(oj % ok == 0, "parabolicIndex: order ratio not integral");
  return oj / ok;
}

// Image of a J-dominant weight under the longest element of W_J, by greedy
// descent at the lowest ascent node. Any descent order ends at the same
// weight (the orbit's unique J-antidominant element).
inline Weight longestImage(const RootSystem& rs, NodeSet J, Weight lambda) {
  for (int j : J.indices())
    require(lambda.c[j] >= 0, "longestImage: weight is not J-dominant");
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j : J.indices()) {
      if (lambda.c[j] > 0) {
        lambda = reflect(rs, j, lambda);
        moved = true;
        break;
      }
    }
  }
  return lambda;
}

// Shortest coset representatives of W_J / W_K, identity first, one per coset.
inline std::vector<WeylWord> cosetRepresentatives(const RootSystem& rs, NodeSet J, NodeSet K,
                                                  std::size_t cap = 0) {
  require(K.subsetOf(J), "cosetRepresentatives: K must be contained in J");
  // Seed with stabilizer exactly W_K inside W_J.
  Weight seed = rs.rho(J - K);
  auto orbitPairs = orbitWithWords(rs, J, seed, cap);
  check(Int(orbitPairs.size()) == parabolicIndex(rs, J, K),
        "cosetRepresentatives: orbit size does not match the parabolic index");
  std::vector<WeylWord> out;
  out.reserve(orbitPairs.size());
  for (auto& [w, word] : orbitPairs) out.push_back(std::move(word));
  return out;
}

}  // namespace weyl
}  // namespace hwface
