#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hwface/errors.hpp"
#include "hwface/nodeset.hpp"
#include "hwface/rational.hpp"

namespace hwface {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct DynkinComponentType {
  Family family;
  int rank;

  bool operator==(const DynkinComponentType&) const = default;

  std::string str() const { return std::string(1, char(family)) + std::to_string(rank); }
};

inline bool validComponentType(Family f, int n) {
  switch (f) {
    case Family::A: return n >= 1;
    case Family::B: return n >= 2;
    case Family::C: return n >= 2;
    case Family::D: return n >= 3;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

// D3 is the A3 diagram with its branch node first; stored canonically as A3.
inline DynkinComponentType canonicalType(Family f, int n) {
  require(validComponentType(f, n),
          "invalid Dynkin type " + std::string(1, char(f)) + std::to_string(n));
  if (f == Family::D && n == 3) return {Family::A, 3};
  return {f, n};
}

inline Int factorial(int n) {
  Int r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

inline Int weylOrderOf(DynkinComponentType t) {
  int n = t.rank;
  switch (t.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return factorial(n) << n;
    case Family::D: return factorial(n) << (n - 1);
    case Family::G: return 12;
    case Family::F: return 1152;
    case Family::E:
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return 696729600;
  }
  throw InternalError("weylOrderOf: bad family");
}

inline int positiveRootCountOf(DynkinComponentType t) {
  int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::G: return 6;
    case Family::F: return 24;
    case Family::E:
      if (n == 6) return 36;
      if (n == 7) return 63;
      return 120;
  }
  throw InternalError("positiveRootCountOf: bad family");
}

// "A2", "B3xG2" (components separated by 'x' or 'X').
inline std::vector<DynkinComponentType> parseTypeString(const std::string& s) {
  std::vector<DynkinComponentType> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    char f = s[pos];
    require(f >= 'A' && f <= 'G', "bad diagram type '" + s + "'");
    std::size_t q = pos + 1;
    while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
    require(q > pos + 1, "missing rank in diagram type '" + s + "'");
    int n = std::stoi(s.substr(pos + 1, q - pos - 1));
    out.push_back(canonicalType(Family(f), n));
    if (q < s.size()) {
      require(s[q] == 'x' || s[q] == 'X', "bad diagram type '" + s + "'");
      ++q;
      require(q < s.size(), "trailing separator in diagram type '" + s + "'");
    }
    pos = q;
  }
  require(!out.empty(), "empty diagram type");
  return out;
}

// Coordinates in the fundamental-weight basis: c[i] = mu(h_i).
struct Weight {
  std::vector<Rat> c;

  Weight() = default;
  explicit Weight(std::vector<Rat> v) : c(std::move(v)) {}
  static Weight zero(int n) { return Weight(std::vector<Rat>(n)); }

  bool operator==(const Weight&) const = default;
  bool operator<(const Weight& o) const { return c < o.c; }

  Weight operator+(const Weight& o) const {
    Weight r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
  }
  Weight operator-(const Weight& o) const {
    Weight r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
  }
  Weight scaled(const Rat& t) const {
    Weight r = *this;
    for (auto& x : r.c) x *= t;
    return r;
  }
  bool isZero() const {
    return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
  }
};

// Coordinates in the simple-root basis.
struct RootVector {
  std::vector<Rat> c;

  RootVector() = default;
  explicit RootVector(std::vector<Rat> v) : c(std::move(v)) {}

  bool operator==(const RootVector&) const = default;
  bool operator<(const RootVector& o) const { return c < o.c; }

  RootVector operator+(const RootVector& o) const {
    RootVector r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
  }
  RootVector operator-(const RootVector& o) const {
    RootVector r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
  }
  Rat height() const { return std::accumulate(c.begin(), c.end(), Rat(0)); }
};

class RootSystem {
 public:
  // cartan[i][j] = alpha_j(h_i); columns are simple roots in Omega-coordinates.
  static RootSystem fromCartan(std::vector<std::vector<int>> cartan) {
    RootSystem rs;
    rs.cartan_ = std::move(cartan);
    rs.n_ = int(rs.cartan_.size());
    rs.validateCartan();
    rs.finishBuild();
    return rs;
  }

  static RootSystem build(const std::vector<DynkinComponentType>& comps) {
    require(!comps.empty(), "empty component list");
    std::vector<DynkinComponentType> canon;
    canon.reserve(comps.size());
    for (auto t : comps) canon.push_back(canonicalType(t.family, t.rank));
    int n = 0;
    for (auto t : canon) n += t.rank;
    require(n <= 64, "total rank exceeds 64");
    std::vector<std::vector<int>> A(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) A[i][i] = 2;
    int base = 0;
    for (auto t : canon) {
      fillBlock(A, base, t);
      base += t.rank;
    }
    RootSystem rs = fromCartan(std::move(A));
    rs.declaredTypes_ = canon;
    return rs;
  }

  static RootSystem build(const std::string& typeString) {
    return build(parseTypeString(typeString));
  }

  int rank() const { return n_; }
  NodeSet allNodes() const { return NodeSet::first(n_); }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  int cartanEntry(int i, int j) const { return cartan_[i][j]; }
  const Rat& symmetrizer(int i) const { return d_[i]; }
  const std::vector<std::vector<int>>& positiveRoots() const { return posRoots_; }
  const std::vector<NodeSet>& components() const { return components_; }
  const std::vector<DynkinComponentType>& declaredTypes() const { return declaredTypes_; }

  bool adjacent(int i, int j) const { return i != j && cartan_[i][j] != 0; }

  // (alpha_i, alpha_j) under the normalization (alpha_long, alpha_long) = 2.
  Rat simpleInner(int i, int j) const { return d_[i] * cartan_[i][j]; }

  Weight fundamentalWeight(int i) const {
    Weight w = Weight::zero(n_);
    w.c[i] = 1;
    return w;
  }

  // rho_J = sum of omega_j over j in J.
  Weight rho(NodeSet J) const {
    Weight w = Weight::zero(n_);
    for (int j : J.indices()) w.c[j] = 1;
    return w;
  }

  Weight simpleRootAsWeight(int j) const {
    Weight w = Weight::zero(n_);
    for (int i = 0; i < n_; ++i) w.c[i] = cartan_[i][j];
    return w;
  }

  Weight toWeight(const RootVector& r) const {
    requireDim(r.c.size());
    Weight w = Weight::zero(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) w.c[i] += Rat(cartan_[i][j]) * r.c[j];
    return w;
  }

  RootVector toRoot(const Weight& w) const {
    requireDim(w.c.size());
    RootVector r;
    r.c.assign(n_, Rat(0));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r.c[i] += cartanInv_[i][j] * w.c[j];
    return r;
  }

  Weight toWeight(const std::vector<int>& rootCoords) const {
    RootVector r;
    r.c.assign(rootCoords.begin(), rootCoords.end());
    return toWeight(r);
  }

  Rat inner(const RootVector& x, const RootVector& y) const {
    requireDim(x.c.size());
    requireDim(y.c.size());
    Rat s = 0;
    for (int i = 0; i < n_; ++i) {
      if (x.c[i] == 0) continue;
      for (int j = 0; j < n_; ++j) s += x.c[i] * y.c[j] * simpleInner(i, j);
    }
    return s;
  }

  // (w, alpha_j) = d_j * w(h_j), summed over the root expansion of y.
  Rat inner(const Weight& x, const RootVector& y) const {
    requireDim(x.c.size());
    requireDim(y.c.size());
    Rat s = 0;
    for (int j = 0; j < n_; ++j) s += y.c[j] * d_[j] * x.c[j];
    return s;
  }
  Rat inner(const RootVector& x, const Weight& y) const { return inner(y, x); }

  Rat inner(const Weight& x, const Weight& y) const { return inner(x, toRoot(y)); }

  Weight project(NodeSet J, const Weight& w) const {
    requireDim(w.c.size());
    Weight p = Weight::zero(n_);
    for (int i : J.indices()) {
      require(i < n_, "node index out of range");
      p.c[i] = w.c[i];
    }
    return p;
  }

  NodeSet support(const Weight& w) const {
    requireDim(w.c.size());
    NodeSet s;
    for (int i = 0; i < n_; ++i)
      if (w.c[i] != 0) s |= NodeSet::single(i);
    return s;
  }

  NodeSet supportOfRoot(const std::vector<int>& rootCoords) const {
    NodeSet s;
    for (int i = 0; i < int(rootCoords.size()); ++i)
      if (rootCoords[i] != 0) s |= NodeSet::single(i);
    return s;
  }

  // {i in within : (alpha_i, x) = 0 for all x in X}; (alpha_i, x) = d_i * x(h_i).
  NodeSet perpSet(const std::vector<Weight>& X, NodeSet within) const {
    NodeSet out = within;
    for (const Weight& x : X) {
      requireDim(x.c.size());
      for (int i : within.indices())
        if (x.c[i] != 0) out -= NodeSet::single(i);
    }
    return out;
  }

  // Delta_J-perp: {i in within : (alpha_i, alpha_j) = 0 for all j in J}.
  NodeSet perpOfNodes(NodeSet J, NodeSet within) const {
    NodeSet out;
    for (int i : within.indices()) {
      bool perp = true;
      for (int j : J.indices())
        if (cartan_[i][j] != 0) { perp = false; break; }
      if (perp) out |= NodeSet::single(i);
    }
    return out;
  }

  // Highest root of one connected component, in Omega-coordinates.
  Weight highestRoot(NodeSet component) const {
    require(!component.empty(), "highestRoot: empty component");
    bool found = false;
    for (NodeSet c : components_)
      if (c == component) { found = true; break; }
    require(found, "highestRoot: not a connected component of the diagram");
    const std::vector<int>* best = nullptr;
    int bestHeight = -1;
    for (const auto& r : posRoots_) {
      if (!supportOfRoot(r).subsetOf(component)) continue;
      int h = std::accumulate(r.begin(), r.end(), 0);
      if (h > bestHeight) { bestHeight = h; best = &r; }
    }
    check(best != nullptr, "highestRoot: component has no roots");
    return toWeight(*best);
  }

  Rat rootLengthSq(const std::vector<int>& rootCoords) const {
    RootVector r;
    r.c.assign(rootCoords.begin(), rootCoords.end());
    return inner(r, r);
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Rat> d_;                        // symmetrizer, d_i = (alpha_i,alpha_i)/2
  std::vector<std::vector<Rat>> cartanInv_;
  std::vector<std::vector<int>> posRoots_;    // simple-root coordinates, ascending height
  std::vector<NodeSet> components_;
  std::vector<DynkinComponentType> declaredTypes_;  // only for typed builds

  void requireDim(std::size_t m) const {
    require(int(m) == n_, "coordinate vector has wrong rank for this root system");
  }

  static void fillBlock(std::vector<std::vector<int>>& A, int base, DynkinComponentType t) {
    int n = t.rank;
    auto link = [&](int i, int j, int aij, int aji) {
      // aij = alpha_j(h_i) for block-local 0-based i, j
      A[base + i][base + j] = aij;
      A[base + j][base + i] = aji;
    };
    auto chain = [&](int upTo) {
      for (int k = 0; k + 1 < upTo; ++k) link(k, k + 1, -1, -1);
    };
    switch (t.family) {
      case Family::A:
        chain(n);
        break;
      case Family::B:
        chain(n - 1);
        link(n - 2, n - 1, -1, -2);  // last node short
        break;
      case Family::C:
        chain(n - 1);
        link(n - 2, n - 1, -2, -1);  // last node long
        break;
      case Family::D:
        chain(n - 2);
        link(n - 3, n - 2, -1, -1);
        link(n - 3, n - 1, -1, -1);
        break;
      case Family::E:
        link(0, 2, -1, -1);
        link(1, 3, -1, -1);
        for (int k = 2; k + 1 < n; ++k) link(k, k + 1, -1, -1);
        break;
      case Family::F:
        link(0, 1, -1, -1);
        link(1, 2, -1, -2);  // nodes 3,4 short
        link(2, 3, -1, -1);
        break;
      case Family::G:
        link(0, 1, -3, -1);  // node 1 short
        break;
    }
  }

  void validateCartan() {
    require(n_ >= 1, "empty Cartan matrix");
    require(n_ <= 64, "rank exceeds 64");
    for (int i = 0; i < n_; ++i) {
      require(int(cartan_[i].size()) == n_, "Cartan matrix not square");
      require(cartan_[i][i] == 2, "Cartan diagonal entry != 2");
      for (int j = 0; j < n_; ++j) {
        if (i == j) continue;
        require(cartan_[i][j] <= 0, "positive off-diagonal Cartan entry");
        require((cartan_[i][j] == 0) == (cartan_[j][i] == 0),
                "Cartan zero pattern not symmetric");
      }
    }
  }

  void finishBuild() {
    computeComponents();
    computeSymmetrizer();
    checkPositiveDefinite();
    invertCartan();
    closePositiveRoots();
  }

  void computeComponents() {
    std::vector<int> comp(n_, -1);
    int nc = 0;
    for (int s = 0; s < n_; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<int> stack{s};
      comp[s] = nc;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n_; ++u)
          if (comp[u] < 0 && adjacent(v, u)) { comp[u] = nc; stack.push_back(u); }
      }
      ++nc;
    }
    components_.assign(nc, NodeSet());
    for (int i = 0; i < n_; ++i) components_[comp[i]] |= NodeSet::single(i);
  }

  void computeSymmetrizer() {
    // Propagate relative lengths along edges, then normalize each component
    // so its long roots get (alpha,alpha) = 2.
    d_.assign(n_, Rat(0));
    for (NodeSet comp : components_) {
      std::vector<int> nodes = comp.indices();
      std::vector<int> stack{nodes[0]};
      d_[nodes[0]] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n_; ++u) {
          if (!adjacent(v, u) || d_[u] != 0) continue;
          // d_u * a_uv = d_v * a_vu
          d_[u] = d_[v] * cartan_[v][u] / cartan_[u][v];
          stack.push_back(u);
        }
      }
      Rat mx = 0;
      for (int i : nodes) mx = std::max(mx, d_[i]);
      for (int i : nodes) d_[i] /= mx;
    }
    // Symmetry must hold for every pair, not only tree edges.
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        require(d_[i] * cartan_[i][j] == d_[j] * cartan_[j][i],
                "Cartan matrix is not symmetrizable");
  }

  void checkPositiveDefinite() {
    // Leading principal minors of the symmetrized matrix, by rational elimination.
    std::vector<std::vector<Rat>> m(n_, std::vector<Rat>(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) m[i][j] = simpleInner(i, j);
    for (int k = 0; k < n_; ++k) {
      require(m[k][k] > 0, "Cartan matrix is not of finite type");
      for (int i = k + 1; i < n_; ++i) {
        Rat f = m[i][k] / m[k][k];
        for (int j = k; j < n_; ++j) m[i][j] -= f * m[k][j];
      }
    }
  }

  void invertCartan() {
    std::vector<std::vector<Rat>> a(n_, std::vector<Rat>(2 * n_, Rat(0)));
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) a[i][j] = cartan_[i][j];
      a[i][n_ + i] = 1;
    }
    for (int k = 0; k < n_; ++k) {
      int piv = -1;
      for (int i = k; i < n_; ++i)
        if (a[i][k] != 0) { piv = i; break; }
      check(piv >= 0, "Cartan matrix singular");
      std::swap(a[k], a[piv]);
      Rat p = a[k][k];
      for (int j = 0; j < 2 * n_; ++j) a[k][j] /= p;
      for (int i = 0; i < n_; ++i) {
        if (i == k || a[i][k] == 0) continue;
        Rat f = a[i][k];
        for (int j = 0; j < 2 * n_; ++j) a[i][j] -= f * a[k][j];
      }
    }
    cartanInv_.assign(n_, std::vector<Rat>(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) cartanInv_[i][j] = a[i][n_ + j];
  }

  void closePositiveRoots() {
    // Height-by-height root-string closure from the simple roots.
    std::map<std::vector<int>, bool> seen;
    std::vector<std::vector<int>> level;
    for (int i = 0; i < n_; ++i) {
      std::vector<int> e(n_, 0);
      e[i] = 1;
      seen[e] = true;
      level.push_back(e);
      posRoots_.push_back(e);
    }
    while (!level.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& v : level) {
        for (int i = 0; i < n_; ++i) {
          std::vector<int> up = v;
          up[i] += 1;
          if (seen.count(up)) continue;
          int pairing = 0;  // <v, alpha_i-coroot>
          for (int j = 0; j < n_; ++j) pairing += cartan_[i][j] * v[j];
          int down = 0;
          std::vector<int> w = v;
          while (true) {
            w[i] -= 1;
            if (w[i] < 0 || !seen.count(w)) break;
            ++down;
          }
          if (down - pairing >= 1) {
            seen[up] = true;
            next.push_back(up);
            posRoots_.push_back(up);
          }
        }
      }
      level = std::move(next);
    }
    std::sort(posRoots_.begin(), posRoots_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                int ha = std::accumulate(a.begin(), a.end(), 0);
                int hb = std::accumulate(b.begin(), b.end(), 0);
                if (ha != hb) return ha < hb;
                return a < b;
              });
  }
};

}  // namespace hwface
