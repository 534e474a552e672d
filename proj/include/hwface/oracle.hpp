#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hwface/errors.hpp"
#include "hwface/modulespec.hpp"
#include "hwface/rootsystem.hpp"
#include "hwface/weyl.hpp"

namespace hwface {
namespace oracle {

// A finite (or height-truncated) set of weights lambda - nu, stored as the
// offsets nu in simple-root coordinates. Offsets are kept sorted.
// If truncatedAt = D, the set is exactly the height <= D slice of the true set.
struct WeightSet {
  Weight base;
  std::vector<std::vector<int>> offsets;
  std::optional<int> truncatedAt;

  bool contains(const std::vector<int>& nu) const {
    return std::binary_search(offsets.begin(), offsets.end(), nu);
  }
  std::size_t size() const { return offsets.size(); }

  std::vector<Weight> weights(const RootSystem& rs) const {
    std::vector<Weight> out;
    out.reserve(offsets.size());
    for (const auto& nu : offsets) out.push_back(base - rs.toWeight(nu));
    return out;
  }
};

inline int heightOf(const std::vector<int>& nu) {
  int h = 0;
  for (int x : nu) h += x;
  return h;
}

// Weights of the finite-dimensional simple module of the K-Levi with highest
// weight lambda, as ambient weights lambda - nu, nu supported on K.
// Saturation by root strings, level by level in the height of nu: mu - alpha_k
// is a weight iff p + mu(h_k) >= 1 where p is the completed up-string length.
inline WeightSet simpleModuleWeights(const RootSystem& rs, NodeSet K, const Weight& lambda,
                                     std::size_t cap = 0) {
  if (cap == 0) cap = weyl::orbitCap();
  std::vector<int> gens = K.indices();
  for (int k : gens)
    require(isNonNegativeInteger(lambda.c[k]),
            "simpleModuleWeights: lambda is not K-dominant-integral");
  int n = rs.rank();
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> level{std::vector<int>(n, 0)};
  known.insert(level.front());
  while (!level.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& nu : level) {
      for (int k : gens) {
        std::vector<int> up = nu;
        up[k] += 1;
        if (known.count(up)) continue;
        // mu(h_k) for mu = lambda - nu; nu is supported on K, where lambda is integral
        Rat mk = lambda.c[k];
        for (int j = 0; j < n; ++j) mk -= Rat(rs.cartanEntry(k, j)) * nu[j];
        int p = 0;
        std::vector<int> w = nu;
        while (true) {
          w[k] -= 1;
          if (w[k] < 0 || !known.count(w)) break;
          ++p;
        }
        if (Rat(p) + mk >= 1) {
          known.insert(up);
          if (known.size() > cap) throw ResourceError("weight enumeration cap exceeded");
          next.push_back(std::move(up));
        }
      }
    }
    level = std::move(next);
  }
  WeightSet ws;
  ws.base = lambda;
  ws.offsets.assign(known.begin(), known.end());
  return ws;
}

// The integrable top layer of the modeled module M(lambda, J(V)).
inline WeightSet integrableTop(const ModuleSpec& spec) {
  auto lam = numericLambda(spec);
  require(lam.has_value(), "oracle needs a fully numeric lambda");
  return simpleModuleWeights(spec.system, spec.integrable, *lam);
}

// 2 * height(lambda - w0^{J(V)} lambda) + 4: differences between standard
// parabolic subsets of the model show up within this slice.
inline int defaultDepth(const ModuleSpec& spec) {
  auto lam = numericLambda(spec);
  require(lam.has_value(), "oracle needs a fully numeric lambda");
  Weight low = weyl::longestImage(spec.system, spec.integrable, *lam);
  RootVector diff = spec.system.toRoot(*lam - low);
  Rat h = diff.height();
  check(isNonNegativeInteger(h), "defaultDepth: top height not a nonnegative integer");
  return 2 * int(h.numerator()) + 4;
}

// Weight set of M(lambda, J(V)) = (integrable top) - Z+(Phi+ \ Phi+_{J(V)}),
// truncated to offset height <= D.
inline WeightSet moduleWeightsTruncated(const ModuleSpec& spec, int depth, std::size_t cap = 0) {
  require(depth >= 0, "negative truncation depth");
  if (cap == 0) cap = weyl::orbitCap();
  const RootSystem& rs = spec.system;
  WeightSet top = integrableTop(spec);
  std::vector<std::vector<int>> lowering;
  for (const auto& beta : rs.positiveRoots())
    if (!rs.supportOfRoot(beta).subsetOf(spec.integrable)) lowering.push_back(beta);

  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> queue;
  int maxTopHeight = 0;
  for (const auto& nu : top.offsets) {
    maxTopHeight = std::max(maxTopHeight, heightOf(nu));
    if (heightOf(nu) <= depth) {
      known.insert(nu);
      queue.push_back(nu);
    }
  }
  while (!queue.empty()) {
    std::vector<int> nu = std::move(queue.back());
    queue.pop_back();
    for (const auto& beta : lowering) {
      std::vector<int> down = nu;
      for (int j = 0; j < rs.rank(); ++j) down[j] += beta[j];
      if (heightOf(down) > depth) continue;
      if (known.insert(down).second) {
        if (known.size() > cap) throw ResourceError("weight enumeration cap exceeded");
        queue.push_back(down);
      }
    }
  }
  WeightSet ws;
  ws.base = top.base;
  ws.offsets.assign(known.begin(), known.end());
  if (!lowering.empty() || depth < maxTopHeight) ws.truncatedAt = depth;
  return ws;
}

// (lambda - Z+ Delta_J) cap WS: offsets supported on J.
inline WeightSet standardParabolicSubset(const RootSystem& rs, const WeightSet& ws, NodeSet J) {
  WeightSet out;
  out.base = ws.base;
  out.truncatedAt = ws.truncatedAt;
  for (const auto& nu : ws.offsets)
    if (rs.supportOfRoot(nu).subsetOf(J)) out.offsets.push_back(nu);
  return out;
}

// Exact wt_J of the model for J inside J(V): such offsets never leave the top.
inline WeightSet finiteParabolicSubset(const ModuleSpec& spec, const WeightSet& top, NodeSet J) {
  require(J.subsetOf(spec.integrable), "finiteParabolicSubset: J must lie in J(V)");
  return standardParabolicSubset(spec.system, top, J);
}

// argmax of (phi, -) over the stored slice.
inline WeightSet maximizerSubset(const RootSystem& rs, const WeightSet& ws, const Weight& phi) {
  WeightSet out;
  out.base = ws.base;
  out.truncatedAt = ws.truncatedAt;
  if (ws.offsets.empty()) return out;
  // (phi, lambda - nu) is maximal iff (phi, nu) is minimal.
  auto pairing = [&](const std::vector<int>& nu) {
    Rat s = 0;
    for (int j = 0; j < rs.rank(); ++j)
      if (nu[j] != 0) s += Rat(nu[j]) * rs.symmetrizer(j) * phi.c[j];
    return s;
  };
  Rat best = pairing(ws.offsets.front());
  for (const auto& nu : ws.offsets) best = std::min(best, pairing(nu));
  for (const auto& nu : ws.offsets)
    if (pairing(nu) == best) out.offsets.push_back(nu);
  return out;
}

inline Weight rhoSum(const RootSystem& rs, const WeightSet& ws) {
  require(!ws.truncatedAt.has_value(), "rhoSum: undefined on a truncated set");
  std::vector<int> total(rs.rank(), 0);
  for (const auto& nu : ws.offsets)
    for (int j = 0; j < rs.rank(); ++j) total[j] += nu[j];
  return ws.base.scaled(Rat(Int(ws.offsets.size()))) - rs.toWeight(total);
}

// ---- exact affine geometry, ambient dimension of the span at most 3 ----

namespace detail {

// Affine chart: basis of difference vectors from points[0] plus each point's
// exact coordinates in that basis.
struct Chart {
  int dim = 0;
  std::vector<std::vector<Rat>> coords;  // one entry per input point
};

inline Chart buildChart(const std::vector<Weight>& pts) {
  Chart chart;
  if (pts.empty()) return chart;
  std::size_t amb = pts[0].c.size();
  std::vector<std::vector<Rat>> basis;      // original difference vectors
  std::vector<std::vector<Rat>> reduced;    // row-echelon shadows
  std::vector<std::size_t> pivotCol;
  auto tryExtend = [&](const std::vector<Rat>& v) {
    std::vector<Rat> r = v;
    for (std::size_t b = 0; b < reduced.size(); ++b) {
      if (r[pivotCol[b]] == 0) continue;
      Rat f = r[pivotCol[b]] / reduced[b][pivotCol[b]];
      for (std::size_t j = 0; j < amb; ++j) r[j] -= f * reduced[b][j];
    }
    for (std::size_t j = 0; j < amb; ++j) {
      if (r[j] != 0) {
        basis.push_back(v);
        reduced.push_back(r);
        pivotCol.push_back(j);
        return true;
      }
    }
    return false;
  };
  for (std::size_t p = 1; p < pts.size(); ++p) {
    std::vector<Rat> v(amb);
    for (std::size_t j = 0; j < amb; ++j) v[j] = pts[p].c[j] - pts[0].c[j];
    tryExtend(v);
  }
  chart.dim = int(basis.size());
  int d = chart.dim;
  // Invert the pivot-row square submatrix of the basis column matrix.
  std::vector<std::vector<Rat>> m(d, std::vector<Rat>(2 * d, Rat(0)));
  for (int r = 0; r < d; ++r) {
    for (int s = 0; s < d; ++s) m[r][s] = basis[s][pivotCol[r]];
    m[r][d + r] = 1;
  }
  for (int k = 0; k < d; ++k) {
    int piv = -1;
    for (int i = k; i < d; ++i)
      if (m[i][k] != 0) { piv = i; break; }
    check(piv >= 0, "chart: singular pivot matrix");
    std::swap(m[k], m[piv]);
    Rat p = m[k][k];
    for (int j = 0; j < 2 * d; ++j) m[k][j] /= p;
    for (int i = 0; i < d; ++i) {
      if (i == k || m[i][k] == 0) continue;
      Rat f = m[i][k];
      for (int j = 0; j < 2 * d; ++j) m[i][j] -= f * m[k][j];
    }
  }
  for (const Weight& pt : pts) {
    std::vector<Rat> v(amb);
    for (std::size_t j = 0; j < amb; ++j) v[j] = pt.c[j] - pts[0].c[j];
    std::vector<Rat> x(d, Rat(0));
    for (int s = 0; s < d; ++s)
      for (int r = 0; r < d; ++r) x[s] += m[s][d + r] * v[pivotCol[r]];
    // v must be in the span; verify the solution in full.
    for (std::size_t j = 0; j < amb; ++j) {
      Rat acc = 0;
      for (int s = 0; s < d; ++s) acc += x[s] * basis[s][j];
      check(acc == v[j], "chart: point outside the computed span");
    }
    chart.coords.push_back(std::move(x));
  }
  return chart;
}

inline Rat cross2(const std::vector<Rat>& o, const std::vector<Rat>& a, const std::vector<Rat>& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Indices of the convex-polygon corners in counterclockwise order; collinear
// interior points are dropped.
inline std::vector<int> convexPolygon(const std::vector<std::vector<Rat>>& pts2) {
  std::vector<int> idx(pts2.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return pts2[a] < pts2[b]; });
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&](int a, int b) { return pts2[a] == pts2[b]; }),
            idx.end());
  if (idx.size() <= 2) return idx;
  std::vector<int> hull;
  for (int pass = 0; pass < 2; ++pass) {
    std::size_t start = hull.size();
    for (int i : idx) {
      while (hull.size() >= start + 2 &&
             cross2(pts2[hull[hull.size() - 2]], pts2[hull.back()], pts2[i]) <= 0)
        hull.pop_back();
      hull.push_back(i);
    }
    hull.pop_back();
    std::reverse(idx.begin(), idx.end());
  }
  return hull;
}

}  // namespace detail

inline int affineRank(const std::vector<Weight>& pts) {
  if (pts.empty()) return -1;
  std::vector<std::vector<Rat>> reduced;
  std::vector<std::size_t> pivotCol;
  std::size_t amb = pts[0].c.size();
  for (std::size_t p = 1; p < pts.size(); ++p) {
    std::vector<Rat> r(amb);
    for (std::size_t j = 0; j < amb; ++j) r[j] = pts[p].c[j] - pts[0].c[j];
    for (std::size_t b = 0; b < reduced.size(); ++b) {
      if (r[pivotCol[b]] == 0) continue;
      Rat f = r[pivotCol[b]] / reduced[b][pivotCol[b]];
      for (std::size_t j = 0; j < amb; ++j) r[j] -= f * reduced[b][j];
    }
    for (std::size_t j = 0; j < amb; ++j)
      if (r[j] != 0) {
        reduced.push_back(r);
        pivotCol.push_back(j);
        break;
      }
  }
  return int(reduced.size());
}

struct HullFaceLattice {
  int dim = 0;
  std::vector<Weight> vertices;               // sorted
  std::vector<std::pair<int, int>> edges;     // vertex indices, sorted pairs
  std::vector<std::vector<int>> facets;       // top-dim proper faces (dim >= 3 only)
  std::vector<long long> fVector;             // faces by dimension, top face included
};

// Exact convex hull with full face enumeration; affine dimension <= 3.
inline HullFaceLattice hullFaceLattice(const std::vector<Weight>& inputPts) {
  require(!inputPts.empty(), "hull of an empty point set");
  std::vector<Weight> pts = inputPts;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  detail::Chart chart = detail::buildChart(pts);
  HullFaceLattice out;
  out.dim = chart.dim;
  require(chart.dim <= 3, "hull oracle supports affine dimension at most 3");

  auto vertexDone = [&](std::vector<int> vertexIds) {
    std::sort(vertexIds.begin(), vertexIds.end());
    for (int id : vertexIds) out.vertices.push_back(pts[id]);
    std::vector<int> remap(pts.size(), -1);
    for (std::size_t k = 0; k < vertexIds.size(); ++k) remap[vertexIds[k]] = int(k);
    return remap;
  };

  if (chart.dim == 0) {
    out.vertices = pts;
    out.fVector = {1};
    return out;
  }
  if (chart.dim == 1) {
    int lo = 0, hi = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (chart.coords[i] < chart.coords[lo]) lo = int(i);
      if (chart.coords[hi] < chart.coords[i]) hi = int(i);
    }
    auto remap = vertexDone({lo, hi});
    out.edges.push_back({std::min(remap[lo], remap[hi]), std::max(remap[lo], remap[hi])});
    out.fVector = {2, 1};
    return out;
  }
  if (chart.dim == 2) {
    std::vector<int> poly = detail::convexPolygon(chart.coords);
    auto remap = vertexDone(poly);
    std::set<std::pair<int, int>> es;
    for (std::size_t k = 0; k < poly.size(); ++k) {
      int a = remap[poly[k]], b = remap[poly[(k + 1) % poly.size()]];
      es.insert({std::min(a, b), std::max(a, b)});
    }
    out.edges.assign(es.begin(), es.end());
    out.fVector = {(long long)poly.size(), (long long)es.size(), 1};
    return out;
  }

  // dim 3: supporting planes from point triples, oriented outward.
  using Vec3 = std::array<Rat, 3>;
  auto sub = [](const std::vector<Rat>& a, const std::vector<Rat>& b) {
    return Vec3{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
  };
  auto cross = [](const Vec3& a, const Vec3& b) {
    return Vec3{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  };
  auto dot = [](const Vec3& a, const std::vector<Rat>& x) {
    return a[0] * x[0] + a[1] * x[1] + a[2] * x[2];
  };
  int m = int(pts.size());
  std::map<std::vector<Int>, std::vector<int>> planes;  // canonical (n, c) -> on-plane ids
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        Vec3 nrm = cross(sub(chart.coords[j], chart.coords[i]),
                         sub(chart.coords[k], chart.coords[i]));
        if (nrm[0] == 0 && nrm[1] == 0 && nrm[2] == 0) continue;
        Rat c = dot(nrm, chart.coords[i]);
        bool anyAbove = false, anyBelow = false;
        for (int p = 0; p < m && !(anyAbove && anyBelow); ++p) {
          Rat s = dot(nrm, chart.coords[p]) - c;
          if (s > 0) anyAbove = true;
          if (s < 0) anyBelow = true;
        }
        if (anyAbove && anyBelow) continue;
        if (anyAbove) {
          for (auto& v : nrm) v = -v;
          c = -c;
        }
        // canonical integer key for the oriented plane
        Int l = 1;
        auto lcmIn = [&l](const Rat& r) {
          Int d = r.denominator();
          Int g = boost::multiprecision::gcd(l, d);
          l = l / g * d;
        };
        lcmIn(nrm[0]); lcmIn(nrm[1]); lcmIn(nrm[2]); lcmIn(c);
        std::vector<Int> key = {nrm[0].numerator() * (l / nrm[0].denominator()),
                                nrm[1].numerator() * (l / nrm[1].denominator()),
                                nrm[2].numerator() * (l / nrm[2].denominator()),
                                c.numerator() * (l / c.denominator())};
        Int g = 0;
        for (const Int& v : key) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(v));
        if (g > 1)
          for (Int& v : key) v /= g;
        if (planes.count(key)) continue;
        std::vector<int> on;
        for (int p = 0; p < m; ++p)
          if (dot(nrm, chart.coords[p]) == c) on.push_back(p);
        planes[key] = on;
      }

  std::set<int> vertexIdSet;
  std::set<std::pair<int, int>> edgeSet;          // global point ids
  std::vector<std::vector<int>> facetPolys;       // global point ids, cyclic
  for (const auto& [key, on] : planes) {
    check(on.size() >= 3, "hull: degenerate facet");
    std::vector<Weight> facetPts;
    for (int id : on) facetPts.push_back(pts[id]);
    detail::Chart sub2 = detail::buildChart(facetPts);
    check(sub2.dim == 2, "hull: facet is not two-dimensional");
    std::vector<int> poly2 = detail::convexPolygon(sub2.coords);
    std::vector<int> poly;
    for (int local : poly2) poly.push_back(on[local]);
    for (std::size_t t = 0; t < poly.size(); ++t) {
      int a = poly[t], b = poly[(t + 1) % poly.size()];
      vertexIdSet.insert(a);
      edgeSet.insert({std::min(a, b), std::max(a, b)});
    }
    facetPolys.push_back(poly);
  }
  std::vector<int> vids(vertexIdSet.begin(), vertexIdSet.end());
  auto remap = vertexDone(vids);
  for (auto [a, b] : edgeSet) {
    int ra = remap[a], rb = remap[b];
    out.edges.push_back({std::min(ra, rb), std::max(ra, rb)});
  }
  std::sort(out.edges.begin(), out.edges.end());
  for (auto& poly : facetPolys) {
    std::vector<int> f;
    for (int id : poly) f.push_back(remap[id]);
    out.facets.push_back(std::move(f));
  }
  long long V = (long long)out.vertices.size();
  long long E = (long long)out.edges.size();
  long long F = (long long)out.facets.size();
  check(V - E + F == 2, "hull: Euler characteristic violated");
  out.fVector = {V, E, F, 1};
  return out;
}

// All w in W_{J(V)} preserving wt_J setwise, plus those fixing it pointwise.
// J must cut a finite face (J inside J(V)).
struct BruteStabilizer {
  std::vector<WeylWord> setStabilizer;
  std::vector<WeylWord> pointwiseStabilizer;
};

inline BruteStabilizer bruteStabilizer(const ModuleSpec& spec, NodeSet J, std::size_t cap = 0) {
  require(J.subsetOf(spec.integrable), "bruteStabilizer: J must lie in J(V)");
  const RootSystem& rs = spec.system;
  WeightSet top = integrableTop(spec);
  WeightSet face = finiteParabolicSubset(spec, top, J);
  std::set<Weight> faceSet;
  for (const Weight& w : face.weights(rs)) faceSet.insert(w);

  auto group = weyl::orbitWithWords(rs, spec.integrable, rs.rho(spec.integrable), cap);
  check(Int(group.size()) == weyl::parabolicOrder(rs, spec.integrable),
        "bruteStabilizer: group enumeration incomplete");
  BruteStabilizer out;
  for (const auto& [gw, word] : group) {
    bool setStable = true, pointwise = true;
    for (const Weight& mu : faceSet) {
      Weight img = weyl::applyWord(rs, word, mu);
      if (!(img == mu)) pointwise = false;
      if (!faceSet.count(img)) { setStable = false; break; }
    }
    if (setStable) {
      out.setStabilizer.push_back(word);
      if (pointwise) out.pointwiseStabilizer.push_back(word);
    }
  }
  return out;
}

}  // namespace oracle
}  // namespace hwface
