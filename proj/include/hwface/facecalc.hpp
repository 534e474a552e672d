#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hwface/dynkin.hpp"
#include "hwface/errors.hpp"
#include "hwface/modulespec.hpp"
#include "hwface/oracle.hpp"
#include "hwface/weyl.hpp"

namespace hwface {

// The six-block partition of I attached to (lambda, J(V), J).
struct SixPartition {
  NodeSet J1, J2, J3, J4, J5, J6;
};

struct SixPartitionScratch;

inline SixPartition partition(const ModuleSpec& spec, NodeSet J) {
  const RootSystem& rs = spec.system;
  require(J.subsetOf(rs.allNodes()), "partition: J not within the diagram");
  NodeSet JV = spec.integrable;
  NodeSet S = supportLambda(spec);
  SixPartition p;
  p.J2 = J - JV;
  p.J6 = JV - J;
  p.J1 = rs.allNodes() - (J | JV);
  NodeSet JcapV = J & JV;
  for (NodeSet C : dynkin::components(rs, JcapV)) {
    if (C.intersects(S))
      p.J3 |= C;
    else if (!dynkin::isOrthogonal(rs, C, p.J2))
      p.J4 |= C;
    else
      p.J5 |= C;
  }
  check((p.J1 | p.J2 | p.J3 | p.J4 | p.J5 | p.J6) == rs.allNodes() &&
            p.J1.size() + p.J2.size() + p.J3.size() + p.J4.size() + p.J5.size() + p.J6.size() ==
                rs.rank(),
        "partition: blocks do not partition I");
  return p;
}

namespace detail {

// Is (lambda - alpha_j)(h_i) nonzero? Only queried for i in J(V), j outside
// J(V), where the coordinate class of i is Zero or DominantIntegral.
inline bool coordNonzeroMinusAlpha(const ModuleSpec& spec, int i, int j) {
  int a = spec.system.cartanEntry(i, j);
  const CoordClass& cc = spec.lambda[i];
  switch (cc.kind) {
    case CoordKind::Zero:
      return a != 0;
    case CoordKind::DominantIntegral:
      if (cc.value) return *cc.value != a;
      check(i != j && a <= 0, "coordNonzeroMinusAlpha: unexpected diagonal query");
      return true;  // positive minus nonpositive
    case CoordKind::NonIntegralNonzero:
      break;
  }
  throw InternalError("coordNonzeroMinusAlpha: non-integrable node queried");
}

}  // namespace detail

// Smallest J' cutting the same face: the J3 and J4 blocks. Cross-checked
// against the union of J3-blocks of lambda - mu, mu over {0} and Delta_{J2}.
inline NodeSet jMin(const ModuleSpec& spec, NodeSet J) {
  const RootSystem& rs = spec.system;
  SixPartition p = partition(spec, J);
  NodeSet result = p.J3 | p.J4;

  NodeSet alt;
  NodeSet S = supportLambda(spec);
  auto comps = dynkin::components(rs, J & spec.integrable);
  for (NodeSet C : comps)
    if (C.intersects(S)) alt |= C;
  for (int j : p.J2.indices()) {
    for (NodeSet C : comps) {
      if (C.subsetOf(alt)) continue;
      bool meets = false;
      for (int i : C.indices())
        if (detail::coordNonzeroMinusAlpha(spec, i, j)) { meets = true; break; }
      if (meets) alt |= C;
    }
  }
  check(alt == result, "jMin: closed form disagrees with its shifted-support form");
  return result;
}

// Largest J' cutting the same face. Two equivalent closed forms are computed
// and compared.
inline NodeSet jMax(const ModuleSpec& spec, NodeSet J) {
  const RootSystem& rs = spec.system;
  SixPartition p = partition(spec, J);
  NodeSet jmin = jMin(spec, J);
  NodeSet lamPerp = lambdaPerp(spec);
  NodeSet filter = lamPerp & rs.perpOfNodes(jmin, rs.allNodes()) &
                   rs.perpOfNodes(p.J2, rs.allNodes());
  NodeSet fromJ6 = (J & spec.integrable) | (p.J6 & filter);
  NodeSet fromJmin = jmin | (spec.integrable & filter);
  check(fromJ6 == fromJmin, "jMax: the two closed forms disagree");
  return fromJ6;
}

// wt_J = wt_{J'} as faces of the same module.
inline bool facesEqual(const ModuleSpec& spec, NodeSet J, NodeSet Jp) {
  NodeSet JV = spec.integrable;
  if ((J - JV) != (Jp - JV)) return false;
  NodeSet mid = Jp & JV;
  return jMin(spec, J).subsetOf(mid) && mid.subsetOf(jMax(spec, J));
}

// The fiber of the face map through J: all J' with the same J2-part between
// lo and hi.
inline std::pair<NodeSet, NodeSet> fiberInterval(const ModuleSpec& spec, NodeSet J) {
  NodeSet tail = J - spec.integrable;
  return {jMin(spec, J) | tail, jMax(spec, J) | tail};
}

// wt_J contained in wt_{J'}.
inline bool faceIncludes(const ModuleSpec& spec, NodeSet J, NodeSet Jp) {
  NodeSet JV = spec.integrable;
  return (J - JV).subsetOf(Jp - JV) && jMin(spec, J).subsetOf(jMin(spec, Jp));
}

// w(conv wt_J) = w'(conv wt_{J'}) for w, w' in W_{J(V)}: the faces must agree
// and w^-1 w' must lie in W_{J_max}, tested by fixing omega_i for every
// i in J(V) minus J_max.
inline bool conjugateFacesEqual(const ModuleSpec& spec, const WeylWord& w, NodeSet J,
                                const WeylWord& wp, NodeSet Jp) {
  const RootSystem& rs = spec.system;
  require(w.supportSet().subsetOf(spec.integrable) && wp.supportSet().subsetOf(spec.integrable),
          "conjugateFacesEqual: words must be supported on J(V)");
  if (!facesEqual(spec, J, Jp)) return false;
  WeylWord u = w.inverse().then(wp);
  for (int i : (spec.integrable - jMax(spec, J)).indices()) {
    Weight om = rs.fundamentalWeight(i);
    if (!(weyl::applyWord(rs, u, om) == om)) return false;
  }
  return true;
}

// (dimension, root directions spanning the affine hull lambda - R Delta_*).
inline std::pair<int, NodeSet> dimensionAndHull(const ModuleSpec& spec, NodeSet J) {
  NodeSet basis = jMin(spec, J) | (J - spec.integrable);
  return {basis.size(), basis};
}

// Stabilizer W_{J_max} = W_{J_min} x W_{J_max minus J_min}; the second factor
// fixes the face pointwise.
inline std::pair<NodeSet, NodeSet> stabilizer(const ModuleSpec& spec, NodeSet J) {
  NodeSet jmin = jMin(spec, J);
  NodeSet jmax = jMax(spec, J);
  return {jmin, jmax - jmin};
}

inline void requireHullFlag(const ModuleSpec& spec, const char* op) {
  require(spec.polyhedralHull,
          std::string(op) + " requires the polyhedral-hull assertion on the module spec");
}

// Number of vertices of the face: [W_{J cap J(V)} : W_{J cap J(V) cap lambda-perp}].
inline Int vertexCount(const ModuleSpec& spec, NodeSet J) {
  requireHullFlag(spec, "vertexCount");
  NodeSet K = J & spec.integrable;
  return weyl::parabolicIndex(spec.system, K, K & lambdaPerp(spec));
}

struct FPolynomial {
  std::vector<Int> coeff;  // coeff[d] counts d-dimensional faces

  bool operator==(const FPolynomial&) const = default;

  int degree() const {
    for (int d = int(coeff.size()) - 1; d >= 0; --d)
      if (coeff[d] != 0) return d;
    return 0;
  }

  std::string str() const {
    std::string out;
    for (int d = degree(); d >= 0; --d) {
      const Int& c = coeff[d];
      if (c == 0) continue;
      if (!out.empty()) out += " + ";
      std::string coefPart = (c == 1 && d > 0) ? "" : c.str();
      std::string varPart = d == 0 ? "" : (d == 1 ? "t" : "t^" + std::to_string(d));
      out += coefPart + varPart;
    }
    return out.empty() ? "0" : out;
  }
};

// Sum over distinct faces of [W_{J(V)} : W_{J_max}] t^dim, the faces swept as
// the 2^|I| standard parabolic subsets grouped by fiber.
inline FPolynomial fPolynomial(const ModuleSpec& spec, int sweepCap = 20) {
  requireHullFlag(spec, "fPolynomial");
  const RootSystem& rs = spec.system;
  int n = rs.rank();
  if (n > sweepCap) throw ResourceError("fPolynomial: rank exceeds the subset sweep cap");
  FPolynomial f;
  f.coeff.assign(n + 1, Int(0));
  std::map<std::pair<NodeSet, NodeSet>, std::pair<int, Int>> byMax;
  std::map<std::pair<NodeSet, NodeSet>, int> byMin;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    NodeSet J(mask);
    NodeSet tail = J - spec.integrable;
    NodeSet jmin = jMin(spec, J);
    NodeSet jmax = jMax(spec, J);
    int dim = jmin.size() + tail.size();
    byMax.try_emplace({jmax, tail}, dim, weyl::parabolicIndex(rs, spec.integrable, jmax));
    byMin.try_emplace({jmin, tail}, dim);
  }
  for (const auto& [key, val] : byMax) f.coeff[val.first] += val.second;
  // Grouping by (J_min, J2) must name exactly the same faces.
  check(byMin.size() == byMax.size(), "fPolynomial: fiber groupings disagree");
  FPolynomial g;
  g.coeff.assign(n + 1, Int(0));
  for (const auto& [key, dim] : byMin) {
    NodeSet liftedMax = jMax(spec, key.first | key.second);
    g.coeff[dim] += weyl::parabolicIndex(rs, spec.integrable, liftedMax);
  }
  check(f == g, "fPolynomial: fiber groupings disagree");
  return f;
}

// J_max of the coordinate face on I minus {i}: J(V) minus {i} when i lies in
// I_min or outside J(V), else all of J(V). Cross-checked against the general
// formula.
inline NodeSet coordinateFaceMax(const ModuleSpec& spec, int i) {
  const RootSystem& rs = spec.system;
  require(i >= 0 && i < rs.rank(), "coordinateFaceMax: node out of range");
  NodeSet Imin = jMin(spec, rs.allNodes());
  NodeSet facetish = Imin | (rs.allNodes() - spec.integrable);
  NodeSet closed = facetish.contains(i) ? spec.integrable - NodeSet::single(i) : spec.integrable;
  NodeSet general = jMax(spec, rs.allNodes() - NodeSet::single(i));
  check(closed == general, "coordinateFaceMax: closed form disagrees with jMax");
  return closed;
}

// Does conv wt_{I minus {i}} have codimension one in conv wt V?
inline bool isFacet(const ModuleSpec& spec, int i) {
  const RootSystem& rs = spec.system;
  require(i >= 0 && i < rs.rank(), "isFacet: node out of range");
  NodeSet Imin = jMin(spec, rs.allNodes());
  if (!(Imin | (rs.allNodes() - spec.integrable)).contains(i)) return false;
  return jMin(spec, rs.allNodes() - NodeSet::single(i)) == (Imin - NodeSet::single(i));
}

// One half-space (w lambda - mu, w omega_i) >= 0 of the representation.
struct HalfSpace {
  int node;
  WeylWord word;
  Weight normal;            // w omega_i, exact
  std::optional<Rat> rhs;   // (lambda, omega_i), the hull maximum of (., normal)

  bool admits(const RootSystem& rs, const Weight& mu) const {
    require(rhs.has_value(), "half-space test needs a numeric lambda");
    return rs.inner(mu, normal) <= *rhs;
  }
};

// conv wt V = (lambda - R Delta) cap all half-spaces H_{i,w}. With minimal,
// only facet-defining nodes are emitted and the list is irredundant.
inline std::vector<HalfSpace> halfspaceRepresentation(const ModuleSpec& spec, bool minimal,
                                                      std::size_t cap = 0) {
  requireHullFlag(spec, "halfspaceRepresentation");
  const RootSystem& rs = spec.system;
  auto lam = numericLambda(spec);
  std::vector<HalfSpace> out;
  for (int i = 0; i < rs.rank(); ++i) {
    if (minimal && !isFacet(spec, i)) continue;
    NodeSet K = coordinateFaceMax(spec, i);
    for (const WeylWord& w : weyl::cosetRepresentatives(rs, spec.integrable, K, cap)) {
      HalfSpace hs;
      hs.node = i;
      hs.word = w;
      hs.normal = weyl::applyWord(rs, w, rs.fundamentalWeight(i));
      // (w lambda, w omega_i) = (lambda, omega_i): the wall does not move the bound
      if (lam) hs.rhs = rs.inner(*lam, rs.fundamentalWeight(i));
      out.push_back(std::move(hs));
    }
  }
  return out;
}

// Barycenter of the finite face wt_{J cap J(V)} (numeric when lambda is),
// and the fundamental-weight directions certifying its cone membership.
struct BarycenterData {
  std::optional<Weight> barycenter;
  NodeSet coneSupport;  // J_lambda minus (J cap J(V))_max
};

inline BarycenterData barycenterData(const ModuleSpec& spec, NodeSet J, std::size_t cap = 0) {
  const RootSystem& rs = spec.system;
  NodeSet K = J & spec.integrable;
  BarycenterData out;
  out.coneSupport = jLambda(spec) - jMax(spec, K);
  if (auto lam = numericLambda(spec)) {
    auto orb = weyl::orbit(rs, K, *lam, cap);
    Weight sum = Weight::zero(rs.rank());
    for (const Weight& w : orb) sum = sum + w;
    out.barycenter = sum.scaled(Rat(1, Int(orb.size())));
  }
  return out;
}

// The longest weights W_J(lambda) of a finite face and its unique minimum
// w0^J(lambda); empty when J is not inside J(V) (the face is then unbounded).
struct LongestWeights {
  std::vector<Weight> weights;  // sorted
  Weight minimum;
};

inline std::optional<LongestWeights> longestWeights(const ModuleSpec& spec, NodeSet J,
                                                    std::size_t cap = 0) {
  auto lam = numericLambda(spec);
  require(lam.has_value(), "longestWeights needs a numeric lambda");
  if (!J.subsetOf(spec.integrable)) return std::nullopt;
  LongestWeights out;
  out.weights = weyl::orbit(spec.system, J, *lam, cap);
  out.minimum = weyl::longestImage(spec.system, J, *lam);
  return out;
}

// I_lambda(mu) = {i : (lambda - mu, omega_i) = 0}: the vanishing simple-root
// coordinates of lambda - mu.
inline NodeSet iLambdaSet(const ModuleSpec& spec, const Weight& mu) {
  auto lam = numericLambda(spec);
  require(lam.has_value(), "iLambdaSet needs a numeric lambda");
  RootVector r = spec.system.toRoot(*lam - mu);
  NodeSet out;
  for (int i = 0; i < spec.system.rank(); ++i)
    if (r.c[i] == 0) out |= NodeSet::single(i);
  return out;
}

// A weight mu of the integrable top with J = J(V) minus I_lambda(mu), if one
// exists; J is then the J3-block of its own face.
inline std::optional<Weight> j3ByWitness(const ModuleSpec& spec, NodeSet J, std::size_t cap = 0) {
  auto lam = numericLambda(spec);
  require(lam.has_value(), "j3ByWitness needs a numeric lambda");
  require(J.subsetOf(spec.integrable), "j3ByWitness: J must lie in J(V)");
  oracle::WeightSet top = oracle::integrableTop(spec);
  for (const auto& nu : top.offsets) {
    NodeSet suppNu = spec.system.supportOfRoot(nu);
    if ((spec.integrable & suppNu) == J) return spec.system.toWeight(nu).scaled(-1) + *lam;
  }
  return std::nullopt;
}

// The boundary/closure dictionary: dJ = I minus (I minus J)_max and
// Jbar = I minus (I minus J)_min.
struct CmDictionary {
  NodeSet boundary;  // dJ
  NodeSet closure;   // Jbar
};

// Affine-diagram route, defined on the adjoint module of a simple algebra:
// the component (Ihat minus J)_0 of the affine node determines both sets.
inline CmDictionary affineDictionary(const ModuleSpec& spec, NodeSet J) {
  require(isAdjointShape(spec),
          "the affine-diagram dictionary is defined for the adjoint module of a simple algebra");
  const RootSystem& rs = spec.system;
  require(J.subsetOf(rs.allNodes()), "affineDictionary: J not within the diagram");
  dynkin::ExtendedDiagram ext = dynkin::affineDiagram(rs);
  NodeSet comp = dynkin::extendedComponentContaining(ext, J).iPart;
  CmDictionary out;
  out.closure = rs.allNodes() - comp;
  Weight theta = rs.highestRoot(rs.allNodes());
  NodeSet perp;
  for (int j : J.indices()) {
    // alpha_j perpendicular to the whole affine component, alpha_0 = -theta
    // included; (theta, alpha_j) = 0 iff theta(h_j) = 0
    if (theta.c[j] != 0) continue;
    bool ortho = true;
    for (int p : comp.indices())
      if (rs.cartanEntry(j, p) != 0) { ortho = false; break; }
    if (ortho) perp |= NodeSet::single(j);
  }
  out.boundary = J - perp;
  return out;
}

inline CmDictionary cmDictionary(const ModuleSpec& spec, NodeSet J) {
  const RootSystem& rs = spec.system;
  require(J.subsetOf(rs.allNodes()), "cmDictionary: J not within the diagram");
  CmDictionary out;
  out.boundary = rs.allNodes() - jMax(spec, rs.allNodes() - J);
  out.closure = rs.allNodes() - jMin(spec, rs.allNodes() - J);
  if (isAdjointShape(spec)) {
    CmDictionary aff = affineDictionary(spec, J);
    check(aff.boundary == out.boundary && aff.closure == out.closure,
          "cmDictionary: affine route disagrees with the extremal-set route");
  }
  return out;
}

namespace detail {

inline dynkin::ExtendedDiagram minusLambdaOf(const ModuleSpec& spec) {
  std::vector<bool> adj(spec.system.rank());
  for (int i = 0; i < spec.system.rank(); ++i)
    adj[i] = spec.lambda[i].kind == CoordKind::DominantIntegral;
  return dynkin::minusLambdaDiagram(spec.system, std::move(adj));
}

inline void requireSimpleFiniteDimensional(const ModuleSpec& spec, const char* op) {
  require(spec.system.components().size() == 1,
          std::string(op) + " is defined over a connected diagram");
  require(isFiniteDimensionalShape(spec),
          std::string(op) + " is defined for the finite-dimensional preset");
}

}  // namespace detail

// Closure operator from the extended Coxeter diagram with the -lambda node:
// I minus the I-part of the component of -lambda in Ihat_lambda minus J.
inline NodeSet lclOverline(const ModuleSpec& spec, NodeSet J) {
  detail::requireSimpleFiniteDimensional(spec, "lclOverline");
  const RootSystem& rs = spec.system;
  require(J.subsetOf(rs.allNodes()), "lclOverline: J not within the diagram");
  NodeSet comp = dynkin::extendedComponentContaining(detail::minusLambdaOf(spec), J).iPart;
  NodeSet result = rs.allNodes() - comp;
  check(result == (rs.allNodes() - jMin(spec, rs.allNodes() - J)),
        "lclOverline: extended-diagram route disagrees with jMin");
  return result;
}

// f-polynomial via the extended Coxeter diagram: sum over J with
// Ihat_lambda minus J connected of [W : W_{(I minus J) cup perp}] t^{|I minus J|}.
inline FPolynomial lclFPolynomial(const ModuleSpec& spec) {
  detail::requireSimpleFiniteDimensional(spec, "lclFPolynomial");
  const RootSystem& rs = spec.system;
  int n = rs.rank();
  dynkin::ExtendedDiagram ext = detail::minusLambdaOf(spec);
  NodeSet lamPerp = lambdaPerp(spec);
  FPolynomial f;
  f.coeff.assign(n + 1, Int(0));
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    NodeSet J(mask);
    if (!dynkin::extendedMinusIsConnected(ext, J)) continue;
    NodeSet rest = rs.allNodes() - J;
    NodeSet perp = rs.perpOfNodes(rest, rs.allNodes()) & lamPerp;
    f.coeff[rest.size()] += weyl::parabolicIndex(rs, rs.allNodes(), rest | perp);
  }
  check(f == fPolynomial(spec), "lclFPolynomial disagrees with the face-sweep f-polynomial");
  return f;
}

// The extremal-set tables of two finite-dimensional modules over the same
// simple diagram agree whenever the supports of their highest weights agree.
inline bool samePaperFormulasAcrossSupport(const ModuleSpec& a, const ModuleSpec& b) {
  detail::requireSimpleFiniteDimensional(a, "samePaperFormulasAcrossSupport");
  detail::requireSimpleFiniteDimensional(b, "samePaperFormulasAcrossSupport");
  require(a.system.cartan() == b.system.cartan(),
          "samePaperFormulasAcrossSupport: different diagrams");
  require(supportLambda(a) == supportLambda(b),
          "samePaperFormulasAcrossSupport: different supports");
  int n = a.system.rank();
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    NodeSet J(mask);
    if (jMin(a, J) != jMin(b, J) || jMax(a, J) != jMax(b, J)) return false;
  }
  return true;
}

// Everything the calculus derives for one subset J.
struct FaceReport {
  NodeSet J;
  SixPartition blocks;
  NodeSet jmin, jmax;
  NodeSet fiberLo, fiberHi;
  int dimension = 0;
  NodeSet affineHullBasis;
  std::pair<NodeSet, NodeSet> stabilizerPair;
  std::optional<Int> vertices;  // present under the polyhedral-hull assertion
  bool isFiniteFace = false;
  BarycenterData barycenter;
};

inline FaceReport buildFaceReport(const ModuleSpec& spec, NodeSet J) {
  FaceReport r;
  r.J = J;
  r.blocks = partition(spec, J);
  r.jmin = jMin(spec, J);
  r.jmax = jMax(spec, J);
  check(r.jmin.subsetOf(J & spec.integrable) && (J & spec.integrable).subsetOf(r.jmax) &&
            r.jmax.subsetOf(spec.integrable),
        "face report: extremal sets out of order");
  auto [lo, hi] = fiberInterval(spec, J);
  r.fiberLo = lo;
  r.fiberHi = hi;
  auto [dim, basis] = dimensionAndHull(spec, J);
  r.dimension = dim;
  r.affineHullBasis = basis;
  r.stabilizerPair = stabilizer(spec, J);
  if (spec.polyhedralHull) r.vertices = vertexCount(spec, J);
  r.isFiniteFace = J.subsetOf(spec.integrable);
  r.barycenter = barycenterData(spec, J);
  return r;
}

}  // namespace hwface
