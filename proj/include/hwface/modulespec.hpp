#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hwface/errors.hpp"
#include "hwface/nodeset.hpp"
#include "hwface/rootsystem.hpp"

namespace hwface {

// Classification of one coordinate lambda(h_i). The three kinds partition the
// scalars: Zero is 0, DominantIntegral is a positive integer, and
// NonIntegralNonzero is anything else (so it may be a negative integer).
// A known value is optional; the calculus mostly needs only the kind.
enum class CoordKind { Zero, DominantIntegral, NonIntegralNonzero };

struct CoordClass {
  CoordKind kind = CoordKind::Zero;
  std::optional<Rat> value;

  bool operator==(const CoordClass&) const = default;

  static CoordClass zero() { return {CoordKind::Zero, Rat(0)}; }
  static CoordClass dominantIntegral() { return {CoordKind::DominantIntegral, std::nullopt}; }
  static CoordClass nonIntegral() { return {CoordKind::NonIntegralNonzero, std::nullopt}; }
  static CoordClass ofValue(const Rat& v) {
    if (v == 0) return zero();
    if (isNonNegativeInteger(v)) return {CoordKind::DominantIntegral, v};
    return {CoordKind::NonIntegralNonzero, v};
  }
};

struct ModuleSpec {
  RootSystem system;
  std::vector<CoordClass> lambda;
  NodeSet integrable;          // J(V)
  bool polyhedralHull = false; // asserts conv wt V = conv wt M(lambda, J(V))
};

inline NodeSet jLambda(const ModuleSpec& s) {
  NodeSet out;
  for (int i = 0; i < s.system.rank(); ++i)
    if (s.lambda[i].kind != CoordKind::NonIntegralNonzero) out |= NodeSet::single(i);
  return out;
}

inline NodeSet supportLambda(const ModuleSpec& s) {
  NodeSet out;
  for (int i = 0; i < s.system.rank(); ++i)
    if (s.lambda[i].kind != CoordKind::Zero) out |= NodeSet::single(i);
  return out;
}

// {lambda}-perp within I: (lambda, alpha_i) = d_i lambda(h_i) = 0 iff kind Zero.
inline NodeSet lambdaPerp(const ModuleSpec& s) {
  return s.system.allNodes() - supportLambda(s);
}

inline std::optional<Weight> numericLambda(const ModuleSpec& s) {
  Weight w = Weight::zero(s.system.rank());
  for (int i = 0; i < s.system.rank(); ++i) {
    if (!s.lambda[i].value) return std::nullopt;
    w.c[i] = *s.lambda[i].value;
  }
  return w;
}

inline std::vector<std::string> validateDiagnostics(const ModuleSpec& s) {
  std::vector<std::string> out;
  int n = s.system.rank();
  if (int(s.lambda.size()) != n) {
    out.push_back("lambda has " + std::to_string(s.lambda.size()) + " coordinates, diagram has " +
                  std::to_string(n));
    return out;
  }
  for (int i = 0; i < n; ++i) {
    const CoordClass& cc = s.lambda[i];
    if (!cc.value) continue;
    const Rat& v = *cc.value;
    bool ok = true;
    switch (cc.kind) {
      case CoordKind::Zero: ok = v == 0; break;
      case CoordKind::DominantIntegral: ok = isInteger(v) && v > 0; break;
      case CoordKind::NonIntegralNonzero: ok = v != 0 && !isNonNegativeInteger(v); break;
    }
    if (!ok)
      out.push_back("node " + std::to_string(i + 1) + ": value " + toString(v) +
                    " does not match its declared class");
  }
  if (!s.integrable.subsetOf(s.system.allNodes()))
    out.push_back("integrable set mentions nodes outside the diagram");
  else {
    NodeSet bad = s.integrable - jLambda(s);
    for (int i : bad.indices())
      out.push_back("node " + std::to_string(i + 1) +
                    ": integrable but lambda(h_i) is not a nonnegative integer");
  }
  return out;
}

inline void validate(const ModuleSpec& s) {
  auto diags = validateDiagnostics(s);
  if (diags.empty()) return;
  std::string msg = "invalid module spec:";
  for (const auto& d : diags) msg += "\n  " + d;
  throw InputError(msg);
}

// DominantIntegral with value 0 is stored as Zero so that kind alone
// determines supp(lambda).
inline std::vector<CoordClass> normalizeClasses(std::vector<CoordClass> classes) {
  for (auto& cc : classes)
    if (cc.kind == CoordKind::DominantIntegral && cc.value && *cc.value == 0)
      cc = CoordClass::zero();
  return classes;
}

inline ModuleSpec makeSpec(RootSystem system, std::vector<CoordClass> lambda, NodeSet integrable,
                           bool polyhedralHull = false) {
  ModuleSpec s{std::move(system), normalizeClasses(std::move(lambda)), integrable, polyhedralHull};
  validate(s);
  return s;
}

inline ModuleSpec makeNumericSpec(RootSystem system, const Weight& lambda, NodeSet integrable,
                                  bool polyhedralHull = false) {
  std::vector<CoordClass> classes;
  classes.reserve(lambda.c.size());
  for (const Rat& v : lambda.c) classes.push_back(CoordClass::ofValue(v));
  return makeSpec(std::move(system), std::move(classes), integrable, polyhedralHull);
}

enum class PresetKind { Verma, Simple, ParabolicVerma, FiniteDimensional };

// Standard module families. All presets assert the polyhedral-hull property.
inline ModuleSpec preset(PresetKind kind, RootSystem system, std::vector<CoordClass> lambda,
                         NodeSet parabolicSet = NodeSet()) {
  ModuleSpec probe{system, normalizeClasses(lambda), NodeSet(), true};
  auto diags = validateDiagnostics(probe);
  if (!diags.empty()) validate(probe);
  NodeSet jl = jLambda(probe);
  NodeSet integrable;
  switch (kind) {
    case PresetKind::Verma:
      integrable = NodeSet();
      break;
    case PresetKind::Simple:
      integrable = jl;
      break;
    case PresetKind::ParabolicVerma:
      require(parabolicSet.subsetOf(jl),
              "parabolic Verma preset needs its set inside J_lambda");
      integrable = parabolicSet;
      break;
    case PresetKind::FiniteDimensional:
      require(jl == probe.system.allNodes(),
              "finite-dimensional preset needs a dominant integral weight");
      integrable = probe.system.allNodes();
      break;
  }
  return makeSpec(std::move(system), std::move(lambda), integrable, true);
}

inline ModuleSpec presetNumeric(PresetKind kind, RootSystem system, const Weight& lambda,
                                NodeSet parabolicSet = NodeSet()) {
  std::vector<CoordClass> classes;
  classes.reserve(lambda.c.size());
  for (const Rat& v : lambda.c) classes.push_back(CoordClass::ofValue(v));
  return preset(kind, std::move(system), std::move(classes), parabolicSet);
}

// lambda in P+ and every direction integrable.
inline bool isFiniteDimensionalShape(const ModuleSpec& s) {
  return s.integrable == s.system.allNodes() && jLambda(s) == s.system.allNodes();
}

// Adjoint module of a simple algebra: the finite-dimensional preset at the
// highest root.
inline bool isAdjointShape(const ModuleSpec& s) {
  if (s.system.components().size() != 1) return false;
  if (!isFiniteDimensionalShape(s)) return false;
  auto lam = numericLambda(s);
  return lam && *lam == s.system.highestRoot(s.system.allNodes());
}

}  // namespace hwface
