#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hwface/crossvalidate.hpp"
#include "hwface/errors.hpp"
#include "hwface/facecalc.hpp"
#include "hwface/modulespec.hpp"

namespace hwface::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

// ---- input documents ----

inline NodeSet nodesFromJson(const json& arr, int rank, const char* what) {
  if (!arr.is_array()) throw InputError(std::string(what) + " must be an array of node indices");
  NodeSet out;
  for (const auto& e : arr) {
    if (!e.is_number_integer()) throw InputError(std::string(what) + " holds a non-integer node");
    long long v = e.get<long long>();
    if (v < 1 || v > rank)
      throw InputError(std::string(what) + ": node " + std::to_string(v) + " outside 1.." +
                       std::to_string(rank));
    out |= NodeSet::single(int(v - 1));
  }
  return out;
}

inline CoordClass coordClassFromJson(const json& e, int node) {
  std::string where = "lambda[" + std::to_string(node + 1) + "]";
  if (e.is_string()) return CoordClass::ofValue(parseRat(e.get<std::string>()));
  if (e.is_number_integer()) return CoordClass::ofValue(Rat(Int(e.get<long long>())));
  if (e.is_object()) {
    if (!e.contains("class") || !e["class"].is_string())
      throw InputError(where + ": missing class");
    std::string cls = e["class"].get<std::string>();
    CoordClass cc;
    if (cls == "zero") cc = CoordClass::zero();
    else if (cls == "posint") cc = CoordClass::dominantIntegral();
    else if (cls == "nonintegral") cc = CoordClass::nonIntegral();
    else throw InputError(where + ": unknown class '" + cls + "'");
    if (e.contains("value")) {
      if (!e["value"].is_string()) throw InputError(where + ": value must be a rational string");
      cc.value = parseRat(e["value"].get<std::string>());
    }
    return cc;
  }
  throw InputError(where + ": expected a rational string or a class object");
}

inline RootSystem algebraFromJson(const json& doc) {
  if (!doc.contains("algebra")) throw InputError("spec document: missing algebra");
  const json& a = doc["algebra"];
  if (a.is_string()) return RootSystem::build(a.get<std::string>());
  if (a.is_array()) {
    std::vector<std::vector<int>> m;
    for (const auto& row : a) {
      if (!row.is_array()) throw InputError("algebra: Cartan matrix rows must be arrays");
      std::vector<int> r;
      for (const auto& x : row) {
        if (!x.is_number_integer()) throw InputError("algebra: Cartan entries must be integers");
        r.push_back(x.get<int>());
      }
      m.push_back(std::move(r));
    }
    return RootSystem::fromCartan(std::move(m));
  }
  throw InputError("algebra must be a type string or a Cartan matrix");
}

inline ModuleSpec parseSpecDocument(const json& doc) {
  if (!doc.is_object()) throw InputError("spec document must be a JSON object");
  RootSystem rs = algebraFromJson(doc);
  int n = rs.rank();

  if (!doc.contains("lambda") || !doc["lambda"].is_array())
    throw InputError("spec document: lambda must be an array");
  std::vector<CoordClass> classes;
  int node = 0;
  for (const auto& e : doc["lambda"]) classes.push_back(coordClassFromJson(e, node++));

  if (!doc.contains("integrable")) throw InputError("spec document: missing integrable");
  const json& integ = doc["integrable"];
  ModuleSpec spec;
  if (integ.is_string()) {
    std::string name = integ.get<std::string>();
    PresetKind kind;
    if (name == "verma") kind = PresetKind::Verma;
    else if (name == "simple") kind = PresetKind::Simple;
    else if (name == "finite-dimensional") kind = PresetKind::FiniteDimensional;
    else throw InputError("integrable: unknown preset '" + name + "'");
    spec = preset(kind, std::move(rs), std::move(classes));
  } else {
    spec = makeSpec(std::move(rs), std::move(classes), nodesFromJson(integ, n, "integrable"));
  }
  if (doc.contains("polyhedralHull")) {
    if (!doc["polyhedralHull"].is_boolean()) throw InputError("polyhedralHull must be boolean");
    spec.polyhedralHull = doc["polyhedralHull"].get<bool>();
  }
  return spec;
}

inline ModuleSpec loadSpecFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open spec file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("spec file '" + path + "' is not valid JSON: " + e.what());
  }
  return parseSpecDocument(doc);
}

// "1,3" (1-based) -> NodeSet; empty string -> empty set
inline NodeSet parseSubset(const std::string& s, int rank) {
  NodeSet out;
  std::string tok;
  std::stringstream ss(s);
  while (std::getline(ss, tok, ',')) {
    std::size_t b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    std::size_t e = tok.find_last_not_of(" \t");
    tok = tok.substr(b, e - b + 1);
    int v;
    try {
      v = std::stoi(tok);
    } catch (const std::exception&) {
      throw InputError("bad subset token '" + tok + "'");
    }
    if (v < 1 || v > rank)
      throw InputError("subset node " + std::to_string(v) + " outside 1.." + std::to_string(rank));
    out |= NodeSet::single(v - 1);
  }
  return out;
}

// ---- report documents ----

inline json nodesJson(NodeSet s) {
  json a = json::array();
  for (int i : s.indices()) a.push_back(i + 1);
  return a;
}

inline json weightJson(const Weight& w) {
  json a = json::array();
  for (const Rat& x : w.c) a.push_back(toString(x));
  return a;
}

inline json offsetJson(const std::vector<int>& nu) {
  json a = json::array();
  for (int x : nu) a.push_back(x);
  return a;
}

inline const char* kindName(CoordKind k) {
  switch (k) {
    case CoordKind::Zero: return "zero";
    case CoordKind::DominantIntegral: return "posint";
    case CoordKind::NonIntegralNonzero: return "nonintegral";
  }
  throw InternalError("kindName: bad kind");
}

// Echo that re-parses to an identical ModuleSpec.
inline json specEcho(const ModuleSpec& spec) {
  json doc = json::object();
  const RootSystem& rs = spec.system;
  if (!rs.declaredTypes().empty()) {
    std::string t;
    for (const auto& ct : rs.declaredTypes()) {
      if (!t.empty()) t += "x";
      t += ct.str();
    }
    doc["algebra"] = t;
  } else {
    json m = json::array();
    for (const auto& row : rs.cartan()) {
      json r = json::array();
      for (int x : row) r.push_back(x);
      m.push_back(std::move(r));
    }
    doc["algebra"] = std::move(m);
  }
  json lam = json::array();
  for (const CoordClass& cc : spec.lambda) {
    json e = json::object();
    e["class"] = kindName(cc.kind);
    if (cc.value) e["value"] = toString(*cc.value);
    lam.push_back(std::move(e));
  }
  doc["lambda"] = std::move(lam);
  doc["integrable"] = nodesJson(spec.integrable);
  doc["polyhedralHull"] = spec.polyhedralHull;
  return doc;
}

inline json faceReportJson(const FaceReport& r) {
  json out = json::object();
  out["subset"] = nodesJson(r.J);
  json blocks = json::object();
  blocks["J1"] = nodesJson(r.blocks.J1);
  blocks["J2"] = nodesJson(r.blocks.J2);
  blocks["J3"] = nodesJson(r.blocks.J3);
  blocks["J4"] = nodesJson(r.blocks.J4);
  blocks["J5"] = nodesJson(r.blocks.J5);
  blocks["J6"] = nodesJson(r.blocks.J6);
  out["partition"] = std::move(blocks);
  out["jmin"] = nodesJson(r.jmin);
  out["jmax"] = nodesJson(r.jmax);
  out["fiberLo"] = nodesJson(r.fiberLo);
  out["fiberHi"] = nodesJson(r.fiberHi);
  out["dimension"] = r.dimension;
  out["affineHullBasis"] = nodesJson(r.affineHullBasis);
  json stab = json::object();
  stab["jmin"] = nodesJson(r.stabilizerPair.first);
  stab["pointwise"] = nodesJson(r.stabilizerPair.second);
  out["stabilizer"] = std::move(stab);
  out["vertexCount"] = r.vertices ? json(r.vertices->str()) : json(nullptr);
  out["isFiniteFace"] = r.isFiniteFace;
  out["coneSupport"] = nodesJson(r.barycenter.coneSupport);
  out["barycenter"] =
      r.barycenter.barycenter ? weightJson(*r.barycenter.barycenter) : json(nullptr);
  return out;
}

inline json fpolyJson(const FPolynomial& f) {
  json out = json::object();
  json coeffs = json::array();
  for (const Int& c : f.coeff) coeffs.push_back(c.str());
  out["coefficients"] = std::move(coeffs);
  out["display"] = f.str();
  return out;
}

inline json halfspacesJson(const std::vector<HalfSpace>& hs) {
  json arr = json::array();
  for (const HalfSpace& h : hs) {
    json e = json::object();
    e["node"] = h.node + 1;
    json w = json::array();
    for (int l : h.word.letters) w.push_back(l + 1);
    e["word"] = std::move(w);
    e["normal"] = weightJson(h.normal);
    e["rhs"] = h.rhs ? json(toString(*h.rhs)) : json(nullptr);
    arr.push_back(std::move(e));
  }
  return arr;
}

// One row per fiber of J -> wt_J, keyed by its minimal element; the
// multiplicities must tile the whole subset lattice.
inline json fiberSweepJson(const ModuleSpec& spec, int sweepCap = 20) {
  int n = spec.system.rank();
  if (n > sweepCap) throw ResourceError("fiber sweep: rank exceeds the subset sweep cap");
  std::map<std::pair<NodeSet, NodeSet>, std::uint64_t> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    auto [lo, hi] = fiberInterval(spec, NodeSet(mask));
    seen[{lo, hi}] += 1;
  }
  json arr = json::array();
  std::uint64_t covered = 0;
  for (const auto& [key, count] : seen) {
    std::uint64_t mult = std::uint64_t(1) << (key.second - key.first).size();
    check(mult == count, "fiber sweep: interval size disagrees with its member count");
    covered += mult;
    json e = json::object();
    e["lo"] = nodesJson(key.first);
    e["hi"] = nodesJson(key.second);
    e["multiplicity"] = mult;
    arr.push_back(std::move(e));
  }
  check(covered == (std::uint64_t(1) << n), "fiber sweep: fibers do not tile the subsets");
  return arr;
}

inline const char* verdictName(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::ExactYes: return "exact-yes";
    case OracleVerdict::ExactNo: return "exact-no";
    case OracleVerdict::WitnessedNo: return "witnessed-no";
    case OracleVerdict::ConsistentAtDepth: return "consistent-at-depth";
  }
  throw InternalError("verdictName: bad verdict");
}

inline json verifyJson(const CrossValidateReport& rep) {
  json out = json::object();
  out["depth"] = rep.depth;
  out["truncated"] = rep.truncated;
  out["pairs"] = rep.pairs;
  out["disagreements"] = rep.disagreements;
  out["unresolved"] = rep.unresolved;
  json checks = json::array();
  for (const PairCheck& c : rep.checks) {
    json e = json::object();
    e["J"] = nodesJson(c.J);
    e["Jp"] = nodesJson(c.Jp);
    e["formulaEqual"] = c.formulaEqual;
    e["formulaIncludes"] = c.formulaIncludes;
    e["equalVerdict"] = verdictName(c.equalVerdict);
    e["includesVerdict"] = verdictName(c.includesVerdict);
    e["witnessInJNotJp"] = c.inJNotJp ? offsetJson(*c.inJNotJp) : json(nullptr);
    e["witnessInJpNotJ"] = c.inJpNotJ ? offsetJson(*c.inJpNotJ) : json(nullptr);
    e["equalDisagrees"] = c.equalDisagrees;
    e["includesDisagrees"] = c.includesDisagrees;
    e["equalUnresolved"] = c.equalUnresolved;
    e["includesUnresolved"] = c.includesUnresolved;
    checks.push_back(std::move(e));
  }
  out["checks"] = std::move(checks);
  return out;
}

inline json reportDocument(const std::string& command, const ModuleSpec& spec, json results) {
  json out = json::object();
  out["tool"] = "hwface";
  out["toolVersion"] = kToolVersion;
  out["command"] = command;
  out["spec"] = specEcho(spec);
  out["results"] = std::move(results);
  return out;
}

}  // namespace hwface::cli
