#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "hwface/errors.hpp"
#include "hwface/facecalc.hpp"
#include "hwface/oracle.hpp"

namespace hwface {

// Oracle's answer to one predicate about enumerated weight sets. Truncated
// routes can refute with a witness but never confirm.
enum class OracleVerdict { ExactYes, ExactNo, WitnessedNo, ConsistentAtDepth };

struct PairCheck {
  NodeSet J, Jp;
  bool formulaEqual = false;
  bool formulaIncludes = false;  // wt_J inside wt_Jp
  OracleVerdict equalVerdict = OracleVerdict::ConsistentAtDepth;
  OracleVerdict includesVerdict = OracleVerdict::ConsistentAtDepth;
  // offsets lambda - wt witnessing set differences, when found
  std::optional<std::vector<int>> inJNotJp, inJpNotJ;
  bool equalDisagrees = false;
  bool includesDisagrees = false;
  bool equalUnresolved = false;
  bool includesUnresolved = false;
};

struct CrossValidateReport {
  int depth = 0;
  bool truncated = false;  // the module has infinite directions
  std::size_t pairs = 0;
  std::size_t disagreements = 0;
  std::size_t unresolved = 0;
  std::vector<PairCheck> checks;
};

namespace detail {

inline std::optional<std::vector<int>> firstInANotB(const std::vector<std::vector<int>>& a,
                                                    const std::vector<std::vector<int>>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size()) {
    if (j == b.size() || a[i] < b[j]) return a[i];
    if (b[j] < a[i]) { ++j; continue; }
    ++i; ++j;
  }
  return std::nullopt;
}

// formula claim vs oracle verdict; updates the tallies on the check
inline void scoreVerdict(bool claim, OracleVerdict v, bool& disagrees, bool& unresolved) {
  switch (v) {
    case OracleVerdict::ExactYes: disagrees = !claim; break;
    case OracleVerdict::ExactNo:
    case OracleVerdict::WitnessedNo: disagrees = claim; break;
    case OracleVerdict::ConsistentAtDepth: unresolved = !claim; break;
  }
}

}  // namespace detail

// Sweep every pair (J, J') and compare facesEqual / faceIncludes against the
// enumerated weight sets: exact sets when both faces are finite, sets
// truncated at the given height otherwise (0 picks the default depth).
inline CrossValidateReport crossValidate(const ModuleSpec& spec, int depth = 0,
                                         std::size_t cap = 0) {
  requireHullFlag(spec, "crossValidate");
  require(numericLambda(spec).has_value(), "crossValidate needs a numeric lambda");
  const RootSystem& rs = spec.system;
  int n = rs.rank();
  if (n > 10) throw ResourceError("crossValidate: rank exceeds the pair sweep cap");

  CrossValidateReport rep;
  rep.depth = depth > 0 ? depth : oracle::defaultDepth(spec);
  oracle::WeightSet top = oracle::integrableTop(spec);
  oracle::WeightSet full = oracle::moduleWeightsTruncated(spec, rep.depth, cap);
  rep.truncated = full.truncatedAt.has_value();

  std::uint64_t count = std::uint64_t(1) << n;
  std::vector<std::vector<std::vector<int>>> exact(count), trunc(count);
  std::vector<bool> finite(count);
  for (std::uint64_t m = 0; m < count; ++m) {
    NodeSet J(m);
    finite[m] = J.subsetOf(spec.integrable);
    if (finite[m]) exact[m] = oracle::finiteParabolicSubset(spec, top, J).offsets;
    trunc[m] = oracle::standardParabolicSubset(rs, full, J).offsets;
  }

  for (std::uint64_t mj = 0; mj < count; ++mj) {
    for (std::uint64_t mp = 0; mp < count; ++mp) {
      PairCheck c;
      c.J = NodeSet(mj);
      c.Jp = NodeSet(mp);
      c.formulaEqual = facesEqual(spec, c.J, c.Jp);
      c.formulaIncludes = faceIncludes(spec, c.J, c.Jp);

      bool bothFinite = finite[mj] && finite[mp];
      const auto& a = bothFinite ? exact[mj] : trunc[mj];
      const auto& b = bothFinite ? exact[mp] : trunc[mp];
      c.inJNotJp = detail::firstInANotB(a, b);
      c.inJpNotJ = detail::firstInANotB(b, a);

      bool sameSets = !c.inJNotJp && !c.inJpNotJ;
      if (bothFinite)
        c.equalVerdict = sameSets ? OracleVerdict::ExactYes : OracleVerdict::ExactNo;
      else
        c.equalVerdict = sameSets ? OracleVerdict::ConsistentAtDepth : OracleVerdict::WitnessedNo;

      bool contained = !c.inJNotJp;
      if (bothFinite)
        c.includesVerdict = contained ? OracleVerdict::ExactYes : OracleVerdict::ExactNo;
      else
        c.includesVerdict =
            contained ? OracleVerdict::ConsistentAtDepth : OracleVerdict::WitnessedNo;

      detail::scoreVerdict(c.formulaEqual, c.equalVerdict, c.equalDisagrees, c.equalUnresolved);
      detail::scoreVerdict(c.formulaIncludes, c.includesVerdict, c.includesDisagrees,
                           c.includesUnresolved);
      rep.pairs += 1;
      rep.disagreements += int(c.equalDisagrees) + int(c.includesDisagrees);
      rep.unresolved += int(c.equalUnresolved) + int(c.includesUnresolved);
      rep.checks.push_back(std::move(c));
    }
  }
  return rep;
}

}  // namespace hwface
