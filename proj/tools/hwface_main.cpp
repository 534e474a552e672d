#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hwface/cli.hpp"

namespace {

using hwface::cli::json;

struct OutputMode {
  bool machine = false;  // --json
  bool pretty = false;   // --pretty
};

void addOutputFlags(CLI::App* cmd, OutputMode& mode) {
  auto* j = cmd->add_flag("--json", mode.machine, "compact JSON report");
  cmd->add_flag("--pretty", mode.pretty, "pretty-printed JSON report")->excludes(j);
}

void emit(const json& doc, const OutputMode& mode, const std::string& humanText) {
  if (mode.machine)
    std::cout << doc.dump() << "\n";
  else if (mode.pretty)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << humanText;
}

std::string setStr(hwface::NodeSet s) { return s.str(); }

std::string describeSpec(const hwface::ModuleSpec& spec) {
  std::string alg;
  for (const auto& ct : spec.system.declaredTypes()) {
    if (!alg.empty()) alg += "x";
    alg += ct.str();
  }
  if (alg.empty()) alg = "rank-" + std::to_string(spec.system.rank()) + " diagram";
  std::string lam;
  for (int i = 0; i < spec.system.rank(); ++i) {
    if (i) lam += ", ";
    const auto& cc = spec.lambda[i];
    lam += cc.value ? hwface::toString(*cc.value) : std::string(hwface::cli::kindName(cc.kind));
  }
  std::string out = alg + ", lambda = (" + lam + "), integrable " + setStr(spec.integrable);
  if (spec.polyhedralHull) out += ", hull asserted";
  return out + "\n";
}

int runAnalyze(const std::string& input, const std::string& subsetStr, bool haveSubset,
               const OutputMode& mode) {
  hwface::ModuleSpec spec = hwface::cli::loadSpecFile(input);
  hwface::NodeSet J = haveSubset ? hwface::cli::parseSubset(subsetStr, spec.system.rank())
                                 : spec.system.allNodes();
  hwface::FaceReport rep = hwface::buildFaceReport(spec, J);
  std::string text = describeSpec(spec);
  text += "subset " + setStr(rep.J) + ":\n";
  text += "  jmin " + setStr(rep.jmin) + "   jmax " + setStr(rep.jmax) + "\n";
  text += "  fiber [" + setStr(rep.fiberLo) + ", " + setStr(rep.fiberHi) + "]\n";
  text += "  dimension " + std::to_string(rep.dimension) + ", affine hull along " +
          setStr(rep.affineHullBasis) + "\n";
  text += "  stabilizer W_" + setStr(rep.stabilizerPair.first | rep.stabilizerPair.second) +
          " (pointwise factor " + setStr(rep.stabilizerPair.second) + ")\n";
  if (rep.vertices) text += "  vertices " + rep.vertices->str() + "\n";
  text += "  cone support " + setStr(rep.barycenter.coneSupport) + "\n";
  emit(hwface::cli::reportDocument("analyze", spec, hwface::cli::faceReportJson(rep)), mode, text);
  return 0;
}

int runFpoly(const std::string& input, const OutputMode& mode) {
  hwface::ModuleSpec spec = hwface::cli::loadSpecFile(input);
  hwface::FPolynomial f = hwface::fPolynomial(spec);
  std::string text = describeSpec(spec) + "f(t) = " + f.str() + "\n";
  emit(hwface::cli::reportDocument("fpoly", spec, hwface::cli::fpolyJson(f)), mode, text);
  return 0;
}

int runHalfspaces(const std::string& input, bool minimal, const OutputMode& mode) {
  hwface::ModuleSpec spec = hwface::cli::loadSpecFile(input);
  auto hs = hwface::halfspaceRepresentation(spec, minimal);
  std::string text = describeSpec(spec);
  text += (minimal ? "minimal half-space list (" : "half-space list (") +
          std::to_string(hs.size()) + " entries)\n";
  for (const auto& h : hs) {
    text += "  node " + std::to_string(h.node + 1) + ", word [";
    for (std::size_t k = 0; k < h.word.letters.size(); ++k) {
      if (k) text += " ";
      text += std::to_string(h.word.letters[k] + 1);
    }
    text += "], normal (";
    for (std::size_t k = 0; k < h.normal.c.size(); ++k) {
      if (k) text += ", ";
      text += hwface::toString(h.normal.c[k]);
    }
    text += ")";
    if (h.rhs) text += ", rhs " + hwface::toString(*h.rhs);
    text += "\n";
  }
  emit(hwface::cli::reportDocument(minimal ? "halfspaces --minimal" : "halfspaces", spec,
                                   hwface::cli::halfspacesJson(hs)),
       mode, text);
  return 0;
}

int runFibers(const std::string& input, const std::string& subsetStr, bool haveSubset, bool all,
              const OutputMode& mode) {
  hwface::ModuleSpec spec = hwface::cli::loadSpecFile(input);
  if (all == haveSubset)
    throw hwface::InputError("fibers: pass exactly one of --all or --subset");
  if (all) {
    json rows = hwface::cli::fiberSweepJson(spec);
    std::string text = describeSpec(spec);
    text += std::to_string(rows.size()) + " fibers\n";
    for (const auto& r : rows) {
      text += "  [" + r["lo"].dump() + ", " + r["hi"].dump() +
              "] x" + std::to_string(r["multiplicity"].get<std::uint64_t>()) + "\n";
    }
    emit(hwface::cli::reportDocument("fibers --all", spec, std::move(rows)), mode, text);
    return 0;
  }
  hwface::NodeSet J = hwface::cli::parseSubset(subsetStr, spec.system.rank());
  auto [lo, hi] = hwface::fiberInterval(spec, J);
  json res = json::object();
  res["lo"] = hwface::cli::nodesJson(lo);
  res["hi"] = hwface::cli::nodesJson(hi);
  std::string text = describeSpec(spec) + "fiber of " + setStr(J) + ": [" + setStr(lo) + ", " +
                     setStr(hi) + "]\n";
  emit(hwface::cli::reportDocument("fibers", spec, std::move(res)), mode, text);
  return 0;
}

int runVerify(const std::string& input, int depth, int maxRank, const OutputMode& mode) {
  hwface::ModuleSpec spec = hwface::cli::loadSpecFile(input);
  if (spec.system.rank() > maxRank)
    throw hwface::ResourceError("verify: rank " + std::to_string(spec.system.rank()) +
                                " exceeds --max-rank " + std::to_string(maxRank));
  hwface::CrossValidateReport rep = hwface::crossValidate(spec, depth);
  std::string text = describeSpec(spec);
  text += "depth " + std::to_string(rep.depth) + (rep.truncated ? " (truncated)" : " (exact)") +
          ", " + std::to_string(rep.pairs) + " pairs, " + std::to_string(rep.disagreements) +
          " disagreements, " + std::to_string(rep.unresolved) + " unresolved\n";
  emit(hwface::cli::reportDocument("verify", spec, hwface::cli::verifyJson(rep)), mode, text);
  return rep.disagreements == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"face calculus of highest weight modules over semisimple Lie algebras"};
  app.require_subcommand(1);

  std::string input, subset;
  int depth = 0, maxRank = 6;
  bool minimal = false, all = false;
  OutputMode mode;

  auto* an = app.add_subcommand("analyze", "extremal sets and face data for one subset");
  an->add_option("--input", input, "spec JSON file")->required();
  auto* anSubset = an->add_option("--subset", subset, "1-based nodes, e.g. \"1,3\"");
  addOutputFlags(an, mode);

  auto* fp = app.add_subcommand("fpoly", "f-polynomial of conv wt V");
  fp->add_option("--input", input, "spec JSON file")->required();
  addOutputFlags(fp, mode);

  auto* hsCmd = app.add_subcommand("halfspaces", "half-space representation of conv wt V");
  hsCmd->add_option("--input", input, "spec JSON file")->required();
  hsCmd->add_flag("--minimal", minimal, "facet-defining half-spaces only");
  addOutputFlags(hsCmd, mode);

  auto* fb = app.add_subcommand("fibers", "fibers of the face map J -> wt_J");
  fb->add_option("--input", input, "spec JSON file")->required();
  auto* fbSubset = fb->add_option("--subset", subset, "1-based nodes");
  fb->add_flag("--all", all, "enumerate every fiber");
  addOutputFlags(fb, mode);

  auto* vf = app.add_subcommand("verify", "cross-validate formulas against enumerated weights");
  vf->add_option("--input", input, "spec JSON file")->required();
  vf->add_option("--depth", depth, "truncation depth (0 = default)");
  vf->add_option("--max-rank", maxRank, "refuse diagrams above this rank");
  addOutputFlags(vf, mode);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (an->parsed()) return runAnalyze(input, subset, anSubset->count() > 0, mode);
    if (fp->parsed()) return runFpoly(input, mode);
    if (hsCmd->parsed()) return runHalfspaces(input, minimal, mode);
    if (fb->parsed()) return runFibers(input, subset, fbSubset->count() > 0, all, mode);
    if (vf->parsed()) return runVerify(input, depth, maxRank, mode);
  } catch (const hwface::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const hwface::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
