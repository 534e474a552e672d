// Walks the weight polytope of the adjoint module of G2: face counts, the
// f-polynomial, and the minimal half-space description.

#include <iostream>

#include "hwface/facecalc.hpp"
#include "hwface/oracle.hpp"

using namespace hwface;

int main() {
  RootSystem g2 = RootSystem::build("G2");
  ModuleSpec spec = presetNumeric(PresetKind::FiniteDimensional, g2,
                                  g2.highestRoot(g2.allNodes()));

  std::cout << "adjoint G2, highest weight theta = omega_2\n\n";
  std::cout << "f(t) = " << fPolynomial(spec).str() << "\n\n";

  for (std::uint64_t m = 0; m < 4; ++m) {
    NodeSet J(m);
    FaceReport r = buildFaceReport(spec, J);
    std::cout << "J = " << J.str() << ": jmin " << r.jmin.str() << ", jmax " << r.jmax.str()
              << ", dim " << r.dimension << ", vertices " << r.vertices->str() << "\n";
  }

  std::cout << "\nminimal half-spaces:\n";
  for (const HalfSpace& h : halfspaceRepresentation(spec, true)) {
    std::cout << "  (mu, w omega_" << h.node + 1 << ") <= " << toString(*h.rhs) << ", normal (";
    for (std::size_t k = 0; k < h.normal.c.size(); ++k)
      std::cout << (k ? ", " : "") << toString(h.normal.c[k]);
    std::cout << ")\n";
  }

  auto top = oracle::integrableTop(spec);
  auto hull = oracle::hullFaceLattice(top.weights(spec.system));
  std::cout << "\nenumerated hull: dim " << hull.dim << ", f-vector (";
  for (std::size_t k = 0; k < hull.fVector.size(); ++k)
    std::cout << (k ? ", " : "") << hull.fVector[k];
  std::cout << ")\n";
  return 0;
}
