// Tabulates the boundary and closure operators on root-system subsets for the
// adjoint module of A3, together with the facet predicate.

#include <iostream>

#include "hwface/facecalc.hpp"

using namespace hwface;

int main() {
  RootSystem a3 = RootSystem::build("A3");
  ModuleSpec spec = presetNumeric(PresetKind::FiniteDimensional, a3,
                                  a3.highestRoot(a3.allNodes()));

  std::cout << "adjoint A3: J, boundary dJ, closure Jbar\n";
  for (std::uint64_t m = 0; m < 8; ++m) {
    NodeSet J(m);
    CmDictionary d = cmDictionary(spec, J);
    std::cout << "  " << J.str() << "  ->  " << d.boundary.str() << "  " << d.closure.str()
              << "\n";
  }

  std::cout << "\nfacet-defining nodes of conv wt:";
  for (int i = 0; i < a3.rank(); ++i)
    if (isFacet(spec, i)) std::cout << " " << i + 1;
  std::cout << "\n";
  return 0;
}
