// Splits MO2 + MO3 back into its sectors and rebuilds it.

#include <qlogic/zoo.hpp>

#include <iostream>

int main() {
  using namespace qlogic;
  const auto sps = direct_union({zoo::relabeled(zoo::mo_sps(2), "1"), zoo::relabeled(zoo::mo_sps(3), "2")});
  const auto w = verify_representation_part1(sps);
  const auto& lat = sps.lattice();

  std::cout << lat.size() << " properties, " << sps.state_count() << " states\n";
  std::cout << "classical properties:";
  for (auto a : w.classical.classical_properties) std::cout << ' ' << lat.name(a);
  std::cout << '\n';
  for (const auto& c : w.components) {
    std::cout << "component below " << lat.name(c.omega) << ": " << c.elements.size() << " properties, states";
    for (const auto& s : c.system.states()) std::cout << ' ' << s;
    std::cout << '\n';
  }
  std::cout << "rebuilt direct union has " << w.rebuilt.system().lattice().size() << " properties\n";
}
