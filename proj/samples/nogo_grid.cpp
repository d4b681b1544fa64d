// Separated products over the factor grid {classical2, classical3, MO2, MO3}.

#include <qlogic/separated.hpp>
#include <qlogic/zoo.hpp>

#include <iomanip>
#include <iostream>

int main() {
  using namespace qlogic;
  const std::vector<std::pair<std::string, StatePropertySystem>> factors{
      {"classical2", zoo::classical(2)}, {"classical3", zoo::classical(3)},
      {"mo2", zoo::mo_sps(2)}, {"mo3", zoo::mo_sps(3)}};

  std::cout << std::left << std::setw(24) << "product" << std::setw(8) << "points" << std::setw(10) << "elements"
            << std::setw(10) << "covering" << "weak_modular\n";
  for (const auto& [n1, s1] : factors) {
    for (const auto& [n2, s2] : factors) {
      const auto r = verify_no_go(s1, s2);
      std::cout << std::setw(24) << n1 + " x " + n2 << std::setw(8) << r.product_points << std::setw(10)
                << r.product_elements << std::setw(10) << (r.covering.holds ? "holds" : "fails")
                << (r.weak_modularity.holds ? "holds" : "fails") << '\n';
    }
  }
}
