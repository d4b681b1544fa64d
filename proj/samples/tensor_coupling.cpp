// Coupling conditions for C^3 (x) C^3, then for an order-reversing h1.

#include <qlogic/coupling.hpp>

#include <iostream>

int main() {
  using namespace qlogic;
  const TensorEmbedding h(3, 3);
  const CouplingSampling sampling{50, 20, 11, 3};

  const auto good = check_coupling_conditions(h, sampling);
  std::cout << "tensor embedding: " << good.passed() << "/" << good.conditions.size() << " conditions hold\n";

  const auto bad = check_coupling_conditions([&](const Subspace& a) { return ortho(h.left(a)); },
                                             [&](const Subspace& b) { return h.right(b); }, 3, 3, sampling);
  for (const auto& c : bad.conditions) {
    std::cout << (c.holds ? "  holds  " : "  fails  ") << c.id;
    if (!c.holds) std::cout << "  (" << c.counterexample << ")";
    std::cout << '\n';
  }
}
