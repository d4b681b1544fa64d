#include <qlogic/decomposition.hpp>
#include <qlogic/zoo.hpp>

#include <gtest/gtest.h>

using namespace qlogic;

namespace {

std::vector<std::string> names_of(const FiniteLattice& lat, const std::vector<Element>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(lat.name(x));
  return out;
}

std::vector<StatePropertySystem> decomposable() {
  return {zoo::classical(1), zoo::classical(2), zoo::classical(3), zoo::classical(4), zoo::mo_sps(2),
          zoo::mo_sps(3),
          direct_union({zoo::mo_sps(2), zoo::trivial_system("b0"), zoo::trivial_system("b1")}),
          direct_union({zoo::relabeled(zoo::mo_sps(2), "1"), zoo::relabeled(zoo::mo_sps(2), "2")}),
          direct_union({zoo::relabeled(zoo::mo_sps(2), "1"), zoo::relabeled(zoo::mo_sps(3), "2")})};
}

}  // namespace

TEST(ClassicalPart, MoTwoHasOnlyTheBounds) {
  const auto sps = zoo::mo_sps(2);
  const auto cp = classical_part(sps);
  EXPECT_EQ(names_of(sps.lattice(), cp.classical_properties), (std::vector<std::string>{"0", "1"}));
  EXPECT_EQ(names_of(sps.lattice(), cp.classical_states), std::vector<std::string>{"1"});
}

TEST(ClassicalPart, PowerSetIsEntirelyClassical) {
  const auto sps = zoo::classical(3);
  const auto cp = classical_part(sps);
  EXPECT_EQ(cp.classical_properties.size(), 8u);
  EXPECT_EQ(cp.classical_states.size(), 3u);
  EXPECT_TRUE(is_classical_system(sps));
}

TEST(ClassicalPart, TwoMoTwoSectorsGiveABit) {
  const auto sps = direct_union({zoo::relabeled(zoo::mo_sps(2), "1"), zoo::relabeled(zoo::mo_sps(2), "2")});
  const auto cp = classical_part(sps);
  EXPECT_EQ(cp.classical_properties.size(), 4u);
  EXPECT_EQ(cp.classical_states.size(), 2u);
}

TEST(ClassicalPart, RequiresAxioms) {
  EXPECT_THROW(classical_part(zoo::o6_sps()), Error);
  EXPECT_THROW(classical_part(zoo::mo2_duplicate_state()), Error);
}

TEST(NonclassicalComponents, Examples) {
  const auto mo2 = zoo::mo_sps(2);
  const auto one = nonclassical_components(mo2);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].elements.size(), mo2.lattice().size());
  EXPECT_EQ(one[0].system.states(), mo2.states());

  const auto cl = nonclassical_components(zoo::classical(3));
  ASSERT_EQ(cl.size(), 3u);
  for (const auto& c : cl) {
    EXPECT_EQ(c.elements.size(), 2u);
    EXPECT_EQ(c.system.state_count(), 1u);
  }

  const auto mixed = nonclassical_components(
      direct_union({zoo::relabeled(zoo::mo_sps(2), "1"), zoo::relabeled(zoo::mo_sps(3), "2")}));
  ASSERT_EQ(mixed.size(), 2u);
  std::vector<std::size_t> sizes{mixed[0].elements.size(), mixed[1].elements.size()};
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{6, 8}));
  for (const auto& c : mixed) EXPECT_FALSE(is_classical_system(c.system));
}

TEST(DirectUnion, SingleComponentIsItself) {
  const auto mo3 = zoo::mo_sps(3);
  const DirectUnion u({mo3});
  SpsIsomorphism iso;
  for (Element a = 0; a < mo3.lattice().size(); ++a) iso.property_map.push_back(a);
  for (std::size_t p = 0; p < mo3.state_count(); ++p) iso.state_map.push_back(p);
  EXPECT_FALSE(isomorphism_defect(mo3, u.system(), iso).has_value());
}

TEST(DirectUnion, TwoTrivialComponentsGiveTheClassicalBit) {
  const auto bit = direct_union({zoo::trivial_system("x"), zoo::trivial_system("y")});
  const auto& lat = bit.lattice();
  ASSERT_EQ(lat.size(), 4u);
  EXPECT_EQ(lat.atoms().size(), 2u);
  EXPECT_EQ(lat.name(lat.bottom()), "(0,0)");
  EXPECT_EQ(lat.name(lat.top()), "(1,1)");
  EXPECT_TRUE(is_classical_system(bit));
  EXPECT_EQ(bit.ortho()(1), 2u);  // (0,1)' = (1,0)
}

TEST(DirectUnion, TwoMoTwoSectors) {
  const auto u = direct_union({zoo::relabeled(zoo::mo_sps(2), "1"), zoo::relabeled(zoo::mo_sps(2), "2")});
  const auto& lat = u.lattice();
  EXPECT_EQ(lat.size(), 36u);
  EXPECT_EQ(lat.atoms().size(), 8u);
  EXPECT_TRUE(check_atomistic(lat).holds);
  EXPECT_TRUE(check_covering_law(lat).holds);
  EXPECT_TRUE(check_weak_modularity(lat, u.ortho()).holds);
  EXPECT_TRUE(satisfies_axioms_1_to_3(u));
}

TEST(DirectUnion, OrderIsComponentwiseAndAtomsSitInOneComponent) {
  const DirectUnion u({zoo::mo_sps(2), zoo::trivial_system("b")});
  const auto& lat = u.system().lattice();
  for (Element x = 0; x < lat.size(); ++x) {
    const auto tx = u.decode(x);
    for (Element y = 0; y < lat.size(); ++y) {
      const auto ty = u.decode(y);
      const bool componentwise = u.components()[0].lattice().leq(tx[0], ty[0]) &&
                                 u.components()[1].lattice().leq(tx[1], ty[1]);
      EXPECT_EQ(lat.leq(x, y), componentwise);
    }
    if (lat.is_atom(x)) EXPECT_EQ((tx[0] != 0) + (tx[1] != 0), 1);
  }
}

TEST(DirectUnion, RejectsComponentsFailingTheAxioms) {
  try {
    DirectUnion u({zoo::mo_sps(2), zoo::o6_sps()});
    FAIL() << "O6 component accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::component_invalid);
  }
}

TEST(Representation, PowerSetSplitsIntoTrivialComponents) {
  const auto w = verify_representation_part1(zoo::classical(3));
  EXPECT_EQ(w.components.size(), 3u);
  EXPECT_EQ(w.rebuilt.system().lattice().size(), 8u);
}

TEST(Representation, MoThreeIsASingleComponent) {
  const auto sps = zoo::mo_sps(3);
  const auto w = verify_representation_part1(sps);
  ASSERT_EQ(w.components.size(), 1u);
  for (Element a = 0; a < sps.lattice().size(); ++a) EXPECT_EQ(w.isomorphism.property_map[a], a);
}

TEST(Representation, BitPlusMoTwoRecoversThreeComponents) {
  const auto w =
      verify_representation_part1(direct_union({zoo::mo_sps(2), zoo::trivial_system("b0"), zoo::trivial_system("b1")}));
  ASSERT_EQ(w.components.size(), 3u);
  std::vector<std::size_t> sizes;
  for (const auto& c : w.components) sizes.push_back(c.elements.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 2, 6}));
}

TEST(Representation, RoundTripOnEveryDecomposableModel) {
  for (const auto& sps : decomposable()) {
    const auto w = verify_representation_part1(sps);
    EXPECT_FALSE(isomorphism_defect(w.property_state_form, w.rebuilt.system(), w.isomorphism).has_value());
    bool all_cov = true, all_wm = true;
    for (std::size_t c = 0; c < w.components.size(); ++c) {
      all_cov = all_cov && w.component_covering[c];
      all_wm = all_wm && w.component_weak_modular[c];
    }
    EXPECT_EQ(w.covering, all_cov);
    EXPECT_EQ(w.weak_modular, all_wm);
  }
}

TEST(Invariants, ClassicalityIsClosedUnderOrthocomplement) {
  for (const auto& sps : decomposable()) {
    for (Element a = 0; a < sps.lattice().size(); ++a) {
      EXPECT_EQ(is_classical_property(sps, a), is_classical_property(sps, sps.ortho()(a)));
    }
  }
}

TEST(Invariants, ClassicalStatesPartitionTheStates) {
  for (const auto& sps : decomposable()) {
    const auto cp = classical_part(sps);
    StateSet seen(sps.state_count());
    for (auto w : cp.classical_states) {
      EXPECT_FALSE(seen.intersects(sps.kappa(w)));
      seen |= sps.kappa(w);
    }
    EXPECT_TRUE(seen.all());
  }
}
