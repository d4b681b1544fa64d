#include "oracle.hpp"

#include <qlogic/models.hpp>

#include <gtest/gtest.h>

using namespace qlogic;

namespace {

std::vector<OrthoLattice> ortho_models() {
  return {models::power_set(1), models::power_set(2), models::power_set(3), models::mo(2), models::mo(3),
          models::o6()};
}

Element named(const FiniteLattice& lat, const std::string& label) {
  auto e = lat.find(label);
  if (!e) throw std::runtime_error("no element " + label);
  return *e;
}

}  // namespace

TEST(BuildLattice, ThreeChain) {
  const auto lat = models::chain(3);
  ASSERT_EQ(lat.size(), 3u);
  EXPECT_EQ(lat.atoms(), std::vector<Element>{1});
  EXPECT_EQ(lat.meet(1, 2), 1u);
  EXPECT_EQ(lat.join(0, 1), 1u);
  EXPECT_EQ(lat.bottom(), 0u);
  EXPECT_EQ(lat.top(), 2u);
}

TEST(BuildLattice, PowerSetOfThree) {
  const auto ps = models::power_set(3);
  EXPECT_EQ(ps.lattice.size(), 8u);
  EXPECT_EQ(ps.lattice.atoms().size(), 3u);
}

TEST(BuildLattice, BowtieHasNoBounds) {
  // a, b below both c and d: no top and no bottom.
  const std::vector<IndexPair> leq{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  try {
    build_lattice({"a", "b", "c", "d"}, leq);
    FAIL() << "bowtie accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::no_bounds);
  }
}

TEST(BuildLattice, BoundedBowtieIsNotALattice) {
  const std::vector<IndexPair> leq{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
  try {
    build_lattice({"0", "a", "b", "c", "d", "1"}, leq);
    FAIL() << "bounded bowtie accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_a_lattice);
    EXPECT_EQ(e.witness().size(), 2u);
  }
}

TEST(BuildLattice, CycleIsNotAPartialOrder) {
  const std::vector<IndexPair> leq{{0, 1}, {1, 2}, {2, 1}, {2, 3}};
  try {
    build_lattice({"0", "a", "b", "1"}, leq);
    FAIL() << "cycle accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_a_partial_order);
    EXPECT_GE(e.witness().size(), 2u);
  }
}

TEST(MeetSet, Examples) {
  const auto ps = models::power_set(3);
  const auto& lat = ps.lattice;
  const std::vector<Element> s{named(lat, "{1,2}"), named(lat, "{2,3}")};
  EXPECT_EQ(lat.name(meet_set(lat, s)), "{2}");
  const auto mo2 = models::mo(2);
  const std::vector<Element> pq{named(mo2.lattice, "p"), named(mo2.lattice, "q")};
  EXPECT_EQ(join_set(mo2.lattice, pq), mo2.lattice.top());
  for (const auto& m : ortho_models()) {
    EXPECT_EQ(meet_set(m.lattice, std::vector<Element>{}), m.lattice.top());
    EXPECT_EQ(join_set(m.lattice, std::vector<Element>{}), m.lattice.bottom());
  }
}

TEST(MeetSet, AgreesWithBruteForceOnEverySubset) {
  std::vector<FiniteLattice> lats{models::chain(4), models::chain(5)};
  for (const auto& m : ortho_models()) lats.push_back(m.lattice);
  for (const auto& lat : lats) {
    ASSERT_LE(lat.size(), 12u);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << lat.size()); ++mask) {
      std::vector<Element> s;
      for (Element x = 0; x < lat.size(); ++x) {
        if (mask >> x & 1U) s.push_back(x);
      }
      EXPECT_EQ(meet_set(lat, s), oracle::glb(lat, s).value());
      EXPECT_EQ(join_set(lat, s), oracle::lub(lat, s).value());
    }
  }
}

TEST(StructuralLaws, HoldForEveryModel) {
  for (const auto& m : ortho_models()) {
    EXPECT_TRUE(check_partial_order(m.lattice).holds);
    EXPECT_TRUE(check_lattice_laws(m.lattice).holds);
  }
  EXPECT_TRUE(check_lattice_laws(models::chain(6)).holds);
}

TEST(Atomistic, Examples) {
  EXPECT_TRUE(check_atomistic(models::power_set(2).lattice).holds);
  const auto chain = models::chain(4);
  const auto r = check_atomistic(chain);
  ASSERT_FALSE(r.holds);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(chain.name(r.witnesses[0][0]), "b");
  EXPECT_TRUE(is_atomistic_violation(chain, r.witnesses[0][0]));
  EXPECT_TRUE(check_atomistic(models::mo(3).lattice).holds);
}

TEST(Orthocomplementation, Examples) {
  EXPECT_TRUE(check_orthocomplementation(models::power_set(3).lattice, models::power_set(3).ortho).holds);
  EXPECT_TRUE(check_orthocomplementation(models::mo(2).lattice, models::mo(2).ortho).holds);

  const auto ps = models::power_set(2);
  Orthocomplementation identity;
  for (Element a = 0; a < ps.lattice.size(); ++a) identity.map.push_back(a);
  const auto r = check_orthocomplementation(ps.lattice, identity);
  ASSERT_FALSE(r.holds);
  const auto a = r.witnesses[0][0];
  EXPECT_EQ(ps.lattice.name(a), "{1}");
  EXPECT_NE(ps.lattice.meet(a, identity(a)), ps.lattice.bottom());
}

TEST(Orthocomplementation, DeMorganOnAllPairs) {
  for (const auto& m : ortho_models()) {
    const auto& lat = m.lattice;
    for (Element a = 0; a < lat.size(); ++a) {
      for (Element b = 0; b < lat.size(); ++b) {
        EXPECT_EQ(m.ortho(lat.join(a, b)), lat.meet(m.ortho(a), m.ortho(b)));
        EXPECT_EQ(m.ortho(lat.meet(a, b)), lat.join(m.ortho(a), m.ortho(b)));
      }
    }
  }
}

TEST(Covering, Examples) {
  EXPECT_TRUE(check_covering_law(models::power_set(3).lattice).holds);
  EXPECT_TRUE(check_covering_law(models::mo(2).lattice).holds);
  EXPECT_TRUE(check_covering_law(models::mo(3).lattice).holds);

  const auto o6 = models::o6();
  const auto r = check_covering_law(o6.lattice);
  ASSERT_FALSE(r.holds);
  const auto& w = r.witnesses[0];
  ASSERT_EQ(w.size(), 3u);
  EXPECT_TRUE(is_covering_violation(o6.lattice, w[0], w[1], w[2]));
  EXPECT_EQ(o6.lattice.name(w[0]), "a");
  EXPECT_EQ(o6.lattice.name(w[1]), "b");
  EXPECT_EQ(o6.lattice.name(w[2]), "b'");
}

TEST(WeakModularity, Examples) {
  EXPECT_TRUE(check_weak_modularity(models::power_set(3).lattice, models::power_set(3).ortho).holds);
  EXPECT_TRUE(check_weak_modularity(models::mo(2).lattice, models::mo(2).ortho).holds);

  const auto o6 = models::o6();
  const auto r = check_weak_modularity(o6.lattice, o6.ortho);
  ASSERT_FALSE(r.holds);
  const auto& w = r.witnesses[0];
  EXPECT_EQ(o6.lattice.name(w[0]), "a");
  EXPECT_EQ(o6.lattice.name(w[1]), "b'");
  EXPECT_TRUE(is_weak_modularity_violation(o6.lattice, o6.ortho, w[0], w[1]));
}

TEST(Duality, CheckersAgreeOnTheOrderDual) {
  for (const auto& m : ortho_models()) {
    const auto dual = m.lattice.dual();
    ASSERT_TRUE(check_lattice_laws(dual).holds);
    ASSERT_TRUE(check_orthocomplementation(dual, m.ortho).holds);
    const auto wm = check_weak_modularity(m.lattice, m.ortho);
    const auto wm_dual = check_weak_modularity(dual, m.ortho);
    EXPECT_EQ(wm.holds, wm_dual.holds);
    EXPECT_EQ(check_covering_law(m.lattice).holds, check_covering_law(dual).holds);
    if (!wm.holds) {
      // (a, b) violates on L iff (a', b') violates on the dual.
      const auto a = wm.witnesses[0][0];
      const auto b = wm.witnesses[0][1];
      EXPECT_TRUE(is_weak_modularity_violation(dual, m.ortho, m.ortho(a), m.ortho(b)));
    }
  }
}

TEST(FiniteLattice, CoverPairsRebuildTheSameLattice) {
  for (const auto& m : ortho_models()) {
    const auto covers = m.lattice.cover_pairs();
    EXPECT_EQ(build_lattice(m.lattice.names(), covers), m.lattice);
  }
}
