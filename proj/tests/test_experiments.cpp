#include <qlogic/experiments.hpp>
#include <qlogic/zoo.hpp>

#include <gtest/gtest.h>

using namespace qlogic;

TEST(Separation, Vessels) {
  const auto d = zoo::vessels();
  const auto r = is_separated(d.model, d.joints[0]);
  EXPECT_FALSE(r.separated);
  ASSERT_TRUE(r.state.has_value());
  EXPECT_EQ(*r.state, "connected");
  EXPECT_EQ(r.missing, (std::vector<OutcomePair>{{">10", ">10"}}));
  EXPECT_EQ(r.extra, (std::vector<OutcomePair>{{"<=10", ">10"}, {">10", "<=10"}}));
  EXPECT_FALSE(all_pairs_separated(d.model, d.joints).all_separated);
}

TEST(Separation, EarthMoon) {
  const auto d = zoo::earthmoon();
  const auto s = all_pairs_separated(d.model, d.joints);
  EXPECT_TRUE(s.all_separated);
  ASSERT_EQ(s.reports.size(), 2u);
  for (const auto& r : s.reports) {
    EXPECT_TRUE(r.separated);
    EXPECT_FALSE(r.state.has_value());
    EXPECT_TRUE(r.missing.empty() && r.extra.empty());
  }
}

TEST(Separation, ProductJointIsSeparated) {
  OutcomeModel m{{"s", "t"}, {{"a", {"0", "1", "2"}}, {"b", {"x", "y"}}}, {}};
  m.possible["a"]["s"] = {"0", "1"};
  m.possible["a"]["t"] = {"2"};
  m.possible["b"]["s"] = {"x"};
  m.possible["b"]["t"] = {"x", "y"};
  JointExperiment j{"a", "b", {}};
  for (const auto& s : m.states) {
    for (const auto& o1 : m.possible["a"][s]) {
      for (const auto& o2 : m.possible["b"][s]) j.possible_joint[s].emplace(o1, o2);
    }
  }
  EXPECT_TRUE(is_separated(m, j).separated);
}

TEST(Separation, FullProductInEveryStateIsSeparatedWhateverTheMarginals) {
  OutcomeModel m{{"s"}, {{"a", {"0", "1"}}, {"b", {"x", "y"}}}, {}};
  m.possible["a"]["s"] = {"0", "1"};
  m.possible["b"]["s"] = {"x", "y"};
  JointExperiment j{"a", "b", {{"s", {{"0", "x"}, {"0", "y"}, {"1", "x"}, {"1", "y"}}}}};
  EXPECT_TRUE(is_separated(m, j).separated);
}

TEST(Separation, EmptyJointListIsVacuouslySeparated) {
  const auto d = zoo::vessels();
  EXPECT_TRUE(all_pairs_separated(d.model, {}).all_separated);
}

TEST(Separation, SymmetricUnderSwappingFactors) {
  for (const auto& d : {zoo::vessels(), zoo::earthmoon()}) {
    for (const auto& j : d.joints) {
      const auto r = is_separated(d.model, j);
      const auto t = is_separated(d.model, transposed(j));
      EXPECT_EQ(r.separated, t.separated);
      EXPECT_EQ(r.missing.size(), t.missing.size());
      for (std::size_t i = 0; i < r.missing.size(); ++i) {
        EXPECT_TRUE(std::find(t.missing.begin(), t.missing.end(),
                              OutcomePair{r.missing[i].second, r.missing[i].first}) != t.missing.end());
      }
    }
  }
}

TEST(Separation, UnknownExperiment) {
  const auto d = zoo::vessels();
  JointExperiment j{"e1", "e9", {{"connected", {{">10", ">10"}}}}};
  try {
    is_separated(d.model, j);
    FAIL() << "unknown experiment accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unknown_experiment);
  }
}

TEST(Validate, EmptyPossibleSetIsInvalid) {
  auto d = zoo::vessels();
  d.model.possible["e1"]["connected"].clear();
  try {
    validate(d.model);
    FAIL() << "empty possible set accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_model);
  }
}
