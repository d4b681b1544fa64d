#include <qlogic/json_io.hpp>
#include <qlogic/report.hpp>
#include <qlogic/zoo.hpp>

#include <gtest/gtest.h>

#include <filesystem>

using namespace qlogic;

namespace {

ErrorCode error_of(auto&& f, std::string* message = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::invalid_argument;
}

RunReport run_entry(const ModelZooEntry& e) {
  const auto doc = e.document();
  return e.kind == DocumentKind::outcome_model ? run_separation(doc, e.id) : run_check(doc, e.id);
}

}  // namespace

TEST(JsonRoundTrip, Lattices) {
  for (const auto& ol : {models::power_set(3), models::mo(2), models::mo(3), models::o6()}) {
    const auto j = to_json(ol.lattice, ol.ortho);
    const auto back = lattice_from_json(j);
    EXPECT_EQ(to_json(back.lattice, back.ortho), j);
    ASSERT_TRUE(back.ortho.has_value());
    EXPECT_EQ(back.ortho->map, ol.ortho.map);
  }
}

TEST(JsonRoundTrip, LeqPairsGiveTheSameLattice) {
  const auto ps = models::power_set(2);
  Json j{{"names", ps.lattice.names()}, {"leq_pairs", Json::array()}};
  for (Element a = 0; a < ps.lattice.size(); ++a) {
    for (Element b = 0; b < ps.lattice.size(); ++b) {
      if (ps.lattice.leq(a, b)) j["leq_pairs"].push_back({a, b});
    }
  }
  EXPECT_EQ(to_json(lattice_from_json(j).lattice), to_json(ps.lattice));
}

TEST(JsonRoundTrip, StatePropertySystems) {
  for (const auto& sps : {zoo::classical(3), zoo::mo_sps(2), zoo::o6_sps(), zoo::mo2_duplicate_state()}) {
    const auto j = to_json(sps);
    const auto back = sps_from_json(j);
    EXPECT_EQ(to_json(back), j);
    EXPECT_EQ(back.states(), sps.states());
    for (Element a = 0; a < sps.lattice().size(); ++a) EXPECT_EQ(back.kappa(a), sps.kappa(a));
  }
}

TEST(JsonRoundTrip, OutcomeModels) {
  for (const auto& d : {zoo::vessels(), zoo::earthmoon()}) {
    const auto j = to_json(d);
    EXPECT_EQ(to_json(outcome_from_json(j)), j);
  }
}

TEST(JsonRoundTrip, ZooFilesMatchTheBuiltInZoo) {
  for (const auto& e : model_zoo()) {
    const auto path = std::filesystem::path(QLOGIC_ZOO_DIR) / (e.id + ".json");
    ASSERT_TRUE(std::filesystem::exists(path)) << path;
    EXPECT_EQ(read_json_file(path), e.document()) << e.id;
  }
}

TEST(ParseErrors, CarryThePath) {
  std::string msg;
  Json bad = to_json(zoo::mo_sps(2));
  bad["kappa"][3] = Json::array({0, 17});
  EXPECT_EQ(error_of([&] { sps_from_json(bad); }, &msg), ErrorCode::parse_error);
  EXPECT_NE(msg.find("$.kappa[3]"), std::string::npos) << msg;

  Json both{{"names", {"0", "1"}}, {"cover_pairs", {{0, 1}}}, {"leq_pairs", {{0, 1}}}};
  EXPECT_EQ(error_of([&] { lattice_from_json(both); }), ErrorCode::parse_error);

  Json no_names{{"cover_pairs", Json::array()}};
  EXPECT_EQ(error_of([&] { lattice_from_json(no_names); }, &msg), ErrorCode::parse_error);
  EXPECT_NE(msg.find("names"), std::string::npos) << msg;

  EXPECT_EQ(error_of([] { read_json_file("/nonexistent/x.json"); }), ErrorCode::parse_error);
  EXPECT_EQ(error_of([] { detect_kind(Json{{"foo", 1}}); }), ErrorCode::parse_error);
}

TEST(ParseErrors, StructuralFailuresKeepTheirCodes) {
  Json cycle{{"names", {"a", "b"}}, {"leq_pairs", {{0, 1}, {1, 0}}}};
  EXPECT_EQ(error_of([&] { lattice_from_json(cycle); }), ErrorCode::not_a_partial_order);
}

TEST(DetectKind, Examples) {
  EXPECT_EQ(detect_kind(to_json(models::mo(2).lattice)), DocumentKind::lattice);
  EXPECT_EQ(detect_kind(to_json(zoo::mo_sps(2))), DocumentKind::sps);
  EXPECT_EQ(detect_kind(to_json(zoo::vessels())), DocumentKind::outcome_model);
}

TEST(Zoo, EveryEntryMeetsItsExpectedVerdicts) {
  const auto zoo = model_zoo();
  EXPECT_EQ(zoo.size(), 22u);
  for (const auto& e : zoo) {
    const auto r = run_entry(e);
    EXPECT_TRUE(r.all_met()) << e.id << "\n" << r.to_text();
    for (const auto& [id, value] : e.expected) {
      EXPECT_EQ(r.at(id).holds, value) << e.id << " " << id;
    }
  }
}

TEST(Zoo, IdsAreUnique) {
  std::set<std::string> ids;
  for (const auto& e : model_zoo()) EXPECT_TRUE(ids.insert(e.id).second) << e.id;
}

TEST(Report, JsonIsDeterministicWithoutTiming) {
  for (const auto& e : model_zoo()) {
    auto a = run_entry(e);
    auto b = run_entry(e);
    a.wall_time_ms = 1;
    b.wall_time_ms = 2;
    EXPECT_EQ(a.to_json(false).dump(), b.to_json(false).dump()) << e.id;
    EXPECT_FALSE(a.to_json(false).contains("wall_time_ms"));
  }
  const CouplingSampling s{10, 5, 3, 3};
  EXPECT_EQ(run_coupling(3, 3, s, false).to_json(false), run_coupling(3, 3, s, false).to_json(false));
}

TEST(Report, JsonShape) {
  const auto j = run_check(to_json(zoo::mo_sps(2)), "mo2").to_json();
  for (const char* k : {"command", "inputs", "version", "seed", "checks", "data", "all_expected_met", "wall_time_ms"}) {
    EXPECT_TRUE(j.contains(k)) << k;
  }
  EXPECT_EQ(j["version"], std::string(tool_version));
  for (const auto& c : j["checks"]) {
    for (const char* k : {"id", "title", "holds", "expected", "met", "witness", "detail"}) EXPECT_TRUE(c.contains(k)) << k;
  }
}

TEST(Expectations, MismatchFlipsAllMet) {
  auto r = run_check(to_json(models::o6().lattice, models::o6().ortho), "o6");
  EXPECT_FALSE(r.all_met());  // defaults expect the laws to hold
  apply_expectations(r, {{"atomistic", false}, {"covering", false}, {"weak_modular", false}}, true);
  EXPECT_TRUE(r.all_met());
  apply_expectations(r, {{"ortho", false}}, true);
  EXPECT_FALSE(r.all_met());
  EXPECT_EQ(error_of([&] { apply_expectations(r, {{"nope", true}}, true); }), ErrorCode::invalid_argument);
  apply_expectations(r, {{"nope", true}}, false);
}

TEST(Expectations, InformationalChecksHaveNoDefault) {
  const auto r = run_check(to_json(zoo::mo_sps(2)), "mo2");
  EXPECT_FALSE(r.at("all_classical").expected.has_value());
  EXPECT_TRUE(r.at("all_classical").met());
}

TEST(Expectations, EmbeddedBlockMustBeBooleans) {
  Json doc = to_json(zoo::mo_sps(2));
  doc["expected"] = {{"covering", "yes"}};
  EXPECT_EQ(error_of([&] { embedded_expectations(doc); }), ErrorCode::parse_error);
}

TEST(Runners, SeparationWitnesses) {
  const auto r = run_separation(to_json(zoo::vessels()), "vessels");
  const auto& c = r.at("separated:e1,e2");
  EXPECT_FALSE(c.holds);
  EXPECT_EQ(c.witness, (std::vector<std::string>{"missing (>10,>10)", "extra (<=10,>10)", "extra (>10,<=10)"}));
  EXPECT_FALSE(r.at("separated").holds);
}

TEST(Runners, DecomposeAndSepprod) {
  const auto d = run_decompose(to_json(direct_union({zoo::mo_sps(2), zoo::trivial_system("b0"),
                                                          zoo::trivial_system("b1")})),
                               "x");
  EXPECT_EQ(d.data["component_count"], 3);
  EXPECT_TRUE(d.all_met());
  EXPECT_EQ(error_of([] { run_decompose(to_json(zoo::o6_sps()), "o6"); }), ErrorCode::axioms_not_satisfied);

  const auto mo2 = to_json(zoo::mo_sps(2));
  const auto s = run_sepprod(mo2, mo2, "a", "b", 64);
  EXPECT_FALSE(s.at("covering").holds);
  EXPECT_FALSE(s.at("weak_modular").holds);
  EXPECT_TRUE(s.at("dichotomy").holds);
  EXPECT_TRUE(s.all_met());
  EXPECT_EQ(s.data["superselected_pairs"], 32);
}

TEST(Runners, CouplingBrokenMap) {
  const auto r = run_coupling(3, 3, {30, 5, 7, 3}, true);
  EXPECT_FALSE(r.at("monotone_h1").holds);
  EXPECT_TRUE(r.all_met());
  EXPECT_FALSE(r.at("monotone_h1").witness.empty());
}
