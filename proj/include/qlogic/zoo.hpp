#pragma once

// Bundled named models with the verdicts the checkers must reproduce.

#include <qlogic/decomposition.hpp>
#include <qlogic/json_io.hpp>
#include <qlogic/models.hpp>

#include <map>
#include <string>
#include <vector>

namespace qlogic {

struct ModelZooEntry {
  std::string id;
  DocumentKind kind;
  std::string description;
  Json payload;
  std::map<std::string, bool> expected;

  /// The file form: payload keys plus "id", "description" and "expected".
  Json document() const {
    Json j;
    j["id"] = id;
    j["description"] = description;
    j["expected"] = expected;
    for (const auto& [k, v] : payload.items()) j[k] = v;
    return j;
  }
};

namespace zoo {

inline StatePropertySystem relabeled(const StatePropertySystem& sps, const std::string& suffix) {
  auto labels = sps.states();
  for (auto& l : labels) l += suffix;
  return StatePropertySystem::make(std::move(labels), sps.lattice(), sps.ortho(), sps.kappa_table());
}

/// {0, 1} with a single state: the trivial nonclassical component.
inline StatePropertySystem trivial_system(const std::string& state) {
  const std::vector<IndexPair> covers{{0, 1}};
  auto lat = build_lattice({"0", "1"}, covers);
  StateSet none(1), all(1);
  all.set();
  return StatePropertySystem::make({state}, std::move(lat), Orthocomplementation{{1, 0}}, {none, all});
}

inline StatePropertySystem classical(std::size_t n) { return atom_state_system(models::power_set(n)); }
inline StatePropertySystem mo_sps(std::size_t n) { return atom_state_system(models::mo(n)); }

/// O6 with four states whose property states are a, b, b', a'. Valid as a
/// state-property system but b' and a' are not atoms.
inline StatePropertySystem o6_sps() {
  auto ol = models::o6();
  const auto& lat = ol.lattice;
  const std::vector<Element> s{1, 2, 4, 3};
  std::vector<std::string> labels;
  for (auto x : s) labels.push_back("s_" + lat.name(x));
  std::vector<StateSet> kappa(lat.size(), StateSet(s.size()));
  for (std::size_t a = 0; a < lat.size(); ++a) {
    for (std::size_t i = 0; i < s.size(); ++i) kappa[a][i] = lat.leq(s[i], a);
  }
  return StatePropertySystem::make(std::move(labels), lat, ol.ortho, std::move(kappa));
}

/// MO2 with an extra state p~ that has exactly the properties of p.
inline StatePropertySystem mo2_duplicate_state() {
  const auto base = mo_sps(2);
  auto labels = base.states();
  labels.push_back("p~");
  auto kappa = base.kappa_table();
  for (auto& k : kappa) {
    const bool with_p = k[0];
    k.push_back(with_p);
  }
  return StatePropertySystem::make(std::move(labels), base.lattice(), base.ortho(), std::move(kappa));
}

inline OutcomeDocument vessels() {
  OutcomeDocument d;
  d.model.states = {"connected"};
  d.model.experiments = {{"e1", {">10", "<=10"}}, {"e2", {">10", "<=10"}}};
  d.model.possible["e1"]["connected"] = {">10"};
  d.model.possible["e2"]["connected"] = {">10"};
  d.joints.push_back({"e1", "e2", {{"connected", {{">10", "<=10"}, {"<=10", ">10"}}}}});
  return d;
}

inline OutcomeDocument earthmoon() {
  OutcomeDocument d;
  d.model.states = {"s"};
  d.model.experiments = {{"earth_position", {"x1", "y1"}},
                         {"moon_velocity", {"x2", "y2"}},
                         {"moon_position", {"u2", "v2"}}};
  d.model.possible["earth_position"]["s"] = {"x1"};
  d.model.possible["moon_velocity"]["s"] = {"x2"};
  d.model.possible["moon_position"]["s"] = {"u2"};
  d.joints.push_back({"earth_position", "moon_velocity", {{"s", {{"x1", "x2"}}}}});
  d.joints.push_back({"earth_position", "moon_position", {{"s", {{"x1", "u2"}}}}});
  return d;
}

inline std::map<std::string, bool> lattice_verdicts(bool atomistic, bool covering, std::optional<bool> weak_modular) {
  std::map<std::string, bool> m{{"partial_order", true}, {"lattice_laws", true}, {"completeness", true},
                                {"atomistic", atomistic}, {"covering", covering}};
  if (weak_modular) {
    m["ortho"] = true;
    m["weak_modular"] = *weak_modular;
  }
  return m;
}

inline std::map<std::string, bool> sps_verdicts(bool all_classical) {
  auto m = lattice_verdicts(true, true, true);
  m["state_determination"] = true;
  m["atomisticity"] = true;
  m["all_classical"] = all_classical;
  return m;
}

}  // namespace zoo

inline std::vector<ModelZooEntry> model_zoo() {
  using namespace zoo;
  std::vector<ModelZooEntry> out;
  auto lattice = [&](std::string id, std::string desc, Json payload, std::map<std::string, bool> expected) {
    out.push_back({std::move(id), DocumentKind::lattice, std::move(desc), std::move(payload), std::move(expected)});
  };
  auto sps = [&](std::string id, std::string desc, const StatePropertySystem& s, std::map<std::string, bool> expected) {
    out.push_back({std::move(id), DocumentKind::sps, std::move(desc), to_json(s), std::move(expected)});
  };

  for (std::size_t n = 1; n <= 4; ++n) {
    const auto ps = models::power_set(n);
    lattice("powerset" + std::to_string(n), "power set of " + std::to_string(n) + (n == 1 ? " point" : " points"),
            to_json(ps.lattice, ps.ortho), lattice_verdicts(true, true, true));
  }
  lattice("chain3", "three-element chain", to_json(models::chain(3)), lattice_verdicts(false, true, std::nullopt));
  lattice("chain4", "four-element chain", to_json(models::chain(4)), lattice_verdicts(false, true, std::nullopt));
  {
    const auto o = models::o6();
    lattice("o6", "benzene ring O6", to_json(o.lattice, o.ortho), lattice_verdicts(false, false, false));
  }
  for (std::size_t n : {2, 3}) {
    const auto m = models::mo(n);
    lattice("mo" + std::to_string(n), "MO" + std::to_string(n), to_json(m.lattice, m.ortho),
            lattice_verdicts(true, true, true));
  }

  for (std::size_t n = 1; n <= 4; ++n) {
    sps("classical" + std::to_string(n), "classical entity with " + std::to_string(n) + (n == 1 ? " state" : " states"), classical(n),
        sps_verdicts(true));
  }
  sps("mo2_sps", "MO2 with its atoms as states", mo_sps(2), sps_verdicts(false));
  sps("mo3_sps", "MO3 with its atoms as states", mo_sps(3), sps_verdicts(false));
  {
    auto m = lattice_verdicts(false, false, false);
    m["state_determination"] = true;
    m["atomisticity"] = false;
    m["all_classical"] = false;
    sps("o6_sps", "O6 with four states, two of them not atoms", o6_sps(), m);
  }
  {
    auto m = sps_verdicts(false);
    m["state_determination"] = false;
    sps("mo2_duplicate_state", "MO2 with two states sharing every property", mo2_duplicate_state(), m);
  }
  sps("mo2_plus_bit", "MO2 joined with a classical bit",
      direct_union({mo_sps(2), trivial_system("b0"), trivial_system("b1")}), sps_verdicts(false));
  sps("mo2_plus_mo2", "two MO2 sectors", direct_union({relabeled(mo_sps(2), "1"), relabeled(mo_sps(2), "2")}),
      sps_verdicts(false));
  sps("mo2_plus_mo3", "an MO2 sector and an MO3 sector",
      direct_union({relabeled(mo_sps(2), "1"), relabeled(mo_sps(3), "2")}), sps_verdicts(false));

  out.push_back({"vessels", DocumentKind::outcome_model, "two vessels of water joined by a tube",
                 to_json(vessels()), {{"separated", false}}});
  out.push_back({"earthmoon", DocumentKind::outcome_model, "earth and moon measured independently",
                 to_json(earthmoon()), {{"separated", true}}});
  return out;
}

}  // namespace qlogic
