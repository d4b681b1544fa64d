#pragma once

// JSON documents for lattices, state-property systems and outcome models.

#include <qlogic/experiments.hpp>
#include <qlogic/state_property.hpp>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace qlogic {

using Json = nlohmann::ordered_json;

enum class DocumentKind { lattice, sps, outcome_model };

inline std::string_view to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::lattice: return "lattice";
    case DocumentKind::sps: return "sps";
    case DocumentKind::outcome_model: return "outcome_model";
  }
  return "unknown";
}

namespace detail {

inline void expect(bool ok, const std::string& path, const std::string& what) {
  if (!ok) throw Error(ErrorCode::parse_error, path + ": " + what);
}

inline const Json& member(const Json& obj, const char* key, const std::string& path) {
  expect(obj.is_object(), path, "expected an object");
  auto it = obj.find(key);
  expect(it != obj.end(), path, std::string("missing \"") + key + "\"");
  return *it;
}

inline std::vector<std::string> string_list(const Json& arr, const std::string& path) {
  expect(arr.is_array(), path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    expect(arr[i].is_string(), path + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(arr[i].get<std::string>());
  }
  return out;
}

inline std::size_t index_value(const Json& v, std::size_t bound, const std::string& path) {
  expect(v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0), path,
         "expected a non-negative integer");
  const auto i = v.get<std::size_t>();
  expect(i < bound, path, "index " + std::to_string(i) + " out of range");
  return i;
}

inline std::vector<IndexPair> index_pairs(const Json& arr, std::size_t bound, const std::string& path) {
  expect(arr.is_array(), path, "expected an array of index pairs");
  std::vector<IndexPair> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto p = path + "[" + std::to_string(i) + "]";
    expect(arr[i].is_array() && arr[i].size() == 2, p, "expected a pair [i, j]");
    out.emplace_back(index_value(arr[i][0], bound, p + "[0]"), index_value(arr[i][1], bound, p + "[1]"));
  }
  return out;
}

}  // namespace detail

struct LatticeDocument {
  FiniteLattice lattice;
  std::optional<Orthocomplementation> ortho;
};

/// {"names": [...], "cover_pairs" | "leq_pairs": [[i, j], ...], "ortho": [...]}
inline LatticeDocument lattice_from_json(const Json& j, const std::string& path = "$") {
  using namespace detail;
  auto names = string_list(member(j, "names", path), path + ".names");
  expect(!names.empty(), path + ".names", "a lattice needs at least one element");
  const bool covers = j.contains("cover_pairs");
  const bool leqs = j.contains("leq_pairs");
  expect(covers != leqs, path, "exactly one of \"cover_pairs\" and \"leq_pairs\" is required");
  const char* key = covers ? "cover_pairs" : "leq_pairs";
  const auto pairs = index_pairs(j.at(key), names.size(), path + "." + key);
  std::optional<Orthocomplementation> ortho;
  if (j.contains("ortho")) {
    const auto& o = j.at("ortho");
    expect(o.is_array() && o.size() == names.size(), path + ".ortho", "expected one image per element");
    Orthocomplementation map;
    for (std::size_t i = 0; i < o.size(); ++i) {
      map.map.push_back(index_value(o[i], names.size(), path + ".ortho[" + std::to_string(i) + "]"));
    }
    ortho = std::move(map);
  }
  return {build_lattice(std::move(names), pairs), std::move(ortho)};
}

inline Json to_json(const FiniteLattice& lat, const std::optional<Orthocomplementation>& ortho = std::nullopt) {
  Json j;
  j["names"] = lat.names();
  Json covers = Json::array();
  for (auto [a, b] : lat.cover_pairs()) covers.push_back({a, b});
  j["cover_pairs"] = std::move(covers);
  if (ortho) j["ortho"] = ortho->map;
  return j;
}

/// {"lattice": <lattice with "ortho">, "states": [...], "kappa": [[state indices] per property]}
inline StatePropertySystem sps_from_json(const Json& j, const std::string& path = "$") {
  using namespace detail;
  auto doc = lattice_from_json(member(j, "lattice", path), path + ".lattice");
  expect(doc.ortho.has_value(), path + ".lattice", "a state-property system needs \"ortho\"");
  auto states = string_list(member(j, "states", path), path + ".states");
  const auto& k = member(j, "kappa", path);
  expect(k.is_array() && k.size() == doc.lattice.size(), path + ".kappa", "expected one state list per property");
  std::vector<StateSet> kappa;
  for (std::size_t a = 0; a < k.size(); ++a) {
    const auto p = path + ".kappa[" + std::to_string(a) + "]";
    expect(k[a].is_array(), p, "expected an array of state indices");
    StateSet set(states.size());
    for (std::size_t i = 0; i < k[a].size(); ++i) {
      set.set(index_value(k[a][i], states.size(), p + "[" + std::to_string(i) + "]"));
    }
    kappa.push_back(std::move(set));
  }
  return StatePropertySystem::make(std::move(states), std::move(doc.lattice), std::move(*doc.ortho),
                                   std::move(kappa));
}

inline Json to_json(const StatePropertySystem& sps) {
  Json j;
  j["lattice"] = to_json(sps.lattice(), sps.ortho());
  j["states"] = sps.states();
  Json kappa = Json::array();
  for (const auto& k : sps.kappa_table()) kappa.push_back(bits_of(k));
  j["kappa"] = std::move(kappa);
  return j;
}

struct OutcomeDocument {
  OutcomeModel model;
  std::vector<JointExperiment> joints;
};

inline OutcomeDocument outcome_from_json(const Json& j, const std::string& path = "$") {
  using namespace detail;
  OutcomeDocument doc;
  doc.model.states = string_list(member(j, "states", path), path + ".states");
  const auto& exps = member(j, "experiments", path);
  expect(exps.is_array(), path + ".experiments", "expected an array");
  for (std::size_t i = 0; i < exps.size(); ++i) {
    const auto p = path + ".experiments[" + std::to_string(i) + "]";
    const auto& id = member(exps[i], "id", p);
    expect(id.is_string(), p + ".id", "expected a string");
    doc.model.experiments.push_back({id.get<std::string>(), string_list(member(exps[i], "outcomes", p), p + ".outcomes")});
  }
  const auto& possible = member(j, "possible", path);
  expect(possible.is_object(), path + ".possible", "expected an object");
  for (const auto& [exp, row] : possible.items()) {
    const auto p = path + ".possible." + exp;
    expect(row.is_object(), p, "expected an object keyed by state");
    for (const auto& [state, outcomes] : row.items()) {
      auto list = string_list(outcomes, p + "." + state);
      doc.model.possible[exp][state] = {list.begin(), list.end()};
    }
  }
  if (j.contains("joints")) {
    const auto& joints = j.at("joints");
    expect(joints.is_array(), path + ".joints", "expected an array");
    for (std::size_t i = 0; i < joints.size(); ++i) {
      const auto p = path + ".joints[" + std::to_string(i) + "]";
      JointExperiment joint;
      const auto& left = member(joints[i], "left", p);
      const auto& right = member(joints[i], "right", p);
      expect(left.is_string() && right.is_string(), p, "\"left\" and \"right\" must be strings");
      joint.left = left.get<std::string>();
      joint.right = right.get<std::string>();
      const auto& pj = member(joints[i], "possible_joint", p);
      expect(pj.is_object(), p + ".possible_joint", "expected an object keyed by state");
      for (const auto& [state, pairs] : pj.items()) {
        const auto q = p + ".possible_joint." + state;
        expect(pairs.is_array(), q, "expected an array of outcome pairs");
        auto& cell = joint.possible_joint[state];
        for (std::size_t k = 0; k < pairs.size(); ++k) {
          const auto r = q + "[" + std::to_string(k) + "]";
          expect(pairs[k].is_array() && pairs[k].size() == 2 && pairs[k][0].is_string() && pairs[k][1].is_string(), r,
                 "expected a pair of outcome labels");
          cell.emplace(pairs[k][0].get<std::string>(), pairs[k][1].get<std::string>());
        }
      }
      doc.joints.push_back(std::move(joint));
    }
  }
  validate(doc.model);
  for (const auto& joint : doc.joints) validate(doc.model, joint);
  return doc;
}

inline Json to_json(const OutcomeDocument& doc) {
  Json j;
  j["states"] = doc.model.states;
  Json exps = Json::array();
  for (const auto& e : doc.model.experiments) exps.push_back({{"id", e.id}, {"outcomes", e.outcomes}});
  j["experiments"] = std::move(exps);
  Json possible = Json::object();
  for (const auto& e : doc.model.experiments) {
    Json row = Json::object();
    for (const auto& s : doc.model.states) row[s] = doc.model.possible.at(e.id).at(s);
    possible[e.id] = std::move(row);
  }
  j["possible"] = std::move(possible);
  Json joints = Json::array();
  for (const auto& joint : doc.joints) {
    Json pj = Json::object();
    for (const auto& s : doc.model.states) {
      Json pairs = Json::array();
      for (const auto& [a, b] : joint.possible_joint.at(s)) pairs.push_back({a, b});
      pj[s] = std::move(pairs);
    }
    joints.push_back({{"left", joint.left}, {"right", joint.right}, {"possible_joint", std::move(pj)}});
  }
  j["joints"] = std::move(joints);
  return j;
}

inline DocumentKind detect_kind(const Json& j) {
  detail::expect(j.is_object(), "$", "expected a JSON object");
  if (j.contains("kappa")) return DocumentKind::sps;
  if (j.contains("experiments")) return DocumentKind::outcome_model;
  if (j.contains("names")) return DocumentKind::lattice;
  throw Error(ErrorCode::parse_error, "$: not a lattice, state-property system or outcome model");
}

inline Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse_error, path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::parse_error, path.string() + ": " + e.what());
  }
}

}  // namespace qlogic
