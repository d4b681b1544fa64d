#pragma once

// Possibilistic outcome semantics for experiments on a compound entity.

#include <qlogic/error.hpp>

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qlogic {

using OutcomePair = std::pair<std::string, std::string>;

struct Experiment {
  std::string id;
  std::vector<std::string> outcomes;
};

/// possible[experiment id][state] = outcomes that can occur.
struct OutcomeModel {
  std::vector<std::string> states;
  std::vector<Experiment> experiments;
  std::map<std::string, std::map<std::string, std::set<std::string>>> possible;

  const Experiment* find(const std::string& id) const {
    auto it = std::find_if(experiments.begin(), experiments.end(), [&](const Experiment& e) { return e.id == id; });
    return it == experiments.end() ? nullptr : &*it;
  }
};

struct JointExperiment {
  std::string left;
  std::string right;
  std::map<std::string, std::set<OutcomePair>> possible_joint;
};

struct SeparationReport {
  std::string left;
  std::string right;
  bool separated = true;
  std::optional<std::string> state;  // first state where separation fails
  std::vector<OutcomePair> missing;  // in the product of marginals but not possible jointly
  std::vector<OutcomePair> extra;    // possible jointly but outside the product
};

inline void validate(const OutcomeModel& model) {
  const std::set<std::string> states(model.states.begin(), model.states.end());
  if (states.size() != model.states.size()) throw Error(ErrorCode::invalid_model, "duplicate state id");
  std::set<std::string> ids;
  for (const auto& e : model.experiments) {
    if (!ids.insert(e.id).second) throw Error(ErrorCode::invalid_model, "duplicate experiment id " + e.id);
    const std::set<std::string> labels(e.outcomes.begin(), e.outcomes.end());
    auto row = model.possible.find(e.id);
    if (row == model.possible.end()) throw Error(ErrorCode::invalid_model, "no possible outcomes for " + e.id);
    for (const auto& s : model.states) {
      auto cell = row->second.find(s);
      if (cell == row->second.end() || cell->second.empty()) {
        throw Error(ErrorCode::invalid_model, "experiment " + e.id + " has no possible outcome in state " + s);
      }
      for (const auto& o : cell->second) {
        if (!labels.contains(o)) throw Error(ErrorCode::invalid_model, "unknown outcome " + o + " for " + e.id);
      }
    }
    for (const auto& [s, _] : row->second) {
      if (!states.contains(s)) throw Error(ErrorCode::invalid_model, "unknown state " + s);
    }
  }
  for (const auto& [id, _] : model.possible) {
    if (!ids.contains(id)) throw Error(ErrorCode::unknown_experiment, "possible outcomes given for unknown " + id);
  }
}

inline void validate(const OutcomeModel& model, const JointExperiment& joint) {
  const auto* left = model.find(joint.left);
  const auto* right = model.find(joint.right);
  if (!left) throw Error(ErrorCode::unknown_experiment, joint.left);
  if (!right) throw Error(ErrorCode::unknown_experiment, joint.right);
  const std::set<std::string> lo(left->outcomes.begin(), left->outcomes.end());
  const std::set<std::string> ro(right->outcomes.begin(), right->outcomes.end());
  for (const auto& s : model.states) {
    auto cell = joint.possible_joint.find(s);
    if (cell == joint.possible_joint.end() || cell->second.empty()) {
      throw Error(ErrorCode::invalid_model,
                  "joint experiment " + joint.left + " x " + joint.right + " has no possible outcome in state " + s);
    }
    for (const auto& [a, b] : cell->second) {
      if (!lo.contains(a) || !ro.contains(b)) {
        throw Error(ErrorCode::invalid_model, "joint outcome (" + a + ", " + b + ") is not a pair of outcomes");
      }
    }
  }
}

/// Separated iff in every state the joint possible outcomes are exactly the
/// product of the individually possible outcomes.
inline SeparationReport is_separated(const OutcomeModel& model, const JointExperiment& joint) {
  validate(model, joint);
  SeparationReport report{joint.left, joint.right};
  for (const auto& s : model.states) {
    const auto& left = model.possible.at(joint.left).at(s);
    const auto& right = model.possible.at(joint.right).at(s);
    std::set<OutcomePair> product;
    for (const auto& a : left) {
      for (const auto& b : right) product.emplace(a, b);
    }
    const auto& actual = joint.possible_joint.at(s);
    std::vector<OutcomePair> missing, extra;
    std::set_difference(product.begin(), product.end(), actual.begin(), actual.end(), std::back_inserter(missing));
    std::set_difference(actual.begin(), actual.end(), product.begin(), product.end(), std::back_inserter(extra));
    if (!missing.empty() || !extra.empty()) {
      report.separated = false;
      report.state = s;
      report.missing = std::move(missing);
      report.extra = std::move(extra);
      return report;
    }
  }
  return report;
}

struct SeparationSummary {
  bool all_separated = true;
  std::vector<SeparationReport> reports;
};

/// The entities are separated iff every listed joint experiment is.
inline SeparationSummary all_pairs_separated(const OutcomeModel& model, const std::vector<JointExperiment>& joints) {
  SeparationSummary out;
  for (const auto& j : joints) {
    out.reports.push_back(is_separated(model, j));
    out.all_separated = out.all_separated && out.reports.back().separated;
  }
  return out;
}

/// The same joint experiment read with its factors swapped.
inline JointExperiment transposed(const JointExperiment& joint) {
  JointExperiment t{joint.right, joint.left, {}};
  for (const auto& [s, pairs] : joint.possible_joint) {
    for (const auto& [a, b] : pairs) t.possible_joint[s].emplace(b, a);
  }
  return t;
}

}  // namespace qlogic
