#pragma once

#include <qlogic/lattice.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qlogic {

using StateSet = ElementSet;

/// A state-property system (states, property lattice with orthocomplement,
/// Cartan map). Immutable; `make` enforces the three Cartan conditions and
/// a valid orthocomplementation. Axioms 1 and 2 are reported, not enforced.
class StatePropertySystem {
 public:
  static StatePropertySystem make(std::vector<std::string> states, FiniteLattice lattice, Orthocomplementation ortho,
                                  std::vector<StateSet> kappa) {
    const auto n = lattice.size();
    const auto m = states.size();
    if (kappa.size() != n) throw Error(ErrorCode::invalid_argument, "kappa must list one state set per property");
    for (const auto& k : kappa) {
      if (k.size() != m) throw Error(ErrorCode::invalid_argument, "kappa state set has the wrong width");
    }
    if (auto r = check_orthocomplementation(lattice, ortho); !r.holds) {
      throw Error(ErrorCode::axioms_not_satisfied, "Axiom 3 fails: " + r.detail, r.witnesses.front());
    }
    if (kappa[lattice.bottom()].any()) {
      throw Error(ErrorCode::cartan_bounds_violation, "kappa(0) is not empty", {lattice.bottom()});
    }
    if (!kappa[lattice.top()].all()) {
      throw Error(ErrorCode::cartan_bounds_violation, "kappa(I) is not the whole state space", {lattice.top()});
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (kappa[lattice.meet(a, b)] != (kappa[a] & kappa[b])) {
          throw Error(ErrorCode::cartan_meet_violation,
                      "kappa(" + lattice.name(a) + " ^ " + lattice.name(b) + ") differs from the intersection", {a, b});
        }
      }
    }
    // Family of everything above a: its meet is a itself.
    for (std::size_t a = 0; a < n; ++a) {
      StateSet acc(m);
      acc.set();
      for_each_bit(lattice.up_set(a), [&](std::size_t x) { acc &= kappa[x]; });
      if (acc != kappa[a]) {
        throw Error(ErrorCode::cartan_meet_violation,
                    "kappa of the meet of the elements above " + lattice.name(a) + " differs from the intersection",
                    {a});
      }
    }
    {
      std::map<StateSet, Element> seen;
      for (std::size_t a = 0; a < n; ++a) {
        auto [it, inserted] = seen.emplace(kappa[a], a);
        if (!inserted) {
          throw Error(ErrorCode::kappa_not_injective,
                      lattice.name(it->second) + " and " + lattice.name(a) + " have the same states", {it->second, a});
        }
      }
    }

    StatePropertySystem sps(std::move(states), std::move(lattice), std::move(ortho), std::move(kappa));
    sps.property_states_.resize(m);
    for (std::size_t p = 0; p < m; ++p) {
      Element acc = sps.lattice_.top();
      for (std::size_t a = 0; a < n; ++a) {
        if (sps.kappa_[a][p]) acc = sps.lattice_.meet(acc, a);
      }
      sps.property_states_[p] = acc;
    }
    return sps;
  }

  std::size_t state_count() const noexcept { return states_.size(); }
  const std::vector<std::string>& states() const noexcept { return states_; }
  const std::string& state_label(std::size_t p) const { return states_.at(p); }
  const FiniteLattice& lattice() const noexcept { return lattice_; }
  const Orthocomplementation& ortho() const noexcept { return ortho_; }
  const StateSet& kappa(Element a) const { return kappa_.at(a); }
  const std::vector<StateSet>& kappa_table() const noexcept { return kappa_; }

  /// s(p): the meet of every property actual in state p.
  Element property_state(std::size_t p) const { return property_states_.at(p); }

 private:
  StatePropertySystem(std::vector<std::string> states, FiniteLattice lattice, Orthocomplementation ortho,
                      std::vector<StateSet> kappa)
      : states_(std::move(states)), lattice_(std::move(lattice)), ortho_(std::move(ortho)), kappa_(std::move(kappa)) {}

  std::vector<std::string> states_;
  FiniteLattice lattice_;
  Orthocomplementation ortho_;
  std::vector<StateSet> kappa_;
  std::vector<Element> property_states_;
};

/// Distinct states must have distinct property states.
inline AxiomReport axiom1_state_determination(const StatePropertySystem& sps) {
  std::map<Element, std::size_t> first;
  std::optional<std::pair<std::size_t, std::size_t>> worst;
  for (std::size_t q = 0; q < sps.state_count(); ++q) {
    auto [it, inserted] = first.emplace(sps.property_state(q), q);
    if (!inserted) {
      const std::pair<std::size_t, std::size_t> pair{it->second, q};
      if (!worst || pair < *worst) worst = pair;
    }
  }
  if (!worst) return AxiomReport::pass(AxiomId::state_determination);
  return AxiomReport::fail(AxiomId::state_determination, {worst->first, worst->second},
                           "states " + sps.state_label(worst->first) + " and " + sps.state_label(worst->second) +
                               " have the same actual properties");
}

/// Each property state must be an atom.
inline AxiomReport axiom2_atomisticity(const StatePropertySystem& sps) {
  for (std::size_t p = 0; p < sps.state_count(); ++p) {
    const auto s = sps.property_state(p);
    if (!sps.lattice().is_atom(s)) {
      return AxiomReport::fail(AxiomId::atomisticity, {p},
                               "property state of " + sps.state_label(p) + " is " + sps.lattice().name(s) +
                                   ", not an atom");
    }
  }
  return AxiomReport::pass(AxiomId::atomisticity);
}

/// Axiom 3 is enforced by construction, so this is Axioms 1 and 2.
inline bool satisfies_axioms_1_to_3(const StatePropertySystem& sps) {
  return axiom1_state_determination(sps).holds && axiom2_atomisticity(sps).holds;
}

inline void require_axioms_1_to_3(const StatePropertySystem& sps, std::string_view what) {
  if (auto r = axiom1_state_determination(sps); !r.holds) {
    throw Error(ErrorCode::axioms_not_satisfied, std::string(what) + ": Axiom 1 fails: " + r.detail,
                r.witnesses.front());
  }
  if (auto r = axiom2_atomisticity(sps); !r.holds) {
    throw Error(ErrorCode::axioms_not_satisfied, std::string(what) + ": Axiom 2 fails: " + r.detail,
                r.witnesses.front());
  }
}

/// A pair of bijections between two systems: states of the source to states
/// of the target, properties of the source to properties of the target.
struct SpsIsomorphism {
  std::vector<std::size_t> state_map;
  std::vector<Element> property_map;
};

/// Returns the first defect found, or nothing when `iso` is an isomorphism:
/// both maps bijective, the property map an order isomorphism commuting with
/// the orthocomplements, and kappa carried bit for bit.
inline std::optional<std::string> isomorphism_defect(const StatePropertySystem& from, const StatePropertySystem& to,
                                                     const SpsIsomorphism& iso) {
  const auto& la = from.lattice();
  const auto& lb = to.lattice();
  if (la.size() != lb.size() || iso.property_map.size() != la.size()) return "property counts differ";
  if (from.state_count() != to.state_count() || iso.state_map.size() != from.state_count()) {
    return "state counts differ";
  }
  {
    std::vector<bool> hit(lb.size(), false);
    for (auto e : iso.property_map) {
      if (e >= lb.size() || hit[e]) return "property map is not a bijection";
      hit[e] = true;
    }
    std::vector<bool> hit_states(to.state_count(), false);
    for (auto s : iso.state_map) {
      if (s >= to.state_count() || hit_states[s]) return "state map is not a bijection";
      hit_states[s] = true;
    }
  }
  const auto& f = iso.property_map;
  for (std::size_t a = 0; a < la.size(); ++a) {
    for (std::size_t b = 0; b < la.size(); ++b) {
      if (la.leq(a, b) != lb.leq(f[a], f[b])) return "order not preserved at (" + la.name(a) + ", " + la.name(b) + ")";
    }
    if (f[from.ortho()(a)] != to.ortho()(f[a])) return "orthocomplement not preserved at " + la.name(a);
  }
  for (std::size_t a = 0; a < la.size(); ++a) {
    StateSet image(to.state_count());
    for_each_bit(from.kappa(a), [&](std::size_t p) { image.set(iso.state_map[p]); });
    if (image != to.kappa(f[a])) return "kappa not preserved at " + la.name(a);
  }
  return std::nullopt;
}

namespace detail {

// States of the property-state form are the atoms s(p), in element order.
inline std::vector<std::size_t> property_state_positions(const StatePropertySystem& sps) {
  std::vector<std::size_t> order(sps.state_count());
  for (std::size_t p = 0; p < order.size(); ++p) order[p] = p;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return sps.property_state(x) < sps.property_state(y); });
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  return pos;
}

}  // namespace detail

/// The isomorphism from `sps` onto its property-state form: identity on
/// properties, p -> position of s(p) among the property states.
inline SpsIsomorphism property_state_isomorphism(const StatePropertySystem& sps) {
  SpsIsomorphism iso;
  iso.state_map = detail::property_state_positions(sps);
  iso.property_map.resize(sps.lattice().size());
  for (std::size_t a = 0; a < iso.property_map.size(); ++a) iso.property_map[a] = a;
  return iso;
}

/// Replaces every state p by its property state s(p), which is an atom when
/// Axioms 1 and 2 hold; kappa'(a) = { s(p) : p in kappa(a) }.
inline StatePropertySystem property_state_form(const StatePropertySystem& sps) {
  require_axioms_1_to_3(sps, "property-state form");
  const auto pos = detail::property_state_positions(sps);
  std::vector<std::string> labels(sps.state_count());
  for (std::size_t p = 0; p < pos.size(); ++p) labels[pos[p]] = sps.lattice().name(sps.property_state(p));
  std::vector<StateSet> kappa;
  kappa.reserve(sps.lattice().size());
  for (std::size_t a = 0; a < sps.lattice().size(); ++a) {
    StateSet k(sps.state_count());
    for_each_bit(sps.kappa(a), [&](std::size_t p) { k.set(pos[p]); });
    kappa.push_back(std::move(k));
  }
  auto out = StatePropertySystem::make(std::move(labels), sps.lattice(), sps.ortho(), std::move(kappa));
  if (auto defect = isomorphism_defect(sps, out, property_state_isomorphism(sps))) {
    throw Error(ErrorCode::isomorphism_not_found, "property-state form: " + *defect);
  }
  return out;
}

/// p and q are orthogonal iff some property a has s(p) <= a and s(q) <= a'.
/// The smallest candidate is a = s(p), so this reduces to s(q) <= s(p)'.
inline bool orthogonal_states(const StatePropertySystem& sps, std::size_t p, std::size_t q) {
  const auto sp = sps.property_state(p);
  const auto sq = sps.property_state(q);
  return sps.lattice().leq(sq, sps.ortho()(sp));
}

/// Size of the largest set of pairwise orthogonal states (exact search).
inline std::size_t count_pairwise_orthogonal(const StatePropertySystem& sps) {
  require_axioms_1_to_3(sps, "orthogonality");
  const auto m = sps.state_count();
  std::vector<StateSet> adj(m, StateSet(m));
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      if (p != q && orthogonal_states(sps, p, q)) adj[p].set(q);
    }
  }
  std::size_t best = 0;
  // Bron-Kerbosch with pivoting; only the clique size is tracked.
  auto expand = [&](auto&& self, std::size_t size, StateSet candidates, StateSet excluded) -> void {
    if (candidates.none() && excluded.none()) {
      best = std::max(best, size);
      return;
    }
    if (size + candidates.count() <= best) return;
    const StateSet pool = candidates | excluded;
    std::size_t pivot = pool.find_first();
    std::size_t pivot_degree = 0;
    for_each_bit(pool, [&](std::size_t u) {
      const auto d = (candidates & adj[u]).count();
      if (d > pivot_degree) {
        pivot = u;
        pivot_degree = d;
      }
    });
    StateSet todo = candidates - adj[pivot];
    for_each_bit(todo, [&](std::size_t v) {
      self(self, size + 1, candidates & adj[v], excluded & adj[v]);
      candidates.reset(v);
      excluded.set(v);
    });
  };
  StateSet all(m);
  all.set();
  expand(expand, 0, all, StateSet(m));
  return best;
}

/// The canonical system over an ortholattice: states are the atoms and each
/// property holds in exactly the atoms below it.
inline StatePropertySystem atom_state_system(const OrthoLattice& ol) {
  const auto& lat = ol.lattice;
  const auto& atoms = lat.atoms();
  std::vector<std::string> labels;
  for (auto x : atoms) labels.push_back(lat.name(x));
  std::vector<StateSet> kappa(lat.size(), StateSet(atoms.size()));
  for (std::size_t a = 0; a < lat.size(); ++a) {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (lat.leq(atoms[i], a)) kappa[a].set(i);
    }
  }
  return StatePropertySystem::make(std::move(labels), lat, ol.ortho, std::move(kappa));
}

}  // namespace qlogic
