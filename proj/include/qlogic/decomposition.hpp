#pragma once

#include <qlogic/state_property.hpp>

#include <algorithm>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace qlogic {

/// a is classical iff every state makes a or a' actual.
inline bool is_classical_property(const StatePropertySystem& sps, Element a) {
  return (sps.kappa(a) | sps.kappa(sps.ortho()(a))).all();
}

/// True when every property is classical (and hence every state too).
inline bool is_classical_system(const StatePropertySystem& sps) {
  for (std::size_t a = 0; a < sps.lattice().size(); ++a) {
    if (!is_classical_property(sps, a)) return false;
  }
  return true;
}

struct ClassicalPart {
  std::vector<Element> classical_properties;  // C, in element order
  std::vector<Element> classical_states;      // Omega, distinct omega(p), in element order
  std::vector<std::size_t> omega_of_state;    // p -> position of omega(p) in classical_states
  std::vector<StateSet> kappa_c;              // parallel to classical_properties; subsets of Omega
};

/// Classical properties, classical states omega(p) and the classical Cartan
/// map. Verifies that kappa_c is an isomorphism of C onto P(Omega).
inline ClassicalPart classical_part(const StatePropertySystem& sps) {
  require_axioms_1_to_3(sps, "classical part");
  const auto& lat = sps.lattice();
  ClassicalPart cp;
  for (std::size_t a = 0; a < lat.size(); ++a) {
    if (is_classical_property(sps, a)) cp.classical_properties.push_back(a);
  }

  std::vector<Element> omega(sps.state_count());
  std::set<Element> distinct;
  for (std::size_t p = 0; p < sps.state_count(); ++p) {
    Element acc = lat.top();
    for (auto a : cp.classical_properties) {
      if (sps.kappa(a)[p]) acc = lat.meet(acc, a);
    }
    omega[p] = acc;
    distinct.insert(acc);
  }
  cp.classical_states.assign(distinct.begin(), distinct.end());
  for (auto w : omega) {
    cp.omega_of_state.push_back(static_cast<std::size_t>(
        std::lower_bound(cp.classical_states.begin(), cp.classical_states.end(), w) - cp.classical_states.begin()));
  }
  const auto k = cp.classical_states.size();
  for (auto a : cp.classical_properties) {
    StateSet image(k);
    for_each_bit(sps.kappa(a), [&](std::size_t p) { image.set(cp.omega_of_state[p]); });
    cp.kappa_c.push_back(std::move(image));
  }

  auto fail = [](const std::string& why) {
    throw Error(ErrorCode::isomorphism_not_found, "classical Cartan map is not an isomorphism onto P(Omega): " + why);
  };
  if (k >= 32 || cp.classical_properties.size() != (std::size_t{1} << k)) fail("|C| != 2^|Omega|");
  if (std::set<StateSet>(cp.kappa_c.begin(), cp.kappa_c.end()).size() != cp.kappa_c.size()) fail("not injective");
  const auto& c = cp.classical_properties;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto oi = sps.ortho()(c[i]);
    const auto pos = std::lower_bound(c.begin(), c.end(), oi) - c.begin();
    if (static_cast<std::size_t>(pos) >= c.size() || c[pos] != oi) fail("C not closed under '");
    StateSet complement = cp.kappa_c[i];
    complement.flip();
    if (cp.kappa_c[pos] != complement) fail("' is not sent to set complement");
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (lat.leq(c[i], c[j]) != cp.kappa_c[i].is_subset_of(cp.kappa_c[j])) fail("order not preserved");
    }
  }
  return cp;
}

struct NonclassicalComponent {
  Element omega;
  std::vector<Element> elements;    // L_omega: global elements below omega, in element order
  std::vector<std::size_t> states;  // Sigma_omega: global states in kappa(omega)
  StatePropertySystem system;       // local indices; orthocomplement a -> a' ^ omega
};

namespace detail {

inline NonclassicalComponent restrict_below(const StatePropertySystem& sps, Element omega) {
  const auto& lat = sps.lattice();
  const auto elements = bits_of(lat.down_set(omega));
  const auto states = bits_of(sps.kappa(omega));
  std::vector<std::size_t> local(lat.size(), lat.size());
  for (std::size_t i = 0; i < elements.size(); ++i) local[elements[i]] = i;

  std::vector<std::string> names;
  std::vector<ElementSet> down(elements.size(), ElementSet(elements.size()));
  Orthocomplementation ortho;
  std::vector<StateSet> kappa;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto a = elements[i];
    names.push_back(lat.name(a));
    for_each_bit(lat.down_set(a), [&](std::size_t b) { down[i].set(local[b]); });
    ortho.map.push_back(local[lat.meet(sps.ortho()(a), omega)]);
    StateSet k(states.size());
    for (std::size_t j = 0; j < states.size(); ++j) {
      if (sps.kappa(a)[states[j]]) k.set(j);
    }
    kappa.push_back(std::move(k));
  }
  std::vector<std::string> labels;
  for (auto p : states) labels.push_back(sps.state_label(p));
  auto sub = FiniteLattice::from_down_sets(std::move(names), std::move(down));
  return {omega, elements, states, StatePropertySystem::make(std::move(labels), std::move(sub), std::move(ortho),
                                                             std::move(kappa))};
}

}  // namespace detail

/// One component per classical state omega: the properties below omega and
/// the states in kappa(omega). Each is checked to carry no classical
/// properties other than 0 and omega.
inline std::vector<NonclassicalComponent> nonclassical_components(const StatePropertySystem& sps,
                                                                  const ClassicalPart& cp) {
  std::vector<NonclassicalComponent> out;
  for (auto omega : cp.classical_states) {
    auto comp = [&] {
      try {
        return detail::restrict_below(sps, omega);
      } catch (const Error& e) {
        throw Error(ErrorCode::component_invalid, "component below " + sps.lattice().name(omega) + ": " + e.what());
      }
    }();
    const auto& sub = comp.system;
    for (std::size_t a = 0; a < sub.lattice().size(); ++a) {
      if (a != sub.lattice().bottom() && a != sub.lattice().top() && is_classical_property(sub, a)) {
        throw Error(ErrorCode::component_invalid, "component below " + sps.lattice().name(omega) +
                                                      " has the nontrivial classical property " +
                                                      sub.lattice().name(a));
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::vector<NonclassicalComponent> nonclassical_components(const StatePropertySystem& sps) {
  return nonclassical_components(sps, classical_part(sps));
}

/// Componentwise product of state-property systems over an index set, with
/// the disjoint union of their states. Element tuples are encoded in mixed
/// radix with component 0 most significant.
class DirectUnion {
 public:
  static constexpr std::size_t max_elements = 20000;

  explicit DirectUnion(std::vector<StatePropertySystem> components) : components_(std::move(components)) {
    if (components_.empty()) throw Error(ErrorCode::invalid_argument, "direct union of no components");
    std::size_t total = 1;
    std::size_t states = 0;
    for (std::size_t k = 0; k < components_.size(); ++k) {
      const auto& c = components_[k];
      if (!satisfies_axioms_1_to_3(c)) {
        throw Error(ErrorCode::component_invalid, "component " + std::to_string(k) + " fails Axioms 1-3", {k});
      }
      radix_.push_back(c.lattice().size());
      total *= c.lattice().size();
      if (total > max_elements) throw Error(ErrorCode::too_large, "direct union exceeds the element bound");
      offsets_.push_back(states);
      states += c.state_count();
    }

    std::vector<std::vector<Element>> tuples(total);
    for (std::size_t x = 0; x < total; ++x) tuples[x] = decode(x);

    std::vector<std::string> names;
    std::vector<ElementSet> down(total, ElementSet(total));
    Orthocomplementation ortho;
    std::vector<StateSet> kappa;
    std::vector<Element> image(components_.size());
    for (std::size_t x = 0; x < total; ++x) {
      const auto& t = tuples[x];
      std::string name = "(";
      StateSet k(states);
      for (std::size_t c = 0; c < t.size(); ++c) {
        const auto& comp = components_[c];
        name += (c ? "," : "") + comp.lattice().name(t[c]);
        image[c] = comp.ortho()(t[c]);
        for_each_bit(comp.kappa(t[c]), [&](std::size_t p) { k.set(offsets_[c] + p); });
      }
      names.push_back(name + ")");
      ortho.map.push_back(encode(image));
      kappa.push_back(std::move(k));
      for (std::size_t y = 0; y < total; ++y) {
        bool below = true;
        for (std::size_t c = 0; c < t.size() && below; ++c) below = components_[c].lattice().leq(tuples[y][c], t[c]);
        if (below) down[x].set(y);
      }
    }
    std::vector<std::string> labels;
    for (const auto& c : components_) labels.insert(labels.end(), c.states().begin(), c.states().end());
    system_.emplace(StatePropertySystem::make(std::move(labels),
                                              FiniteLattice::from_down_sets(std::move(names), std::move(down)),
                                              std::move(ortho), std::move(kappa)));
  }

  const StatePropertySystem& system() const { return *system_; }
  const std::vector<StatePropertySystem>& components() const noexcept { return components_; }
  std::size_t state_offset(std::size_t component) const { return offsets_.at(component); }

  Element encode(std::span<const Element> tuple) const {
    Element x = 0;
    for (std::size_t c = 0; c < radix_.size(); ++c) x = x * radix_[c] + tuple[c];
    return x;
  }

  std::vector<Element> decode(Element x) const {
    std::vector<Element> t(radix_.size());
    for (std::size_t c = radix_.size(); c-- > 0;) {
      t[c] = x % radix_[c];
      x /= radix_[c];
    }
    return t;
  }

 private:
  std::vector<StatePropertySystem> components_;
  std::vector<std::size_t> radix_;
  std::vector<std::size_t> offsets_;
  std::optional<StatePropertySystem> system_;
};

inline StatePropertySystem direct_union(std::vector<StatePropertySystem> components) {
  return DirectUnion(std::move(components)).system();
}

struct RepresentationWitness {
  ClassicalPart classical;
  std::vector<NonclassicalComponent> components;
  StatePropertySystem property_state_form;
  DirectUnion rebuilt;            // direct union of the components' property-state forms
  SpsIsomorphism isomorphism;     // property_state_form -> rebuilt.system()
  bool covering = false;          // Axiom 4 on the whole system
  bool weak_modular = false;      // Axiom 5 on the whole system
  std::vector<bool> component_covering;
  std::vector<bool> component_weak_modular;
};

/// Decomposes into nonclassical components, rebuilds their direct union and
/// checks the canonical map p -> (omega(p), s(p)), a -> (a ^ omega)_omega is an
/// isomorphism onto the property-state form. Also checks that Axioms 4 and 5
/// pass to every component when they hold for the whole.
inline RepresentationWitness verify_representation_part1(const StatePropertySystem& sps) {
  auto cp = classical_part(sps);
  auto comps = nonclassical_components(sps, cp);
  auto whole = property_state_form(sps);

  std::vector<StatePropertySystem> forms;
  for (const auto& c : comps) forms.push_back(property_state_form(c.system));
  DirectUnion rebuilt(std::move(forms));

  const auto& lat = whole.lattice();
  SpsIsomorphism iso;
  std::vector<Element> tuple(comps.size());
  for (std::size_t a = 0; a < lat.size(); ++a) {
    for (std::size_t c = 0; c < comps.size(); ++c) {
      const auto& els = comps[c].elements;
      const auto part = lat.meet(a, comps[c].omega);
      tuple[c] = static_cast<Element>(std::lower_bound(els.begin(), els.end(), part) - els.begin());
    }
    iso.property_map.push_back(rebuilt.encode(tuple));
  }
  // States of `whole` are atoms in element order; within a component the
  // property-state form lists the same atoms in the same relative order.
  for (std::size_t p = 0; p < whole.state_count(); ++p) {
    const auto atom = whole.property_state(p);
    std::size_t c = 0;
    while (c < comps.size() && !lat.leq(atom, comps[c].omega)) ++c;
    if (c == comps.size()) throw Error(ErrorCode::isomorphism_not_found, "atom below no classical state");
    const auto& comp_form = rebuilt.components()[c];
    const auto& els = comps[c].elements;
    const auto local = static_cast<Element>(std::lower_bound(els.begin(), els.end(), atom) - els.begin());
    std::size_t pos = comp_form.state_count();
    for (std::size_t q = 0; q < comp_form.state_count(); ++q) {
      if (comp_form.property_state(q) == local) pos = q;
    }
    if (pos == comp_form.state_count()) throw Error(ErrorCode::isomorphism_not_found, "atom missing from component");
    iso.state_map.push_back(rebuilt.state_offset(c) + pos);
  }
  if (auto defect = isomorphism_defect(whole, rebuilt.system(), iso)) {
    throw Error(ErrorCode::isomorphism_not_found, "direct union of components: " + *defect);
  }

  RepresentationWitness w{std::move(cp), std::move(comps), std::move(whole), std::move(rebuilt), std::move(iso)};
  w.covering = check_covering_law(sps.lattice()).holds;
  w.weak_modular = check_weak_modularity(sps.lattice(), sps.ortho()).holds;
  for (const auto& c : w.components) {
    w.component_covering.push_back(check_covering_law(c.system.lattice()).holds);
    w.component_weak_modular.push_back(check_weak_modularity(c.system.lattice(), c.system.ortho()).holds);
  }
  if (w.covering && w.weak_modular) {
    for (std::size_t c = 0; c < w.components.size(); ++c) {
      if (!w.component_covering[c] || !w.component_weak_modular[c]) {
        throw Error(ErrorCode::component_invalid, "Axioms 4 and 5 hold for the whole but not for component " +
                                                      std::to_string(c), {c});
      }
    }
  }
  return w;
}

}  // namespace qlogic
