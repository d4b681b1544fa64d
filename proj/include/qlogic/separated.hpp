#pragma once

#include <qlogic/decomposition.hpp>

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qlogic {

using PointSet = ElementSet;

/// Points with a symmetric, irreflexive orthogonality relation, stored as
/// one polar row {y : y perp x} per point.
class OrthoSpace {
 public:
  OrthoSpace(std::vector<std::string> labels, std::vector<PointSet> polars)
      : labels_(std::move(labels)), polars_(std::move(polars)) {
    const auto n = labels_.size();
    if (polars_.size() != n) throw Error(ErrorCode::invalid_argument, "one polar per point is required");
    for (std::size_t x = 0; x < n; ++x) {
      if (polars_[x].size() != n) throw Error(ErrorCode::invalid_argument, "polar row has the wrong width");
      if (polars_[x][x]) throw Error(ErrorCode::invalid_argument, "orthogonality must be irreflexive", {x});
      for_each_bit(polars_[x], [&](std::size_t y) {
        if (!polars_[y][x]) throw Error(ErrorCode::invalid_argument, "orthogonality must be symmetric", {x, y});
      });
    }
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool perp(std::size_t x, std::size_t y) const { return polars_[x][y]; }
  const PointSet& polar(std::size_t x) const { return polars_.at(x); }

  /// S-perp: the points orthogonal to every point of S.
  PointSet polar(const PointSet& s) const {
    PointSet out(size());
    out.set();
    for_each_bit(s, [&](std::size_t x) { out &= polars_[x]; });
    return out;
  }

  PointSet empty_set() const { return PointSet(size()); }
  PointSet full_set() const {
    PointSet s(size());
    s.set();
    return s;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<PointSet> polars_;
};

inline PointSet biorthogonal_closure(const OrthoSpace& space, const PointSet& s) {
  return space.polar(space.polar(s));
}

/// Points are pairs (p1, p2) numbered p1 * |states2| + p2; two pairs are
/// orthogonal when their first or their second coordinates are.
inline OrthoSpace product_orthogonality(const StatePropertySystem& s1, const StatePropertySystem& s2) {
  require_axioms_1_to_3(s1, "first factor");
  require_axioms_1_to_3(s2, "second factor");
  const auto n1 = s1.state_count();
  const auto n2 = s2.state_count();
  const auto n = n1 * n2;
  std::vector<std::string> labels;
  std::vector<PointSet> polars(n, PointSet(n));
  for (std::size_t p1 = 0; p1 < n1; ++p1) {
    for (std::size_t p2 = 0; p2 < n2; ++p2) {
      labels.push_back("(" + s1.state_label(p1) + "," + s2.state_label(p2) + ")");
      for (std::size_t q1 = 0; q1 < n1; ++q1) {
        for (std::size_t q2 = 0; q2 < n2; ++q2) {
          if (orthogonal_states(s1, p1, q1) || orthogonal_states(s2, p2, q2)) polars[p1 * n2 + p2].set(q1 * n2 + q2);
        }
      }
    }
  }
  return OrthoSpace(std::move(labels), std::move(polars));
}

/// Every biorthogonally closed subset, i.e. every intersection of point
/// polars (the empty intersection being the whole space). Sorted by size,
/// then by bit pattern.
inline std::vector<PointSet> closed_sets(const OrthoSpace& space) {
  std::set<PointSet> seen{space.full_set()};
  std::vector<PointSet> frontier{space.full_set()};
  while (!frontier.empty()) {
    std::vector<PointSet> next;
    for (const auto& s : frontier) {
      for (std::size_t x = 0; x < space.size(); ++x) {
        PointSet t = s & space.polar(x);
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  std::vector<PointSet> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const PointSet& a, const PointSet& b) { return a.count() < b.count(); });
  return out;
}

/// The property lattice of the closed sets of `space`, with S' = S-perp.
/// States are the points and kappa(S) = S.
inline StatePropertySystem closed_set_system(const OrthoSpace& space) {
  const auto sets = closed_sets(space);
  const auto n = sets.size();
  std::vector<std::string> names;
  std::vector<ElementSet> down(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    std::string name = "{";
    for_each_bit(sets[i], [&](std::size_t x) { name += (name.size() > 1 ? "," : "") + space.label(x); });
    names.push_back(name + "}");
    for (std::size_t j = 0; j < n; ++j) {
      if (sets[j].is_subset_of(sets[i])) down[i].set(j);
    }
  }
  auto index_of = [&](const PointSet& s) {
    auto it = std::find(sets.begin(), sets.end(), s);
    if (it == sets.end()) throw Error(ErrorCode::isomorphism_not_found, "polar of a closed set is not closed");
    return static_cast<Element>(it - sets.begin());
  };
  Orthocomplementation ortho;
  for (const auto& s : sets) ortho.map.push_back(index_of(space.polar(s)));
  return StatePropertySystem::make(space.labels(), FiniteLattice::from_down_sets(std::move(names), std::move(down)),
                                   std::move(ortho), sets);
}

struct SeparatedProduct {
  OrthoSpace space;
  StatePropertySystem system;
};

/// kappa1(a1) x kappa2(a2) as a point set of the product space.
inline PointSet rectangle(const StatePropertySystem& s1, const StatePropertySystem& s2, Element a1, Element a2) {
  const auto n2 = s2.state_count();
  PointSet out(s1.state_count() * n2);
  for_each_bit(s1.kappa(a1), [&](std::size_t p1) {
    for_each_bit(s2.kappa(a2), [&](std::size_t p2) { out.set(p1 * n2 + p2); });
  });
  return out;
}

/// Joint system of two separated entities: the biorthogonally closed subsets
/// of the product state space under coordinatewise orthogonality.
inline SeparatedProduct separated_product(const StatePropertySystem& s1, const StatePropertySystem& s2,
                                          std::size_t max_points = 64) {
  const auto points = s1.state_count() * s2.state_count();
  if (points > max_points) {
    throw Error(ErrorCode::too_large, std::to_string(points) + " product points exceed the bound of " +
                                          std::to_string(max_points));
  }
  auto space = product_orthogonality(s1, s2);
  auto system = closed_set_system(space);
  require_axioms_1_to_3(system, "separated product");
  for (std::size_t a1 = 0; a1 < s1.lattice().size(); ++a1) {
    for (std::size_t a2 = 0; a2 < s2.lattice().size(); ++a2) {
      const auto r = rectangle(s1, s2, a1, a2);
      if (biorthogonal_closure(space, r) != r) {
        throw Error(ErrorCode::isomorphism_not_found,
                    "factor rectangle " + s1.lattice().name(a1) + " x " + s2.lattice().name(a2) + " is not closed",
                    {a1, a2});
      }
    }
  }
  return {std::move(space), std::move(system)};
}

struct NoGoReport {
  AxiomReport covering;
  AxiomReport weak_modularity;
  std::array<bool, 2> factor_classical{};
  std::size_t product_elements = 0;
  std::size_t product_points = 0;

  bool both_nonclassical() const { return !factor_classical[0] && !factor_classical[1]; }
  /// Both axioms fail when both factors are nonclassical and hold otherwise.
  bool matches_dichotomy() const {
    return both_nonclassical() ? (!covering.holds && !weak_modularity.holds)
                               : (covering.holds && weak_modularity.holds);
  }
};

inline NoGoReport verify_no_go(const StatePropertySystem& s1, const StatePropertySystem& s2,
                               const SeparatedProduct& product) {
  const auto& sys = product.system;
  NoGoReport r{check_covering_law(sys.lattice()), check_weak_modularity(sys.lattice(), sys.ortho()),
               {is_classical_system(s1), is_classical_system(s2)}, sys.lattice().size(), product.space.size()};
  return r;
}

inline NoGoReport verify_no_go(const StatePropertySystem& s1, const StatePropertySystem& s2,
                               std::size_t max_points = 64) {
  return verify_no_go(s1, s2, separated_product(s1, s2, max_points));
}

/// Whether the atoms p, q are non-orthogonal and their join has no atom
/// below it other than p and q.
inline bool is_superselected_pair(const StatePropertySystem& sps, Element p, Element q) {
  const auto& lat = sps.lattice();
  if (p == q || !lat.is_atom(p) || !lat.is_atom(q)) return false;
  if (lat.leq(q, sps.ortho()(p))) return false;
  const auto j = lat.join(p, q);
  for (auto r : lat.atoms()) {
    if (r != p && r != q && lat.leq(r, j)) return false;
  }
  return true;
}

/// Non-orthogonal atom pairs (p < q by index) admitting no superposition atom.
inline std::vector<IndexPair> superselection_witnesses(const StatePropertySystem& sps) {
  std::vector<IndexPair> out;
  const auto& atoms = sps.lattice().atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      if (is_superselected_pair(sps, atoms[i], atoms[j])) out.emplace_back(atoms[i], atoms[j]);
    }
  }
  return out;
}

}  // namespace qlogic
