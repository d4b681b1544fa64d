#pragma once

#include <qlogic/error.hpp>

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qlogic {

using Element = std::size_t;
using ElementSet = boost::dynamic_bitset<std::uint64_t>;
using IndexPair = std::pair<std::size_t, std::size_t>;

/// Iterate the set bits of a dynamic bitset in increasing order.
template <typename Fn>
void for_each_bit(const ElementSet& set, Fn&& fn) {
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) fn(static_cast<std::size_t>(i));
}

inline std::vector<std::size_t> bits_of(const ElementSet& set) {
  std::vector<std::size_t> out;
  out.reserve(set.count());
  for_each_bit(set, [&](std::size_t i) { out.push_back(i); });
  return out;
}

enum class AxiomId {
  partial_order,
  lattice_laws,
  completeness,
  atomistic,
  ortho,
  covering,
  weak_modular,
  state_determination,
  atomisticity,
};

inline std::string_view axiom_key(AxiomId id) {
  switch (id) {
    case AxiomId::partial_order: return "partial_order";
    case AxiomId::lattice_laws: return "lattice_laws";
    case AxiomId::completeness: return "completeness";
    case AxiomId::atomistic: return "atomistic";
    case AxiomId::ortho: return "ortho";
    case AxiomId::covering: return "covering";
    case AxiomId::weak_modular: return "weak_modular";
    case AxiomId::state_determination: return "state_determination";
    case AxiomId::atomisticity: return "atomisticity";
  }
  return "unknown";
}

/// Human-facing name of the law, as quantum axiomatics numbers them.
inline std::string_view axiom_title(AxiomId id) {
  switch (id) {
    case AxiomId::partial_order: return "Partial order (reflexive, antisymmetric, transitive)";
    case AxiomId::lattice_laws: return "Lattice laws (infimum, supremum, absorption)";
    case AxiomId::completeness: return "Complete lattice (finite and bounded)";
    case AxiomId::atomistic: return "Atomistic lattice";
    case AxiomId::ortho: return "Axiom 3: Orthocomplementation";
    case AxiomId::covering: return "Axiom 4: Covering Law";
    case AxiomId::weak_modular: return "Axiom 5: Weak Modularity";
    case AxiomId::state_determination: return "Axiom 1: State Determination";
    case AxiomId::atomisticity: return "Axiom 2: Atomisticity";
  }
  return "unknown";
}

inline std::optional<AxiomId> axiom_from_key(std::string_view key) {
  for (auto id : {AxiomId::partial_order, AxiomId::lattice_laws, AxiomId::completeness, AxiomId::atomistic,
                  AxiomId::ortho, AxiomId::covering, AxiomId::weak_modular, AxiomId::state_determination,
                  AxiomId::atomisticity}) {
    if (axiom_key(id) == key) return id;
  }
  return std::nullopt;
}

/// Outcome of one axiom check. `witnesses` holds the first violation found
/// under element index order and is empty iff `holds`.
struct AxiomReport {
  AxiomId axiom;
  bool holds = true;
  std::vector<std::vector<std::size_t>> witnesses;
  std::string detail;

  static AxiomReport pass(AxiomId id) { return {id, true, {}, {}}; }
  static AxiomReport fail(AxiomId id, std::vector<std::size_t> witness, std::string detail) {
    return {id, false, {std::move(witness)}, std::move(detail)};
  }
};

/// A finite bounded lattice. The order is stored densely: `down_set(b)` is
/// the row {a : a <= b}. Meet and join are precomputed tables.
class FiniteLattice {
 public:
  /// Validates that `down` is a partial order with bounds in which every
  /// pair has a meet and a join. `down[b][a]` means a <= b.
  static FiniteLattice from_down_sets(std::vector<std::string> names, std::vector<ElementSet> down) {
    const std::size_t n = names.size();
    if (n == 0) throw Error(ErrorCode::invalid_argument, "a lattice needs at least one element");
    if (down.size() != n) throw Error(ErrorCode::invalid_argument, "order rows do not match element count");
    for (auto& row : down) {
      if (row.size() != n) throw Error(ErrorCode::invalid_argument, "order row has the wrong width");
    }

    FiniteLattice lat;
    lat.names_ = std::move(names);
    lat.down_ = std::move(down);
    lat.up_.assign(n, ElementSet(n));
    for (std::size_t b = 0; b < n; ++b) {
      if (!lat.down_[b][b]) {
        throw Error(ErrorCode::not_a_partial_order, "not reflexive at " + lat.names_[b], {b});
      }
      for_each_bit(lat.down_[b], [&](std::size_t a) { lat.up_[a].set(b); });
    }
    for (std::size_t b = 0; b < n; ++b) {
      for_each_bit(lat.down_[b], [&](std::size_t a) {
        if (a != b && lat.down_[a][b]) {
          throw Error(ErrorCode::not_a_partial_order,
                      "antisymmetry fails for " + lat.names_[std::min(a, b)] + " and " + lat.names_[std::max(a, b)],
                      {std::min(a, b), std::max(a, b)});
        }
        if (!lat.down_[a].is_subset_of(lat.down_[b])) {
          throw Error(ErrorCode::not_a_partial_order, "not transitive below " + lat.names_[b], {a, b});
        }
      });
    }

    std::optional<Element> bottom, top;
    for (std::size_t x = 0; x < n; ++x) {
      if (!bottom && lat.up_[x].count() == n) bottom = x;
      if (!top && lat.down_[x].count() == n) top = x;
    }
    if (!bottom || !top) {
      throw Error(ErrorCode::no_bounds, bottom ? "no greatest element" : "no least element");
    }
    lat.bottom_ = *bottom;
    lat.top_ = *top;

    std::vector<std::size_t> rank_down(n), rank_up(n);
    for (std::size_t x = 0; x < n; ++x) {
      rank_down[x] = lat.down_[x].count();
      rank_up[x] = lat.up_[x].count();
    }
    lat.meet_.assign(n * n, 0);
    lat.join_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        const auto m = extremal(lat.down_, rank_down, lat.down_[a] & lat.down_[b]);
        const auto j = extremal(lat.up_, rank_up, lat.up_[a] & lat.up_[b]);
        if (!m || !j) {
          throw Error(ErrorCode::not_a_lattice,
                      std::string(m ? "no least upper bound" : "no greatest lower bound") + " for " +
                          lat.names_[a] + " and " + lat.names_[b],
                      {a, b});
        }
        lat.meet_[a * n + b] = lat.meet_[b * n + a] = *m;
        lat.join_[a * n + b] = lat.join_[b * n + a] = *j;
      }
    }

    lat.is_atom_.assign(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      if (x != lat.bottom_ && rank_down[x] == 2) {
        lat.atoms_.push_back(x);
        lat.is_atom_[x] = true;
      }
    }
    return lat;
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Element x) const { return names_.at(x); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Element> find(std::string_view label) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == label) return i;
    }
    return std::nullopt;
  }

  bool leq(Element a, Element b) const { return down_[b][a]; }
  bool less(Element a, Element b) const { return a != b && down_[b][a]; }
  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
  Element join(Element a, Element b) const { return join_[a * size() + b]; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }
  const std::vector<Element>& atoms() const noexcept { return atoms_; }
  bool is_atom(Element x) const { return is_atom_[x]; }
  const ElementSet& down_set(Element x) const { return down_[x]; }
  const ElementSet& up_set(Element x) const { return up_[x]; }

  /// Pairs (a, b) with a < b and nothing strictly between, in index order.
  std::vector<IndexPair> cover_pairs() const {
    std::vector<IndexPair> out;
    for (std::size_t a = 0; a < size(); ++a) {
      for (std::size_t b = 0; b < size(); ++b) {
        if (!less(a, b)) continue;
        ElementSet between = up_[a] & down_[b];
        between.reset(a);
        between.reset(b);
        if (between.none()) out.emplace_back(a, b);
      }
    }
    return out;
  }

  /// Same carrier and names, opposite order.
  FiniteLattice dual() const { return from_down_sets(names_, up_); }

  friend bool operator==(const FiniteLattice& x, const FiniteLattice& y) {
    return x.names_ == y.names_ && x.down_ == y.down_;
  }

 private:
  FiniteLattice() = default;

  // The unique element of `bounds` whose own row equals `bounds`, if any.
  static std::optional<Element> extremal(const std::vector<ElementSet>& rows, const std::vector<std::size_t>& rank,
                                         const ElementSet& bounds) {
    std::optional<Element> best;
    for_each_bit(bounds, [&](std::size_t x) {
      if (!best || rank[x] > rank[*best]) best = x;
    });
    if (best && rows[*best] == bounds) return best;
    return std::nullopt;
  }

  std::vector<std::string> names_;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> up_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<Element> atoms_;
  std::vector<bool> is_atom_;
};

namespace detail {

inline std::vector<std::size_t> find_path(std::size_t n, std::span<const IndexPair> edges, std::size_t from,
                                          std::size_t to) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : edges) adj[a].push_back(b);
  std::vector<std::size_t> parent(n, n);
  std::deque<std::size_t> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (auto w : adj[v]) {
      if (parent[w] == n) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  std::vector<std::size_t> path;
  if (parent[to] == n) return path;
  for (auto v = to; v != from; v = parent[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

/// Builds a lattice from order pairs (a, b) meaning a <= b. The pairs may be
/// covers or any generating set; the reflexive-transitive closure is taken.
inline FiniteLattice build_lattice(std::vector<std::string> names, std::span<const IndexPair> pairs) {
  const std::size_t n = names.size();
  {
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < n; ++i) {
      if (!seen.emplace(names[i], i).second) throw Error(ErrorCode::invalid_argument, "duplicate label " + names[i]);
    }
  }
  std::vector<ElementSet> down(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) down[i].set(i);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw Error(ErrorCode::invalid_argument, "order pair index out of range");
    down[b].set(a);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t b = 0; b < n; ++b) {
      if (down[b][k]) down[b] |= down[k];
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (down[b][a] && down[a][b]) {
        auto cycle = detail::find_path(n, pairs, a, b);
        auto back = detail::find_path(n, pairs, b, a);
        cycle.insert(cycle.end(), back.begin() + 1, back.end());
        std::string text;
        for (auto v : cycle) text += (text.empty() ? "" : " <= ") + names[v];
        throw Error(ErrorCode::not_a_partial_order, "order cycle " + text, cycle);
      }
    }
  }
  return FiniteLattice::from_down_sets(std::move(names), std::move(down));
}

inline FiniteLattice build_lattice(std::vector<std::string> names,
                                   std::span<const std::pair<std::string, std::string>> label_pairs) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], i);
  std::vector<IndexPair> pairs;
  for (const auto& [lo, hi] : label_pairs) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end() || b == index.end()) {
      throw Error(ErrorCode::invalid_argument, "unknown label in order pair (" + lo + ", " + hi + ")");
    }
    pairs.emplace_back(a->second, b->second);
  }
  return build_lattice(std::move(names), pairs);
}

/// A map on the elements of one lattice, meant as an orthocomplementation.
/// Validity is established by `check_orthocomplementation`, not on construction.
struct Orthocomplementation {
  std::vector<Element> map;

  Element operator()(Element a) const { return map[a]; }
  std::size_t size() const noexcept { return map.size(); }
  friend bool operator==(const Orthocomplementation&, const Orthocomplementation&) = default;
};

struct OrthoLattice {
  FiniteLattice lattice;
  Orthocomplementation ortho;
};

inline Element meet_set(const FiniteLattice& lat, std::span<const Element> elems) {
  Element acc = lat.top();
  for (auto e : elems) acc = lat.meet(acc, e);
  return acc;
}

inline Element join_set(const FiniteLattice& lat, std::span<const Element> elems) {
  Element acc = lat.bottom();
  for (auto e : elems) acc = lat.join(acc, e);
  return acc;
}

inline Element meet_set(const FiniteLattice& lat, const ElementSet& elems) {
  Element acc = lat.top();
  for_each_bit(elems, [&](std::size_t e) { acc = lat.meet(acc, e); });
  return acc;
}

inline Element join_set(const FiniteLattice& lat, const ElementSet& elems) {
  Element acc = lat.bottom();
  for_each_bit(elems, [&](std::size_t e) { acc = lat.join(acc, e); });
  return acc;
}

/// Re-verifies the order relation itself: reflexive, antisymmetric, transitive.
inline AxiomReport check_partial_order(const FiniteLattice& lat) {
  const auto n = lat.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!lat.leq(a, a)) return AxiomReport::fail(AxiomId::partial_order, {a}, "not reflexive");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && lat.leq(a, b) && lat.leq(b, a)) {
        return AxiomReport::fail(AxiomId::partial_order, {a, b}, "not antisymmetric");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!lat.leq(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (lat.leq(b, c) && !lat.leq(a, c)) {
          return AxiomReport::fail(AxiomId::partial_order, {a, b, c}, "not transitive");
        }
      }
    }
  }
  return AxiomReport::pass(AxiomId::partial_order);
}

/// Exhaustive check of the meet/join tables: universal properties for every
/// pair, then idempotence, commutativity, associativity and absorption.
inline AxiomReport check_lattice_laws(const FiniteLattice& lat) {
  const auto n = lat.size();
  constexpr auto id = AxiomId::lattice_laws;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto m = lat.meet(a, b);
      const auto j = lat.join(a, b);
      if (!lat.leq(m, a) || !lat.leq(m, b)) return AxiomReport::fail(id, {a, b}, "meet is not a lower bound");
      if (!lat.leq(a, j) || !lat.leq(b, j)) return AxiomReport::fail(id, {a, b}, "join is not an upper bound");
      for (std::size_t x = 0; x < n; ++x) {
        if (lat.leq(x, a) && lat.leq(x, b) && !lat.leq(x, m)) {
          return AxiomReport::fail(id, {a, b, x}, "meet is not the greatest lower bound");
        }
        if (lat.leq(a, x) && lat.leq(b, x) && !lat.leq(j, x)) {
          return AxiomReport::fail(id, {a, b, x}, "join is not the least upper bound");
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (lat.meet(a, a) != a || lat.join(a, a) != a) return AxiomReport::fail(id, {a}, "not idempotent");
    for (std::size_t b = 0; b < n; ++b) {
      if (lat.meet(a, b) != lat.meet(b, a) || lat.join(a, b) != lat.join(b, a)) {
        return AxiomReport::fail(id, {a, b}, "not commutative");
      }
      if (lat.meet(a, lat.join(a, b)) != a || lat.join(a, lat.meet(a, b)) != a) {
        return AxiomReport::fail(id, {a, b}, "absorption fails");
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (lat.meet(lat.meet(a, b), c) != lat.meet(a, lat.meet(b, c)) ||
            lat.join(lat.join(a, b), c) != lat.join(a, lat.join(b, c))) {
          return AxiomReport::fail(id, {a, b, c}, "not associative");
        }
      }
    }
  }
  return AxiomReport::pass(id);
}

inline bool is_atomistic_violation(const FiniteLattice& lat, Element x) {
  ElementSet atoms_below = lat.down_set(x);
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (!lat.is_atom(i)) atoms_below.reset(i);
  }
  return join_set(lat, atoms_below) != x;
}

/// Every element must be the join of the atoms below it.
inline AxiomReport check_atomistic(const FiniteLattice& lat) {
  for (std::size_t x = 0; x < lat.size(); ++x) {
    if (is_atomistic_violation(lat, x)) {
      return AxiomReport::fail(AxiomId::atomistic, {x}, lat.name(x) + " is not the join of the atoms below it");
    }
  }
  return AxiomReport::pass(AxiomId::atomistic);
}

inline AxiomReport check_orthocomplementation(const FiniteLattice& lat, const Orthocomplementation& o) {
  const auto n = lat.size();
  constexpr auto id = AxiomId::ortho;
  if (o.size() != n) throw Error(ErrorCode::invalid_argument, "orthocomplementation is not total on the lattice");
  for (auto v : o.map) {
    if (v >= n) throw Error(ErrorCode::invalid_argument, "orthocomplementation maps outside the lattice");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (o(o(a)) != a) return AxiomReport::fail(id, {a}, "(a')' != a for a = " + lat.name(a));
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (lat.meet(a, o(a)) != lat.bottom()) return AxiomReport::fail(id, {a}, "a ^ a' != 0 for a = " + lat.name(a));
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (lat.join(a, o(a)) != lat.top()) return AxiomReport::fail(id, {a}, "a v a' != I for a = " + lat.name(a));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (lat.leq(a, b) && !lat.leq(o(b), o(a))) {
        return AxiomReport::fail(id, {a, b}, "not order-reversing on " + lat.name(a) + " <= " + lat.name(b));
      }
    }
  }
  return AxiomReport::pass(id);
}

/// True iff `p` is an atom and a < x < a v p.
inline bool is_covering_violation(const FiniteLattice& lat, Element a, Element p, Element x) {
  const auto ap = lat.join(a, p);
  return lat.is_atom(p) && lat.less(a, x) && lat.less(x, ap);
}

/// a < x < a v p implies x = a or x = a v p, for every element a and atom p.
inline AxiomReport check_covering_law(const FiniteLattice& lat) {
  for (std::size_t a = 0; a < lat.size(); ++a) {
    for (auto p : lat.atoms()) {
      const auto ap = lat.join(a, p);
      ElementSet between = lat.up_set(a) & lat.down_set(ap);
      between.reset(a);
      between.reset(ap);
      if (const auto x = between.find_first(); x != ElementSet::npos) {
        return AxiomReport::fail(AxiomId::covering, {a, p, x},
                                 lat.name(a) + " < " + lat.name(x) + " < " + lat.name(a) + " v " + lat.name(p));
      }
    }
  }
  return AxiomReport::pass(AxiomId::covering);
}

inline bool is_weak_modularity_violation(const FiniteLattice& lat, const Orthocomplementation& o, Element a,
                                         Element b) {
  return lat.leq(a, b) && lat.join(lat.meet(b, o(a)), a) != b;
}

/// a <= b implies (b ^ a') v a = b.
inline AxiomReport check_weak_modularity(const FiniteLattice& lat, const Orthocomplementation& o) {
  if (o.size() != lat.size()) throw Error(ErrorCode::invalid_argument, "orthocomplementation is not total");
  for (std::size_t a = 0; a < lat.size(); ++a) {
    for (std::size_t b = 0; b < lat.size(); ++b) {
      if (is_weak_modularity_violation(lat, o, a, b)) {
        return AxiomReport::fail(AxiomId::weak_modular, {a, b},
                                 "(" + lat.name(b) + " ^ " + lat.name(a) + "') v " + lat.name(a) + " != " + lat.name(b));
      }
    }
  }
  return AxiomReport::pass(AxiomId::weak_modular);
}

}  // namespace qlogic
