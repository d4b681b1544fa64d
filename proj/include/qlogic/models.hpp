#pragma once

// Small named lattices used throughout the tests and the bundled model zoo.

#include <qlogic/lattice.hpp>

#include <string>
#include <vector>

namespace qlogic::models {

inline std::string subset_name(std::size_t mask, std::size_t n) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1U) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  }
  return s + "}";
}

/// P({1..n}) ordered by inclusion; element index is the subset's bitmask,
/// the orthocomplement is the set complement.
inline OrthoLattice power_set(std::size_t n) {
  if (n > 12) throw Error(ErrorCode::too_large, "power set over more than 12 points");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::string> names;
  std::vector<ElementSet> down(size, ElementSet(size));
  Orthocomplementation o;
  for (std::size_t b = 0; b < size; ++b) {
    names.push_back(subset_name(b, n));
    for (std::size_t a = 0; a < size; ++a) {
      if ((a & b) == a) down[b].set(a);
    }
    o.map.push_back((size - 1) ^ b);
  }
  return {FiniteLattice::from_down_sets(std::move(names), std::move(down)), std::move(o)};
}

/// 0 < c1 < ... < 1 with `n` elements in total (n >= 2).
inline FiniteLattice chain(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "a chain needs at least two elements");
  std::vector<std::string> names{"0"};
  for (std::size_t i = 1; i + 1 < n; ++i) names.push_back(n <= 28 ? std::string(1, char('a' + i - 1)) : "c" + std::to_string(i));
  names.push_back("1");
  std::vector<IndexPair> covers;
  for (std::size_t i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return build_lattice(std::move(names), covers);
}

/// MOn: bounds plus 2n pairwise incomparable atoms p, p', q, q', ...
/// Element order is 0, p, p', q, q', ..., 1.
inline OrthoLattice mo(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "MOn needs n >= 1");
  static constexpr std::string_view letters = "pqrstuvw";
  std::vector<std::string> names{"0"};
  for (std::size_t i = 0; i < n; ++i) {
    const std::string base = n <= letters.size() ? std::string(1, letters[i]) : "p" + std::to_string(i + 1);
    names.push_back(base);
    names.push_back(base + "'");
  }
  names.push_back("1");
  const std::size_t top = names.size() - 1;
  std::vector<IndexPair> covers;
  Orthocomplementation o{std::vector<Element>(names.size())};
  o.map[0] = top;
  o.map[top] = 0;
  for (std::size_t i = 1; i < top; ++i) {
    covers.emplace_back(0, i);
    covers.emplace_back(i, top);
    o.map[i] = (i % 2 == 1) ? i + 1 : i - 1;
  }
  return {build_lattice(std::move(names), covers), std::move(o)};
}

/// The benzene ring O6: 0 < a < b' < 1 and 0 < b < a' < 1.
inline OrthoLattice o6() {
  std::vector<std::string> names{"0", "a", "b", "a'", "b'", "1"};
  const std::vector<IndexPair> covers{{0, 1}, {0, 2}, {1, 4}, {2, 3}, {3, 5}, {4, 5}};
  Orthocomplementation o{{5, 3, 4, 1, 2, 0}};
  return {build_lattice(std::move(names), covers), std::move(o)};
}

}  // namespace qlogic::models
