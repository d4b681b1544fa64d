#pragma once

// Seeded exact probes of the Hilbert lattice laws and of the coupling
// conditions for tensor-product embeddings.

#include <qlogic/lattice.hpp>
#include <qlogic/subspace.hpp>

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace qlogic {

/// Draws small exact entries: real and imaginary parts n/d with
/// n in {-2..2} and d in {1, 2}. Uses only the raw mt19937_64 stream so the
/// sequence is identical on every standard library.
class ExactSampler {
 public:
  explicit ExactSampler(std::uint64_t seed) : rng_(seed) {}

  /// Independent stream for trial `t` of a run seeded with `seed`.
  static ExactSampler for_trial(std::uint64_t seed, std::uint64_t t) {
    return ExactSampler(seed ^ (0x9E3779B97F4A7C15ULL * (t + 1)));
  }

  GaussianRational entry() { return {part(), part()}; }

  Vector vector(std::size_t dim) {
    Vector v(dim);
    for (auto& x : v) x = entry();
    return v;
  }

  Vector nonzero_vector(std::size_t dim) {
    for (;;) {
      auto v = vector(dim);
      if (!is_zero_vector(v)) return v;
    }
  }

  /// Span of k random vectors, k uniform in [0, dim].
  Subspace subspace(std::size_t dim) {
    const auto k = uniform(dim + 1);
    Matrix gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(vector(dim));
    return Subspace::span(dim, std::move(gens));
  }

  Subspace ray(std::size_t dim) { return Subspace::span(dim, {nonzero_vector(dim)}); }

  /// A random vector of `s` (zero when s is zero).
  Vector vector_in(const Subspace& s) {
    Vector v(s.ambient_dim());
    for (const auto& row : s.basis()) {
      const auto c = entry();
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += c * row[k];
    }
    return v;
  }

  std::size_t uniform(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

 private:
  mpq_class part() {
    const long num = static_cast<long>(rng_() % 5) - 2;
    const long den = static_cast<long>(rng_() % 2) + 1;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  std::mt19937_64 rng_;
};

/// Result of a sampled law: how many instances were tried and the first
/// counterexample, if any.
struct ProbeResult {
  AxiomId axiom;
  bool holds = true;
  std::size_t instances = 0;
  std::string counterexample;
};

/// Samples instances of the covering law, weak modularity and
/// atomistic-join on the subspace lattice of a `dim`-dimensional space.
inline std::vector<ProbeResult> random_axiom_probe(std::size_t dim, std::size_t trials, std::uint64_t seed) {
  if (dim < 2 || dim > 6) throw Error(ErrorCode::invalid_argument, "probe dimension must be in [2, 6]");
  if (trials < 1) throw Error(ErrorCode::invalid_argument, "at least one trial is required");
  ProbeResult covering{AxiomId::covering}, modular{AxiomId::weak_modular}, atomistic{AxiomId::atomistic};
  auto record = [](ProbeResult& r, bool ok, auto&& describe) {
    ++r.instances;
    if (!ok && r.holds) {
      r.holds = false;
      r.counterexample = describe();
    }
  };
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = ExactSampler::for_trial(seed, t);

    const auto a = rng.subspace(dim);
    const auto p = rng.ray(dim);
    const auto ap = join(a, p);
    std::vector<Subspace> candidates{a, ap, join(a, Subspace::span(dim, {rng.vector_in(ap)})),
                                     meet(ap, join(a, rng.subspace(dim)))};
    for (const auto& x : candidates) {
      const bool between = a.leq(x) && x.leq(ap) && !(x == a) && !(x == ap);
      record(covering, !between, [&] { return "a=" + a.to_string() + " p=" + p.to_string() + " x=" + x.to_string(); });
    }

    const auto lo = rng.subspace(dim);
    const auto hi = join(lo, rng.subspace(dim));
    record(modular, join(meet(hi, ortho(lo)), lo) == hi,
           [&] { return "a=" + lo.to_string() + " b=" + hi.to_string(); });

    const auto s = rng.subspace(dim);
    Subspace rays = Subspace::zero(dim);
    for (const auto& row : s.basis()) rays = join(rays, Subspace::span(dim, {row}));
    for (int extra = 0; extra < 2; ++extra) {
      const auto v = rng.vector_in(s);
      if (!is_zero_vector(v)) rays = join(rays, Subspace::span(dim, {v}));
    }
    record(atomistic, rays == s, [&] { return "a=" + s.to_string(); });
  }
  return {covering, modular, atomistic};
}

inline Vector kronecker(const Vector& u, const Vector& v) {
  Vector out;
  out.reserve(u.size() * v.size());
  for (const auto& x : u) {
    for (const auto& y : v) out.push_back(x * y);
  }
  return out;
}

/// h1(A) = A (x) H2 and h2(B) = H1 (x) B inside H1 (x) H2, with basis
/// vector e_i (x) f_j at index i * dim2 + j.
class TensorEmbedding {
 public:
  static constexpr std::size_t max_product_dim = 36;

  TensorEmbedding(std::size_t dim1, std::size_t dim2) : dim1_(dim1), dim2_(dim2) {
    if (dim1 <= 2 || dim2 <= 2) throw Error(ErrorCode::dimension_too_small, "both factor dimensions must exceed 2");
    if (dim1 * dim2 > max_product_dim) {
      throw Error(ErrorCode::dimension_too_large, "product dimension exceeds " + std::to_string(max_product_dim));
    }
  }

  std::size_t dim1() const noexcept { return dim1_; }
  std::size_t dim2() const noexcept { return dim2_; }
  std::size_t product_dim() const noexcept { return dim1_ * dim2_; }

  Subspace left(const Subspace& a) const {
    check(a, dim1_);
    Matrix gens;
    for (const auto& row : a.basis()) {
      for (std::size_t j = 0; j < dim2_; ++j) gens.push_back(kronecker(row, unit_vector(dim2_, j)));
    }
    return Subspace::span(product_dim(), std::move(gens));
  }

  Subspace right(const Subspace& b) const {
    check(b, dim2_);
    Matrix gens;
    for (std::size_t i = 0; i < dim1_; ++i) {
      for (const auto& row : b.basis()) gens.push_back(kronecker(unit_vector(dim1_, i), row));
    }
    return Subspace::span(product_dim(), std::move(gens));
  }

 private:
  static void check(const Subspace& s, std::size_t dim) {
    if (s.ambient_dim() != dim) throw Error(ErrorCode::dimension_mismatch, "subspace is not in the factor space");
  }

  std::size_t dim1_;
  std::size_t dim2_;
};

inline TensorEmbedding tensor_embedding_pair(std::size_t dim1, std::size_t dim2) { return {dim1, dim2}; }

using LatticeMap = std::function<Subspace(const Subspace&)>;

/// Compatibility of two subspaces: their orthogonal projections commute.
inline bool compatible(const Subspace& x, const Subspace& y) {
  const auto n = x.ambient_dim();
  const auto px = projection(x);
  const auto py = projection(y);
  return multiply(px, py, n) == multiply(py, px, n);
}

/// Lattice form of compatibility: x = (x ^ y) v (x ^ y').
inline bool compatible_lattice_form(const Subspace& x, const Subspace& y) {
  return join(meet(x, y), meet(x, ortho(y))) == x;
}

struct CouplingCondition {
  std::string id;
  std::string statement;
  bool holds = true;
  std::size_t instances = 0;
  std::string counterexample;
  std::vector<Subspace> witness;  // the offending inputs, in statement order
};

struct CouplingReport {
  std::size_t dim1 = 0;
  std::size_t dim2 = 0;
  std::size_t trials = 0;
  std::size_t ray_pairs = 0;
  std::uint64_t seed = 0;
  std::vector<CouplingCondition> conditions;
  // Samples where the two compatibility formulations disagreed.
  std::size_t compatibility_disagreements = 0;

  std::size_t passed() const {
    std::size_t n = 0;
    for (const auto& c : conditions) n += c.holds;
    return n;
  }
  bool all_hold() const { return passed() == conditions.size(); }
  const CouplingCondition& condition(std::string_view id) const {
    for (const auto& c : conditions) {
      if (c.id == id) return c;
    }
    throw Error(ErrorCode::invalid_argument, "no coupling condition " + std::string(id));
  }
};

struct CouplingSampling {
  std::size_t trials = 200;
  std::size_t ray_pairs = 200;
  std::uint64_t seed = 0;
  std::size_t family_size = 3;
};

/// Checks the seven coupling conditions for h1 : L(H1) -> L(H) and
/// h2 : L(H2) -> L(H) on seeded samples. Verdicts cover the sampled
/// instances only.
inline CouplingReport check_coupling_conditions(const LatticeMap& h1, const LatticeMap& h2, std::size_t dim1,
                                                std::size_t dim2, const CouplingSampling& sampling) {
  CouplingReport report{dim1, dim2, sampling.trials, sampling.ray_pairs, sampling.seed, {}, 0};
  CouplingCondition mono1{"monotone_h1", "A1 <= B1 implies h1(A1) <= h1(B1)"};
  CouplingCondition mono2{"monotone_h2", "A2 <= B2 implies h2(A2) <= h2(B2)"};
  CouplingCondition join1{"join_h1", "h1(v_i A1^i) = v_i h1(A1^i)"};
  CouplingCondition join2{"join_h2", "h2(v_i A2^i) = v_i h2(A2^i)"};
  CouplingCondition top{"top", "h1(H1) = h2(H2) = H"};
  CouplingCondition compat{"compatible", "h1(C1) and h2(C2) are compatible"};
  CouplingCondition rays{"ray_meet", "h1(p1) ^ h2(p2) is a ray of H"};

  auto fail = [](CouplingCondition& c, std::string text, std::vector<Subspace> witness) {
    if (!c.holds) return;
    c.holds = false;
    c.counterexample = std::move(text);
    c.witness = std::move(witness);
  };
  const auto n = dim1 * dim2;

  for (std::size_t t = 0; t < sampling.trials; ++t) {
    auto rng = ExactSampler::for_trial(sampling.seed, t);

    auto monotone = [&](CouplingCondition& c, const LatticeMap& h, std::size_t dim) {
      const auto a = rng.subspace(dim);
      const auto b = join(a, rng.subspace(dim));
      ++c.instances;
      if (!h(a).leq(h(b))) fail(c, "A=" + a.to_string() + " B=" + b.to_string(), {a, b});
    };
    monotone(mono1, h1, dim1);
    monotone(mono2, h2, dim2);

    auto joins = [&](CouplingCondition& c, const LatticeMap& h, std::size_t dim) {
      std::vector<Subspace> family;
      const auto size = 1 + rng.uniform(sampling.family_size);
      for (std::size_t i = 0; i < size; ++i) family.push_back(rng.subspace(dim));
      Subspace joined = Subspace::zero(dim);
      Subspace images = Subspace::zero(n);
      for (const auto& f : family) {
        joined = join(joined, f);
        images = join(images, h(f));
      }
      ++c.instances;
      if (!(h(joined) == images)) {
        std::string text = "family:";
        for (const auto& f : family) text += " " + f.to_string();
        fail(c, text, family);
      }
    };
    joins(join1, h1, dim1);
    joins(join2, h2, dim2);

    ++top.instances;
    const auto full = Subspace::full(n);
    if (!(h1(Subspace::full(dim1)) == full) || !(h2(Subspace::full(dim2)) == full)) {
      fail(top, "h1(H1) or h2(H2) differs from H", {h1(Subspace::full(dim1)), h2(Subspace::full(dim2))});
    }

    const auto c1 = rng.subspace(dim1);
    const auto c2 = rng.subspace(dim2);
    const auto x = h1(c1);
    const auto y = h2(c2);
    const bool commute = compatible(x, y);
    if (commute != compatible_lattice_form(x, y)) ++report.compatibility_disagreements;
    ++compat.instances;
    if (!commute) fail(compat, "C1=" + c1.to_string() + " C2=" + c2.to_string(), {c1, c2});
  }

  for (std::size_t t = 0; t < sampling.ray_pairs; ++t) {
    auto rng = ExactSampler::for_trial(sampling.seed ^ 0x5851F42D4C957F2DULL, t);
    const auto p1 = rng.ray(dim1);
    const auto p2 = rng.ray(dim2);
    ++rays.instances;
    const auto m = meet(h1(p1), h2(p2));
    if (m.dim() != 1) {
      fail(rays, "p1=" + p1.to_string() + " p2=" + p2.to_string() + " meet dim " + std::to_string(m.dim()), {p1, p2});
    }
  }

  report.conditions = {mono1, mono2, join1, join2, top, compat, rays};
  return report;
}

inline CouplingReport check_coupling_conditions(const TensorEmbedding& h, const CouplingSampling& sampling) {
  return check_coupling_conditions([&](const Subspace& a) { return h.left(a); },
                                   [&](const Subspace& b) { return h.right(b); }, h.dim1(), h.dim2(), sampling);
}

}  // namespace qlogic
