#pragma once

#include <qlogic/error.hpp>
#include <qlogic/gaussian_rational.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qlogic {

using Vector = std::vector<GaussianRational>;
using Matrix = std::vector<Vector>;  // row-major

/// <u, v> = sum_i u_i conj(v_i): linear in the first slot.
inline GaussianRational inner(const Vector& u, const Vector& v) {
  GaussianRational acc;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i].conj();
  return acc;
}

inline bool is_zero_vector(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

inline Vector unit_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v.at(i) = 1;
  return v;
}

/// Reduced row echelon form with zero rows dropped. Returns the pivot column
/// of each remaining row alongside.
inline std::pair<Matrix, std::vector<std::size_t>> rref(Matrix rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pick = r;
    while (pick < rows.size() && rows[pick][c].is_zero()) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[r], rows[pick]);
    const GaussianRational inv = GaussianRational(1) / rows[r][c];
    for (std::size_t k = c; k < cols; ++k) rows[r][k] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const GaussianRational f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return {std::move(rows), std::move(pivots)};
}

/// Basis of {x : rows . x = 0}, one vector per free column.
inline Matrix nullspace(const Matrix& rows, std::size_t cols) {
  auto [red, pivots] = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < red.size(); ++i) v[pivots[i]] = -red[i][free];
    out.push_back(std::move(v));
  }
  return out;
}

/// A subspace of the ambient space of Gaussian-rational column vectors, held
/// as the canonical reduced row echelon basis: equal subspaces have equal
/// bases.
class Subspace {
 public:
  static Subspace span(std::size_t ambient_dim, Matrix generators) {
    for (const auto& g : generators) {
      if (g.size() != ambient_dim) throw Error(ErrorCode::dimension_mismatch, "generator has the wrong length");
    }
    auto [basis, pivots] = rref(std::move(generators), ambient_dim);
    return Subspace(ambient_dim, std::move(basis), std::move(pivots));
  }
  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}, {}); }
  static Subspace full(std::size_t ambient_dim) {
    Matrix rows;
    for (std::size_t i = 0; i < ambient_dim; ++i) rows.push_back(unit_vector(ambient_dim, i));
    return span(ambient_dim, std::move(rows));
  }

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Vector& v) const {
    if (v.size() != ambient_) throw Error(ErrorCode::dimension_mismatch, "vector has the wrong length");
    Vector rest = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const GaussianRational f = rest[pivots_[i]];
      if (f.is_zero()) continue;
      for (std::size_t k = 0; k < ambient_; ++k) rest[k] -= f * basis_[i][k];
    }
    return is_zero_vector(rest);
  }

  /// Inclusion.
  bool leq(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw Error(ErrorCode::dimension_mismatch, "ambient dimensions differ");
    for (const auto& row : basis_) {
      if (!other.contains(row)) return false;
    }
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  std::string to_string() const {
    std::string s = "span{";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      s += (i ? ", (" : "(");
      for (std::size_t k = 0; k < ambient_; ++k) s += (k ? "," : "") + basis_[i][k].to_string();
      s += ")";
    }
    return s + "} in dim " + std::to_string(ambient_);
  }

 private:
  Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

inline void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::dimension_mismatch, "ambient dimensions " + std::to_string(a.ambient_dim()) + " and " +
                                                   std::to_string(b.ambient_dim()) + " differ");
  }
}

/// Closed linear span of A and B (in finite dimension, the sum).
inline Subspace join(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  Matrix rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), std::move(rows));
}

/// A ∩ B via the kernel of [a_1 .. a_k | -b_1 .. -b_l].
inline Subspace meet(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const auto n = a.ambient_dim();
  const auto k = a.dim();
  const auto l = b.dim();
  if (k == 0 || l == 0) return Subspace::zero(n);
  Matrix system(n, Vector(k + l));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < k; ++i) system[r][i] = a.basis()[i][r];
    for (std::size_t j = 0; j < l; ++j) system[r][k + j] = -b.basis()[j][r];
  }
  Matrix generators;
  for (const auto& coeffs : nullspace(system, k + l)) {
    Vector v(n);
    for (std::size_t i = 0; i < k; ++i) {
      if (coeffs[i].is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r) v[r] += coeffs[i] * a.basis()[i][r];
    }
    generators.push_back(std::move(v));
  }
  return Subspace::span(n, std::move(generators));
}

/// {y : <y, x> = 0 for all x in A}.
inline Subspace ortho(const Subspace& a) {
  Matrix conj_rows;
  for (const auto& row : a.basis()) {
    Vector c;
    c.reserve(row.size());
    for (const auto& x : row) c.push_back(x.conj());
    conj_rows.push_back(std::move(c));
  }
  return Subspace::span(a.ambient_dim(), nullspace(conj_rows, a.ambient_dim()));
}

inline Matrix transpose(const Matrix& m, std::size_t cols) {
  Matrix out(cols, Vector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[j][i] = m[i][j];
  }
  return out;
}

inline Matrix conjugate_transpose(const Matrix& m, std::size_t cols) {
  Matrix out(cols, Vector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[j][i] = m[i][j].conj();
  }
  return out;
}

inline Matrix multiply(const Matrix& a, const Matrix& b, std::size_t b_cols) {
  Matrix out(a.size(), Vector(b_cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b_cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

/// Inverse of a square invertible matrix by Gauss-Jordan elimination.
inline Matrix inverse(const Matrix& m) {
  const auto n = m.size();
  Matrix aug(n, Vector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto [red, pivots] = rref(std::move(aug), 2 * n);
  if (red.size() != n || (n > 0 && pivots.back() != n - 1)) {
    throw Error(ErrorCode::invalid_argument, "matrix is singular");
  }
  Matrix out(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = red[i][n + j];
  }
  return out;
}

/// Orthogonal projection onto A: M (M* M)^-1 M*, with the basis of A as the
/// columns of M.
inline Matrix projection(const Subspace& a) {
  const auto n = a.ambient_dim();
  const auto k = a.dim();
  if (k == 0) return Matrix(n, Vector(n));
  const Matrix cols = transpose(a.basis(), n);      // n x k
  const Matrix adj = conjugate_transpose(cols, k);  // k x n
  const Matrix gram = multiply(adj, cols, k);
  return multiply(multiply(cols, inverse(gram), k), adj, n);
}

}  // namespace qlogic
