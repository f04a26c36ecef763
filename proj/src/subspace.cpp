#include "lyat/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace lyat {

Subspace Subspace::zero(Field field, std::size_t ambient_dim) {
  return Subspace(Matrix(field, 0, ambient_dim), {});
}

Subspace Subspace::full(Field field, std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(Matrix::identity(field, ambient_dim), std::move(pivots));
}

Subspace Subspace::span(Field field, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return zero(field, ambient_dim);
  return row_space(Matrix::from_rows(field, ambient_dim, vectors));
}

Subspace Subspace::row_space(const Matrix& m) {
  auto [reduced, pivots] = rref(m);
  return Subspace(std::move(reduced), std::move(pivots));
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  Vector coeffs;
  coeffs.reserve(dim());
  Vector residual = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    Scalar c = v[pivots_[i]];
    coeffs.push_back(c);
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_dim(); ++j)
      if (!basis_(i, j).is_zero()) residual[j] -= c * basis_(i, j);
  }
  if (!lyat::is_zero(residual)) return std::nullopt;
  return coeffs;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& w) const {
  if (w.ambient_dim() != ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  for (std::size_t i = 0; i < w.dim(); ++i)
    if (!contains(w.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::project(std::size_t first, std::size_t count) const {
  if (first + count > ambient_dim()) throw std::out_of_range("projection range");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < dim(); ++i) {
    Vector r;
    r.reserve(count);
    for (std::size_t j = first; j < first + count; ++j) r.push_back(basis_(i, j));
    rows.push_back(std::move(r));
  }
  return span(field(), count, rows);
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  return a.basis_ == b.basis_;
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  auto rows = u.basis_vectors();
  for (auto& r : w.basis_vectors()) rows.push_back(std::move(r));
  return Subspace::span(u.field(), u.ambient_dim(), rows);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  if (u.is_zero() || w.is_zero()) return Subspace::zero(u.field(), u.ambient_dim());
  // Kernel of [U^T | W^T]: pairs (a, b) with sum a_i u_i + sum b_j w_j = 0.
  std::vector<Vector> cols = u.basis_vectors();
  for (auto& r : w.basis_vectors()) cols.push_back(std::move(r));
  Subspace relations = nullspace(Matrix::from_columns(u.field(), u.ambient_dim(), cols));
  std::vector<Vector> out;
  for (const auto& k : relations.basis_vectors()) {
    Vector v = zero_vector(u.field(), u.ambient_dim());
    for (std::size_t i = 0; i < u.dim(); ++i) axpy(v, k[i], u.basis().row(i));
    out.push_back(std::move(v));
  }
  return Subspace::span(u.field(), u.ambient_dim(), out);
}

bool is_direct_sum(const Subspace& u, const Subspace& w) {
  return subspace_intersect(u, w).is_zero();
}

Subspace complement(const Subspace& u) {
  std::vector<bool> is_pivot(u.ambient_dim(), false);
  for (auto p : u.pivots()) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t j = 0; j < u.ambient_dim(); ++j)
    if (!is_pivot[j]) out.push_back(unit_vector(u.field(), u.ambient_dim(), j));
  return Subspace::span(u.field(), u.ambient_dim(), out);
}

Subspace complement_reversed(const Subspace& u) {
  const std::size_t m = u.ambient_dim();
  auto rows = u.basis_vectors();
  for (auto& r : rows) std::reverse(r.begin(), r.end());
  Subspace flipped = Subspace::span(u.field(), m, rows);
  std::vector<bool> is_pivot(m, false);
  for (auto p : flipped.pivots()) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t j = 0; j < m; ++j)
    if (!is_pivot[j]) out.push_back(unit_vector(u.field(), m, m - 1 - j));
  return Subspace::span(u.field(), m, out);
}

Subspace kernel_of(const Matrix& m) { return nullspace(m); }

Subspace image_of(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.field(), m.rows(), cols);
}

} // namespace lyat
