#pragma once

#include "lyat/matrix.hpp"

#include <optional>
#include <vector>

namespace lyat {

/// A linear subspace of K^m in canonical form: the nonzero rows of the RREF
/// of any spanning set. Two subspaces are equal iff their bases are equal.
class Subspace {
public:
  static Subspace zero(Field field, std::size_t ambient_dim);
  static Subspace full(Field field, std::size_t ambient_dim);
  static Subspace span(Field field, std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& m);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }

  const Matrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_list(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& w) const;
  /// Coefficients of v with respect to basis(), or nullopt if v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;

  /// Image under the coordinate projection onto [first, first + count).
  Subspace project(std::size_t first, std::size_t count) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  friend Subspace nullspace(const Matrix&);
  friend class EchelonBuilder;

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& w);
Subspace subspace_intersect(const Subspace& u, const Subspace& w);
inline bool subspace_contains(const Subspace& u, const Vector& v) { return u.contains(v); }
inline bool subspace_contains(const Subspace& u, const Subspace& w) { return u.contains(w); }
inline bool subspace_equal(const Subspace& u, const Subspace& w) { return u == w; }
bool is_direct_sum(const Subspace& u, const Subspace& w);

/// Span of the standard basis vectors at the non-pivot coordinates of u.
Subspace complement(const Subspace& u);
/// Same construction after reversing the coordinate order (pivots chosen from
/// the last column backwards). Used to test choice-independence.
Subspace complement_reversed(const Subspace& u);

/// Kernel and image of a square matrix as subspaces of K^n.
Subspace kernel_of(const Matrix& m);
Subspace image_of(const Matrix& m);

} // namespace lyat
