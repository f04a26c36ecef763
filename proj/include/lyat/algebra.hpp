#pragma once

#include "lyat/matrix.hpp"
#include "lyat/subspace.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lyat {

/// Raised when structure constants violate [a,a] = 0 or {a,a,b} = 0, or when
/// an input table assigns conflicting values to the same product.
class InvariantError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An element of the algebra: its coordinate column in the chosen basis.
using Element = Vector;

/// Finite-dimensional Lie-Yamaguti algebra given by structure constants
///   [e_i, e_j]      = sum_k c(i,j,k) e_k
///   {e_i, e_j, e_k} = sum_l d(i,j,k,l) e_l
/// Both tensors are skew in their first two indices; the constructor rejects
/// anything else. The remaining axioms are checked by check_axioms().
class LYAlgebra {
public:
  LYAlgebra(Field field, std::vector<std::string> labels, Vector bracket_constants,
            Vector triple_constants);

  static LYAlgebra abelian(Field field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return bracket_[(i * n_ + j) * n_ + k];
  }
  const Scalar& d(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return triple_[((i * n_ + j) * n_ + k) * n_ + l];
  }
  const Vector& bracket_constants() const { return bracket_; }
  const Vector& triple_constants() const { return triple_; }

  /// Nonzero entries of [e_i, e_j] and {e_i, e_j, e_k}.
  const SparseRow& bracket_basis(std::size_t i, std::size_t j) const {
    return sparse_bracket_[i * n_ + j];
  }
  const SparseRow& triple_basis(std::size_t i, std::size_t j, std::size_t k) const {
    return sparse_triple_[(i * n_ + j) * n_ + k];
  }

  Element basis_element(std::size_t i) const { return unit_vector(field_, n_, i); }

  Element bracket(const Element& x, const Element& y) const;
  Element triple(const Element& x, const Element& y, const Element& z) const;

  friend bool operator==(const LYAlgebra& a, const LYAlgebra& b);

private:
  Field field_;
  std::size_t n_;
  std::vector<std::string> labels_;
  Vector bracket_;
  Vector triple_;
  std::vector<SparseRow> sparse_bracket_;
  std::vector<SparseRow> sparse_triple_;
};

/// Accumulates a product table that may list only one orientation of each
/// skew pair; the other orientation is filled in and unlisted products are 0.
class LYAlgebraBuilder {
public:
  LYAlgebraBuilder(Field field, std::vector<std::string> labels);

  std::size_t dim() const { return labels_.size(); }
  const Field& field() const { return field_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Throws InvariantError on [a,a] != 0 or on a conflicting earlier entry.
  LYAlgebraBuilder& set_bracket(std::size_t i, std::size_t j, const Element& value);
  LYAlgebraBuilder& set_triple(std::size_t i, std::size_t j, std::size_t k, const Element& value);

  LYAlgebra build() const;

private:
  Field field_;
  std::vector<std::string> labels_;
  std::vector<std::optional<Element>> bracket_;
  std::vector<std::optional<Element>> triple_;
};

struct AxiomFailure {
  std::string axiom;                 ///< "LY1" .. "LY6"
  std::vector<std::size_t> indices;  ///< basis indices of the first failing tuple
  Element defect;                    ///< nonzero value of (lhs - rhs)
};

struct AxiomReport {
  std::array<bool, 6> pass{true, true, true, true, true, true};
  std::vector<AxiomFailure> failures; ///< first counterexample per failing axiom

  bool all_pass() const { return failures.empty(); }
  std::string summary() const;
};

/// Checks LY1..LY6 on all basis tuples (sufficient by multilinearity).
AxiomReport check_axioms(const LYAlgebra& a);

/// Span of all [e_i, e_j].
Subspace bracket_span(const LYAlgebra& a);
/// Span of all {e_i, e_j, e_k}.
Subspace triple_span(const LYAlgebra& a);
/// [T, T] + {T, T, T}
Subspace derived_algebra(const LYAlgebra& a);

/// { x : {x, a, y} = {y, a, x} = 0 for all a in I, y in T; [x, y] = 0 for all y in T }
Subspace centralizer(const LYAlgebra& a, const Subspace& ideal);
Subspace center(const LYAlgebra& a);

/// [T, I], {T, T, I}, {T, I, T}, {I, T, T} all inside I.
bool is_ideal(const LYAlgebra& a, const Subspace& i);

/// Matrix of z -> {x, y, z}.
Matrix left_multiplication(const LYAlgebra& a, const Element& x, const Element& y);

/// Product table of a (left) Leibniz algebra: e_i . e_j = sum_k p[(i*n+j)*n+k] e_k.
struct LeibnizTable {
  Field field = Field::rationals();
  std::vector<std::string> labels;
  Vector products;

  std::size_t dim() const { return labels.size(); }
  Element multiply(const Element& x, const Element& y) const;
};

/// First basis triple (i, j, k) violating x.(y.z) = (x.y).z + y.(x.z), if any.
std::optional<std::array<std::size_t, 3>> leibniz_defect(const LeibnizTable& table);

/// [x, y] = (x.y - y.x)/2, {x, y, z} = -(x.y).z/4.
/// Throws std::invalid_argument in characteristic 2 or when the table is not
/// a left Leibniz algebra.
LYAlgebra from_leibniz(const LeibnizTable& table);

/// Structure constants f o mu_1, f o mu_2. Axioms are not asserted.
LYAlgebra perturb(const LYAlgebra& a, const Matrix& f);

} // namespace lyat
