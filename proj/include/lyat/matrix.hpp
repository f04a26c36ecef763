#pragma once

#include "lyat/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lyat {

/// Coordinate column over a field.
using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& field, std::size_t n);
Vector unit_vector(const Field& field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(const Scalar& s, Vector v);
/// a += s * b
void axpy(Vector& a, const Scalar& s, const Vector& b);
std::string to_string(const Vector& v);

/// Dense row-major matrix of Scalars over a single field.
class Matrix {
public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_list() const;
  /// Row-major entries as one vector of length rows*cols.
  const Vector& flat() const { return data_; }
  static Matrix unflatten(Field field, std::size_t rows, std::size_t cols, const Vector& flat);

  bool is_zero() const;
  Matrix transpose() const;
  Vector apply(const Vector& v) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

private:
  Field field_ = Field::rationals();
  std::size_t rows_ = 0, cols_ = 0;
  Vector data_;
};

/// [a, b] = ab - ba
Matrix commutator(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced; ///< nonzero rows only
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form; zero rows are dropped. First available pivot wins.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

class Subspace;

/// Right kernel {v : m v = 0}.
Subspace nullspace(const Matrix& m);

/// Some x with a x = b (free variables set to zero), or nullopt when the
/// system is inconsistent. Throws std::invalid_argument on shape mismatch.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Sparse row: (column, nonzero value) pairs with strictly increasing columns.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Incremental Gaussian elimination for tall sparse homogeneous systems.
///
/// Rows are reduced against the current pivots as they arrive, so the stored
/// state never exceeds one row per column regardless of how many equations
/// are fed in.
class EchelonBuilder {
public:
  EchelonBuilder(Field field, std::size_t cols);

  /// Returns true when the row increased the rank.
  bool add_row(SparseRow row);
  bool add_row(const Vector& dense);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rank_; }
  bool full_rank() const { return rank_ == cols_; }

  /// Kernel of the accumulated equations.
  Subspace kernel() const;
  /// Row space of the accumulated equations.
  Subspace row_space() const;

private:
  std::vector<SparseRow> fully_reduced() const;

  Field field_;
  std::size_t cols_;
  std::size_t rank_ = 0;
  std::vector<std::optional<SparseRow>> pivot_rows_; // indexed by leading column
};

} // namespace lyat
