#pragma once

// Test-side generators and oracles. The oracles work on raw mpq_class tensors
// with plain loops so that they share no code with the library's sparse
// evaluation and echelon machinery.

#include "lyat/algebra.hpp"

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace support {

using lyat::Field;
using lyat::LYAlgebra;
using lyat::Matrix;
using lyat::Scalar;
using lyat::Vector;
using Q = mpq_class;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

// ---------------------------------------------------------------- generators

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  std::mt19937_64& rng() { return rng_; }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Scalar scalar(const Field& f, long bound = 3) {
    const long num = integer(-bound, bound);
    if (!f.is_rational() || coin()) return f.from_int(num);
    return f.from_rational(Q(num, integer(1, 4)));
  }

  Matrix matrix(const Field& f, std::size_t rows, std::size_t cols, long bound = 3) {
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar(f, bound);
    return m;
  }

  /// Product of rows x k and k x cols factors, so rank <= k; sparse-ish.
  Matrix low_rank(const Field& f, std::size_t rows, std::size_t cols, std::size_t k) {
    Matrix a = matrix(f, rows, k, 2), b = matrix(f, k, cols, 2);
    return a * b;
  }

  Vector vector(const Field& f, std::size_t n) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(f));
    return v;
  }

  Matrix invertible(const Field& f, std::size_t n);

  /// Left Leibniz table: direct sum of one or two small hand-written
  /// building blocks, conjugated by a random invertible matrix.
  lyat::LeibnizTable leibniz(const Field& f = Field::rationals());

  LYAlgebra ly_algebra(const Field& f = Field::rationals()) { return lyat::from_leibniz(leibniz(f)); }

private:
  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------- oracles

/// Rank by plain fraction Gaussian elimination.
std::size_t rank(QMat m);
/// Rank over F_p of an integer matrix.
std::size_t rank_mod(std::vector<std::vector<long>> m, long p);
/// Determinant by permutation expansion (n <= 6).
Q determinant(const QMat& m);

QMat to_q(const Matrix& m);

/// Raw structure tensors of a rational algebra.
struct Tensors {
  std::size_t n;
  QVec c; // c[(i*n+j)*n+k]
  QVec d; // d[((i*n+j)*n+k)*n+l]

  explicit Tensors(const LYAlgebra& a);
  QVec bracket(const QVec& x, const QVec& y) const;
  QVec triple(const QVec& x, const QVec& y, const QVec& z) const;
  QVec unit(std::size_t i) const;
};

QVec apply_map(const QMat& m, const QVec& v);

/// LY1..LY6 pass flags evaluated directly on basis tuples.
std::array<bool, 6> axioms(const Tensors& t);

/// Linear conditions on an unknown endomorphism F (n^2 unknowns, F(r,c) at
/// r*n+c). Each slot term contributes "F applied in that slot" (or to the
/// output) with a sign; one equation per basis tuple and output coordinate.
enum class Slot { In1, In2, In3, Out };
struct Term {
  Slot slot;
  Q sign;
  std::size_t block = 0; ///< which unknown map, for systems with witnesses
};
void bracket_equations(const Tensors& t, const std::vector<Term>& terms, QMat& rows, std::size_t blocks = 1);
void triple_equations(const Tensors& t, const std::vector<Term>& terms, QMat& rows, std::size_t blocks = 1);

/// Dimensions of the witness-free spaces from the equations above.
std::size_t der_dim(const Tensors& t);
std::size_t zder_dim(const Tensors& t);
std::size_t centroid_dim(const Tensors& t, bool bracket_only = false);
std::size_t qcentroid_dim(const Tensors& t, bool bracket_only = false);

/// Spaces with witness maps: n^2 - rank(system) + rank(witness columns) is
/// the dimension of the projection of the solution set onto the first map.
std::size_t projected_dim(const Tensors& t, const QMat& rows);
std::size_t qder_dim(const Tensors& t);
std::size_t gder_dim(const Tensors& t);
std::size_t s_dim(const Tensors& t);

bool is_derivation(const Tensors& t, const QMat& f);

} // namespace support
