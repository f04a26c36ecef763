#pragma once

#include "lyat/algebra.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace lyat {

/// Endomorphisms are n x n matrices M with f(e_c) = sum_r M(r, c) e_r, and
/// are flattened row-major into K^{n^2}.

/// (f, f1, f2, f3, f4, f5) lies in Delta(T) when, for all x, y, z,
///   [f x, y] + [x, f1 y] = f2 [x, y]
///   {f x, y, z} + {x, f3 y, z} + {x, y, f4 z} = f5 {x, y, z}.
struct DeltaTuple {
  std::array<Matrix, 6> maps;
};

/// Evaluates both families on all basis tuples through the algebra's own
/// multilinear evaluation, without building any linear system.
bool in_delta(const LYAlgebra& a, const DeltaTuple& t);

enum class SpaceKind { Der, ZDer, GDer, QDer, Centroid, QCentroid, S };

std::string_view space_key(SpaceKind kind);
std::size_t block_count(SpaceKind kind);

/// One slot of a tuple template: a linear combination of unknown blocks.
struct SlotTerm {
  std::size_t block;
  Scalar coefficient;
};
using Slot = std::vector<SlotTerm>;
using TupleTemplate = std::array<Slot, 6>;

/// The defining tuple constraints of a space, over `block_count(kind)` unknown
/// endomorphisms. Block 0 is the map itself, later blocks are witnesses.
std::vector<TupleTemplate> tuple_templates(SpaceKind kind, const Field& field);

/// Solution space in K^{blocks * n^2} of the stacked linear system.
Subspace solve_delta_system(const LYAlgebra& a, std::size_t blocks,
                            const std::vector<TupleTemplate>& templates);

/// Instantiates the tuples of `kind` from concrete blocks.
std::vector<DeltaTuple> instantiate(SpaceKind kind, const std::vector<Matrix>& blocks);

class OperatorSpace {
public:
  OperatorSpace(SpaceKind kind, std::size_t n, Subspace space, std::optional<Subspace> witnesses);

  SpaceKind kind() const { return kind_; }
  std::size_t algebra_dim() const { return n_; }
  std::size_t dim() const { return space_.dim(); }
  const Subspace& space() const { return space_; }
  const std::optional<Subspace>& witness_space() const { return witnesses_; }

  std::vector<Matrix> basis() const;
  bool contains(const Matrix& f) const;

  /// All blocks (f, witnesses...) of some solution whose first block is f.
  /// For witness-free kinds this is just {f}.
  std::optional<std::vector<Matrix>> witness_for(const Matrix& f) const;
  /// Solutions whose first block vanishes: the freedom in choosing witnesses.
  Subspace witness_kernel() const;

private:
  SpaceKind kind_;
  std::size_t n_;
  Subspace space_;
  std::optional<Subspace> witnesses_;
};

OperatorSpace compute_space(const LYAlgebra& a, SpaceKind kind);

OperatorSpace der(const LYAlgebra& a);
OperatorSpace zder(const LYAlgebra& a);
OperatorSpace gder(const LYAlgebra& a);
OperatorSpace qder(const LYAlgebra& a);
OperatorSpace centroid(const LYAlgebra& a);
OperatorSpace qcentroid(const LYAlgebra& a);
/// { D : exists D' with (D, D, D', D, D, 3D'/2) in Delta(T) }; characteristic 0 only.
OperatorSpace s_space(const LYAlgebra& a);

/// Re-checks f (with witnesses for QDer/GDer/S) through in_delta.
bool satisfies(const LYAlgebra& a, SpaceKind kind, const std::vector<Matrix>& blocks);

Vector flatten(const Matrix& m);
Matrix unflatten(const Field& field, std::size_t n, const Vector& v);
Matrix elementary(const Field& field, std::size_t n, std::size_t r, std::size_t c);

} // namespace lyat
