#pragma once

#include "lyat/operator_spaces.hpp"
#include "lyat/report.hpp"

namespace lyat {

enum class ComplementChoice { Pivot, Reversed };

/// The graded algebra T t + T t^2 + T t^3 with basis order
/// (e_1 t, ..., e_n t, e_1 t^2, ..., e_n t^2, e_1 t^3, ..., e_n t^3) and
///   [x t^i, y t^j]          = [x, y] t^2       if i + j = 2, else 0
///   {x t^i, y t^j, z t^k}   = {x, y, z} t^3    if i + j + k = 3, else 0.
/// U and V are complements with T = U + [T,T] = V + {T,T,T}.
struct CheckAlgebra {
  LYAlgebra base;
  LYAlgebra total;
  std::vector<int> grading;
  Subspace brackets; ///< [T, T]
  Subspace triples;  ///< {T, T, T}
  Subspace u;
  Subspace v;
  AxiomReport axioms; ///< of `total`
};

/// Never throws on axiom failure of the enlarged algebra; the report records it.
CheckAlgebra build_check(const LYAlgebra& a, ComplementChoice choice = ComplementChoice::Pivot);

/// Projection of K^n onto `target` along `along` (which must be complementary).
Matrix projection(const Subspace& target, const Subspace& along);

/// phi(D) acts as D on T t, as D' P on T t^2 and as D'' Q on T t^3, where P
/// projects onto [T,T] along U and Q onto {T,T,T} along V. Throws
/// std::invalid_argument unless (D, D, D', D, D, D'') is in Delta(T).
Matrix phi(const CheckAlgebra& ca, const Matrix& d, const Matrix& d1, const Matrix& d2);

/// phi of every quasi-derivation basis element, using the solver's witnesses.
std::vector<Matrix> phi_of_qder_basis(const CheckAlgebra& ca, const OperatorSpace& qd);

/// Injectivity of phi on QDer(T), independence from the witness choice, and
/// phi(QDer(T)) inside Der(T-check).
Report verify_prop_4_1(const CheckAlgebra& ca);

/// For centerless T: Der(T-check) = phi(QDer(T)) (+) ZDer(T-check), with
/// Der and ZDer of the enlarged algebra computed directly; also the center
/// and derived algebra of the enlarged algebra and a second complement choice.
Report verify_prop_4_2(const CheckAlgebra& ca);

} // namespace lyat
