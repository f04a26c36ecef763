#pragma once

#include "lyat/operator_spaces.hpp"
#include "lyat/report.hpp"

#include <optional>

namespace lyat {

/// Every operator space of one algebra, computed once and shared by the audits.
struct SpaceSet {
  OperatorSpace der;
  OperatorSpace zder;
  OperatorSpace qder;
  OperatorSpace gder;
  OperatorSpace centroid;
  OperatorSpace qcentroid;
  std::optional<OperatorSpace> s; ///< characteristic 0 only
  Subspace center;

  const OperatorSpace& get(SpaceKind kind) const;
};

SpaceSet compute_spaces(const LYAlgebra& a);

/// ZDer <= Der <= QDer <= GDer <= gl(T), and C <= QDer n QC.
Report audit_inclusion_chain(const LYAlgebra& a, const SpaceSet& s);
Report audit_inclusion_chain(const LYAlgebra& a);

/// [Der, C] <= C, [QDer, QC] <= QC, C Der <= Der, C <= QDer, [QC, QC] <= QDer,
/// QDer + QC <= GDer, and QC + [QC, QC] closed under commutator.
Report audit_lemma_3_1(const LYAlgebra& a, const SpaceSet& s);
Report audit_lemma_3_1(const LYAlgebra& a);

/// [c, q] maps T into Z(T) for c in C, q in QC.
Report audit_prop_3_3(const LYAlgebra& a, const SpaceSet& s);
Report audit_prop_3_3(const LYAlgebra& a);

/// Given (D, D, D', D, D, 3D'/2), (D, -D, 0, -D, 0, 0), (D, -D, 0, 0, -D, 0)
/// in Delta(T), checks [x, D[y,z]] = [x, [Dy, z]] and
/// {D{u,v,y}, x, z} = {{Du, v, y}, x, z}. Throws std::invalid_argument if the
/// tuples are not in Delta(T), std::domain_error outside characteristic 0.
Report audit_lemma_3_4(const LYAlgebra& a, const Matrix& d, const Matrix& d_prime);

/// Z(T) = 0 implies C = S n QC.
Report audit_prop_3_5(const LYAlgebra& a, const SpaceSet& s);
Report audit_prop_3_5(const LYAlgebra& a);

/// D1 D2 + D2 D1
Matrix jordan_product(const Matrix& d1, const Matrix& d2);
/// Closure of QC under the Jordan product and the Jordan identity on basis pairs.
Report audit_jordan(const LYAlgebra& a, const SpaceSet& s);
Report audit_jordan(const LYAlgebra& a);

/// (1) QC closed under composition implies closed under commutator;
/// (2) for centerless T, commutator-closure of QC iff [QC, QC] = 0.
Report audit_thm_3_9(const LYAlgebra& a, const SpaceSet& s);
Report audit_thm_3_9(const LYAlgebra& a);

/// For D in C: Ker D and Im D are ideals.
Report audit_prop_3_11_1(const LYAlgebra& a, const Matrix& d);
/// For centerless T, D in QC with X^3 not dividing the minimal polynomial of D:
/// T = Ker D (+) Im D.
Report audit_lemma_3_12(const LYAlgebra& a, const Matrix& d);

/// Closure facts stated alongside the definitions: Der, QDer, GDer closed under
/// commutator; C closed under composition; C commutative when centerless; GDer
/// preserves the center; ZDer <= C.
Report audit_closures(const LYAlgebra& a, const SpaceSet& s);

/// Every basis element of every space re-checked through in_delta, with
/// witnesses recovered from the witness space where needed.
Report audit_reverification(const LYAlgebra& a, const SpaceSet& s);

/// All of the above, with the per-map audits run over the relevant bases.
Report audit_all(const LYAlgebra& a, const SpaceSet& s);

} // namespace lyat
