#pragma once

#include "lyat/operator_spaces.hpp"
#include "lyat/report.hpp"

#include <optional>
#include <random>

namespace lyat {

/// A bilinear map g and a trilinear map h on T, stored like the structure
/// constants: g(e_i, e_j) = sum_k g[(i*n+j)*n+k] e_k, and likewise for h.
struct CochainPair {
  Field field = Field::rationals();
  std::size_t n = 0;
  Vector g;
  Vector h;

  static CochainPair zero(const Field& field, std::size_t n);
  /// Inverse of flat(): the first n^3 coordinates are g, the rest h.
  static CochainPair from_flat(const Field& field, std::size_t n, const Vector& v);

  Vector flat() const;
  std::size_t flat_dim() const { return n * n * n + n * n * n * n; }
  /// Both maps skew in their first two arguments.
  bool is_skew() const;

  Element apply_g(const Element& x, const Element& y) const;
  Element apply_h(const Element& x, const Element& y, const Element& z) const;

  friend bool operator==(const CochainPair&, const CochainPair&) = default;
};

CochainPair operator+(const CochainPair& a, const CochainPair& b);
CochainPair operator*(const Scalar& s, const CochainPair& a);

/// The two products of the algebra as a cochain pair.
CochainPair structure_pair(const LYAlgebra& a);
/// (f o mu_1, f o mu_2)
CochainPair compose(const Matrix& f, const LYAlgebra& a);

/// delta_I(f)(x,y)    = [fx, y] + [x, fy] - f[x, y]
/// delta_II(f)(x,y,z) = {fx, y, z} + {x, fy, z} + {x, y, fz} - f{x, y, z}
/// Throws std::domain_error in positive characteristic unless allowed.
CochainPair delta1(const LYAlgebra& a, const Matrix& f, bool allow_positive_characteristic = false);

/// Columns delta1(E_rc), indexed like flattened endomorphisms.
Matrix delta1_matrix(const LYAlgebra& a, bool allow_positive_characteristic = false);

/// { delta1(f) : f in End(T) }
Subspace b2b3_regular(const LYAlgebra& a, bool allow_positive_characteristic = false);
/// { (delta_I(f), delta_II(g)) : f, g in End(T) }
Subspace b2b3_regular_pairs(const LYAlgebra& a, bool allow_positive_characteristic = false);
/// (End(T) o mu_1) x (End(T) o mu_2)
Subspace b2b3_trivial(const LYAlgebra& a);
/// { (c o mu_1, 2 c o mu_2) : c in C(T) }
Subspace centroid_pairs(const LYAlgebra& a);

/// Ker delta1 = Der(T), delta1(c) = (c o mu_1, 2 c o mu_2) on a centroid basis,
/// and the dimensions of the coboundary spaces.
Report audit_coboundary(const LYAlgebra& a);

/// f in QDer(T) compared with delta1(f) in the trivial-coefficient space, for
/// each given map.
Report audit_lemma_5_4_1(const LYAlgebra& a, const std::vector<Matrix>& maps);
Report audit_lemma_5_4_1(const LYAlgebra& a, const Matrix& f);

/// The two identities satisfied by g = (f' - f) o mu_1, h = (f'' - f) o mu_2,
/// evaluated on all basis tuples. The bare f o mu_2 term of the second
/// identity is evaluated as written and, separately, with h in its place.
/// Throws std::invalid_argument unless (f, f, f', f, f, f'') is in Delta(T).
Report audit_lemma_5_4_2(const LYAlgebra& a, const Matrix& f, const Matrix& f1, const Matrix& f2);

/// First failing basis tuple of each identity for a given (g, h) and the map
/// F used in the bare term. Empty optional means the identity holds.
struct IdentityResult {
  std::optional<std::vector<std::size_t>> first;
  std::optional<std::vector<std::size_t>> second;
};
IdentityResult cocycle_identities(const LYAlgebra& a, const CochainPair& gh, const Vector& bare_h);

/// c in C(T) with f o mu_i = c o mu_i, if any.
std::optional<Matrix> is_inessential(const LYAlgebra& a, const Matrix& f);

/// Whether (T, f o mu_1, f o mu_2) satisfies the axioms, next to the partial
/// cocycle evidence for (f o mu_1, 2 f o mu_2). Reports only.
Report audit_prop_5_2(const LYAlgebra& a, const Matrix& f);

/// QDer = Der + C implies B_reg n B_triv = centroid pairs.
Report audit_prop_5_6(const LYAlgebra& a);

/// Checkable ingredients of robustness plus a classification of the given maps.
Report robustness_report(const LYAlgebra& a, const std::vector<Matrix>& maps);

/// `count` random nonsingular maps with small integer entries.
std::vector<Matrix> sample_maps(const LYAlgebra& a, std::size_t count, std::uint64_t seed);

} // namespace lyat
