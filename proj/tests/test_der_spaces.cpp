#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lyat/audits.hpp"
#include "lyat/catalog.hpp"
#include "support.hpp"

using namespace lyat;
using support::Gen;

namespace {

const Field kQ = Field::rationals();

Matrix mat(std::size_t n, std::initializer_list<long> entries) {
  Matrix m(kQ, n, n);
  std::size_t i = 0;
  for (long x : entries) m(i / n, i % n) = kQ.from_int(x), ++i;
  return m;
}

void check_against_oracles(const LYAlgebra& a, const std::string& name) {
  const support::Tensors t(a);
  const SpaceSet s = compute_spaces(a);
  CHECK_MESSAGE(s.der.dim() == support::der_dim(t), name);
  CHECK_MESSAGE(s.zder.dim() == support::zder_dim(t), name);
  CHECK_MESSAGE(s.centroid.dim() == support::centroid_dim(t), name);
  CHECK_MESSAGE(s.qcentroid.dim() == support::qcentroid_dim(t), name);
  CHECK_MESSAGE(s.qder.dim() == support::qder_dim(t), name);
  CHECK_MESSAGE(s.gder.dim() == support::gder_dim(t), name);
  REQUIRE(s.s);
  CHECK_MESSAGE(s.s->dim() == support::s_dim(t), name);
  for (const auto& d : s.der.basis()) CHECK(support::is_derivation(t, support::to_q(d)));
}

} // namespace

TEST_CASE("abelian algebra: every space is all of gl(T)") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const LYAlgebra a = LYAlgebra::abelian(kQ, n);
    for (SpaceKind k : {SpaceKind::Der, SpaceKind::ZDer, SpaceKind::QDer, SpaceKind::GDer, SpaceKind::Centroid,
                        SpaceKind::QCentroid, SpaceKind::S})
      CHECK(compute_space(a, k).dim() == n * n);
  }
}

TEST_CASE("two-dimensional example: a quasiderivation that is not a derivation") {
  const LYAlgebra a = example_2_9();
  const Matrix d = mat(2, {0, 1, 0, 0}); // y -> x
  CHECK_FALSE(der(a).contains(d));
  CHECK_FALSE(support::is_derivation(support::Tensors(a), support::to_q(d)));
  const OperatorSpace q = qder(a);
  REQUIRE(q.contains(d));
  const auto w = q.witness_for(d);
  REQUIRE(w);
  CHECK(w->size() == 3);
  CHECK(satisfies(a, SpaceKind::QDer, *w));
  // Any witness works; a wrong one must not.
  std::vector<Matrix> bad = *w;
  bad[1] += Matrix::identity(kQ, 2);
  CHECK_FALSE(satisfies(a, SpaceKind::QDer, bad));
}

TEST_CASE("space dimensions agree with the independent equation oracle") {
  for (const auto& e : catalog()) check_against_oracles(e.algebra, e.name);
  Gen g(31);
  for (int i = 0; i < 25; ++i) check_against_oracles(g.ly_algebra(), "random #" + std::to_string(i));
  // Perturbed, non-LY inputs exercise the solver on asymmetric tensors.
  for (int i = 0; i < 10; ++i) {
    const LYAlgebra a = g.ly_algebra();
    check_against_oracles(perturb(a, g.matrix(kQ, a.dim(), a.dim(), 1)), "perturbed #" + std::to_string(i));
  }
}

TEST_CASE("basis elements satisfy the defining tuples through direct evaluation") {
  Gen g(32);
  for (int i = 0; i < 15; ++i) {
    const LYAlgebra a = g.ly_algebra();
    for (SpaceKind k : {SpaceKind::Der, SpaceKind::ZDer, SpaceKind::QDer, SpaceKind::GDer, SpaceKind::Centroid,
                        SpaceKind::QCentroid, SpaceKind::S}) {
      const OperatorSpace s = compute_space(a, k);
      for (const auto& f : s.basis()) {
        const auto w = s.witness_for(f);
        REQUIRE(w);
        CHECK(satisfies(a, k, *w));
      }
      // A random member of the span also lies in the space.
      Matrix sum(kQ, a.dim(), a.dim());
      for (const auto& f : s.basis()) sum += g.scalar(kQ) * f;
      CHECK(s.contains(sum));
    }
  }
}

TEST_CASE("S contains the identity with D' = 2 id") {
  Gen g(33);
  for (int i = 0; i < 10; ++i) {
    const LYAlgebra a = g.ly_algebra();
    const std::size_t n = a.dim();
    const Matrix id = Matrix::identity(kQ, n);
    CHECK(satisfies(a, SpaceKind::S, {id, kQ.from_int(2) * id}));
    const OperatorSpace s = s_space(a);
    CHECK(s.contains(id));
    const OperatorSpace q = qder(a);
    for (const auto& d : s.basis()) CHECK(q.contains(d));
  }
  CHECK_THROWS_AS(s_space(LYAlgebra::abelian(Field::prime(7), 2)), std::domain_error);
}

TEST_CASE("inclusions between the spaces") {
  Gen g(34);
  for (int i = 0; i < 20; ++i) {
    const LYAlgebra a = g.ly_algebra();
    const SpaceSet s = compute_spaces(a);
    CHECK(s.der.space().contains(s.zder.space()));
    CHECK(s.qder.space().contains(s.der.space()));
    CHECK(s.gder.space().contains(s.qder.space()));
    CHECK(s.gder.space().contains(s.qcentroid.space()));
    CHECK(s.qcentroid.space().contains(s.centroid.space()));
    CHECK(s.qder.space().contains(s.centroid.space()));
  }
}

TEST_CASE("swapping the first two maps preserves a tuple when the triple slot matches") {
  // (f, g, h, g, k, m) in Delta(T) iff (g, f, h, f, k, m) is, by skew-symmetry
  // of both products in their first two arguments.
  const Scalar one = kQ.one();
  const TupleTemplate t{Slot{{0, one}}, Slot{{1, one}}, Slot{{2, one}}, Slot{{1, one}}, Slot{{3, one}},
                        Slot{{4, one}}};
  Gen g(35);
  for (int i = 0; i < 8; ++i) {
    const LYAlgebra a = g.ly_algebra();
    const std::size_t nn = a.dim() * a.dim();
    const Subspace sol = solve_delta_system(a, 5, {t});
    for (const auto& v : sol.basis_vectors()) {
      Vector swapped = v;
      std::copy(v.begin() + static_cast<std::ptrdiff_t>(nn), v.begin() + static_cast<std::ptrdiff_t>(2 * nn),
                swapped.begin());
      std::copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(nn),
                swapped.begin() + static_cast<std::ptrdiff_t>(nn));
      CHECK(sol.contains(swapped));
    }
  }
}

TEST_CASE("finite fields") {
  const Field f5 = Field::prime(5);
  Gen g(36);
  for (int i = 0; i < 10; ++i) {
    const LYAlgebra a = g.ly_algebra(f5);
    const OperatorSpace d = der(a);
    for (const auto& m : d.basis()) CHECK(satisfies(a, SpaceKind::Der, {m}));
    CHECK(d.contains(Matrix(f5, a.dim(), a.dim())));
    CHECK(centroid(a).contains(Matrix::identity(f5, a.dim())));
  }
}

TEST_CASE("audits pass on genuine LY-algebras") {
  for (const auto& e : catalog()) {
    if (!e.axioms.all_pass()) continue;
    const Report r = audit_all(e.algebra, compute_spaces(e.algebra));
    CHECK_MESSAGE(!r.failed(), e.name << "\n" << r.to_text());
  }
  Gen g(37);
  for (int i = 0; i < 15; ++i) {
    const LYAlgebra a = g.ly_algebra();
    const Report r = audit_all(a, compute_spaces(a));
    CHECK_MESSAGE(!r.failed(), r.to_text());
  }
}

TEST_CASE("per-map audits on the identity") {
  Gen g(38);
  for (int i = 0; i < 8; ++i) {
    const LYAlgebra a = g.ly_algebra();
    const Matrix id = Matrix::identity(kQ, a.dim());
    CHECK_FALSE(audit_lemma_3_4(a, id, kQ.from_int(2) * id).failed());
    CHECK_FALSE(audit_prop_3_11_1(a, id).failed());
    CHECK_FALSE(audit_lemma_3_12(a, id).failed());
  }
  const LYAlgebra a = example_2_9();
  CHECK_THROWS_AS(audit_lemma_3_4(a, mat(2, {0, 1, 0, 0}), mat(2, {0, 0, 0, 0})), std::invalid_argument);
}

TEST_CASE("jordan product") {
  const Matrix a = mat(2, {0, 1, 0, 0}), b = mat(2, {0, 0, 1, 0});
  CHECK(jordan_product(a, b) == Matrix::identity(kQ, 2));
  CHECK(jordan_product(a, a).is_zero());
}
