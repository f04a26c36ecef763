#include "lyat/audits.hpp"

#include "lyat/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace lyat {

const OperatorSpace& SpaceSet::get(SpaceKind kind) const {
  switch (kind) {
  case SpaceKind::Der: return der;
  case SpaceKind::ZDer: return zder;
  case SpaceKind::QDer: return qder;
  case SpaceKind::GDer: return gder;
  case SpaceKind::Centroid: return centroid;
  case SpaceKind::QCentroid: return qcentroid;
  case SpaceKind::S:
    if (!s) throw std::domain_error("S is defined in characteristic 0 only");
    return *s;
  }
  throw std::logic_error("unknown space kind");
}

SpaceSet compute_spaces(const LYAlgebra& a) {
  std::optional<OperatorSpace> s;
  if (a.field().is_rational()) s = s_space(a);
  return SpaceSet{lyat::der(a),       lyat::zder(a),      lyat::qder(a),
                  lyat::gder(a),      lyat::centroid(a),  lyat::qcentroid(a),
                  std::move(s),       lyat::center(a)};
}

namespace {

using MatrixOp = std::function<Matrix(const Matrix&, const Matrix&)>;

std::string pair_label(std::string_view left, std::size_t i, std::string_view right, std::size_t j) {
  return std::string(left) + " basis #" + std::to_string(i) + ", " + std::string(right) + " basis #" +
         std::to_string(j);
}

// Checks op(x, y) in target for every pair of basis elements.
void expect_closed(Report& r, std::string name, const OperatorSpace& left, std::string_view left_name,
                   const OperatorSpace& right, std::string_view right_name, const MatrixOp& op,
                   const Subspace& target) {
  const auto lb = left.basis();
  const auto rb = right.basis();
  for (std::size_t i = 0; i < lb.size(); ++i)
    for (std::size_t j = 0; j < rb.size(); ++j)
      if (!target.contains(flatten(op(lb[i], rb[j])))) {
        r.add(std::move(name), Status::Fail, "fails at " + pair_label(left_name, i, right_name, j));
        return;
      }
  r.add(std::move(name), Status::Pass, std::to_string(lb.size() * rb.size()) + " pairs");
}

Matrix compose(const Matrix& x, const Matrix& y) { return x * y; }

bool subspace_closed_under_commutator(const Subspace& w, std::size_t n) {
  const auto basis = w.basis_vectors();
  std::vector<Matrix> mats;
  for (const auto& v : basis) mats.push_back(unflatten(w.field(), n, v));
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j)
      if (!w.contains(flatten(commutator(mats[i], mats[j])))) return false;
  return true;
}

Subspace kernel_image_sum(const Matrix& d) { return subspace_sum(kernel_of(d), image_of(d)); }

} // namespace

// ---------------------------------------------------------------- inclusions

Report audit_inclusion_chain(const LYAlgebra& a, const SpaceSet& s) {
  Report r;
  r.title = "inclusion chain";
  r.add_dimension("zder", s.zder.dim());
  r.add_dimension("der", s.der.dim());
  r.add_dimension("qder", s.qder.dim());
  r.add_dimension("gder", s.gder.dim());
  r.expect("ZDer in Der", s.der.space().contains(s.zder.space()));
  r.expect("Der in QDer", s.qder.space().contains(s.der.space()));
  r.expect("QDer in GDer", s.gder.space().contains(s.qder.space()));
  r.expect("GDer in gl(T)", s.gder.space().ambient_dim() == a.dim() * a.dim());
  const Subspace both = subspace_intersect(s.qder.space(), s.qcentroid.space());
  r.expect("C in QDer and QC", both.contains(s.centroid.space()));
  return r;
}

Report audit_inclusion_chain(const LYAlgebra& a) { return audit_inclusion_chain(a, compute_spaces(a)); }

Report audit_lemma_3_1(const LYAlgebra& a, const SpaceSet& s) {
  Report r;
  r.title = "operator space brackets";
  expect_closed(r, "[Der, C] in C", s.der, "Der", s.centroid, "C", commutator, s.centroid.space());
  expect_closed(r, "[QDer, QC] in QC", s.qder, "QDer", s.qcentroid, "QC", commutator, s.qcentroid.space());
  expect_closed(r, "C Der in Der", s.centroid, "C", s.der, "Der", compose, s.der.space());
  r.expect("C in QDer", s.qder.space().contains(s.centroid.space()));
  expect_closed(r, "[QC, QC] in QDer", s.qcentroid, "QC", s.qcentroid, "QC", commutator, s.qder.space());
  r.expect("QDer + QC in GDer",
           s.gder.space().contains(subspace_sum(s.qder.space(), s.qcentroid.space())));

  const std::size_t n = a.dim();
  std::vector<Vector> gens = s.qcentroid.space().basis_vectors();
  const auto qc = s.qcentroid.basis();
  for (std::size_t i = 0; i < qc.size(); ++i)
    for (std::size_t j = i + 1; j < qc.size(); ++j) gens.push_back(flatten(commutator(qc[i], qc[j])));
  const Subspace w = Subspace::span(a.field(), n * n, gens);
  r.add_dimension("QC + [QC, QC]", w.dim());
  r.expect("QC + [QC, QC] in GDer", s.gder.space().contains(w));
  r.expect("QC + [QC, QC] closed under commutator", subspace_closed_under_commutator(w, n));
  return r;
}

Report audit_lemma_3_1(const LYAlgebra& a) { return audit_lemma_3_1(a, compute_spaces(a)); }

Report audit_prop_3_3(const LYAlgebra&, const SpaceSet& s) {
  Report r;
  r.title = "centroid against quasi-centroid";
  r.add_dimension("center", s.center.dim());
  const auto cb = s.centroid.basis();
  const auto qb = s.qcentroid.basis();
  std::optional<std::string> outside, nonzero;
  for (std::size_t i = 0; i < cb.size(); ++i)
    for (std::size_t j = 0; j < qb.size(); ++j) {
      const Matrix m = commutator(cb[i], qb[j]);
      if (!outside && !s.center.contains(image_of(m))) outside = pair_label("C", i, "QC", j);
      if (!nonzero && !m.is_zero()) nonzero = pair_label("C", i, "QC", j);
    }
  r.add("[C, QC] maps T into Z(T)", outside ? Status::Fail : Status::Pass,
        outside ? "fails at " + *outside : std::string());
  if (s.center.is_zero())
    r.add("[C, QC] = 0", nonzero ? Status::Fail : Status::Pass, nonzero ? "nonzero at " + *nonzero : std::string());
  else
    r.add("[C, QC] = 0", Status::Unmet, "center is nonzero");
  return r;
}

Report audit_prop_3_3(const LYAlgebra& a) { return audit_prop_3_3(a, compute_spaces(a)); }

// ---------------------------------------------------------------- S and QC

Report audit_lemma_3_4(const LYAlgebra& a, const Matrix& d, const Matrix& d_prime) {
  if (!a.field().is_rational()) throw std::domain_error("requires characteristic 0");
  const Field& f = a.field();
  const std::size_t n = a.dim();
  const Matrix zero(f, n, n);
  const Matrix minus_d = f.from_int(-1) * d;
  const Matrix scaled = (f.from_int(3) / f.from_int(2)) * d_prime;
  for (const DeltaTuple& t : {DeltaTuple{{d, d, d_prime, d, d, scaled}},
                              DeltaTuple{{d, minus_d, zero, minus_d, zero, zero}},
                              DeltaTuple{{d, minus_d, zero, zero, minus_d, zero}}})
    if (!in_delta(a, t)) throw std::invalid_argument("hypothesis tuples are not in Delta(T)");

  Report r;
  r.title = "S and QC identities";
  std::vector<Element> e, de;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back(a.basis_element(i));
    de.push_back(d.column(i));
  }
  std::optional<std::string> first;
  for (std::size_t x = 0; x < n && !first; ++x)
    for (std::size_t y = 0; y < n && !first; ++y)
      for (std::size_t z = 0; z < n && !first; ++z)
        if (a.bracket(e[x], d.apply(a.bracket(e[y], e[z]))) != a.bracket(e[x], a.bracket(de[y], e[z])))
          first = "(x, y, z) = (" + std::to_string(x) + ", " + std::to_string(y) + ", " + std::to_string(z) + ")";
  r.add("[x, D[y,z]] = [x, [Dy, z]]", first ? Status::Fail : Status::Pass, first.value_or(""));

  first.reset();
  for (std::size_t u = 0; u < n && !first; ++u)
    for (std::size_t v = 0; v < n && !first; ++v)
      for (std::size_t y = 0; y < n && !first; ++y) {
        const Element inner = d.apply(a.triple(e[u], e[v], e[y]));
        const Element moved = a.triple(de[u], e[v], e[y]);
        for (std::size_t x = 0; x < n && !first; ++x)
          for (std::size_t z = 0; z < n && !first; ++z)
            if (a.triple(inner, e[x], e[z]) != a.triple(moved, e[x], e[z]))
              first = "(u, v, y, x, z) = (" + std::to_string(u) + ", " + std::to_string(v) + ", " +
                      std::to_string(y) + ", " + std::to_string(x) + ", " + std::to_string(z) + ")";
      }
  r.add("{D{u,v,y}, x, z} = {{Du, v, y}, x, z}", first ? Status::Fail : Status::Pass, first.value_or(""));
  return r;
}

Report audit_prop_3_5(const LYAlgebra&, const SpaceSet& s) {
  Report r;
  r.title = "centroid from S and QC";
  if (!s.s) {
    r.add("C = S n QC", Status::Unmet, "requires characteristic 0");
    return r;
  }
  const Subspace meet = subspace_intersect(s.s->space(), s.qcentroid.space());
  r.add_dimension("s_space", s.s->dim());
  r.add_dimension("S n QC", meet.dim());
  r.add_dimension("centroid", s.centroid.dim());
  if (!s.center.is_zero()) {
    r.add("C = S n QC", Status::Unmet, "center is nonzero");
    return r;
  }
  r.expect("C = S n QC", meet == s.centroid.space());
  return r;
}

Report audit_prop_3_5(const LYAlgebra& a) { return audit_prop_3_5(a, compute_spaces(a)); }

Matrix jordan_product(const Matrix& d1, const Matrix& d2) { return d1 * d2 + d2 * d1; }

Report audit_jordan(const LYAlgebra& a, const SpaceSet& s) {
  Report r;
  r.title = "Jordan product on QC";
  if (a.field().characteristic() == 2) {
    r.add("QC closed under Jordan product", Status::Unmet, "characteristic 2");
    return r;
  }
  expect_closed(r, "QC closed under Jordan product", s.qcentroid, "QC", s.qcentroid, "QC", jordan_product,
                s.qcentroid.space());
  const auto qb = s.qcentroid.basis();
  std::optional<std::string> comm, ident;
  for (std::size_t i = 0; i < qb.size(); ++i)
    for (std::size_t j = 0; j < qb.size(); ++j) {
      const Matrix& x = qb[i];
      const Matrix& y = qb[j];
      if (!comm && jordan_product(x, y) != jordan_product(y, x)) comm = pair_label("QC", i, "QC", j);
      const Matrix xx = jordan_product(x, x);
      if (!ident && jordan_product(jordan_product(x, y), xx) != jordan_product(x, jordan_product(y, xx)))
        ident = pair_label("QC", i, "QC", j);
    }
  r.add("Jordan product commutative", comm ? Status::Fail : Status::Pass, comm.value_or(""));
  r.add("(xy)(xx) = x(y(xx))", ident ? Status::Fail : Status::Pass, ident.value_or(""));
  return r;
}

Report audit_jordan(const LYAlgebra& a) { return audit_jordan(a, compute_spaces(a)); }

Report audit_thm_3_9(const LYAlgebra& a, const SpaceSet& s) {
  Report r;
  r.title = "Lie structure on QC";
  const auto p = a.field().characteristic();
  const auto qb = s.qcentroid.basis();
  const Subspace& qc = s.qcentroid.space();
  bool composition_closed = true, commutator_closed = true, commuting = true;
  for (std::size_t i = 0; i < qb.size(); ++i)
    for (std::size_t j = 0; j < qb.size(); ++j) {
      if (composition_closed && !qc.contains(flatten(qb[i] * qb[j]))) composition_closed = false;
      const Matrix c = commutator(qb[i], qb[j]);
      if (commutator_closed && !qc.contains(flatten(c))) commutator_closed = false;
      if (!c.is_zero()) commuting = false;
    }
  r.add("QC closed under composition", Status::Info, composition_closed ? "yes" : "no");
  r.add("QC closed under commutator", Status::Info, commutator_closed ? "yes" : "no");
  r.add("[QC, QC] = 0", Status::Info, commuting ? "yes" : "no");

  if (p == 2)
    r.add("composition-closed QC is commutator-closed", Status::Unmet, "characteristic 2");
  else if (!composition_closed)
    r.add("composition-closed QC is commutator-closed", Status::Unmet, "QC not closed under composition");
  else
    r.expect("composition-closed QC is commutator-closed", commutator_closed);

  if (p == 2 || p == 3)
    r.add("commutator-closed iff [QC, QC] = 0", Status::Unmet, "characteristic 2 or 3");
  else if (!s.center.is_zero())
    r.add("commutator-closed iff [QC, QC] = 0", Status::Unmet, "center is nonzero");
  else
    r.expect("commutator-closed iff [QC, QC] = 0", commutator_closed == commuting);
  return r;
}

Report audit_thm_3_9(const LYAlgebra& a) { return audit_thm_3_9(a, compute_spaces(a)); }

Report audit_prop_3_11_1(const LYAlgebra& a, const Matrix& d) {
  Report r;
  r.title = "kernel and image of a centroid element";
  if (!centroid(a).contains(d)) {
    r.add("Ker D and Im D are ideals", Status::Unmet, "map is not in the centroid");
    return r;
  }
  const Subspace ker = kernel_of(d), im = image_of(d);
  r.add_dimension("Ker D", ker.dim());
  r.add_dimension("Im D", im.dim());
  r.expect("Ker D is an ideal", is_ideal(a, ker));
  r.expect("Im D is an ideal", is_ideal(a, im));
  return r;
}

Report audit_lemma_3_12(const LYAlgebra& a, const Matrix& d) {
  Report r;
  r.title = "kernel-image splitting";
  const Polynomial pi = minimal_polynomial(d);
  r.add("minimal polynomial", Status::Info, pi.to_string());
  const Subspace ker = kernel_of(d), im = image_of(d);
  const bool splits = is_direct_sum(ker, im) && kernel_image_sum(d).is_full();
  // Pure linear algebra, no hypothesis on T.
  if (pi.divisible_by_x_power(2))
    r.add("X^2 does not divide pi => T = Ker + Im", Status::Unmet, "X^2 divides the minimal polynomial");
  else
    r.expect("X^2 does not divide pi => T = Ker + Im", splits);

  const char* name = "centerless, D in QC, X^3 does not divide pi => T = Ker + Im";
  if (!center(a).is_zero())
    r.add(name, Status::Unmet, "center is nonzero");
  else if (!qcentroid(a).contains(d))
    r.add(name, Status::Unmet, "map is not in QC");
  else if (pi.divisible_by_x_power(3))
    r.add(name, Status::Unmet, "X^3 divides the minimal polynomial");
  else
    r.expect(name, splits);
  return r;
}

// ---------------------------------------------------------------- closures

Report audit_closures(const LYAlgebra&, const SpaceSet& s) {
  Report r;
  r.title = "closure properties";
  expect_closed(r, "Der closed under commutator", s.der, "Der", s.der, "Der", commutator, s.der.space());
  expect_closed(r, "QDer closed under commutator", s.qder, "QDer", s.qder, "QDer", commutator, s.qder.space());
  expect_closed(r, "GDer closed under commutator", s.gder, "GDer", s.gder, "GDer", commutator, s.gder.space());
  expect_closed(r, "C closed under composition", s.centroid, "C", s.centroid, "C", compose, s.centroid.space());
  r.expect("ZDer in C", s.centroid.space().contains(s.zder.space()));
  if (s.center.is_zero()) {
    bool commutes = true;
    const auto cb = s.centroid.basis();
    for (std::size_t i = 0; i < cb.size() && commutes; ++i)
      for (std::size_t j = i + 1; j < cb.size() && commutes; ++j) commutes = commutator(cb[i], cb[j]).is_zero();
    r.expect("C commutative", commutes);
  } else {
    r.add("C commutative", Status::Unmet, "center is nonzero");
  }
  bool preserves = true;
  for (const auto& g : s.gder.basis())
    for (const auto& z : s.center.basis_vectors())
      if (!s.center.contains(g.apply(z))) preserves = false;
  r.expect("GDer preserves Z(T)", preserves);
  return r;
}

Report audit_reverification(const LYAlgebra& a, const SpaceSet& s) {
  Report r;
  r.title = "independent re-verification";
  std::vector<SpaceKind> kinds{SpaceKind::Der,      SpaceKind::ZDer,      SpaceKind::QDer, SpaceKind::GDer,
                               SpaceKind::Centroid, SpaceKind::QCentroid};
  if (s.s) kinds.push_back(SpaceKind::S);
  for (SpaceKind k : kinds) {
    const OperatorSpace& sp = s.get(k);
    std::optional<std::size_t> bad;
    const auto basis = sp.basis();
    for (std::size_t i = 0; i < basis.size() && !bad; ++i) {
      auto blocks = sp.witness_for(basis[i]);
      if (!blocks || !satisfies(a, k, *blocks)) bad = i;
    }
    r.add(std::string(space_key(k)) + " basis satisfies its identities", bad ? Status::Fail : Status::Pass,
          bad ? "basis #" + std::to_string(*bad) : std::to_string(basis.size()) + " elements");
  }
  return r;
}

Report audit_all(const LYAlgebra& a, const SpaceSet& s) {
  Report r;
  r.title = "audit";
  r.append(audit_inclusion_chain(a, s));
  r.append(audit_lemma_3_1(a, s));
  r.append(audit_prop_3_3(a, s));
  r.append(audit_prop_3_5(a, s));
  r.append(audit_jordan(a, s));
  r.append(audit_thm_3_9(a, s));
  r.append(audit_closures(a, s));
  r.append(audit_reverification(a, s));

  const auto cb = s.centroid.basis();
  std::vector<Report> per_map;
  for (const auto& d : cb) per_map.push_back(audit_prop_3_11_1(a, d));
  r.append(fold_reports(per_map, "C basis"));
  per_map.clear();
  for (const auto& d : s.qcentroid.basis()) per_map.push_back(audit_lemma_3_12(a, d));
  r.append(fold_reports(per_map, "QC basis"));
  per_map.clear();
  if (s.s) {
    const OperatorSpace& sp = *s.s;
    const Subspace meet = subspace_intersect(sp.space(), s.qcentroid.space());
    for (const auto& v : meet.basis_vectors()) {
      const Matrix d = unflatten(a.field(), a.dim(), v);
      const auto blocks = sp.witness_for(d);
      per_map.push_back(audit_lemma_3_4(a, d, blocks->at(1)));
    }
    r.append(fold_reports(per_map, "S n QC basis"));
  }
  return r;
}

} // namespace lyat
