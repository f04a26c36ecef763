#include "lyat/embedding.hpp"

#include <stdexcept>

namespace lyat {

namespace {

// Subspace of K^{3n} obtained by placing s in the given degree.
Subspace lift(const Subspace& s, std::size_t n, int degree) {
  std::vector<Vector> rows;
  for (const auto& v : s.basis_vectors()) {
    Vector w = zero_vector(s.field(), 3 * n);
    for (std::size_t i = 0; i < n; ++i) w[static_cast<std::size_t>(degree - 1) * n + i] = v[i];
    rows.push_back(std::move(w));
  }
  return Subspace::span(s.field(), 3 * n, rows);
}

Subspace span_of(const Field& f, std::size_t ambient, const std::vector<Matrix>& maps) {
  std::vector<Vector> rows;
  for (const auto& m : maps) rows.push_back(flatten(m));
  return Subspace::span(f, ambient, rows);
}

Matrix inverse(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < m.rows(); ++j) {
    auto x = solve(m, unit_vector(m.field(), m.rows(), j));
    if (!x) throw std::invalid_argument("matrix is singular");
    cols.push_back(std::move(*x));
  }
  return Matrix::from_columns(m.field(), m.rows(), cols);
}

} // namespace

CheckAlgebra build_check(const LYAlgebra& a, ComplementChoice choice) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  const std::size_t m = 3 * n;
  std::vector<std::string> labels;
  std::vector<int> grading;
  for (int deg = 1; deg <= 3; ++deg)
    for (const auto& l : a.labels()) {
      labels.push_back(deg == 1 ? l + "t" : l + "t" + std::to_string(deg));
      grading.push_back(deg);
    }

  // Only degree-1 inputs produce nonzero products: brackets land in degree 2,
  // triples in degree 3.
  Vector bracket = zero_vector(f, m * m * m);
  Vector triple = zero_vector(f, m * m * m * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, x] : a.bracket_basis(i, j)) bracket[(i * m + j) * m + n + k] = x;
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& [l, x] : a.triple_basis(i, j, k)) triple[((i * m + j) * m + k) * m + 2 * n + l] = x;
    }
  LYAlgebra total(f, std::move(labels), std::move(bracket), std::move(triple));
  AxiomReport axioms = check_axioms(total);

  Subspace b = bracket_span(a);
  Subspace c = triple_span(a);
  Subspace u = choice == ComplementChoice::Pivot ? complement(b) : complement_reversed(b);
  Subspace v = choice == ComplementChoice::Pivot ? complement(c) : complement_reversed(c);
  return CheckAlgebra{a, std::move(total), std::move(grading), std::move(b), std::move(c),
                      std::move(u), std::move(v), std::move(axioms)};
}

Matrix projection(const Subspace& target, const Subspace& along) {
  const std::size_t n = target.ambient_dim();
  if (!is_direct_sum(target, along) || target.dim() + along.dim() != n)
    throw std::invalid_argument("subspaces are not complementary");
  std::vector<Vector> cols = target.basis_vectors();
  for (auto& w : along.basis_vectors()) cols.push_back(std::move(w));
  const Matrix coords = inverse(Matrix::from_columns(target.field(), n, cols));
  Matrix p(target.field(), n, n);
  const auto tb = target.basis_vectors();
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t k = 0; k < tb.size(); ++k)
      for (std::size_t r = 0; r < n; ++r) p(r, col) += coords(k, col) * tb[k][r];
  return p;
}

Matrix phi(const CheckAlgebra& ca, const Matrix& d, const Matrix& d1, const Matrix& d2) {
  if (!in_delta(ca.base, DeltaTuple{{d, d, d1, d, d, d2}}))
    throw std::invalid_argument("(D, D, D', D, D, D'') is not in Delta(T)");
  const std::size_t n = ca.base.dim();
  const Matrix p = d1 * projection(ca.brackets, ca.u);
  const Matrix q = d2 * projection(ca.triples, ca.v);
  Matrix out(ca.base.field(), 3 * n, 3 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      out(r, c) = d(r, c);
      out(n + r, n + c) = p(r, c);
      out(2 * n + r, 2 * n + c) = q(r, c);
    }
  return out;
}

std::vector<Matrix> phi_of_qder_basis(const CheckAlgebra& ca, const OperatorSpace& qd) {
  std::vector<Matrix> out;
  for (const auto& d : qd.basis()) {
    const auto blocks = qd.witness_for(d);
    if (!blocks) throw std::logic_error("quasi-derivation basis element without witnesses");
    out.push_back(phi(ca, (*blocks)[0], (*blocks)[1], (*blocks)[2]));
  }
  return out;
}

Report verify_prop_4_1(const CheckAlgebra& ca) {
  Report r;
  r.title = "embedding of quasi-derivations";
  const std::size_t n = ca.base.dim();
  const Field& f = ca.base.field();
  r.add_dimension("check_algebra", ca.total.dim());
  if (check_axioms(ca.base).all_pass())
    r.expect("enlarged algebra satisfies the axioms", ca.axioms.all_pass(), ca.axioms.summary());
  else
    r.add("enlarged algebra satisfies the axioms", Status::Unmet, "base is not an LY-algebra; " + ca.axioms.summary());

  const OperatorSpace qd = qder(ca.base);
  const auto images = phi_of_qder_basis(ca, qd);
  const Subspace image = span_of(f, 9 * n * n, images);
  r.add_dimension("qder", qd.dim());
  r.add_dimension("phi(qder)", image.dim());
  r.expect("phi injective on QDer", image.dim() == qd.dim());

  bool restricts = true;
  const auto basis = qd.basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (images[i](x, y) != basis[i](x, y)) restricts = false;
  r.expect("phi(D) restricted to T t is D", restricts);

  const Subspace freedom = qd.witness_kernel();
  r.add_dimension("witness freedom", freedom.dim());
  bool independent = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto blocks = *qd.witness_for(basis[i]);
    for (const auto& k : freedom.basis_vectors()) {
      const Matrix k1 = unflatten(f, n, Vector(k.begin() + static_cast<std::ptrdiff_t>(n * n),
                                               k.begin() + static_cast<std::ptrdiff_t>(2 * n * n)));
      const Matrix k2 = unflatten(f, n, Vector(k.begin() + static_cast<std::ptrdiff_t>(2 * n * n), k.end()));
      if (phi(ca, blocks[0], blocks[1] + k1, blocks[2] + k2) != images[i]) independent = false;
    }
  }
  r.add("phi independent of the witness pair", independent ? Status::Pass : Status::Fail,
        freedom.is_zero() ? "witnesses are unique" : std::to_string(freedom.dim()) + " alternative directions");

  std::optional<std::size_t> outside;
  for (std::size_t i = 0; i < images.size() && !outside; ++i) {
    const Matrix& g = images[i];
    if (!in_delta(ca.total, DeltaTuple{{g, g, g, g, g, g}})) outside = i;
  }
  r.add("phi(QDer) in Der of the enlarged algebra", outside ? Status::Fail : Status::Pass,
        outside ? "QDer basis #" + std::to_string(*outside) : std::to_string(images.size()) + " images");
  return r;
}

Report verify_prop_4_2(const CheckAlgebra& ca) {
  Report r;
  r.title = "derivations of the enlarged algebra";
  const std::size_t n = ca.base.dim();
  const Field& f = ca.base.field();
  const Subspace top = subspace_sum(lift(Subspace::full(f, n), n, 2), lift(Subspace::full(f, n), n, 3));
  const Subspace total_center = center(ca.total);
  r.add_dimension("center of enlarged algebra", total_center.dim());
  r.expect("center contains T t^2 + T t^3", total_center.contains(top));
  r.expect("derived algebra is [T,T] t^2 + {T,T,T} t^3",
           derived_algebra(ca.total) == subspace_sum(lift(ca.brackets, n, 2), lift(ca.triples, n, 3)));

  const bool centerless = center(ca.base).is_zero();
  if (!centerless) {
    r.add("center equals T t^2 + T t^3", Status::Unmet, "center of T is nonzero");
    r.add("Der = phi(QDer) + ZDer", Status::Unmet, "center of T is nonzero");
    r.add("phi(QDer) n ZDer = 0", Status::Unmet, "center of T is nonzero");
    r.add("dim Der = dim QDer + dim ZDer", Status::Unmet, "center of T is nonzero");
    return r;
  }
  r.expect("center equals T t^2 + T t^3", total_center == top);

  const OperatorSpace qd = qder(ca.base);
  const OperatorSpace dt = der(ca.total);
  const OperatorSpace zt = zder(ca.total);
  const Subspace image = span_of(f, 9 * n * n, phi_of_qder_basis(ca, qd));
  r.add_dimension("qder", qd.dim());
  r.add_dimension("der of enlarged algebra", dt.dim());
  r.add_dimension("zder of enlarged algebra", zt.dim());
  r.expect("Der = phi(QDer) + ZDer", subspace_sum(image, zt.space()) == dt.space());
  r.expect("phi(QDer) n ZDer = 0", is_direct_sum(image, zt.space()));
  r.expect("dim Der = dim QDer + dim ZDer", dt.dim() == qd.dim() + zt.dim(),
           std::to_string(dt.dim()) + " = " + std::to_string(qd.dim()) + " + " + std::to_string(zt.dim()));

  // Maps sending one basis vector of T t + U t^2 + V t^3 to one of T t^2 + T t^3
  // and vanishing on [T,T] t^2 + {T,T,T} t^3.
  std::vector<Vector> domain;
  for (std::size_t i = 0; i < n; ++i) domain.push_back(unit_vector(f, 3 * n, i));
  for (const auto& w : lift(ca.u, n, 2).basis_vectors()) domain.push_back(w);
  for (const auto& w : lift(ca.v, n, 3).basis_vectors()) domain.push_back(w);
  std::vector<Vector> cols = domain;
  for (const auto& w : lift(ca.brackets, n, 2).basis_vectors()) cols.push_back(w);
  for (const auto& w : lift(ca.triples, n, 3).basis_vectors()) cols.push_back(w);
  const Matrix dual = inverse(Matrix::from_columns(f, 3 * n, cols));
  bool all_central = true;
  std::size_t tried = 0;
  for (std::size_t w = 0; w < domain.size(); ++w)
    for (std::size_t t = n; t < 3 * n; ++t) {
      Matrix g(f, 3 * n, 3 * n);
      for (std::size_t c = 0; c < 3 * n; ++c) g(t, c) = dual(w, c);
      if (!zt.contains(g)) all_central = false;
      ++tried;
    }
  r.expect("maps from T t + U t^2 + V t^3 into T t^2 + T t^3 are central derivations", all_central,
           std::to_string(tried) + " elementary maps");

  const CheckAlgebra other = build_check(ca.base, ComplementChoice::Reversed);
  const Subspace other_image = span_of(f, 9 * n * n, phi_of_qder_basis(other, qd));
  r.expect("decomposition holds for the reversed complement choice",
           subspace_sum(other_image, zt.space()) == dt.space() && is_direct_sum(other_image, zt.space()));
  r.add("phi(QDer) equal for both complement choices", Status::Info, other_image == image ? "yes" : "no");
  return r;
}

} // namespace lyat
