#include "lyat/operator_spaces.hpp"

#include <stdexcept>

namespace lyat {

Vector flatten(const Matrix& m) { return m.flat(); }

Matrix unflatten(const Field& field, std::size_t n, const Vector& v) {
  return Matrix::unflatten(field, n, n, v);
}

Matrix elementary(const Field& field, std::size_t n, std::size_t r, std::size_t c) {
  Matrix m(field, n, n);
  m(r, c) = field.one();
  return m;
}

bool in_delta(const LYAlgebra& a, const DeltaTuple& t) {
  const std::size_t n = a.dim();
  for (const auto& m : t.maps)
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("tuple maps must be n x n");
  const auto& [f, f1, f2, f3, f4, f5] = t.maps;
  std::vector<Element> e, fe, f1e, f3e, f4e;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back(a.basis_element(i));
    fe.push_back(f.column(i));
    f1e.push_back(f1.column(i));
    f3e.push_back(f3.column(i));
    f4e.push_back(f4.column(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element lhs = a.bracket(fe[i], e[j]) + a.bracket(e[i], f1e[j]);
      if (lhs != f2.apply(a.bracket(e[i], e[j]))) return false;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Element lhs = a.triple(fe[i], e[j], e[k]) + a.triple(e[i], f3e[j], e[k]) +
                      a.triple(e[i], e[j], f4e[k]);
        if (lhs != f5.apply(a.triple(e[i], e[j], e[k]))) return false;
      }
  return true;
}

std::string_view space_key(SpaceKind kind) {
  switch (kind) {
  case SpaceKind::Der: return "der";
  case SpaceKind::ZDer: return "zder";
  case SpaceKind::GDer: return "gder";
  case SpaceKind::QDer: return "qder";
  case SpaceKind::Centroid: return "centroid";
  case SpaceKind::QCentroid: return "qcentroid";
  case SpaceKind::S: return "s_space";
  }
  return "?";
}

std::size_t block_count(SpaceKind kind) {
  switch (kind) {
  case SpaceKind::GDer: return 6;
  case SpaceKind::QDer: return 3;
  case SpaceKind::S: return 2;
  default: return 1;
  }
}

std::vector<TupleTemplate> tuple_templates(SpaceKind kind, const Field& field) {
  const Scalar one = field.one();
  const Slot X{{0, one}};
  const Slot minus_X{{0, -one}};
  const Slot zero{};
  auto block = [&](std::size_t b) { return Slot{{b, one}}; };
  switch (kind) {
  case SpaceKind::Der: return {{X, X, X, X, X, X}};
  case SpaceKind::ZDer: return {{X, zero, zero, zero, zero, zero}, {zero, zero, X, zero, zero, X}};
  case SpaceKind::Centroid: return {{X, zero, X, zero, zero, X}};
  case SpaceKind::QCentroid:
    return {{X, minus_X, zero, minus_X, zero, zero}, {X, minus_X, zero, zero, minus_X, zero}};
  case SpaceKind::QDer: return {{X, X, block(1), X, X, block(2)}};
  case SpaceKind::GDer: return {{X, block(1), block(2), block(3), block(4), block(5)}};
  case SpaceKind::S: {
    if (!field.is_rational()) throw std::domain_error("S is defined in characteristic 0 only");
    Slot scaled{{1, field.from_int(3) / field.from_int(2)}};
    return {{X, X, block(1), X, X, scaled}};
  }
  }
  throw std::logic_error("unknown space kind");
}

namespace {

class EquationScratch {
public:
  EquationScratch(const Field& f, std::size_t size) : zero_(f.zero()), vals_(size, f.zero()), seen_(size, false) {}

  void add(std::size_t idx, const Scalar& v) {
    if (v.is_zero()) return;
    vals_[idx] += v;
    if (!seen_[idx]) seen_[idx] = true, touched_.push_back(idx);
  }

  SparseRow take() {
    std::sort(touched_.begin(), touched_.end());
    SparseRow row;
    for (auto i : touched_) {
      if (!vals_[i].is_zero()) row.emplace_back(i, vals_[i]);
      vals_[i] = zero_;
      seen_[i] = false;
    }
    touched_.clear();
    return row;
  }

private:
  Scalar zero_;
  Vector vals_;
  std::vector<bool> seen_;
  std::vector<std::size_t> touched_;
};

} // namespace

Subspace solve_delta_system(const LYAlgebra& a, std::size_t blocks, const std::vector<TupleTemplate>& templates) {
  const std::size_t n = a.dim();
  const std::size_t nn = n * n;
  const std::size_t unknowns = blocks * nn;
  EchelonBuilder system(a.field(), unknowns);
  EquationScratch eq(a.field(), unknowns);
  auto var = [&](std::size_t b, std::size_t r, std::size_t c) { return b * nn + r * n + c; };

  for (const auto& t : templates) {
    // [f e_i, e_j] + [e_i, f1 e_j] - f2 [e_i, e_j], coordinate k
    for (std::size_t i = 0; i < n && !system.full_rank(); ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          for (const auto& [b, s] : t[0])
            for (std::size_t r = 0; r < n; ++r)
              if (!a.c(r, j, k).is_zero()) eq.add(var(b, r, i), s * a.c(r, j, k));
          for (const auto& [b, s] : t[1])
            for (std::size_t r = 0; r < n; ++r)
              if (!a.c(i, r, k).is_zero()) eq.add(var(b, r, j), s * a.c(i, r, k));
          for (const auto& [b, s] : t[2])
            for (const auto& [m, x] : a.bracket_basis(i, j)) eq.add(var(b, k, m), -(s * x));
          system.add_row(eq.take());
        }
    // {f e_i, e_j, e_k} + {e_i, f3 e_j, e_k} + {e_i, e_j, f4 e_k} - f5 {e_i, e_j, e_k}, coordinate l
    for (std::size_t i = 0; i < n && !system.full_rank(); ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            for (const auto& [b, s] : t[0])
              for (std::size_t r = 0; r < n; ++r)
                if (!a.d(r, j, k, l).is_zero()) eq.add(var(b, r, i), s * a.d(r, j, k, l));
            for (const auto& [b, s] : t[3])
              for (std::size_t r = 0; r < n; ++r)
                if (!a.d(i, r, k, l).is_zero()) eq.add(var(b, r, j), s * a.d(i, r, k, l));
            for (const auto& [b, s] : t[4])
              for (std::size_t r = 0; r < n; ++r)
                if (!a.d(i, j, r, l).is_zero()) eq.add(var(b, r, k), s * a.d(i, j, r, l));
            for (const auto& [b, s] : t[5])
              for (const auto& [m, x] : a.triple_basis(i, j, k)) eq.add(var(b, l, m), -(s * x));
            system.add_row(eq.take());
          }
  }
  return system.kernel();
}

std::vector<DeltaTuple> instantiate(SpaceKind kind, const std::vector<Matrix>& blocks) {
  if (blocks.size() != block_count(kind)) throw std::invalid_argument("wrong number of blocks");
  const Field& f = blocks.front().field();
  const std::size_t n = blocks.front().rows();
  std::vector<DeltaTuple> out;
  for (const auto& t : tuple_templates(kind, f)) {
    DeltaTuple dt;
    for (std::size_t s = 0; s < 6; ++s) {
      Matrix m(f, n, n);
      for (const auto& [b, coeff] : t[s]) m += coeff * blocks[b];
      dt.maps[s] = std::move(m);
    }
    out.push_back(std::move(dt));
  }
  return out;
}

bool satisfies(const LYAlgebra& a, SpaceKind kind, const std::vector<Matrix>& blocks) {
  for (const auto& t : instantiate(kind, blocks))
    if (!in_delta(a, t)) return false;
  return true;
}

// ---------------------------------------------------------------- OperatorSpace

OperatorSpace::OperatorSpace(SpaceKind kind, std::size_t n, Subspace space, std::optional<Subspace> witnesses)
    : kind_(kind), n_(n), space_(std::move(space)), witnesses_(std::move(witnesses)) {
  if (space_.ambient_dim() != n * n) throw std::invalid_argument("operator space must live in K^{n^2}");
}

std::vector<Matrix> OperatorSpace::basis() const {
  std::vector<Matrix> out;
  for (const auto& v : space_.basis_vectors()) out.push_back(unflatten(space_.field(), n_, v));
  return out;
}

bool OperatorSpace::contains(const Matrix& f) const { return space_.contains(flatten(f)); }

std::optional<std::vector<Matrix>> OperatorSpace::witness_for(const Matrix& f) const {
  if (!witnesses_) {
    if (!contains(f)) return std::nullopt;
    return std::vector<Matrix>{f};
  }
  const std::size_t nn = n_ * n_;
  const auto w = witnesses_->basis_vectors();
  std::vector<Vector> cols;
  for (const auto& v : w) cols.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(nn));
  if (cols.empty()) {
    if (!f.is_zero()) return std::nullopt;
    cols.push_back(zero_vector(space_.field(), nn));
  }
  auto coeffs = solve(Matrix::from_columns(space_.field(), nn, cols), flatten(f));
  if (!coeffs) return std::nullopt;
  Vector full = zero_vector(space_.field(), witnesses_->ambient_dim());
  for (std::size_t i = 0; i < w.size(); ++i) axpy(full, (*coeffs)[i], w[i]);
  std::vector<Matrix> blocks;
  for (std::size_t b = 0; b < block_count(kind_); ++b)
    blocks.push_back(unflatten(space_.field(), n_,
                               Vector(full.begin() + static_cast<std::ptrdiff_t>(b * nn),
                                      full.begin() + static_cast<std::ptrdiff_t>((b + 1) * nn))));
  return blocks;
}

Subspace OperatorSpace::witness_kernel() const {
  const std::size_t nn = n_ * n_;
  if (!witnesses_) return Subspace::zero(space_.field(), nn * block_count(kind_));
  // Solutions with vanishing first block: intersect with the coordinate
  // subspace spanned by the witness coordinates.
  std::vector<Vector> tail;
  for (std::size_t i = nn; i < witnesses_->ambient_dim(); ++i)
    tail.push_back(unit_vector(space_.field(), witnesses_->ambient_dim(), i));
  return subspace_intersect(*witnesses_, Subspace::span(space_.field(), witnesses_->ambient_dim(), tail));
}

OperatorSpace compute_space(const LYAlgebra& a, SpaceKind kind) {
  const std::size_t n = a.dim();
  const std::size_t blocks = block_count(kind);
  Subspace solutions = solve_delta_system(a, blocks, tuple_templates(kind, a.field()));
  if (blocks == 1) return OperatorSpace(kind, n, std::move(solutions), std::nullopt);
  Subspace projected = solutions.project(0, n * n);
  return OperatorSpace(kind, n, std::move(projected), std::move(solutions));
}

OperatorSpace der(const LYAlgebra& a) { return compute_space(a, SpaceKind::Der); }
OperatorSpace zder(const LYAlgebra& a) { return compute_space(a, SpaceKind::ZDer); }
OperatorSpace gder(const LYAlgebra& a) { return compute_space(a, SpaceKind::GDer); }
OperatorSpace qder(const LYAlgebra& a) { return compute_space(a, SpaceKind::QDer); }
OperatorSpace centroid(const LYAlgebra& a) { return compute_space(a, SpaceKind::Centroid); }
OperatorSpace qcentroid(const LYAlgebra& a) { return compute_space(a, SpaceKind::QCentroid); }
OperatorSpace s_space(const LYAlgebra& a) { return compute_space(a, SpaceKind::S); }

} // namespace lyat
