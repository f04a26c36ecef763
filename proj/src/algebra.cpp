#include "lyat/algebra.hpp"

#include <sstream>

namespace lyat {

namespace {

SparseRow sparse_slice(const Vector& v, std::size_t offset, std::size_t n) {
  SparseRow row;
  for (std::size_t k = 0; k < n; ++k)
    if (!v[offset + k].is_zero()) row.emplace_back(k, v[offset + k]);
  return row;
}

void require_dim(const Element& x, std::size_t n) {
  if (x.size() != n) throw std::invalid_argument("element dimension mismatch");
}

// Dense scratch vector that remembers which slots were written, so that it can
// be tested and cleared in time proportional to the number of touched slots.
class Accumulator {
public:
  Accumulator(const Field& f, std::size_t n) : zero_(f.zero()), acc_(n, f.zero()), touched_(n, false) {}

  void add(const SparseRow& v, const Scalar& s) {
    if (s.is_zero()) return;
    for (const auto& [k, x] : v) {
      acc_[k] += s * x;
      if (!touched_[k]) touched_[k] = true, list_.push_back(k);
    }
  }

  bool is_zero() const {
    for (auto k : list_)
      if (!acc_[k].is_zero()) return false;
    return true;
  }

  Vector value() const { return acc_; }

  void clear() {
    for (auto k : list_) acc_[k] = zero_, touched_[k] = false;
    list_.clear();
  }

private:
  Scalar zero_;
  Vector acc_;
  std::vector<bool> touched_;
  std::vector<std::size_t> list_;
};

} // namespace

// ---------------------------------------------------------------- LYAlgebra

LYAlgebra::LYAlgebra(Field field, std::vector<std::string> labels, Vector bracket_constants,
                     Vector triple_constants)
    : field_(field),
      n_(labels.size()),
      labels_(std::move(labels)),
      bracket_(std::move(bracket_constants)),
      triple_(std::move(triple_constants)) {
  const std::size_t n = n_;
  if (bracket_.size() != n * n * n) throw std::invalid_argument("bracket tensor must have n^3 entries");
  if (triple_.size() != n * n * n * n) throw std::invalid_argument("triple tensor must have n^4 entries");
  for (const auto& s : bracket_)
    if (s.field() != field_) throw std::invalid_argument("bracket constant over the wrong field");
  for (const auto& s : triple_)
    if (s.field() != field_) throw std::invalid_argument("triple constant over the wrong field");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!(c(i, j, k) == -c(j, i, k)))
          throw InvariantError("bracket not skew (LY1) at [" + labels_[i] + "," + labels_[j] + "]");
        for (std::size_t l = 0; l < n; ++l)
          if (!(d(i, j, k, l) == -d(j, i, k, l)))
            throw InvariantError("triple product not skew in its first two slots (LY2) at {" +
                                 labels_[i] + "," + labels_[j] + "," + labels_[k] + "}");
      }

  sparse_bracket_.reserve(n * n);
  for (std::size_t ij = 0; ij < n * n; ++ij) sparse_bracket_.push_back(sparse_slice(bracket_, ij * n, n));
  sparse_triple_.reserve(n * n * n);
  for (std::size_t ijk = 0; ijk < n * n * n; ++ijk)
    sparse_triple_.push_back(sparse_slice(triple_, ijk * n, n));
}

LYAlgebra LYAlgebra::abelian(Field field, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  return LYAlgebra(field, std::move(labels), zero_vector(field, n * n * n),
                   zero_vector(field, n * n * n * n));
}

Element LYAlgebra::bracket(const Element& x, const Element& y) const {
  require_dim(x, n_);
  require_dim(y, n_);
  Accumulator acc(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (!y[j].is_zero()) acc.add(bracket_basis(i, j), x[i] * y[j]);
  }
  return acc.value();
}

Element LYAlgebra::triple(const Element& x, const Element& y, const Element& z) const {
  require_dim(x, n_);
  require_dim(y, n_);
  require_dim(z, n_);
  Accumulator acc(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n_; ++k)
        if (!z[k].is_zero()) acc.add(triple_basis(i, j, k), xy * z[k]);
    }
  }
  return acc.value();
}

bool operator==(const LYAlgebra& a, const LYAlgebra& b) {
  return a.field_ == b.field_ && a.labels_ == b.labels_ && a.bracket_ == b.bracket_ &&
         a.triple_ == b.triple_;
}

// ---------------------------------------------------------------- builder

LYAlgebraBuilder::LYAlgebraBuilder(Field field, std::vector<std::string> labels)
    : field_(field),
      labels_(std::move(labels)),
      bracket_(labels_.size() * labels_.size()),
      triple_(labels_.size() * labels_.size() * labels_.size()) {}

LYAlgebraBuilder& LYAlgebraBuilder::set_bracket(std::size_t i, std::size_t j, const Element& value) {
  const std::size_t n = dim();
  if (i >= n || j >= n) throw std::out_of_range("basis index out of range");
  require_dim(value, n);
  if (i == j) {
    if (!is_zero(value)) throw InvariantError("[" + labels_[i] + "," + labels_[i] + "] must vanish (LY1)");
    return *this;
  }
  Element neg = Field(field_).from_int(-1) * value;
  auto& fwd = bracket_[i * n + j];
  auto& rev = bracket_[j * n + i];
  if ((fwd && *fwd != value) || (rev && *rev != neg))
    throw InvariantError("conflicting entries for [" + labels_[i] + "," + labels_[j] + "]");
  fwd = value;
  rev = std::move(neg);
  return *this;
}

LYAlgebraBuilder& LYAlgebraBuilder::set_triple(std::size_t i, std::size_t j, std::size_t k,
                                               const Element& value) {
  const std::size_t n = dim();
  if (i >= n || j >= n || k >= n) throw std::out_of_range("basis index out of range");
  require_dim(value, n);
  if (i == j) {
    if (!is_zero(value))
      throw InvariantError("{" + labels_[i] + "," + labels_[i] + "," + labels_[k] + "} must vanish (LY2)");
    return *this;
  }
  Element neg = field_.from_int(-1) * value;
  auto& fwd = triple_[(i * n + j) * n + k];
  auto& rev = triple_[(j * n + i) * n + k];
  if ((fwd && *fwd != value) || (rev && *rev != neg))
    throw InvariantError("conflicting entries for {" + labels_[i] + "," + labels_[j] + "," + labels_[k] + "}");
  fwd = value;
  rev = std::move(neg);
  return *this;
}

LYAlgebra LYAlgebraBuilder::build() const {
  const std::size_t n = dim();
  Vector c = zero_vector(field_, n * n * n);
  Vector d = zero_vector(field_, n * n * n * n);
  for (std::size_t ij = 0; ij < n * n; ++ij)
    if (bracket_[ij])
      for (std::size_t k = 0; k < n; ++k) c[ij * n + k] = (*bracket_[ij])[k];
  for (std::size_t ijk = 0; ijk < n * n * n; ++ijk)
    if (triple_[ijk])
      for (std::size_t l = 0; l < n; ++l) d[ijk * n + l] = (*triple_[ijk])[l];
  return LYAlgebra(field_, labels_, std::move(c), std::move(d));
}

// ---------------------------------------------------------------- axioms

std::string AxiomReport::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < 6; ++i) os << (i ? " " : "") << "LY" << i + 1 << ':' << (pass[i] ? "ok" : "FAIL");
  return os.str();
}

AxiomReport check_axioms(const LYAlgebra& a) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  const Scalar one = f.one();
  const Scalar minus_one = f.from_int(-1);
  AxiomReport report;
  Accumulator acc(f, n);

  auto record = [&](int axiom, std::vector<std::size_t> idx) {
    report.pass[axiom - 1] = false;
    report.failures.push_back({"LY" + std::to_string(axiom), std::move(idx), acc.value()});
  };

  // acc += s * [v, e_j]   and   acc += s * [e_i, v]
  auto add_bracket_right = [&](const SparseRow& v, std::size_t j, const Scalar& s) {
    for (const auto& [m, x] : v) acc.add(a.bracket_basis(m, j), s * x);
  };
  auto add_bracket_left = [&](std::size_t i, const SparseRow& v, const Scalar& s) {
    for (const auto& [m, x] : v) acc.add(a.bracket_basis(i, m), s * x);
  };
  // acc += s * {v, e_j, e_k}, {e_i, v, e_k}, {e_i, e_j, v}
  auto add_triple_1 = [&](const SparseRow& v, std::size_t j, std::size_t k, const Scalar& s) {
    for (const auto& [m, x] : v) acc.add(a.triple_basis(m, j, k), s * x);
  };
  auto add_triple_2 = [&](std::size_t i, const SparseRow& v, std::size_t k, const Scalar& s) {
    for (const auto& [m, x] : v) acc.add(a.triple_basis(i, m, k), s * x);
  };
  auto add_triple_3 = [&](std::size_t i, std::size_t j, const SparseRow& v, const Scalar& s) {
    for (const auto& [m, x] : v) acc.add(a.triple_basis(i, j, m), s * x);
  };

  // LY1 / LY2 hold structurally, re-checked on the tensors.
  for (std::size_t i = 0; i < n && report.pass[0]; ++i)
    if (!a.bracket_basis(i, i).empty()) {
      acc.add(a.bracket_basis(i, i), one);
      record(1, {i, i});
      acc.clear();
    }
  for (std::size_t i = 0; i < n && report.pass[1]; ++i)
    for (std::size_t k = 0; k < n && report.pass[1]; ++k)
      if (!a.triple_basis(i, i, k).empty()) {
        acc.add(a.triple_basis(i, i, k), one);
        record(2, {i, i, k});
        acc.clear();
      }

  // LY3: {a,b,c} + {b,c,a} + {c,a,b} + [[a,b],c] + [[b,c],a] + [[c,a],b] = 0
  for (std::size_t x = 0; x < n && report.pass[2]; ++x)
    for (std::size_t y = 0; y < n && report.pass[2]; ++y)
      for (std::size_t z = 0; z < n && report.pass[2]; ++z) {
        acc.add(a.triple_basis(x, y, z), one);
        acc.add(a.triple_basis(y, z, x), one);
        acc.add(a.triple_basis(z, x, y), one);
        add_bracket_right(a.bracket_basis(x, y), z, one);
        add_bracket_right(a.bracket_basis(y, z), x, one);
        add_bracket_right(a.bracket_basis(z, x), y, one);
        if (!acc.is_zero()) record(3, {x, y, z});
        acc.clear();
      }

  // LY4: {[a,b],c,d} + {[b,c],a,d} + {[c,a],b,d} = 0
  for (std::size_t x = 0; x < n && report.pass[3]; ++x)
    for (std::size_t y = 0; y < n && report.pass[3]; ++y)
      for (std::size_t z = 0; z < n && report.pass[3]; ++z)
        for (std::size_t w = 0; w < n && report.pass[3]; ++w) {
          add_triple_1(a.bracket_basis(x, y), z, w, one);
          add_triple_1(a.bracket_basis(y, z), x, w, one);
          add_triple_1(a.bracket_basis(z, x), y, w, one);
          if (!acc.is_zero()) record(4, {x, y, z, w});
          acc.clear();
        }

  // LY5: {a,b,[c,d]} = [{a,b,c},d] + [c,{a,b,d}]
  for (std::size_t x = 0; x < n && report.pass[4]; ++x)
    for (std::size_t y = 0; y < n && report.pass[4]; ++y) {
      if (x == y) continue;
      for (std::size_t z = 0; z < n && report.pass[4]; ++z)
        for (std::size_t w = 0; w < n && report.pass[4]; ++w) {
          add_triple_3(x, y, a.bracket_basis(z, w), one);
          add_bracket_right(a.triple_basis(x, y, z), w, minus_one);
          add_bracket_left(z, a.triple_basis(x, y, w), minus_one);
          if (!acc.is_zero()) record(5, {x, y, z, w});
          acc.clear();
        }
    }

  // LY6: {a,b,{c,d,e}} = {{a,b,c},d,e} + {c,{a,b,d},e} + {c,d,{a,b,e}}
  for (std::size_t x = 0; x < n && report.pass[5]; ++x)
    for (std::size_t y = 0; y < n && report.pass[5]; ++y) {
      if (x == y) continue;
      bool zero_operator = true;
      for (std::size_t k = 0; k < n && zero_operator; ++k) zero_operator = a.triple_basis(x, y, k).empty();
      if (zero_operator) continue;
      for (std::size_t z = 0; z < n && report.pass[5]; ++z)
        for (std::size_t u = 0; u < n && report.pass[5]; ++u) {
          if (z == u) continue;
          for (std::size_t v = 0; v < n && report.pass[5]; ++v) {
            add_triple_3(x, y, a.triple_basis(z, u, v), one);
            add_triple_1(a.triple_basis(x, y, z), u, v, minus_one);
            add_triple_2(z, a.triple_basis(x, y, u), v, minus_one);
            add_triple_3(z, u, a.triple_basis(x, y, v), minus_one);
            if (!acc.is_zero()) record(6, {x, y, z, u, v});
            acc.clear();
          }
        }
    }
  return report;
}

// ---------------------------------------------------------------- subspaces

namespace {

Vector densify(const SparseRow& row, const Field& f, std::size_t n) {
  Vector v = zero_vector(f, n);
  for (const auto& [k, x] : row) v[k] = x;
  return v;
}

} // namespace

Subspace bracket_span(const LYAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!a.bracket_basis(i, j).empty()) vs.push_back(densify(a.bracket_basis(i, j), a.field(), n));
  return Subspace::span(a.field(), n, vs);
}

Subspace triple_span(const LYAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!a.triple_basis(i, j, k).empty()) vs.push_back(densify(a.triple_basis(i, j, k), a.field(), n));
  return Subspace::span(a.field(), n, vs);
}

Subspace derived_algebra(const LYAlgebra& a) { return subspace_sum(bracket_span(a), triple_span(a)); }

Subspace centralizer(const LYAlgebra& a, const Subspace& ideal) {
  const std::size_t n = a.dim();
  if (ideal.ambient_dim() != n) throw std::invalid_argument("subspace is not inside the algebra");
  std::vector<Vector> rows;
  // Each condition g(x) = 0 with g linear contributes the rows of its matrix,
  // whose column i is g(e_i).
  auto add_condition = [&](auto&& image_of_basis) {
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(image_of_basis(i));
    Matrix m = Matrix::from_columns(a.field(), n, cols);
    for (std::size_t r = 0; r < n; ++r) {
      Vector row = m.row(r);
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  };
  for (const auto& g : ideal.basis_vectors())
    for (std::size_t y = 0; y < n; ++y) {
      Element ey = a.basis_element(y);
      add_condition([&](std::size_t i) { return a.triple(a.basis_element(i), g, ey); });
      add_condition([&](std::size_t i) { return a.triple(ey, g, a.basis_element(i)); });
    }
  for (std::size_t y = 0; y < n; ++y)
    add_condition([&](std::size_t i) { return densify(a.bracket_basis(i, y), a.field(), n); });
  if (rows.empty()) return Subspace::full(a.field(), n);
  return nullspace(Matrix::from_rows(a.field(), n, rows));
}

Subspace center(const LYAlgebra& a) { return centralizer(a, Subspace::full(a.field(), a.dim())); }

bool is_ideal(const LYAlgebra& a, const Subspace& ideal) {
  const std::size_t n = a.dim();
  if (ideal.ambient_dim() != n) throw std::invalid_argument("subspace is not inside the algebra");
  for (const auto& v : ideal.basis_vectors())
    for (std::size_t x = 0; x < n; ++x) {
      Element ex = a.basis_element(x);
      if (!ideal.contains(a.bracket(ex, v))) return false;
      for (std::size_t y = 0; y < n; ++y) {
        Element ey = a.basis_element(y);
        if (!ideal.contains(a.triple(ex, ey, v)) || !ideal.contains(a.triple(ex, v, ey)) ||
            !ideal.contains(a.triple(v, ex, ey)))
          return false;
      }
    }
  return true;
}

Matrix left_multiplication(const LYAlgebra& a, const Element& x, const Element& y) {
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < a.dim(); ++k) cols.push_back(a.triple(x, y, a.basis_element(k)));
  return Matrix::from_columns(a.field(), a.dim(), cols);
}

// ---------------------------------------------------------------- Leibniz

Element LeibnizTable::multiply(const Element& x, const Element& y) const {
  const std::size_t n = dim();
  require_dim(x, n);
  require_dim(y, n);
  Element out = zero_vector(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar s = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!products[(i * n + j) * n + k].is_zero()) out[k] += s * products[(i * n + j) * n + k];
    }
  }
  return out;
}

std::optional<std::array<std::size_t, 3>> leibniz_defect(const LeibnizTable& t) {
  const std::size_t n = t.dim();
  if (t.products.size() != n * n * n) throw std::invalid_argument("Leibniz table must have n^3 entries");
  std::vector<Element> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vector(t.field, n, i));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Element lhs = t.multiply(e[x], t.multiply(e[y], e[z]));
        Element rhs = t.multiply(t.multiply(e[x], e[y]), e[z]) + t.multiply(e[y], t.multiply(e[x], e[z]));
        if (lhs != rhs) return std::array<std::size_t, 3>{x, y, z};
      }
  return std::nullopt;
}

LYAlgebra from_leibniz(const LeibnizTable& t) {
  if (t.field.characteristic() == 2)
    throw std::invalid_argument("skew-symmetrization needs characteristic != 2");
  if (auto bad = leibniz_defect(t)) {
    const auto& [x, y, z] = *bad;
    throw std::invalid_argument("not a left Leibniz algebra: identity fails at (" + t.labels[x] + ", " +
                                t.labels[y] + ", " + t.labels[z] + ")");
  }
  const std::size_t n = t.dim();
  const Field& f = t.field;
  const Scalar half = f.one() / f.from_int(2);
  const Scalar minus_quarter = f.from_int(-1) / f.from_int(4);
  Vector c = zero_vector(f, n * n * n);
  Vector d = zero_vector(f, n * n * n * n);
  std::vector<Element> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vector(f, n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element ij = t.multiply(e[i], e[j]);
      Element br = half * (ij - t.multiply(e[j], e[i]));
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = br[k];
      for (std::size_t k = 0; k < n; ++k) {
        Element tr = minus_quarter * t.multiply(ij, e[k]);
        for (std::size_t l = 0; l < n; ++l) d[((i * n + j) * n + k) * n + l] = tr[l];
      }
    }
  // (x.y).z + (y.x).z = 0 in a left Leibniz algebra, so d is skew as required;
  // the constructor re-checks.
  return LYAlgebra(f, t.labels, std::move(c), std::move(d));
}

LYAlgebra perturb(const LYAlgebra& a, const Matrix& f) {
  const std::size_t n = a.dim();
  if (f.rows() != n || f.cols() != n) throw std::invalid_argument("perturbation map must be n x n");
  Vector c = zero_vector(a.field(), n * n * n);
  Vector d = zero_vector(a.field(), n * n * n * n);
  auto apply_sparse = [&](const SparseRow& v, Vector& out, std::size_t offset) {
    for (const auto& [m, x] : v)
      for (std::size_t r = 0; r < n; ++r)
        if (!f(r, m).is_zero()) out[offset + r] += f(r, m) * x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      apply_sparse(a.bracket_basis(i, j), c, (i * n + j) * n);
      for (std::size_t k = 0; k < n; ++k) apply_sparse(a.triple_basis(i, j, k), d, ((i * n + j) * n + k) * n);
    }
  return LYAlgebra(a.field(), a.labels(), std::move(c), std::move(d));
}

} // namespace lyat
