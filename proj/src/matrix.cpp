#include "lyat/matrix.hpp"
#include "lyat/subspace.hpp"

#include <sstream>
#include <stdexcept>

namespace lyat {

// ---------------------------------------------------------------- Vector

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(const Field& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = field.one();
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector operator+(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vector operator-(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vector operator*(const Scalar& s, Vector v) {
  for (auto& x : v) x *= s;
  return v;
}

void axpy(Vector& a, const Scalar& s, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += s * b[i];
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::unflatten(Field field, std::size_t rows, std::size_t cols, const Vector& flat) {
  if (flat.size() != rows * cols) throw std::invalid_argument("flat length mismatch");
  Matrix m(field, rows, cols);
  m.data_ = flat;
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

bool Matrix::is_zero() const { return lyat::is_zero(data_); }

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r)
      if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix operator*(const Scalar& s, Matrix m) {
  for (auto& x : m.data_) x *= s;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", " : "") << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// ---------------------------------------------------------------- dense elimination

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
    Scalar inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      Scalar factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(row, c).is_zero()) a(r, c) -= factor * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  Matrix reduced(m.field(), row, m.cols());
  for (std::size_t r = 0; r < row; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) reduced(r, c) = a(r, c);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

namespace {

std::vector<Vector> kernel_from_rref(const Field& field, const Matrix& reduced,
                                     const std::vector<std::size_t>& pivots, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v = unit_vector(field, cols, f);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace

Subspace nullspace(const Matrix& m) {
  auto [reduced, pivots] = rref(m);
  return Subspace::span(m.field(), m.cols(), kernel_from_rref(m.field(), reduced, pivots, m.cols()));
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto [reduced, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vector x = zero_vector(a.field(), a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = reduced(i, a.cols());
  return x;
}

// ---------------------------------------------------------------- sparse elimination

namespace {

SparseRow sparsify(const Vector& v) {
  SparseRow row;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) row.emplace_back(i, v[i]);
  return row;
}

// a - s * b, both sorted by column
SparseRow sub_scaled(const SparseRow& a, const Scalar& s, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(s * b[j].second));
      ++j;
    } else {
      Scalar v = a[i].second - s * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i, ++j;
    }
  }
  return out;
}

} // namespace

EchelonBuilder::EchelonBuilder(Field field, std::size_t cols)
    : field_(field), cols_(cols), pivot_rows_(cols) {}

bool EchelonBuilder::add_row(const Vector& dense) {
  if (dense.size() != cols_) throw std::invalid_argument("equation length mismatch");
  return add_row(sparsify(dense));
}

bool EchelonBuilder::add_row(SparseRow row) {
  std::erase_if(row, [](const auto& e) { return e.second.is_zero(); });
  while (!row.empty()) {
    std::size_t lead = row.front().first;
    if (lead >= cols_) throw std::out_of_range("equation column out of range");
    if (const auto& pivot = pivot_rows_[lead]) {
      Scalar s = row.front().second;
      row = sub_scaled(row, s, *pivot);
      continue;
    }
    Scalar inv = row.front().second.inverse();
    for (auto& e : row) e.second *= inv;
    pivot_rows_[lead] = std::move(row);
    ++rank_;
    return true;
  }
  return false;
}

std::vector<SparseRow> EchelonBuilder::fully_reduced() const {
  std::vector<std::optional<SparseRow>> reduced(cols_);
  for (std::size_t c = cols_; c-- > 0;) {
    if (!pivot_rows_[c]) continue;
    SparseRow row = *pivot_rows_[c];
    // Entries at later pivot columns are cleared using already-reduced rows,
    // which carry no other pivot entries.
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (const auto& [j, v] : row)
      if (j != c && reduced[j]) hits.emplace_back(j, v);
    for (const auto& [j, v] : hits) row = sub_scaled(row, v, *reduced[j]);
    reduced[c] = std::move(row);
  }
  std::vector<SparseRow> out;
  for (auto& r : reduced)
    if (r) out.push_back(std::move(*r));
  return out;
}

Subspace EchelonBuilder::row_space() const {
  auto rows = fully_reduced();
  Matrix basis(field_, rows.size(), cols_);
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    pivots.push_back(rows[i].front().first);
    for (const auto& [j, v] : rows[i]) basis(i, j) = v;
  }
  return Subspace(std::move(basis), std::move(pivots));
}

Subspace EchelonBuilder::kernel() const {
  auto rows = fully_reduced();
  std::vector<bool> is_pivot(cols_, false);
  for (const auto& r : rows) is_pivot[r.front().first] = true;
  std::vector<std::size_t> free_index(cols_, 0);
  std::vector<Vector> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    free_index[f] = out.size();
    out.push_back(unit_vector(field_, cols_, f));
  }
  for (const auto& r : rows) {
    std::size_t p = r.front().first;
    for (const auto& [j, v] : r)
      if (j != p) out[free_index[j]][p] = -v;
  }
  return Subspace::span(field_, cols_, out);
}

} // namespace lyat
