#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace support {

namespace {

// e_i . e_j = sum_k p[(i*n+j)*n+k] e_k, written as (i, j, k, coefficient).
struct Block {
  std::size_t n;
  std::vector<std::array<long, 4>> products;
};

const std::vector<Block>& blocks() {
  static const std::vector<Block> b{
      {1, {}},                                             // one-dimensional, trivial
      {2, {{0, 0, 1, 1}}},                                 // x.x = y
      {2, {{0, 1, 1, 1}}},                                 // x.y = y (not Lie)
      {2, {{0, 1, 1, 1}, {1, 0, 1, -1}}},                  // two-dimensional non-abelian Lie
      {3, {{0, 1, 2, 1}, {1, 0, 2, -1}}},                  // Heisenberg
      {3, {{0, 0, 2, 1}, {0, 1, 1, 1}, {1, 0, 1, -1}}},    // x.x = z, [x, y] = y
      {3, {{0, 1, 1, 2},  {1, 0, 1, -2}, {0, 2, 2, -2}, {2, 0, 2, 2}, {1, 2, 0, 1}, {2, 1, 0, -1}}}, // sl2
  };
  return b;
}

} // namespace

Matrix Gen::invertible(const Field& f, std::size_t n) {
  for (;;) {
    Matrix m = matrix(f, n, n, 2);
    if (lyat::rank(m) == n) return m;
  }
}

lyat::LeibnizTable Gen::leibniz(const Field& f) {
  const auto& all = blocks();
  std::vector<const Block*> parts{&all[static_cast<std::size_t>(integer(0, static_cast<long>(all.size()) - 1))]};
  if (parts[0]->n <= 2 && coin())
    parts.push_back(&all[static_cast<std::size_t>(integer(0, static_cast<long>(all.size()) - 1))]);
  std::size_t n = 0;
  for (auto* p : parts) n += p->n;
  std::vector<Vector> table(n * n, lyat::zero_vector(f, n));
  std::size_t offset = 0;
  for (auto* p : parts) {
    for (const auto& [i, j, k, v] : p->products)
      table[(offset + static_cast<std::size_t>(i)) * n + offset + static_cast<std::size_t>(j)]
           [offset + static_cast<std::size_t>(k)] = f.from_int(v);
    offset += p->n;
  }
  // New basis b_i = P e_i; b_i . b_j expressed in the b basis is P^{-1}((P e_i).(P e_j)).
  const Matrix p = invertible(f, n);
  auto product = [&](const Vector& x, const Vector& y) {
    Vector out = lyat::zero_vector(f, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!x[i].is_zero() && !y[j].is_zero()) lyat::axpy(out, x[i] * y[j], table[i * n + j]);
    return out;
  };
  lyat::LeibnizTable t{f, {}, lyat::zero_vector(f, n * n * n)};
  for (std::size_t i = 0; i < n; ++i) t.labels.push_back("b" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector v = *lyat::solve(p, product(p.column(i), p.column(j)));
      for (std::size_t k = 0; k < n; ++k) t.products[(i * n + j) * n + k] = v[k];
    }
  if (lyat::leibniz_defect(t)) throw std::logic_error("generator produced a non-Leibniz table");
  return t;
}

std::size_t rank(QMat m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Q factor = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= factor * m[r][k];
    }
    ++r;
  }
  return r;
}

std::size_t rank_mod(std::vector<std::vector<long>> m, long p) {
  auto inv = [p](long a) {
    long result = 1, e = p - 2;
    a %= p;
    while (e > 0) {
      if (e & 1) result = result * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return result;
  };
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const long iv = inv(m[r][c]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const long factor = m[i][c] * iv % p;
      for (std::size_t k = c; k < cols; ++k) m[i][k] = ((m[i][k] - factor * m[r][k]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

Q determinant(const QMat& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Q total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Q term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

QMat to_q(const Matrix& m) {
  QMat out(m.rows(), QVec(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).rational();
  return out;
}

Tensors::Tensors(const LYAlgebra& a) : n(a.dim()) {
  for (const auto& x : a.bracket_constants()) c.push_back(x.rational());
  for (const auto& x : a.triple_constants()) d.push_back(x.rational());
}

QVec Tensors::bracket(const QVec& x, const QVec& y) const {
  QVec out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * c[(i * n + j) * n + k];
  return out;
}

QVec Tensors::triple(const QVec& x, const QVec& y, const QVec& z) const {
  QVec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) out[l] += x[i] * y[j] * z[k] * d[((i * n + j) * n + k) * n + l];
    }
  }
  return out;
}

QVec Tensors::unit(std::size_t i) const {
  QVec v(n);
  v[i] = 1;
  return v;
}

QVec apply_map(const QMat& m, const QVec& v) {
  QVec out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
  return out;
}

namespace {

QVec add(QVec a, const QVec& b, int sign = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += sign * b[i];
  return a;
}

bool zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Q& x) { return x == 0; });
}

} // namespace

std::array<bool, 6> axioms(const Tensors& t) {
  std::array<bool, 6> ok{true, true, true, true, true, true};
  const std::size_t n = t.n;
  std::vector<QVec> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(t.unit(i));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!zero(add(t.bracket(e[a], e[b]), t.bracket(e[b], e[a])))) ok[0] = false;
      for (std::size_t c = 0; c < n; ++c)
        if (!zero(add(t.triple(e[a], e[b], e[c]), t.triple(e[b], e[a], e[c])))) ok[1] = false;
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        QVec v = t.triple(e[a], e[b], e[c]);
        v = add(v, t.triple(e[b], e[c], e[a]));
        v = add(v, t.triple(e[c], e[a], e[b]));
        v = add(v, t.bracket(t.bracket(e[a], e[b]), e[c]));
        v = add(v, t.bracket(t.bracket(e[b], e[c]), e[a]));
        v = add(v, t.bracket(t.bracket(e[c], e[a]), e[b]));
        if (!zero(v)) ok[2] = false;
        for (std::size_t d = 0; d < n; ++d) {
          QVec w = t.triple(t.bracket(e[a], e[b]), e[c], e[d]);
          w = add(w, t.triple(t.bracket(e[b], e[c]), e[a], e[d]));
          w = add(w, t.triple(t.bracket(e[c], e[a]), e[b], e[d]));
          if (!zero(w)) ok[3] = false;
          QVec u = t.triple(e[a], e[b], t.bracket(e[c], e[d]));
          u = add(u, t.bracket(t.triple(e[a], e[b], e[c]), e[d]), -1);
          u = add(u, t.bracket(e[c], t.triple(e[a], e[b], e[d])), -1);
          if (!zero(u)) ok[4] = false;
          for (std::size_t f = 0; f < n; ++f) {
            QVec s = t.triple(e[a], e[b], t.triple(e[c], e[d], e[f]));
            s = add(s, t.triple(t.triple(e[a], e[b], e[c]), e[d], e[f]), -1);
            s = add(s, t.triple(e[c], t.triple(e[a], e[b], e[d]), e[f]), -1);
            s = add(s, t.triple(e[c], e[d], t.triple(e[a], e[b], e[f])), -1);
            if (!zero(s)) ok[5] = false;
          }
        }
      }
  return ok;
}

void bracket_equations(const Tensors& t, const std::vector<Term>& terms, QMat& rows, std::size_t blocks) {
  const std::size_t n = t.n;
  auto c = [&](std::size_t i, std::size_t j, std::size_t k) { return t.c[(i * n + j) * n + k]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        QVec row(blocks * n * n);
        for (const auto& term : terms)
          for (std::size_t r = 0, o = term.block * n * n; r < n; ++r) switch (term.slot) {
            case Slot::In1: row[o + r * n + i] += term.sign * c(r, j, k); break; // [F e_i, e_j]_k
            case Slot::In2: row[o + r * n + j] += term.sign * c(i, r, k); break;
            case Slot::Out: row[o + k * n + r] += term.sign * c(i, j, r); break; // (F [e_i, e_j])_k
            case Slot::In3: break;
            }
        if (!zero(row)) rows.push_back(std::move(row));
      }
}

void triple_equations(const Tensors& t, const std::vector<Term>& terms, QMat& rows, std::size_t blocks) {
  const std::size_t n = t.n;
  auto d = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) { return t.d[((i * n + j) * n + k) * n + l]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          QVec row(blocks * n * n);
          for (const auto& term : terms)
            for (std::size_t r = 0, o = term.block * n * n; r < n; ++r) switch (term.slot) {
              case Slot::In1: row[o + r * n + i] += term.sign * d(r, j, k, l); break;
              case Slot::In2: row[o + r * n + j] += term.sign * d(i, r, k, l); break;
              case Slot::In3: row[o + r * n + k] += term.sign * d(i, j, r, l); break;
              case Slot::Out: row[o + l * n + r] += term.sign * d(i, j, k, r); break;
              }
          if (!zero(row)) rows.push_back(std::move(row));
        }
}

namespace {

std::size_t solution_dim(const Tensors& t, const QMat& rows) { return t.n * t.n - rank(rows); }

} // namespace

std::size_t der_dim(const Tensors& t) {
  QMat rows;
  bracket_equations(t, {{Slot::In1, 1}, {Slot::In2, 1}, {Slot::Out, -1}}, rows);
  triple_equations(t, {{Slot::In1, 1}, {Slot::In2, 1}, {Slot::In3, 1}, {Slot::Out, -1}}, rows);
  return solution_dim(t, rows);
}

std::size_t zder_dim(const Tensors& t) {
  QMat rows;
  bracket_equations(t, {{Slot::In1, 1}}, rows);
  bracket_equations(t, {{Slot::Out, 1}}, rows);
  triple_equations(t, {{Slot::In1, 1}}, rows);
  triple_equations(t, {{Slot::Out, 1}}, rows);
  return solution_dim(t, rows);
}

std::size_t centroid_dim(const Tensors& t, bool bracket_only) {
  QMat rows;
  bracket_equations(t, {{Slot::In1, 1}, {Slot::Out, -1}}, rows);
  if (!bracket_only) triple_equations(t, {{Slot::In1, 1}, {Slot::Out, -1}}, rows);
  return solution_dim(t, rows);
}

std::size_t qcentroid_dim(const Tensors& t, bool bracket_only) {
  QMat rows;
  bracket_equations(t, {{Slot::In1, 1}, {Slot::In2, -1}}, rows);
  if (!bracket_only) {
    triple_equations(t, {{Slot::In1, 1}, {Slot::In2, -1}}, rows);
    triple_equations(t, {{Slot::In1, 1}, {Slot::In3, -1}}, rows);
  }
  return solution_dim(t, rows);
}

std::size_t projected_dim(const Tensors& t, const QMat& rows) {
  const std::size_t nn = t.n * t.n;
  QMat witness_part;
  for (const auto& row : rows) witness_part.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(nn), row.end());
  return nn - rank(rows) + rank(witness_part);
}

std::size_t qder_dim(const Tensors& t) {
  QMat rows;
  bracket_equations(t, {{Slot::In1, 1}, {Slot::In2, 1}, {Slot::Out, -1, 1}}, rows, 3);
  triple_equations(t, {{Slot::In1, 1}, {Slot::In2, 1}, {Slot::In3, 1}, {Slot::Out, -1, 2}}, rows, 3);
  return projected_dim(t, rows);
}

std::size_t gder_dim(const Tensors& t) {
  QMat rows;
  bracket_equations(t, {{Slot::In1, 1}, {Slot::In2, 1, 1}, {Slot::Out, -1, 2}}, rows, 6);
  triple_equations(t, {{Slot::In1, 1}, {Slot::In2, 1, 3}, {Slot::In3, 1, 4}, {Slot::Out, -1, 5}}, rows, 6);
  return projected_dim(t, rows);
}

std::size_t s_dim(const Tensors& t) {
  QMat rows;
  bracket_equations(t, {{Slot::In1, 1}, {Slot::In2, 1}, {Slot::Out, -1, 1}}, rows, 2);
  triple_equations(t, {{Slot::In1, 1}, {Slot::In2, 1}, {Slot::In3, 1}, {Slot::Out, Q(-3, 2), 1}}, rows, 2);
  return projected_dim(t, rows);
}

bool is_derivation(const Tensors& t, const QMat& f) {
  const std::size_t n = t.n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const QVec x = t.unit(i), y = t.unit(j);
      QVec lhs = apply_map(f, t.bracket(x, y));
      QVec rhs = add(t.bracket(apply_map(f, x), y), t.bracket(x, apply_map(f, y)));
      if (lhs != rhs) return false;
      for (std::size_t k = 0; k < n; ++k) {
        const QVec z = t.unit(k);
        lhs = apply_map(f, t.triple(x, y, z));
        rhs = add(add(t.triple(apply_map(f, x), y, z), t.triple(x, apply_map(f, y), z)), t.triple(x, y, apply_map(f, z)));
        if (lhs != rhs) return false;
      }
    }
  return true;
}

} // namespace support
