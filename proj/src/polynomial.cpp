#include "lyat/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace lyat {

Polynomial::Polynomial(Field field, Vector coefficients)
    : field_(field), coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool Polynomial::divisible_by_x_power(std::size_t k) const {
  if (is_zero()) return true;
  if (coeffs_.size() <= k) return false;
  for (std::size_t i = 0; i < k; ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

Matrix Polynomial::evaluate(const Matrix& m) const {
  if (!m.is_square()) throw std::invalid_argument("polynomial evaluation needs a square matrix");
  Matrix result(m.field(), m.rows(), m.cols());
  // Horner
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    result = result * m;
    for (std::size_t d = 0; d < m.rows(); ++d) result(d, d) += coeffs_[i];
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Scalar& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string s = c.to_string();
    bool negative = !s.empty() && s.front() == '-';
    if (negative) s.erase(0, 1);
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    bool unit = s == "1";
    if (i == 0) os << s;
    else {
      if (!unit) os << s << '*';
      os << 'X';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("minimal polynomial needs a square matrix");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  std::vector<Vector> powers;
  Matrix power = Matrix::identity(f, n);
  for (std::size_t k = 0; k <= n; ++k) {
    const Vector& flat = power.flat();
    std::optional<Vector> combo;
    if (powers.empty()) {
      if (is_zero(flat)) combo = Vector{};
    } else {
      combo = solve(Matrix::from_columns(f, n * n, powers), flat);
    }
    if (combo) {
      Vector coeffs(k + 1, f.zero());
      for (std::size_t i = 0; i < k; ++i) coeffs[i] = -(*combo)[i];
      coeffs[k] = f.one();
      return Polynomial(f, std::move(coeffs));
    }
    powers.push_back(flat);
    power = power * m;
  }
  throw std::logic_error("minimal polynomial degree exceeded n (Cayley-Hamilton violated)");
}

} // namespace lyat
