#pragma once

#include "lyat/matrix.hpp"

#include <string>
#include <vector>

namespace lyat {

/// Univariate polynomial, coefficients from degree 0 upward. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class Polynomial {
public:
  explicit Polynomial(Field field) : field_(field) {}
  Polynomial(Field field, Vector coefficients);

  const Field& field() const { return field_; }
  const Vector& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

  /// True iff X^k divides this polynomial.
  bool divisible_by_x_power(std::size_t k) const;

  /// p(m) for a square matrix m.
  Matrix evaluate(const Matrix& m) const;

  std::string to_string() const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  Field field_;
  Vector coeffs_;
};

/// Monic polynomial of least degree annihilating m.
Polynomial minimal_polynomial(const Matrix& m);

} // namespace lyat
