#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace lyat {

class Scalar;

/// The base field: the rationals, or the prime field F_p.
///
/// Primes are restricted to p < 2^32 so that residue products fit in 64 bits.
/// The primes 2 and 3 are refused unless explicitly allowed, since several
/// results (skew-symmetrization, the 3/2 scaling of S, Jordan products) divide
/// by 2 or 3.
class Field {
public:
  static Field rationals() { return Field{0}; }
  static Field prime(std::uint64_t p, bool allow_small = false);

  std::uint64_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rational(const mpq_class& q) const;
  /// Parses "a", "-a", "a/b" (decimal integers). Throws std::invalid_argument.
  Scalar parse(std::string_view text) const;

  /// "Q" or "Fp:<p>".
  std::string name() const;
  static Field from_name(std::string_view name, bool allow_small = false);

  friend bool operator==(const Field&, const Field&) = default;

private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// An element of a Field. Rationals are kept in lowest terms (GMP canonical
/// form); residues live in [0, p).
class Scalar {
public:
  Scalar() = default;
  explicit Scalar(const mpq_class& q);

  Field field() const;
  bool is_rational() const { return modulus_ == 0; }
  bool is_zero() const;
  bool is_one() const;

  /// Throws std::logic_error for residues.
  const mpq_class& rational() const;
  std::uint64_t residue() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
  friend class Field;
  static Scalar make_residue(std::uint64_t value, std::uint64_t p);
  void require_same_field(const Scalar& o) const;

  std::uint64_t modulus_ = 0;
  std::variant<mpq_class, std::uint64_t> value_{mpq_class{0}};
};

} // namespace lyat
