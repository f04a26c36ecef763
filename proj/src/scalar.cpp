#include "lyat/scalar.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace lyat {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p; // p < 2^32
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

} // namespace

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p, bool allow_small) {
  if (p >= (std::uint64_t{1} << 32))
    throw std::invalid_argument("prime must be below 2^32");
  if (!is_prime(p))
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (!allow_small && (p == 2 || p == 3))
    throw std::invalid_argument("characteristic 2 and 3 are refused by default");
  return Field{p};
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (p_ == 0) return Scalar{mpq_class(static_cast<long>(v))};
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return Scalar::make_residue(static_cast<std::uint64_t>(r), p_);
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (p_ == 0) return Scalar{q};
  std::uint64_t den = reduce(q.get_den(), p_);
  if (den == 0)
    throw std::invalid_argument("denominator " + q.get_den().get_str() +
                                " vanishes in " + name());
  std::uint64_t num = reduce(q.get_num(), p_);
  return Scalar::make_residue(mul_mod(num, pow_mod(den, p_ - 2, p_), p_), p_);
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed scalar '" + s + "'");
  if (num.front() == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return from_rational(q);
}

std::string Field::name() const {
  return p_ == 0 ? std::string("Q") : "Fp:" + std::to_string(p_);
}

Field Field::from_name(std::string_view name, bool allow_small) {
  if (name == "Q") return rationals();
  if (name.substr(0, 3) == "Fp:" || name.substr(0, 3) == "Fp ") {
    auto digits = name.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
      throw std::invalid_argument("malformed prime in field '" + std::string(name) + "'");
    return prime(p, allow_small);
  }
  throw std::invalid_argument("unknown field '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const mpq_class& q) : modulus_(0), value_(q) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar Scalar::make_residue(std::uint64_t value, std::uint64_t p) {
  Scalar s;
  s.modulus_ = p;
  s.value_ = value;
  return s;
}

Field Scalar::field() const { return Field{modulus_}; }

bool Scalar::is_zero() const {
  if (modulus_ == 0) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (modulus_ == 0) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (modulus_ != 0) throw std::logic_error("scalar is a residue, not a rational");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (modulus_ == 0) throw std::logic_error("scalar is a rational, not a residue");
  return std::get<std::uint64_t>(value_);
}

void Scalar::require_same_field(const Scalar& o) const {
  if (modulus_ != o.modulus_)
    throw std::invalid_argument("field mismatch in scalar arithmetic");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (modulus_ == 0) return Scalar{1 / std::get<mpq_class>(value_)};
  return make_residue(pow_mod(std::get<std::uint64_t>(value_), modulus_ - 2, modulus_),
                      modulus_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (modulus_ == 0) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = (v + std::get<std::uint64_t>(o.value_)) % modulus_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (modulus_ == 0) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = (v + modulus_ - std::get<std::uint64_t>(o.value_)) % modulus_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (modulus_ == 0) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = mul_mod(v, std::get<std::uint64_t>(o.value_), modulus_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  if (modulus_ == 0) return Scalar{-std::get<mpq_class>(value_)};
  auto v = std::get<std::uint64_t>(value_);
  return make_residue(v == 0 ? 0 : modulus_ - v, modulus_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) return false;
  if (a.modulus_ == 0) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  return std::get<std::uint64_t>(a.value_) == std::get<std::uint64_t>(b.value_);
}

std::string Scalar::to_string() const {
  if (modulus_ == 0) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace lyat
