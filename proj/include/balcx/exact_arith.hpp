#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace balcx {

/// Characteristic of the coefficient field: 0 selects the rationals, a prime
/// p selects the prime field F_p. Primes are limited to p < 2^32 so residue
/// products fit in 64 bits.
class FieldSpec {
 public:
  FieldSpec() = default;
  explicit FieldSpec(std::uint64_t characteristic);

  static FieldSpec rationals() { return FieldSpec{}; }

  std::uint64_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }

  friend bool operator==(FieldSpec, FieldSpec) = default;
  friend auto operator<=>(FieldSpec, FieldSpec) = default;

 private:
  std::uint64_t characteristic_ = 0;
};

bool is_prime(std::uint64_t value);

/// An element of a field described by FieldSpec. Rationals are kept in lowest
/// terms by GMP; residues are kept in [0, p). Mixing fields throws DomainError.
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(FieldSpec field);
  static Scalar one(FieldSpec field);
  static Scalar from_integer(std::int64_t value, FieldSpec field);
  static Scalar from_integer(const mpz_class& value, FieldSpec field);
  /// Maps a/b into the field; throws DomainError if b vanishes there.
  static Scalar from_rational(const mpq_class& value, FieldSpec field);
  /// Parses "a/b" or "a" (char 0) or a decimal integer reduced mod p.
  static Scalar parse(std::string_view text, FieldSpec field);

  FieldSpec field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Exact rational value; only meaningful in characteristic 0.
  const mpq_class& rational() const;
  /// Residue in [0, p); only meaningful in positive characteristic.
  std::uint64_t residue() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  /// Equal iff same field and same value.
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& other) const;

  FieldSpec field_;
  mpq_class rational_;
  std::uint64_t residue_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Canonical image of an integer under Z -> field.
Scalar lift_integer(std::int64_t m, FieldSpec field);
Scalar lift_integer(const mpz_class& m, FieldSpec field);

/// In a field the only zero divisor is zero, so this is "m maps to 0".
bool is_zero_divisor_image(std::int64_t m, FieldSpec field);

}  // namespace balcx
