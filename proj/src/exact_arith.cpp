#include "balcx/exact_arith.hpp"

#include <ostream>

#include "balcx/errors.hpp"

namespace balcx {

namespace {

constexpr std::uint64_t kMaxCharacteristic = std::uint64_t{1} << 32;

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::uint64_t d = 3; d * d <= value; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint64_t characteristic) : characteristic_(characteristic) {
  if (characteristic == 0) return;
  if (characteristic >= kMaxCharacteristic) {
    throw DomainError("characteristic " + std::to_string(characteristic) + " exceeds 2^32");
  }
  if (!is_prime(characteristic)) {
    throw DomainError("characteristic " + std::to_string(characteristic) + " is not 0 or a prime");
  }
}

Scalar Scalar::zero(FieldSpec field) {
  Scalar s;
  s.field_ = field;
  return s;
}

Scalar Scalar::one(FieldSpec field) { return from_integer(1, field); }

Scalar Scalar::from_integer(std::int64_t value, FieldSpec field) {
  Scalar s;
  s.field_ = field;
  if (field.is_rational()) {
    s.rational_ = mpq_class(mpz_class(static_cast<long>(value)));
  } else {
    const auto p = static_cast<std::int64_t>(field.characteristic());
    std::int64_t r = value % p;
    if (r < 0) r += p;
    s.residue_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::from_integer(const mpz_class& value, FieldSpec field) {
  Scalar s;
  s.field_ = field;
  if (field.is_rational()) {
    s.rational_ = mpq_class(value);
  } else {
    s.residue_ = reduce(value, field.characteristic());
  }
  return s;
}

Scalar Scalar::from_rational(const mpq_class& value, FieldSpec field) {
  if (field.is_rational()) {
    Scalar s;
    s.rational_ = value;
    s.rational_.canonicalize();
    return s;
  }
  Scalar num = from_integer(value.get_num(), field);
  Scalar den = from_integer(value.get_den(), field);
  if (den.is_zero()) {
    throw DomainError("denominator of " + value.get_str() + " vanishes in characteristic " +
                      std::to_string(field.characteristic()));
  }
  return num / den;
}

Scalar Scalar::parse(std::string_view text, FieldSpec field) {
  std::string str(text);
  if (str.empty()) throw DomainError("empty scalar string");
  mpq_class q;
  // mpq_class's string constructor throws std::invalid_argument on junk; keep
  // the error inside our hierarchy.
  if (q.set_str(str, 10) != 0 || str.find_first_of(" \t\n") != std::string::npos) {
    throw DomainError("malformed scalar \"" + str + "\"");
  }
  if (q.get_den() == 0) throw DomainError("zero denominator in \"" + str + "\"");
  q.canonicalize();
  return from_rational(q, field);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(rational_) == 0 : residue_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rational_ == 1 : residue_ == 1;
}

const mpq_class& Scalar::rational() const { return rational_; }

std::uint64_t Scalar::residue() const { return residue_; }

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw DomainError("scalar arithmetic across characteristics " +
                      std::to_string(field_.characteristic()) + " and " +
                      std::to_string(other.field_.characteristic()));
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  Scalar s;
  s.field_ = field_;
  if (field_.is_rational()) {
    s.rational_ = 1 / rational_;
  } else {
    s.residue_ = mod_inverse(residue_, field_.characteristic());
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    rational_ += rhs.rational_;
  } else {
    residue_ = (residue_ + rhs.residue_) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    rational_ -= rhs.rational_;
  } else {
    const auto p = field_.characteristic();
    residue_ = (residue_ + p - rhs.residue_) % p;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    rational_ *= rhs.rational_;
  } else {
    residue_ = (residue_ * rhs.residue_) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational()) {
    s.rational_ = -rational_;
  } else if (residue_ != 0) {
    s.residue_ = field_.characteristic() - residue_;
  }
  return s;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.field_ != rhs.field_) return false;
  return lhs.field_.is_rational() ? lhs.rational_ == rhs.rational_ : lhs.residue_ == rhs.residue_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return rational_.get_str();
  return std::to_string(residue_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar lift_integer(std::int64_t m, FieldSpec field) { return Scalar::from_integer(m, field); }

Scalar lift_integer(const mpz_class& m, FieldSpec field) { return Scalar::from_integer(m, field); }

bool is_zero_divisor_image(std::int64_t m, FieldSpec field) {
  return lift_integer(m, field).is_zero();
}

}  // namespace balcx
