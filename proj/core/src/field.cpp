#include "idexp/field.hpp"

#include <boost/multiprecision/gmp.hpp>

namespace idexp {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Residue of num/den mod p; den must be invertible.
Rat mod_reduce(const Rat& v, long long p) {
  BigInt num = boost::multiprecision::numerator(v);
  BigInt den = boost::multiprecision::denominator(v);
  BigInt bp(p);
  BigInt n = num % bp;
  if (n < 0) n += bp;
  BigInt d = den % bp;
  if (d == 0) throw input_error("scalar denominator divisible by the characteristic");
  // Fermat inverse; p is prime.
  BigInt inv = boost::multiprecision::powm(d, bp - 2, bp);
  return Rat((n * inv) % bp);
}

}  // namespace

Field Field::prime(long long p) {
  if (p < 2 || p >= (1LL << 31) || !is_prime(p))
    throw input_error("field characteristic must be a prime below 2^31");
  return Field(p);
}

std::string Field::str() const {
  if (is_rationals()) return "Q";
  return "F" + std::to_string(p_);
}

Scalar::Scalar(const Field& f, const Rat& value) : field_(f), q_(value) { reduce(); }

void Scalar::reduce() {
  if (!field_.is_rationals()) q_ = mod_reduce(q_, field_.characteristic());
}

void Scalar::check_same(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) throw input_error("scalar arithmetic across different fields");
}

Scalar Scalar::operator-() const { return Scalar(field_, -q_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw input_error("inverse of zero");
  if (field_.is_rationals()) return Scalar(field_, Rat(1) / q_);
  long long p = field_.characteristic();
  BigInt inv = boost::multiprecision::powm(BigInt(boost::multiprecision::numerator(q_)),
                                           BigInt(p - 2), BigInt(p));
  return Scalar(field_, Rat(inv));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::check_same(a, b);
  return Scalar(a.field_, a.q_ + b.q_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar::check_same(a, b);
  return Scalar(a.field_, a.q_ - b.q_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::check_same(a, b);
  return Scalar(a.field_, a.q_ * b.q_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  Scalar::check_same(a, b);
  return a * b.inverse();
}

std::string Scalar::str() const { return q_.str(); }

}  // namespace idexp
