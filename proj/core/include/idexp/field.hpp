#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

#include "idexp/error.hpp"

namespace idexp {

using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Coefficient field: the rationals (characteristic 0) or a prime field F_p with
// p < 2^31. Value type, compared structurally.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(long long p);

  long long characteristic() const { return p_; }
  bool is_rationals() const { return p_ == 0; }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

  std::string str() const;

 private:
  explicit Field(long long p) : p_(p) {}
  long long p_;
};

// Exact field element. Over the rationals the value is a reduced fraction; over
// F_p it is the residue in [0, p). All arithmetic is exact; division by zero
// throws input_error.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()), q_(0) {}
  Scalar(const Field& f, const Rat& value);
  Scalar(const Field& f, long long value) : Scalar(f, Rat(value)) {}

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }

  const Field& field() const { return field_; }
  bool is_zero() const { return q_ == 0; }
  bool is_one() const { return q_ == 1; }

  // The canonical rational representative (for F_p: the residue as an integer).
  const Rat& rep() const { return q_; }

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.q_ == b.q_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;

 private:
  void reduce();
  static void check_same(const Scalar& a, const Scalar& b);

  Field field_;
  Rat q_;
};

}  // namespace idexp
