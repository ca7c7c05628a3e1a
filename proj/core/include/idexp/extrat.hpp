#pragma once

#include <string>

#include "idexp/field.hpp"

namespace idexp {

// Rational extended with +infinity. Orders of zero ideals and deltas of empty
// polyhedra are infinite; everything else is an exact rational.
struct ExtRat {
  bool infinite = false;
  Rat value = 0;

  static ExtRat inf() { return ExtRat{true, 0}; }
  static ExtRat of(const Rat& v) { return ExtRat{false, v}; }

  bool is_finite() const { return !infinite; }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.value == b.value;
  }
  friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }
  friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
  friend bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }

  std::string str() const { return infinite ? "inf" : value.str(); }
};

inline ExtRat min(const ExtRat& a, const ExtRat& b) { return a <= b ? a : b; }

}  // namespace idexp
