#pragma once

// Named systems shared by the unit suites and the acceptance runner. These
// mirror the built-in CLI fixtures but are constructed directly against the
// library API so the tests do not depend on the document layer.

#include <string>
#include <vector>

#include "idexp/lp.hpp"
#include "idexp/pair.hpp"
#include "idexp/parse.hpp"

namespace systems {

using namespace idexp;

inline Pair quadric(const Field& f = Field::rationals()) {
  auto s = make_split({"u1", "u2"}, {"y"});
  return Pair(f, s, {parse_poly("y^2 + u1^7*u2^3", f, s)}, 2);
}

inline Pair shifted_quadric(const Field& f = Field::rationals()) {
  auto s = make_split({"u1", "u2"}, {"z"});
  return Pair(f, s, {parse_poly("z^2 + 2*z*u1^2 + u1^4 + u1^7*u2^3", f, s)}, 2);
}

inline Pair char3_pair() {
  const Field f = Field::prime(3);
  auto s = make_split({"u1", "u2"}, {"z1", "z2"});
  return Pair(f, s,
              {parse_poly("z1^2 + u1^3", f, s),
               parse_poly("z2^3 + z2^2*u2^2 + u2^9", f, s)},
              2);
}

// Characteristic-3 system whose directrix needs the u3 direction; `zform`
// picks the rewritten second generator.
inline PairSystem directrix_gap(bool zform) {
  const Field f = Field::prime(3);
  auto s = make_split({"u1", "u2", "u3"}, {"y1", "y2"});
  const std::string second =
      zform ? "u3*y2 - u2^2*u3 + y2^3" : "u3*y2 + y2^3 + u2^6";
  return PairSystem(f, s,
                    {Pair(f, s, {parse_poly("y1^2 + u1^5", f, s)}, 2),
                     Pair(f, s, {parse_poly(second, f, s)}, 2)});
}

inline Pair delta_one() {
  const Field f = Field::rationals();
  auto s = make_split({"u1", "u2", "u3"}, {"y"});
  return Pair(f, s, {parse_poly("y^2 + u3*y + u1^3", f, s)}, 2);
}

// The two-presentation family over u=(x,y), y=(t,z): first presentation pairs
// (z^d - x^(d-1)*y^(d-1), d) with (t, 1), second replaces (t, 1) by
// (t^(d-1) - x^(d-2)*y^(d-1), d - 1).
inline PairSystem presentation_family(int d, bool second) {
  const Field f = Field::rationals();
  auto s = make_split({"x", "y"}, {"t", "z"});
  const std::string big = "z^" + std::to_string(d) + " - x^" + std::to_string(d - 1) +
                          "*y^" + std::to_string(d - 1);
  std::vector<Pair> comps;
  comps.emplace_back(f, s, std::vector<Poly>{parse_poly(big, f, s)}, Rat(d));
  if (second) {
    const std::string small = "t^" + std::to_string(d - 1) + " - x^" +
                              std::to_string(d - 2) + "*y^" + std::to_string(d - 1);
    comps.emplace_back(f, s, std::vector<Poly>{parse_poly(small, f, s)}, Rat(d - 1));
  } else {
    comps.emplace_back(f, s, std::vector<Poly>{parse_poly("t", f, s)}, Rat(1));
  }
  return PairSystem(f, s, std::move(comps));
}

inline PairSystem cubic_weight(int b) {
  const Field f = Field::rationals();
  auto s = make_split({"x"}, {"y"});
  return PairSystem::single(Pair(f, s, {parse_poly("y^3", f, s)}, Rat(b)));
}

inline QVec qv(std::initializer_list<Rat> xs) { return QVec(xs); }

}  // namespace systems
