#include "idexp/fixtures.hpp"

#include <sstream>

#include "idexp/error.hpp"

namespace idexp {

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = {
      {"minimal-quadric",
       "quadric with a single fractional vertex (7/2, 3/2); delta = 5",
       R"({
  "field": "Q",
  "variables": {"u": ["u1", "u2"], "y": ["y"]},
  "pairs": [{"generators": ["y^2 + u1^7*u2^3"], "b": "2"}]
})"},
      {"shifted-quadric",
       "the same quadric written in shifted coordinates; prepares back via "
       "c = -1 at v = (2,0)",
       R"({
  "field": "Q",
  "variables": {"u": ["u1", "u2"], "y": ["z"]},
  "pairs": [{"generators": ["z^2 + 2*z*u1^2 + u1^4 + u1^7*u2^3"], "b": "2"}]
})"},
      {"shifted-quadric-f5",
       "the shifted quadric over F_5; the solving translation is c = 4",
       R"({
  "field": {"Fp": 5},
  "variables": {"u": ["u1", "u2"], "y": ["z"]},
  "pairs": [{"generators": ["z^2 + 2*z*u1^2 + u1^4 + u1^7*u2^3"], "b": "2"}]
})"},
      {"char3-pair-vs-ideal",
       "characteristic-3 system whose pair and ideal polyhedra differ",
       R"({
  "field": {"Fp": 3},
  "variables": {"u": ["u1", "u2"], "y": ["z1", "z2"]},
  "pairs": [{"generators": ["z1^2 + u1^3", "z2^3 + z2^2*u2^2 + u2^9"], "b": "2"}]
})"},
      {"directrix-gap-f3",
       "characteristic-3 system whose directrix needs a u-variable; the two "
       "presentations give genuinely different polyhedra",
       R"({
  "field": {"Fp": 3},
  "variables": {"u": ["u1", "u2", "u3"], "y": ["y1", "y2"]},
  "pairs": [{"generators": ["y1^2 + u1^5", "u3*y2 + y2^3 + u2^6"], "b": "2"}],
  "pairs2": [{"generators": ["y1^2 + u1^5", "u3*y2 - u2^2*u3 + y2^3"], "b": "2"}]
})"},
      {"delta-one-linear-term",
       "a linear y-term pins delta at 1: the u3*y monomial contributes the "
       "point (0,0,1)",
       R"({
  "field": "Q",
  "variables": {"u": ["u1", "u2", "u3"], "y": ["y"]},
  "pairs": [{"generators": ["y^2 + u3*y + u1^3"], "b": "2"}]
})"},
      {"probe-weights",
       "one cubic under two weights (2 vs 3); a bounded blow-up probe "
       "distinguishes them",
       R"({
  "field": "Q",
  "variables": {"u": ["x"], "y": ["y"]},
  "pairs": [{"generators": ["y^3"], "b": "2"}],
  "pairs2": [{"generators": ["y^3"], "b": "3"}]
})"},
      {"two-presentations-deg2",
       "equivalent systems with different polyhedra (degree-2 member of the "
       "family)",
       R"({
  "field": "Q",
  "variables": {"u": ["x", "y"], "y": ["t", "z"]},
  "pairs": [
    {"generators": ["z^2 - x*y"], "b": "2"},
    {"generators": ["t"], "b": "1"}
  ],
  "pairs2": [
    {"generators": ["z^2 - x*y"], "b": "2"},
    {"generators": ["t - y"], "b": "1"}
  ]
})"},
      {"weighted-quadric",
       "the minimal quadric with scaling weights alpha = (1/5, 1/5), "
       "beta = (1)",
       R"({
  "field": "Q",
  "variables": {"u": ["u1", "u2"], "y": ["y"]},
  "pairs": [{"generators": ["y^2 + u1^7*u2^3"], "b": "2"}],
  "weights": {"alpha": ["1/5", "1/5"], "beta": ["1"]}
})"},
  };
  return all;
}

const Fixture& fixture(const std::string& name) {
  for (const Fixture& f : fixtures()) {
    if (f.name == name) return f;
  }
  std::ostringstream msg;
  msg << "unknown fixture '" << name << "'; available:";
  for (const Fixture& f : fixtures()) msg << ' ' << f.name;
  throw input_error(msg.str());
}

}  // namespace idexp
