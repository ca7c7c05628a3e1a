#include "doctest.h"

#include "idexp/coeff.hpp"
#include "idexp/error.hpp"
#include "idexp/newton.hpp"
#include "idexp/parse.hpp"
#include "support/systems.hpp"
#include "support/testgen.hpp"

using namespace idexp;

TEST_CASE("coefficient pair extracts y-levels") {
  CoeffPair cp = coefficient_pair(systems::quadric());
  CHECK(cp.b == 2);
  CHECK(cp.usplit->names() == std::vector<std::string>{"u1", "u2"});
  REQUIRE(cp.levels.size() == 2);
  REQUIRE(cp.levels[0].size() == 1);
  CHECK(cp.levels[0][0] == parse_poly("u1^7*u2^3", cp.system.field, cp.usplit));
  CHECK(cp.levels[1].empty());
  CHECK(cp.system.components.size() == 1);  // only the nonzero level survives
  CHECK(cp.system.components[0].b == 2);
  CHECK(coeff_order(cp) == ExtRat::of(5));

  CoeffPair dp = coefficient_pair(systems::delta_one());
  REQUIRE(dp.levels.size() == 2);
  REQUIRE(dp.levels[0].size() == 1);
  REQUIRE(dp.levels[1].size() == 1);
  CHECK(dp.levels[0][0] == parse_poly("u1^3", dp.system.field, dp.usplit));
  CHECK(dp.levels[1][0] == parse_poly("u3", dp.system.field, dp.usplit));
  CHECK(coeff_order(dp) == ExtRat::of(1));
}

TEST_CASE("fractional weights clear before coefficient extraction") {
  const Field q = Field::rationals();
  auto s = make_split({"x"}, {"y"});
  CoeffPair cp = coefficient_pair(Pair(q, s, {parse_poly("y", q, s)}, Rat(1, 2)));
  CHECK(cp.b == 1);  // (y, 1/2) clears to (y^2, 1)
  REQUIRE(cp.levels.size() == 1);
  CHECK(cp.levels[0].empty());  // y^2 has no y-free part
  REQUIRE(cp.system.components.size() == 1);  // all-zero levels keep one zero component
  CHECK(cp.system.components[0].gens.empty());
  CHECK(coeff_order(cp) == ExtRat::inf());
}

TEST_CASE("raw and clamped coefficient orders differ below weight") {
  const Field q = Field::rationals();
  auto s = make_split({"x"}, {"y"});
  CoeffPair cp = coefficient_pair(Pair(q, s, {parse_poly("x + y^2", q, s)}, 2));
  CHECK(coeff_order(cp) == ExtRat::of(Rat(1, 2)));
  CHECK(coeff_order_clamped(cp) == ExtRat::of(0));  // ord(x) = 1 < 2 clips
}

TEST_CASE("coefficient levels inherit truncation") {
  const Field q = Field::rationals();
  auto s = make_split({"u1", "u2", "u3"}, {"y"});
  Poly f = parse_poly("y^2 + u3*y + u1^3", q, s).truncated_to(2);
  CoeffPair cp = coefficient_pair(Pair(q, s, {f}, 2));
  CHECK(cp.levels[0].empty());  // u1^3 fell beyond the bound
  REQUIRE(cp.levels[1].size() == 1);
  CHECK(cp.levels[1][0] == parse_poly("u3", q, cp.usplit));
  CHECK(cp.levels[1][0].truncated());
  REQUIRE(cp.levels[1][0].degree_bound().has_value());
  CHECK(*cp.levels[1][0].degree_bound() <= 1);  // bound - level
}

TEST_CASE("coefficient order equals delta of the pair polyhedron") {
  testgen::Rng rng(1611);
  for (int iter = 0; iter < 60; ++iter) {
    PairSystem sys = testgen::random_system(rng);
    for (const auto& comp : sys.components) {
      CoeffPair cp = coefficient_pair(comp);
      CHECK(coeff_order(cp) == pair_polyhedron(PairSystem::single(comp)).delta());
      // The coefficient system's own polyhedron carries the same delta.
      CHECK(pair_polyhedron(cp.system).delta() == coeff_order(cp));
    }
  }
}

TEST_CASE("newton projection reproduces the pair polyhedron") {
  testgen::Rng rng(1612);
  for (int iter = 0; iter < 60; ++iter) {
    PairSystem sys = testgen::random_system(rng);
    OrthantPolyhedron newton = newton_polyhedron(sys);
    CHECK(project_newton(newton, sys.split->y_size()) == pair_polyhedron(sys));
  }
}

TEST_CASE("maximal contact on an already-prepared presentation") {
  MaxContact mc = maximal_contact(systems::quadric());
  REQUIRE(mc.elements.size() == 1);
  const auto& el = mc.elements[0];
  const Pair in = systems::quadric();
  CHECK(el.y_index == *in.split->index_of("y"));
  CHECK(el.eps == Scalar(in.field, 2));
  CHECK(el.z == parse_poly("y", in.field, in.split));
  // The derivation identity holds on the nose.
  CHECK(in.gens[static_cast<size_t>(el.generator)].hasse_derive(el.witness) == el.eps * el.z);
  // Re-expansion changes nothing here.
  CHECK(mc.transformed.gens == in.gens);
  CHECK(mc.transformed.b == in.b);
}

TEST_CASE("maximal contact straightens a shifted presentation") {
  for (const Field f : {Field::rationals(), Field::prime(5)}) {
    CAPTURE(f.characteristic());
    const Pair in = systems::shifted_quadric(f);
    MaxContact mc = maximal_contact(in);
    REQUIRE(mc.elements.size() == 1);
    const auto& el = mc.elements[0];
    CHECK(el.z == parse_poly("z + u1^2", f, in.split));
    CHECK(el.eps == Scalar(f, 2));
    CHECK(in.gens[static_cast<size_t>(el.generator)].hasse_derive(el.witness) == el.eps * el.z);
    REQUIRE(mc.transformed.gens.size() == 1);
    // In the contact coordinate the pair is the minimal quadric again.
    CHECK(mc.transformed.gens[0] == parse_poly("z^2 + u1^7*u2^3", f, in.split));
  }
}

TEST_CASE("maximal contact rejects unsupported inputs") {
  // The directrix of y^2 + u3*y + u1^3 needs the u3 direction: no contact basis.
  CHECK_THROWS_AS(maximal_contact(systems::delta_one()), precondition_error);

  // Weight at the characteristic: the derivative machinery is not available.
  CHECK_THROWS_AS(maximal_contact(systems::quadric(Field::prime(2))), budget_error);

  // Fewer directrix directions than y-variables.
  const Field q = Field::rationals();
  auto s = make_split({"x"}, {"y", "z"});
  CHECK_THROWS_AS(maximal_contact(Pair(q, s, {parse_poly("y^2", q, s)}, 2)),
                  precondition_error);

  // (y, 1/2) clears to (y^2, 1), whose degree-1 slice is empty: zero cone.
  auto s2 = make_split({"x"}, {"y"});
  CHECK_THROWS_AS(maximal_contact(Pair(q, s2, {parse_poly("y", q, s2)}, Rat(1, 2))),
                  precondition_error);
}
