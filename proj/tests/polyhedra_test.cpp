#include "doctest.h"

#include "idexp/error.hpp"
#include "idexp/newton.hpp"
#include "idexp/parse.hpp"
#include "idexp/polyhedron.hpp"
#include "support/testgen.hpp"

#include <algorithm>

using namespace idexp;

namespace {
QVec qv2(const Rat& a, const Rat& b) { return QVec{a, b}; }
}  // namespace

TEST_CASE("vertex certification on a staircase") {
  auto p = OrthantPolyhedron::from_points(
      2, {qv2(0, 2), qv2(1, 1), qv2(3, 0), qv2(3, 3), qv2(1, 1)});
  CHECK(p.points().size() == 4);  // duplicates collapse
  CHECK(p.vertices() == std::vector<QVec>{qv2(0, 2), qv2(1, 1), qv2(3, 0)});
  CHECK(p.delta() == ExtRat::of(2));

  CHECK(p.contains(qv2(1, 1)));
  CHECK(p.contains(qv2(5, 0)));            // recession cone
  CHECK(p.contains(qv2(Rat(1, 2), Rat(3, 2))));  // midpoint of two vertices
  CHECK_FALSE(p.contains(qv2(0, 0)));
  CHECK_FALSE(p.contains(qv2(Rat(1, 2), 1)));
}

TEST_CASE("subset comparisons and the empty polyhedron") {
  auto big = OrthantPolyhedron::from_points(2, {qv2(1, 0), qv2(0, 1)});
  auto small = OrthantPolyhedron::from_points(2, {qv2(2, 0), qv2(0, 2)});
  CHECK(small.subset_of(big));
  CHECK_FALSE(big.subset_of(small));
  CHECK(big.subset_of(big));

  auto none = OrthantPolyhedron::from_points(2, {});
  CHECK(none.empty());
  CHECK(none.delta() == ExtRat::inf());
  CHECK(none.subset_of(small));
  CHECK_FALSE(small.subset_of(none));
  CHECK(none == OrthantPolyhedron::from_points(2, {}));

  CHECK_THROWS_AS(OrthantPolyhedron::from_points(2, {QVec{Rat(1)}}), input_error);
  CHECK_THROWS_AS(OrthantPolyhedron::from_points(2, {qv2(-1, 0)}), input_error);
  CHECK_THROWS_AS(big.subset_of(OrthantPolyhedron::from_points(3, {})), input_error);
}

TEST_CASE("separating certificates exist exactly for vertices") {
  std::vector<QVec> others = {qv2(0, 2), qv2(2, 0)};
  CHECK(separating_certificate(qv2(1, 1), {qv2(0, 3), qv2(3, 0)}));
  CHECK_FALSE(separating_certificate(qv2(1, 1), others));  // on the segment
  CHECK_FALSE(separating_certificate(qv2(2, 2), others));  // dominated
}

TEST_CASE("random planar polyhedra agree with the dominance oracle") {
  testgen::Rng rng(20260814);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = rng.pick(1, 7);
    std::vector<QVec> pts;
    for (int i = 0; i < n; ++i)
      pts.push_back(qv2(Rat(rng.pick(0, 12), rng.pick(1, 4)), Rat(rng.pick(0, 12), rng.pick(1, 4))));

    auto p = OrthantPolyhedron::from_points(2, pts);
    CHECK(p.vertices() == testgen::oracle_vertices_2d(pts));

    for (int probe = 0; probe < 10; ++probe) {
      QVec q = qv2(Rat(rng.pick(0, 14), rng.pick(1, 4)), Rat(rng.pick(0, 14), rng.pick(1, 4)));
      CHECK(p.contains(q) == testgen::oracle_contains_2d(pts, q));
    }

    // delta is attained at a vertex.
    Rat best = 0;
    bool first = true;
    for (const auto& v : p.vertices()) {
      Rat s = v[0] + v[1];
      if (first || s < best) best = s, first = false;
    }
    REQUIRE_FALSE(first);
    CHECK(p.delta() == ExtRat::of(best));
  }
}

TEST_CASE("vertices are a minimal generating set") {
  testgen::Rng rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    const int n = rng.pick(1, 6);
    std::vector<QVec> pts;
    for (int i = 0; i < n; ++i)
      pts.push_back(qv2(Rat(rng.pick(0, 9), rng.pick(1, 3)), Rat(rng.pick(0, 9), rng.pick(1, 3))));
    auto p = OrthantPolyhedron::from_points(2, pts);

    // Rebuilding from the vertices alone reproduces the polyhedron; dropping
    // any single vertex loses it.
    CHECK(OrthantPolyhedron::from_points(2, p.vertices()) == p);
    for (size_t k = 0; k < p.vertices().size(); ++k) {
      std::vector<QVec> rest;
      for (size_t j = 0; j < p.vertices().size(); ++j)
        if (j != k) rest.push_back(p.vertices()[j]);
      CHECK_FALSE(OrthantPolyhedron::from_points(2, rest).contains(p.vertices()[k]));
    }
  }
}

TEST_CASE("three-dimensional membership certificates") {
  // conv{(1,0,0),(0,1,0),(0,0,1)} + orthant: the simplex face x+y+z >= 1.
  auto p = OrthantPolyhedron::from_points(
      3, {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}});
  CHECK(p.vertices().size() == 3);
  CHECK(p.delta() == ExtRat::of(1));
  CHECK(p.contains({Rat(1, 3), Rat(1, 3), Rat(1, 3)}));
  CHECK_FALSE(p.contains({Rat(1, 3), Rat(1, 3), Rat(1, 4)}));
  CHECK(p.contains({Rat(0), Rat(1, 2), Rat(1, 2)}));
}

TEST_CASE("weighted polyhedron rescales points") {
  // nu_polyhedron with alpha = (1/5, 1/5), beta = (1): points alpha.A/(b - B).
  const Field q = Field::rationals();
  auto s = make_split({"u1", "u2"}, {"y"});
  auto sys = PairSystem::single(Pair(q, s, {parse_poly("y^2 + u1^7*u2^3", q, s)}, 2));
  NuWeights w{QVec{Rat(1, 5), Rat(1, 5)}, QVec{Rat(1)}};
  auto p = nu_polyhedron(sys, w);
  CHECK(p.vertices() == std::vector<QVec>{qv2(Rat(7, 10), Rat(3, 10))});

  NuWeights bad{QVec{Rat(1, 5)}, QVec{Rat(1)}};
  CHECK_THROWS_AS(nu_polyhedron(sys, bad), input_error);
  NuWeights neg{QVec{Rat(-1), Rat(1)}, QVec{Rat(1)}};
  CHECK_THROWS_AS(nu_polyhedron(sys, neg), input_error);
}
