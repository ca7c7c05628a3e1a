#include <benchmark/benchmark.h>

#include "idexp/charprep.hpp"
#include "idexp/cone.hpp"
#include "idexp/newton.hpp"
#include "idexp/parse.hpp"

namespace {

using namespace idexp;

PairSystem quadric_system(const Field& f) {
  auto split = make_split({"u1", "u2"}, {"y"});
  Poly g = parse_poly("y^2 + u1^7*u2^3", f, split);
  return PairSystem::single(Pair(f, split, {g}, 2));
}

PairSystem shifted_system(const Field& f) {
  auto split = make_split({"u1", "u2"}, {"z"});
  Poly g = parse_poly("z^2 + 2*z*u1^2 + u1^4 + u1^7*u2^3", f, split);
  return PairSystem::single(Pair(f, split, {g}, 2));
}

void bm_poly_multiply(benchmark::State& state) {
  const Field f = Field::rationals();
  auto split = make_split({"u1", "u2", "u3"}, {"y1", "y2"});
  Poly a = parse_poly("(u1 + u2 + u3 + y1 + y2)^4", f, split);
  Poly b = parse_poly("(u1 - y1 + 2*u2*y2)^3", f, split);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(bm_poly_multiply);

void bm_pair_polyhedron(benchmark::State& state) {
  const PairSystem s = quadric_system(Field::rationals());
  for (auto _ : state) {
    benchmark::DoNotOptimize(pair_polyhedron(s));
  }
}
BENCHMARK(bm_pair_polyhedron);

void bm_vertex_certification(benchmark::State& state) {
  const PairSystem s = quadric_system(Field::rationals());
  const OrthantPolyhedron p = pair_polyhedron(s);
  for (auto _ : state) {
    for (const QVec& v : p.points()) {
      benchmark::DoNotOptimize(p.contains(v));
    }
    benchmark::DoNotOptimize(p.vertices());
  }
}
BENCHMARK(bm_vertex_certification);

void bm_prepare(benchmark::State& state) {
  const PairSystem s = shifted_system(Field::rationals());
  for (auto _ : state) {
    benchmark::DoNotOptimize(prepare(s));
  }
}
BENCHMARK(bm_prepare);

void bm_prepare_f5(benchmark::State& state) {
  const PairSystem s = shifted_system(Field::prime(5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(prepare(s));
  }
}
BENCHMARK(bm_prepare_f5);

void bm_directrix(benchmark::State& state) {
  const Field f = Field::prime(3);
  auto split = make_split({"u1", "u2", "u3"}, {"y1", "y2"});
  Poly g1 = parse_poly("y1^2 + u1^5", f, split);
  Poly g2 = parse_poly("u3*y2 + y2^3 + u2^6", f, split);
  const PairSystem s(f, split, {Pair(f, split, {g1}, 2), Pair(f, split, {g2}, 2)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(directrix(tangent_cone(s)));
  }
}
BENCHMARK(bm_directrix);

}  // namespace

BENCHMARK_MAIN();
