#pragma once

#include "idexp/pair.hpp"
#include "idexp/polyhedron.hpp"

namespace idexp {

// Polyhedron coordinates: the u-block followed by the adjoined block (the
// "coefficient" directions); the y-block contributes the filtered exponents.
// Rational weights are power-cleared to integers before point generation.

// Points (A, B)/b over all generators and components, kept when |B| <= b.
// Dimension (e + adjoined) + r.
OrthantPolyhedron newton_polyhedron(const PairSystem& s);

// Points A/(b - |B|) over all generators and components, kept when |B| < b.
// Dimension e + adjoined.
OrthantPolyhedron pair_polyhedron(const PairSystem& s);

// Hironaka-style ideal polyhedron from a generating set: each generator's
// reference order n is its order modulo the u-like variables (error when a
// generator lies in that ideal); points A/(n - |B|) for |B| < n.
OrthantPolyhedron ideal_polyhedron(const std::vector<Poly>& gens);

// Image of a Newton polyhedron's generator points under
// (a, beta) -> a/(1 - |beta|), dropping points with |beta| >= 1; r is the
// number of trailing filtered coordinates.
OrthantPolyhedron project_newton(const OrthantPolyhedron& newton, int r);

struct NuWeights {
  QVec alpha;  // one positive weight per u-like variable
  QVec beta;   // one positive weight per y variable
};

// Weighted variant: points (alpha.A) / (b - beta.B), kept when beta.B < b.
OrthantPolyhedron nu_polyhedron(const PairSystem& s, const NuWeights& w);

}  // namespace idexp
