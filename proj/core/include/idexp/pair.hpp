#pragma once

#include <string>
#include <vector>

#include "idexp/extrat.hpp"
#include "idexp/poly.hpp"

namespace idexp {

// A pair (J, b): finitely many generators of an ideal plus a positive
// rational weight. The zero ideal is the empty generator list; zero
// polynomials are dropped on construction.
struct Pair {
  Field field;
  VarSplitPtr split;
  std::vector<Poly> gens;
  Rat b;

  Pair(Field f, VarSplitPtr s, std::vector<Poly> g, Rat weight);
};

// Finite intersection of pairs over one split; the singular locus of the
// system is the intersection of the components'.
struct PairSystem {
  Field field;
  VarSplitPtr split;
  std::vector<Pair> components;

  PairSystem(Field f, VarSplitPtr s, std::vector<Pair> comps);
  static PairSystem single(Pair p);
};

// Minimal generator order at the origin; inf for the zero ideal.
ExtRat ideal_order(const Pair& p);

// Order of the pair at the origin: ord(J)/b when ord(J) >= b, otherwise 0
// (and inf for the zero ideal).
ExtRat ord_origin_pair(const Pair& p);
ExtRat ord_origin_system(const PairSystem& s);

// (J^a, a*b) with all a-fold products of the given generators.
Pair power_pair(const Pair& p, int a);

// Power-clear a rational weight to an integer using the weight's denominator.
Pair cleared(const Pair& p);
PairSystem cleared(const PairSystem& s);

// (sum_i J_i^(m/b_i), m); every b_i must be a positive integer dividing m.
Pair merge_pairs(const PairSystem& s, const Rat& m);

// (J1*J2, b1+b2). The product contains the intersection; it is known
// equivalent only when, for both factors, no coordinate point has ideal
// order >= b_i + 1 (origin and all coordinate subspaces are checked).
struct ProductPair {
  Pair pair;
  bool equivalent;
};
ProductPair product_pair(const Pair& a, const Pair& b);

// Append, for every multi-exponent M with |M| = m, the component
// (<D_M f : f generator>, b - m) to each component with b > m; components
// with b <= m pass through untouched. m = 0 is the identity.
PairSystem diff_closure(const PairSystem& s, int m);

// Iterate diff_closure over all admissible m until no new component appears
// (components compared canonically). Throws budget_error beyond max_components.
PairSystem diff_saturate(const PairSystem& s, int max_components = 512);

// Canonical text key (sorted generator renderings + weight); used for
// component dedup and stabilization checks.
std::string component_key(const Pair& p);

}  // namespace idexp
