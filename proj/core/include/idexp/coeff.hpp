#pragma once

#include <vector>

#include "idexp/cone.hpp"
#include "idexp/pair.hpp"

namespace idexp {

// Coefficient pair of (J, b) w.r.t. a (u, y)-split: the weight is cleared to
// an integer b, and for every level l < b the ideal I(l) collects the
// u-coefficients f_B with |B| = l over all generators f. Levels keep zero
// ideals (empty generator lists); the system keeps only the nonzero levels
// as components (I(l), b - l), or a single zero component when every level
// vanishes.
struct CoeffPair {
  Rat b;
  VarSplitPtr usplit;                    // u-block plus adjoined variables
  std::vector<std::vector<Poly>> levels; // index l = 0 .. b-1
  PairSystem system;
};

CoeffPair coefficient_pair(const Pair& e);

// Raw order of the coefficient pair: min over levels of ord(I(l))/(b - l),
// without the zero clause of the pair order. This is the quantity that
// matches delta of the pair polyhedron; inf when every level is zero.
ExtRat coeff_order(const CoeffPair& d);

// Order with the zero clause applied per component, then the intersection
// rule (minimum).
ExtRat coeff_order_clamped(const CoeffPair& d);

// One maximal-contact element: z carries in(z, 1) with unit coefficient at
// the assigned y-variable and is exactly eps^{-1} times the Hasse derivative
// D_witness of the named generator, so the identity
//   D_witness(in(f, b)) = eps * in(z, 1)
// holds on the nose and is machine-checkable.
struct ContactElement {
  Poly z;
  int y_index;      // variable index in the split (y-block)
  Scalar eps;
  Monomial witness; // |witness| = b - 1
  int generator;    // index of the lifted generator in the input pair
};

struct MaxContact {
  std::vector<ContactElement> elements; // ascending y_index, one per y
  Pair transformed;                     // input re-expanded in (u, z); the
                                        // y-slots of the split now denote z
  int degree_bound;
};

// Requires char 0 or b < char, and the y-variables must give the directrix.
MaxContact maximal_contact(const Pair& e, int degree_bound = 64);

}  // namespace idexp
