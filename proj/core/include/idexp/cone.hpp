#pragma once

#include <vector>

#include "idexp/linalg.hpp"
#include "idexp/pair.hpp"

namespace idexp {

// Graded counterpart of a split: same block structure and index order, names
// capitalized when that stays collision-free (u1 -> U1), original names kept
// otherwise.
VarSplitPtr graded_split(const VarSplitPtr& s);

// Rebuild a polynomial over the (same-shape) graded split, exponents as-is.
Poly regrade(const Poly& f, VarSplitPtr target);

// Homogeneous ideal on the graded ring. Zero ideal = empty generator list;
// zero generators are dropped, inhomogeneous ones rejected.
struct HomogIdeal {
  Field field;
  VarSplitPtr split;
  std::vector<Poly> gens;

  HomogIdeal(Field f, VarSplitPtr s, std::vector<Poly> g);
};

// Degree-d slice of the ideal as an rref basis over the degree-d monomials
// (graded-lex monomial order); the workhorse for graded ideal comparisons.
std::vector<Row> ideal_degree_slice(const HomogIdeal& I, int degree);
bool homog_ideal_equal(const HomogIdeal& a, const HomogIdeal& b);

// All a-fold products of generators.
HomogIdeal homog_power(const HomogIdeal& I, int a);

// Ideal of degree-b initial forms, summed over components; a component whose
// weight is not a positive integer contributes nothing. Requires the origin
// to be singular for every component (each generator order >= b).
HomogIdeal tangent_cone(const PairSystem& s);

// Idealistic tangent cone: one component (initials, b) per input component.
PairSystem itc_pair(const PairSystem& s);

// Minimal linear span, canonical rref basis of linear forms.
struct LinearSpan {
  Field field;
  VarSplitPtr split;
  std::vector<Poly> basis;
};

// Smallest subspace V of linear forms with every generator a polynomial in V.
// Characteristic 0 (or p above every generator degree): span of all
// order-(deg-1) Hasse derivatives, which is provably minimal. Small positive
// characteristic: exact search over subspaces by ascending dimension, pruned
// by the mandatory derivative span; throws budget_error past `budget`
// candidate subspaces.
LinearSpan directrix(const HomogIdeal& I, long long budget = 500000);

// phi = sum_i lambda_i * W_i^q with q a power of the characteristic (q = 1 in
// characteristic 0). Coefficient row is rref-normalized.
struct AdditivePoly {
  long long q = 1;
  Row lambda;

  Poly poly(const Field& f, const VarSplitPtr& split) const;
};

struct RidgeResult {
  bool determined = false;  // false: search budget exhausted, no answer claimed
  std::vector<AdditivePoly> gens;
};

// Smallest additive-polynomial subalgebra containing every generator.
// Characteristic 0 reduces to the directrix. Over F_p the search runs over
// saturated subspace chains U_1 <= U_p <= ... (one level per power p^e up to
// the generator degree), ordered by total dimension, so the first hit is the
// unique minimum; honest undetermined result past the budget.
RidgeResult ridge(const HomogIdeal& I, long long budget = 200000);

// Idealistic directrix / ridge pair, plus the perfect-field consistency check
// Dir = (Rid)_red: over F_p the q-th roots of the ridge generators must span
// the directrix (coefficientwise roots, lambda^(1/q) = lambda on F_p).
struct DirRid {
  Pair dir;            // (directrix span, 1)
  PairSystem rid;      // one component (phi_i, q_i) per ridge generator
  bool ridge_determined = false;
  bool roots_match = false;  // meaningful only when ridge_determined
};

DirRid dir_rid_pairs(const PairSystem& s);

// A directrix direction together with its derivation witness: the linear form
// arises as the M-th Hasse derivative of the generator (component, generator)
// of the tangent cone, normalized to a unit leading coefficient.
struct ContactDirection {
  Poly form;    // over the graded split
  Monomial M;   // |M| = b - 1
  int component = 0;
  int generator = 0;
};

// Directrix basis with witnesses, valid in characteristic 0 or when every
// component weight is below the characteristic; requires a nonzero cone.
std::vector<ContactDirection> maximal_contact_directions(const PairSystem& s);

}  // namespace idexp
