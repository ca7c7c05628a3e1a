#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idexp/newton.hpp"
#include "idexp/pair.hpp"

namespace idexp {

// Substitute y_j -> y_j + c_j * u^v simultaneously in every generator; v is a
// lattice point over the u-like coordinates (u-block, then adjoined).
PairSystem apply_translation(const PairSystem& s, const std::vector<Scalar>& c,
                             const std::vector<int>& v);

enum class SolveStatus {
  solved,                    // accepted translation, polyhedron shrunk at v
  unsolvable_nonintegral,    // certified: no monomial u^v exists
  not_solved_by_candidates,  // every candidate failed verification
};

struct VertexSolution {
  SolveStatus status;
  QVec vertex;
  std::vector<Scalar> coeffs;                   // c_1..c_r when solved
  std::optional<PairSystem> system;             // substituted system when solved
  std::optional<OrthantPolyhedron> polyhedron;  // its pair polyhedron
};

// Try to remove the vertex v of pair_polyhedron(s) by a translation
// y_j -> y_j + c_j u^v. Weights are power-cleared first (the polyhedron is
// unchanged by that). Over Q the candidates come from dividing the
// coefficients of the u^v y^{B-e_j} terms by B_j times the matching pure-y
// coefficient (singles first, then the per-generator combination); over F_p
// the full vector space F_p^r is searched in lexicographic order (budget
// error beyond 4096 vectors). A candidate is accepted only when v leaves the
// polyhedron and the new polyhedron is contained in the old one.
VertexSolution solve_vertex(const PairSystem& s, const QVec& v);

enum class PrepStatus { prepared, truncated_at_degree_bound, hypothesis_warning };

enum class VertexOrder {
  size_then_lex,          // |v| ascending, lexicographic tie-break (canonical)
  reverse_size_then_lex,  // reversed: for order-independence checks
};

struct TranslationRecord {
  int y_index;  // variable index in the split
  std::string y_name;
  Scalar c;
  std::vector<int> v;
};

struct PreparationReport {
  PairSystem initial;  // the cleared input the loop started from
  PairSystem final_system;
  OrthantPolyhedron polyhedron;
  ExtRat delta;
  std::vector<TranslationRecord> record;
  PrepStatus status;
  bool hypothesis_ok;     // directrix contained in the span of the y-block
  bool hypothesis_known;  // false when the directrix could not be computed
  bool truncated;         // an integral vertex exceeded the degree bound
  std::vector<std::string> notes;
};

// Alternate computing the pair polyhedron and solving its vertices (in the
// given order) until no vertex is solvable. The result is the polyhedron of
// an explicit translated presentation y*; under the directrix hypothesis it
// is the characteristic polyhedron, otherwise the report carries
// hypothesis_warning (the value is still a certified upper approximation).
PreparationReport prepare(const PairSystem& s, int degree_bound = 64,
                          VertexOrder order = VertexOrder::size_then_lex);

// Re-apply a substitution record; prepare's final system is reproduced
// bit-for-bit from its cleared input.
PairSystem replay(const PairSystem& s, const std::vector<TranslationRecord>& record);

struct DeltaValue {
  ExtRat delta;
  PrepStatus status;
};

// delta of the prepared polyhedron, with the preparation status attached.
DeltaValue delta_invariant(const PairSystem& s, int degree_bound = 64);

}  // namespace idexp
