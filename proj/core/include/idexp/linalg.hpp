#pragma once

#include <vector>

#include "idexp/field.hpp"

namespace idexp {

// Dense row vectors over one exact field. Enough linear algebra for span and
// membership questions; no determinants, no floating point.
using Row = std::vector<Scalar>;

// Reduced row echelon form in place: unit pivots, zeros above and below, rows
// ordered by pivot column, zero rows dropped. Returns the rank.
int rref(std::vector<Row>& rows);

// rref of a copy with zero rows dropped; the canonical basis of the row span.
std::vector<Row> row_basis(std::vector<Row> rows);

// Residue of v after elimination against an rref basis; zero iff v lies in
// the span.
Row reduce_against(const std::vector<Row>& basis, Row v);
bool is_zero_row(const Row& v);
bool in_row_span(const std::vector<Row>& basis, const Row& v);

// Insert a vector known to be independent of the rref basis, restoring rref.
void insert_into_basis(std::vector<Row>& basis, Row v);

bool same_row_span(std::vector<Row> a, std::vector<Row> b);

}  // namespace idexp
