#include "idexp/linalg.hpp"

#include <algorithm>

namespace idexp {

namespace {

int pivot_col(const Row& r) {
  for (int j = 0; j < static_cast<int>(r.size()); ++j) {
    if (!r[j].is_zero()) return j;
  }
  return -1;
}

void scale_to_unit_pivot(Row& r, int col) {
  Scalar inv = r[col].inverse();
  for (auto& x : r) x = inv * x;
}

// r -= r[col] * pivot_row, where pivot_row has a unit pivot at col.
void eliminate(Row& r, const Row& pivot_row, int col) {
  if (r[col].is_zero()) return;
  Scalar factor = r[col];
  for (int j = 0; j < static_cast<int>(r.size()); ++j) r[j] = r[j] - factor * pivot_row[j];
}

}  // namespace

int rref(std::vector<Row>& rows) {
  std::vector<Row> basis;
  for (auto& r : rows) {
    Row v = reduce_against(basis, std::move(r));
    if (!is_zero_row(v)) insert_into_basis(basis, std::move(v));
  }
  rows = std::move(basis);
  return static_cast<int>(rows.size());
}

std::vector<Row> row_basis(std::vector<Row> rows) {
  rref(rows);
  return rows;
}

Row reduce_against(const std::vector<Row>& basis, Row v) {
  for (const auto& b : basis) {
    int col = pivot_col(b);
    eliminate(v, b, col);
  }
  return v;
}

bool is_zero_row(const Row& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool in_row_span(const std::vector<Row>& basis, const Row& v) {
  return is_zero_row(reduce_against(basis, v));
}

void insert_into_basis(std::vector<Row>& basis, Row v) {
  int col = pivot_col(v);
  if (col < 0) throw precondition_error("cannot insert a dependent vector into a basis");
  scale_to_unit_pivot(v, col);
  for (auto& b : basis) eliminate(b, v, col);
  auto at = std::find_if(basis.begin(), basis.end(),
                         [&](const Row& b) { return pivot_col(b) > col; });
  basis.insert(at, std::move(v));
}

bool same_row_span(std::vector<Row> a, std::vector<Row> b) {
  rref(a);
  rref(b);
  return a == b;
}

}  // namespace idexp
