#include "idexp/lp.hpp"

#include <algorithm>

namespace idexp {

bool lp_feasible(int nvars, const std::vector<LinConstraint>& cons) {
  const int m = static_cast<int>(cons.size());
  if (m == 0) return true;

  // Normalize rows to nonnegative right-hand sides.
  std::vector<QVec> rows(m);
  std::vector<Rat> rhs(m);
  std::vector<Rel> rel(m);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(cons[i].a.size()) != nvars)
      throw input_error("LP constraint width mismatch");
    rows[i] = cons[i].a;
    rhs[i] = cons[i].b;
    rel[i] = cons[i].rel;
    if (rhs[i] < 0) {
      for (auto& v : rows[i]) v = -v;
      rhs[i] = -rhs[i];
      if (rel[i] == Rel::LE) rel[i] = Rel::GE;
      else if (rel[i] == Rel::GE) rel[i] = Rel::LE;
    }
  }

  // Columns: structural | slack/surplus | artificial.
  int nslack = 0, nart = 0;
  for (int i = 0; i < m; ++i) {
    if (rel[i] != Rel::EQ) ++nslack;
    if (rel[i] != Rel::LE) ++nart;
  }
  const int ncols = nvars + nslack + nart;
  std::vector<QVec> T(m, QVec(ncols + 1, Rat(0)));
  std::vector<int> basis(m, -1);
  std::vector<bool> artificial(ncols, false);

  int scol = nvars, acol = nvars + nslack;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < nvars; ++j) T[i][j] = rows[i][j];
    T[i][ncols] = rhs[i];
    switch (rel[i]) {
      case Rel::LE:
        T[i][scol] = 1;
        basis[i] = scol++;
        break;
      case Rel::GE:
        T[i][scol] = -1;
        ++scol;
        T[i][acol] = 1;
        artificial[acol] = true;
        basis[i] = acol++;
        break;
      case Rel::EQ:
        T[i][acol] = 1;
        artificial[acol] = true;
        basis[i] = acol++;
        break;
    }
  }

  auto objective = [&]() {
    Rat v = 0;
    for (int i = 0; i < m; ++i) {
      if (artificial[basis[i]]) v += T[i][ncols];
    }
    return v;
  };

  // Phase 1: minimize the sum of artificials.
  while (true) {
    // Reduced costs r_j = c_j - sum_i c_{basis[i]} T[i][j] with c = 1 on artificials.
    int enter = -1;
    for (int j = 0; j < ncols && enter < 0; ++j) {
      bool in_basis = false;
      for (int i = 0; i < m; ++i) {
        if (basis[i] == j) { in_basis = true; break; }
      }
      if (in_basis) continue;
      Rat r = artificial[j] ? Rat(1) : Rat(0);
      for (int i = 0; i < m; ++i) {
        if (artificial[basis[i]]) r -= T[i][j];
      }
      if (r < 0) enter = j;  // Bland: first improving column
    }
    if (enter < 0) break;

    int leave = -1;
    Rat best = 0;
    for (int i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rat ratio = T[i][ncols] / T[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded direction; cannot improve a bounded phase-1

    // Pivot.
    Rat piv = T[leave][enter];
    for (int j = 0; j <= ncols; ++j) T[leave][j] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rat f = T[i][enter];
      for (int j = 0; j <= ncols; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  return objective() == 0;
}

}  // namespace idexp
