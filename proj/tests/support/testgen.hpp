#pragma once

// Deterministic random instances plus brute-force oracles for the property
// suites. Everything is seeded explicitly: reruns see the same cases.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "idexp/cone.hpp"
#include "idexp/linalg.hpp"
#include "idexp/pair.hpp"
#include "idexp/polyhedron.hpp"

namespace testgen {

using namespace idexp;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  int pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
  }

 private:
  std::mt19937_64 eng_;
};

inline Field random_field(Rng& rng) {
  switch (rng.pick(0, 2)) {
    case 0:
      return Field::rationals();
    case 1:
      return Field::prime(2);
    default:
      return Field::prime(3);
  }
}

inline VarSplitPtr random_split(Rng& rng, int max_u = 3, int max_y = 3) {
  static const std::vector<std::string> us = {"u1", "u2", "u3"};
  static const std::vector<std::string> ys = {"y1", "y2", "y3"};
  const int e = rng.pick(1, max_u);
  const int r = rng.pick(1, max_y);
  return make_split({us.begin(), us.begin() + e}, {ys.begin(), ys.begin() + r});
}

inline Scalar random_nonzero(Rng& rng, const Field& f) {
  if (f.is_rationals()) {
    int num = rng.pick(-4, 4);
    if (num == 0) num = 1;
    return Scalar(f, Rat(num));
  }
  return Scalar(f, rng.pick(1, static_cast<int>(f.characteristic()) - 1));
}

inline Poly random_poly(Rng& rng, const Field& f, const VarSplitPtr& s,
                        int max_deg, int terms) {
  Poly out(f, s);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(static_cast<size_t>(s->size()), 0);
    int budget = rng.pick(0, max_deg);
    for (int i = 0; i < s->size() && budget > 0; ++i) {
      const int k = rng.pick(0, budget);
      e[static_cast<size_t>(i)] = k;
      budget -= k;
    }
    out = out + Poly::monomial(f, s, Monomial(e), random_nonzero(rng, f));
  }
  return out;
}

inline Poly random_homogeneous(Rng& rng, const Field& f, const VarSplitPtr& s,
                               int degree, int terms) {
  Poly out(f, s);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(static_cast<size_t>(s->size()), 0);
    int budget = degree;
    for (int i = 0; i < s->size() - 1; ++i) {
      const int k = rng.pick(0, budget);
      e[static_cast<size_t>(i)] = k;
      budget -= k;
    }
    e[static_cast<size_t>(s->size() - 1)] = budget;
    out = out + Poly::monomial(f, s, Monomial(e), random_nonzero(rng, f));
  }
  return out;
}

inline PairSystem random_system(Rng& rng) {
  const Field f = random_field(rng);
  const VarSplitPtr s = random_split(rng);
  const int ncomp = rng.pick(1, 2);
  std::vector<Pair> comps;
  for (int c = 0; c < ncomp; ++c) {
    const int b = rng.pick(1, 3);
    const int ngens = rng.pick(1, 2);
    std::vector<Poly> gens;
    for (int g = 0; g < ngens; ++g) {
      gens.push_back(random_poly(rng, f, s, 6, rng.pick(1, 4)));
    }
    comps.emplace_back(f, s, std::move(gens), Rat(b));
  }
  return PairSystem(f, s, std::move(comps));
}

// ---- 2D staircase oracle ---------------------------------------------------
// Membership in conv(points) + orthant, decided without the LP machinery: in
// the plane every dominated point is dominated by a single generator or by a
// point of a single edge, so pairs of generators suffice.

inline bool dominates(const QVec& q, const QVec& p) {
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i] < p[i]) return false;
  }
  return true;
}

inline bool oracle_contains_2d(const std::vector<QVec>& pts, const QVec& q) {
  for (const QVec& p : pts) {
    if (dominates(q, p)) return true;
  }
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      // t*p_i + (1-t)*p_j <= q componentwise, t in [0,1]: each coordinate cuts
      // the t-interval on one side.
      Rat lo = 0, hi = 1;
      bool bad = false;
      for (int c = 0; c < 2 && !bad; ++c) {
        const Rat a = pts[i][static_cast<size_t>(c)] - pts[j][static_cast<size_t>(c)];
        const Rat rhs = q[static_cast<size_t>(c)] - pts[j][static_cast<size_t>(c)];
        if (a == 0) {
          bad = rhs < 0;
        } else if (a > 0) {
          hi = std::min(hi, Rat(rhs / a));
        } else {
          lo = std::max(lo, Rat(rhs / a));
        }
      }
      if (!bad && lo <= hi) return true;
    }
  }
  return false;
}

inline std::vector<QVec> oracle_vertices_2d(const std::vector<QVec>& pts) {
  std::vector<QVec> uniq = pts;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::vector<QVec> out;
  for (const QVec& p : uniq) {
    std::vector<QVec> rest;
    for (const QVec& q : uniq) {
      if (q != p) rest.push_back(q);
    }
    if (!oracle_contains_2d(rest, p)) out.push_back(p);
  }
  return out;
}

// ---- directrix oracle ------------------------------------------------------
// Exhaustive subspace search over F_p^n (tiny n only). A subspace V qualifies
// when every generator is symbolically invariant under translations along
// ker(V); the minimal qualifying dimension carries a unique subspace, which
// must be the directrix.

inline std::vector<Row> kernel_basis(const std::vector<Row>& rows, const Field& f,
                                     int n) {
  std::vector<Row> m = rows;
  rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  std::vector<int> pivot_row(static_cast<size_t>(n), -1);
  for (size_t i = 0; i < m.size(); ++i) {
    for (int j = 0; j < n; ++j) {
      if (!m[i][static_cast<size_t>(j)].is_zero()) {
        is_pivot[static_cast<size_t>(j)] = true;
        pivot_row[static_cast<size_t>(j)] = static_cast<int>(i);
        break;
      }
    }
  }
  std::vector<Row> out;
  for (int j = 0; j < n; ++j) {
    if (is_pivot[static_cast<size_t>(j)]) continue;
    Row v(static_cast<size_t>(n), Scalar::zero(f));
    v[static_cast<size_t>(j)] = Scalar::one(f);
    for (int c = 0; c < n; ++c) {
      if (!is_pivot[static_cast<size_t>(c)]) continue;
      v[static_cast<size_t>(c)] =
          -m[static_cast<size_t>(pivot_row[static_cast<size_t>(c)])][static_cast<size_t>(j)];
    }
    out.push_back(std::move(v));
  }
  return out;
}

// f(x + sum_i t_i w_i) == f(x) as a polynomial identity in x and t.
inline bool invariant_along(const Poly& f, const std::vector<Row>& w) {
  if (w.empty()) return true;
  const VarSplitPtr& s = f.split();
  const int n = s->size();
  VarSplitPtr wide = s;
  for (size_t i = 0; i < w.size(); ++i) {
    wide = wide->adjoined("t_shift" + std::to_string(i + 1));
  }
  std::map<int, Poly> images;
  for (int j = 0; j < n; ++j) {
    Poly img = Poly::variable(f.field(), wide, j);
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i][static_cast<size_t>(j)].is_zero()) continue;
      img = img + w[i][static_cast<size_t>(j)] *
                      Poly::variable(f.field(), wide, n + static_cast<int>(i));
    }
    images.emplace(j, std::move(img));
  }
  const Poly lifted = f.lifted(wide);
  return lifted.substitute(images) == lifted;
}

// All subspaces of F_p^n of the given dimension, as canonical rref bases.
inline std::vector<std::vector<Row>> all_subspaces(const Field& f, int n, int dim) {
  const long long p = f.characteristic();
  std::vector<Row> nonzero;
  std::vector<long long> digits(static_cast<size_t>(n), 0);
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  for (long long k = 1; k < total; ++k) {
    for (int j = n - 1; j >= 0; --j) {
      if (++digits[static_cast<size_t>(j)] < p) break;
      digits[static_cast<size_t>(j)] = 0;
    }
    Row v;
    for (int j = 0; j < n; ++j) v.emplace_back(f, digits[static_cast<size_t>(j)]);
    nonzero.push_back(std::move(v));
  }

  std::vector<std::vector<Row>> out;
  std::vector<std::string> seen;
  std::vector<int> idx(static_cast<size_t>(dim), 0);
  auto key_of = [](const std::vector<Row>& basis) {
    std::string key;
    for (const Row& r : basis) {
      for (const Scalar& c : r) key += c.str() + ",";
      key += ";";
    }
    return key;
  };
  auto rec = [&](auto&& self, int slot, int lo) -> void {
    if (slot == dim) {
      std::vector<Row> pickrows;
      for (int i = 0; i < dim; ++i) pickrows.push_back(nonzero[static_cast<size_t>(idx[static_cast<size_t>(i)])]);
      std::vector<Row> basis = row_basis(pickrows);
      if (static_cast<int>(basis.size()) != dim) return;
      const std::string key = key_of(basis);
      if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
        seen.push_back(key);
        out.push_back(std::move(basis));
      }
      return;
    }
    for (int i = lo; i < static_cast<int>(nonzero.size()); ++i) {
      idx[static_cast<size_t>(slot)] = i;
      self(self, slot + 1, i + 1);
    }
  };
  if (dim == 0) {
    out.push_back({});
  } else {
    rec(rec, 0, 0);
  }
  return out;
}

// Brute-force directrix: smallest dimension whose qualifying subspace is
// unique; returns its canonical basis.
inline std::vector<Row> oracle_directrix(const HomogIdeal& I) {
  const int n = I.split->size();
  for (int dim = 0; dim <= n; ++dim) {
    std::vector<std::vector<Row>> found;
    for (auto& v : all_subspaces(I.field, n, dim)) {
      const std::vector<Row> w = kernel_basis(v, I.field, n);
      bool ok = true;
      for (const Poly& g : I.gens) {
        if (!invariant_along(g, w)) {
          ok = false;
          break;
        }
      }
      if (ok) found.push_back(std::move(v));
    }
    if (found.size() == 1) return found.front();
    if (!found.empty()) return {};  // ambiguous: caller fails the check
  }
  return {};
}

}  // namespace testgen
