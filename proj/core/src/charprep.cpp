#include "idexp/charprep.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "idexp/cone.hpp"
#include "idexp/error.hpp"

namespace idexp {

namespace {

Monomial u_monomial(const VarSplitPtr& split, const std::vector<int>& v) {
  const std::vector<int> ulike = split->u_like_indices();
  if (v.size() != ulike.size()) {
    throw input_error("translation exponent size does not match the u-like block");
  }
  std::vector<int> e(static_cast<size_t>(split->size()), 0);
  for (size_t i = 0; i < ulike.size(); ++i) {
    if (v[i] < 0) throw input_error("translation exponent must be nonnegative");
    e[static_cast<size_t>(ulike[i])] = v[i];
  }
  return Monomial(e);
}

bool integral(const QVec& v, std::vector<int>& out) {
  out.clear();
  for (const Rat& q : v) {
    if (denominator(q) != 1) return false;
    out.push_back(static_cast<int>(numerator(q).convert_to<long long>()));
  }
  return true;
}

// Candidate translation vectors over Q: for a term C' u^v y^{B'} of y-degree
// b-1 and a pure-y term C y^{B'+e_j}, completing the power suggests
// c_j = -C' / ((B'_j + 1) C). Singles come first, then one combined vector
// per generator.
std::vector<std::vector<Scalar>> rational_candidates(const PairSystem& s,
                                                     const std::vector<int>& v) {
  const VarSplitPtr& split = s.split;
  const int n = split->size();
  const std::vector<int> yidx = split->y_indices();
  const int r = static_cast<int>(yidx.size());
  const Monomial uv = u_monomial(split, v);

  std::vector<std::vector<Scalar>> cands;
  auto push_unique = [&cands](const std::vector<Scalar>& c) {
    if (std::find(cands.begin(), cands.end(), c) == cands.end()) cands.push_back(c);
  };

  for (const Pair& comp : s.components) {
    const long long b = numerator(comp.b).convert_to<long long>();
    for (const Poly& f : comp.gens) {
      std::vector<Scalar> combined(static_cast<size_t>(r), Scalar::zero(s.field));
      std::vector<bool> have(static_cast<size_t>(r), false);
      std::vector<std::vector<Scalar>> singles;
      for (const auto& [m, cprime] : f.terms()) {
        // Match u-part exactly v and y-degree b-1.
        bool upart = true;
        long long l = 0;
        for (int i = 0; i < n; ++i) {
          if (split->block(i) == VarSplit::Block::Y) {
            l += m[i];
          } else if (m[i] != uv[i]) {
            upart = false;
            break;
          }
        }
        if (!upart || l != b - 1) continue;
        for (int j = 0; j < r; ++j) {
          // Pure-y partner monomial y^{B'+e_j}.
          std::vector<int> e(static_cast<size_t>(n), 0);
          for (int jj = 0; jj < r; ++jj) e[static_cast<size_t>(yidx[jj])] = m[yidx[jj]];
          e[static_cast<size_t>(yidx[j])] += 1;
          const Scalar c = f.coefficient(Monomial(e));
          if (c.is_zero()) continue;
          const Scalar bj(s.field, m[yidx[j]] + 1);
          if (bj.is_zero()) continue;
          const Scalar cand = -(cprime / (bj * c));
          if (cand.is_zero()) continue;
          std::vector<Scalar> single(static_cast<size_t>(r), Scalar::zero(s.field));
          single[static_cast<size_t>(j)] = cand;
          singles.push_back(single);
          if (!have[static_cast<size_t>(j)]) {
            have[static_cast<size_t>(j)] = true;
            combined[static_cast<size_t>(j)] = cand;
          }
        }
      }
      for (const auto& c : singles) push_unique(c);
      int nonzero = 0;
      for (const Scalar& c : combined) {
        if (!c.is_zero()) ++nonzero;
      }
      if (nonzero >= 2) push_unique(combined);
    }
  }
  return cands;
}

std::vector<std::vector<Scalar>> prime_candidates(const Field& field, int r) {
  const long long p = field.characteristic();
  long long total = 1;
  for (int j = 0; j < r; ++j) {
    total *= p;
    if (total > 4096) {
      throw budget_error("vertex solver search space too large");
    }
  }
  std::vector<std::vector<Scalar>> cands;
  std::vector<long long> digits(static_cast<size_t>(r), 0);
  for (long long k = 0; k < total; ++k) {
    std::vector<Scalar> c;
    for (int j = 0; j < r; ++j) c.emplace_back(field, digits[static_cast<size_t>(j)]);
    cands.push_back(std::move(c));
    for (int j = r - 1; j >= 0; --j) {
      if (++digits[static_cast<size_t>(j)] < p) break;
      digits[static_cast<size_t>(j)] = 0;
    }
  }
  return cands;
}

}  // namespace

PairSystem apply_translation(const PairSystem& s, const std::vector<Scalar>& c,
                             const std::vector<int>& v) {
  const VarSplitPtr& split = s.split;
  const std::vector<int> yidx = split->y_indices();
  if (c.size() != yidx.size()) {
    throw input_error("translation needs one coefficient per y-variable");
  }
  const Monomial uv = u_monomial(split, v);
  std::map<int, Poly> images;
  for (size_t j = 0; j < yidx.size(); ++j) {
    if (c[j].is_zero()) continue;
    images.emplace(yidx[j], Poly::variable(s.field, split, yidx[j]) +
                                Poly::monomial(s.field, split, uv, c[j]));
  }
  std::vector<Pair> comps;
  for (const Pair& comp : s.components) {
    std::vector<Poly> gens;
    for (const Poly& f : comp.gens) gens.push_back(f.substitute(images));
    comps.emplace_back(s.field, split, std::move(gens), comp.b);
  }
  return PairSystem(s.field, split, std::move(comps));
}

VertexSolution solve_vertex(const PairSystem& s, const QVec& v) {
  const PairSystem sc = cleared(s);
  const OrthantPolyhedron before = pair_polyhedron(sc);
  const auto& verts = before.vertices();
  if (std::find(verts.begin(), verts.end(), v) == verts.end()) {
    throw input_error("vertex solving needs a vertex of the pair polyhedron");
  }

  std::vector<int> vi;
  if (!integral(v, vi)) {
    return {SolveStatus::unsolvable_nonintegral, v, {}, std::nullopt, std::nullopt};
  }

  const int r = static_cast<int>(sc.split->y_indices().size());
  const std::vector<std::vector<Scalar>> cands =
      sc.field.is_rationals() ? rational_candidates(sc, vi)
                              : prime_candidates(sc.field, r);
  for (const auto& c : cands) {
    PairSystem after = apply_translation(sc, c, vi);
    OrthantPolyhedron poly = pair_polyhedron(after);
    if (!poly.contains(v) && poly.subset_of(before)) {
      return {SolveStatus::solved, v, c, std::move(after), std::move(poly)};
    }
  }
  return {SolveStatus::not_solved_by_candidates, v, {}, std::nullopt, std::nullopt};
}

PreparationReport prepare(const PairSystem& s, int degree_bound, VertexOrder order) {
  if (degree_bound < 1) throw input_error("degree bound must be positive");
  const PairSystem start = cleared(s);
  const VarSplitPtr& split = start.split;
  const std::vector<int> yidx = split->y_indices();

  bool hyp_known = true;
  bool hyp_ok = true;
  std::vector<std::string> notes;
  try {
    const LinearSpan dir = directrix(tangent_cone(start));
    for (const Poly& form : dir.basis) {
      for (const auto& [m, c] : form.terms()) {
        for (int i = 0; i < split->size(); ++i) {
          if (m[i] > 0 && split->block(i) != VarSplit::Block::Y) hyp_ok = false;
        }
      }
    }
  } catch (const budget_error&) {
    hyp_known = false;
    notes.push_back("directrix hypothesis undetermined: search budget exceeded");
  } catch (const precondition_error& err) {
    hyp_known = false;
    notes.push_back(std::string("directrix hypothesis undetermined: ") + err.what());
  }

  PairSystem sys = start;
  std::vector<TranslationRecord> record;
  bool truncated = false;
  bool stable = false;
  for (int rounds = 0; rounds < 10000 && !stable; ++rounds) {
    const OrthantPolyhedron poly = pair_polyhedron(sys);
    std::vector<QVec> verts = poly.vertices();
    std::sort(verts.begin(), verts.end(), [](const QVec& a, const QVec& b) {
      Rat sa = 0, sb = 0;
      for (const Rat& q : a) sa += q;
      for (const Rat& q : b) sb += q;
      if (sa != sb) return sa < sb;
      return a < b;
    });
    if (order == VertexOrder::reverse_size_then_lex) {
      std::reverse(verts.begin(), verts.end());
    }
    stable = true;
    for (const QVec& v : verts) {
      std::vector<int> vi;
      if (!integral(v, vi)) continue;
      long long size = 0;
      for (int x : vi) size += x;
      if (size > degree_bound) {
        truncated = true;
        continue;
      }
      VertexSolution sol = solve_vertex(sys, v);
      if (sol.status != SolveStatus::solved) continue;
      for (size_t j = 0; j < sol.coeffs.size(); ++j) {
        if (sol.coeffs[j].is_zero()) continue;
        record.push_back(TranslationRecord{yidx[j], split->name(yidx[j]),
                                           sol.coeffs[j], vi});
      }
      sys = *sol.system;
      stable = false;
      break;
    }
  }
  if (!stable) throw budget_error("preparation loop exceeded its budget");

  OrthantPolyhedron poly = pair_polyhedron(sys);
  ExtRat delta = poly.delta();
  PrepStatus status = PrepStatus::prepared;
  if (!hyp_known || !hyp_ok) {
    status = PrepStatus::hypothesis_warning;
  } else if (truncated) {
    status = PrepStatus::truncated_at_degree_bound;
  }
  return PreparationReport{start,  sys,      std::move(poly), delta,
                           record, status,   hyp_ok,          hyp_known,
                           truncated, notes};
}

PairSystem replay(const PairSystem& s, const std::vector<TranslationRecord>& record) {
  PairSystem sys = cleared(s);
  const std::vector<int> yidx = sys.split->y_indices();
  for (const TranslationRecord& step : record) {
    std::vector<Scalar> c(yidx.size(), Scalar::zero(sys.field));
    bool found = false;
    for (size_t j = 0; j < yidx.size(); ++j) {
      if (yidx[j] == step.y_index) {
        c[j] = step.c;
        found = true;
      }
    }
    if (!found) throw input_error("translation record names a non-y variable");
    sys = apply_translation(sys, c, step.v);
  }
  return sys;
}

DeltaValue delta_invariant(const PairSystem& s, int degree_bound) {
  PreparationReport report = prepare(s, degree_bound);
  return DeltaValue{report.delta, report.status};
}

}  // namespace idexp
