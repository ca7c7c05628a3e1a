#include "idexp/coeff.hpp"

#include <algorithm>
#include <map>

#include "idexp/error.hpp"
#include "idexp/linalg.hpp"

namespace idexp {

namespace {

// u-block plus adjoined variables of the split, as a split of its own.
VarSplitPtr u_only_split(const VarSplitPtr& split) {
  std::vector<std::string> u_names;
  for (int i = 0; i < split->u_size(); ++i) u_names.push_back(split->name(i));
  VarSplitPtr out = make_split(u_names, {});
  const int base = split->u_size() + split->y_size();
  for (int k = 0; k < split->adjoined_size(); ++k) {
    out = out->adjoined(split->name(base + k));
  }
  return out;
}

long long integer_weight(const Rat& b) {
  return numerator(b).convert_to<long long>();
}

}  // namespace

CoeffPair coefficient_pair(const Pair& e) {
  const Pair ec = cleared(e);
  const long long b = integer_weight(ec.b);
  const VarSplitPtr& split = ec.split;
  const VarSplitPtr usplit = u_only_split(split);
  const int eu = split->u_size();
  const int r = split->y_size();
  const std::vector<int> yidx = split->y_indices();

  std::vector<std::vector<Poly>> levels(static_cast<size_t>(b));
  for (const Poly& f : ec.gens) {
    // Group the terms of f by their full y-exponent B; each group is one
    // u-coefficient f_B, filed under level |B|.
    std::map<std::vector<int>, Poly> groups;
    for (const auto& [m, c] : f.terms()) {
      long long l = 0;
      std::vector<int> key(static_cast<size_t>(r));
      for (int j = 0; j < r; ++j) {
        key[static_cast<size_t>(j)] = m[yidx[static_cast<size_t>(j)]];
        l += key[static_cast<size_t>(j)];
      }
      if (l >= b) continue;
      std::vector<int> ue(static_cast<size_t>(usplit->size()), 0);
      for (int i = 0; i < eu; ++i) ue[static_cast<size_t>(i)] = m[i];
      for (int k = 0; k < split->adjoined_size(); ++k) {
        ue[static_cast<size_t>(eu + k)] = m[eu + r + k];
      }
      Poly term = Poly::monomial(f.field(), usplit, Monomial(ue), c);
      auto it = groups.find(key);
      if (it == groups.end()) {
        groups.emplace(key, term);
      } else {
        it->second = it->second + term;
      }
    }
    for (const auto& [key, fb] : groups) {
      if (fb.is_zero()) continue;
      long long l = 0;
      for (int v : key) l += v;
      Poly out = fb;
      if (f.degree_bound()) {
        const int bd = std::max(0, *f.degree_bound() - static_cast<int>(l));
        out = f.truncated() ? out.truncated_to(bd) : out.with_degree_bound(bd);
      }
      levels[static_cast<size_t>(l)].push_back(out);
    }
  }

  std::vector<Pair> comps;
  for (long long l = 0; l < b; ++l) {
    const auto& gens = levels[static_cast<size_t>(l)];
    if (!gens.empty()) comps.emplace_back(ec.field, usplit, gens, Rat(b - l));
  }
  if (comps.empty()) comps.emplace_back(ec.field, usplit, std::vector<Poly>{}, Rat(b));
  return CoeffPair{Rat(b), usplit, std::move(levels),
                   PairSystem(ec.field, usplit, std::move(comps))};
}

ExtRat coeff_order(const CoeffPair& d) {
  const long long b = integer_weight(d.b);
  ExtRat best = ExtRat::inf();
  for (long long l = 0; l < static_cast<long long>(d.levels.size()); ++l) {
    ExtRat o = ExtRat::inf();
    for (const Poly& g : d.levels[static_cast<size_t>(l)]) o = min(o, g.order());
    if (!o.is_finite()) continue;
    best = min(best, ExtRat::of(o.value / Rat(b - l)));
  }
  return best;
}

ExtRat coeff_order_clamped(const CoeffPair& d) {
  ExtRat best = ExtRat::inf();
  for (const Pair& comp : d.system.components) best = min(best, ord_origin_pair(comp));
  return best;
}

namespace {

// Perfect matching of the direction forms onto y-variables with nonzero
// pivot coefficients; exists because the forms are independent and span the
// full y-space. Deterministic: forms in order, smallest free index first.
bool assign_pivots(const std::vector<std::vector<bool>>& ok, size_t i,
                   std::vector<int>& pick, std::vector<bool>& used) {
  if (i == ok.size()) return true;
  for (size_t j = 0; j < used.size(); ++j) {
    if (used[j] || !ok[i][j]) continue;
    used[j] = true;
    pick[i] = static_cast<int>(j);
    if (assign_pivots(ok, i + 1, pick, used)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

MaxContact maximal_contact(const Pair& e, int degree_bound) {
  if (degree_bound < 1) throw input_error("degree bound must be positive");
  const Pair ec = cleared(e);
  const VarSplitPtr& split = ec.split;
  const int eu = split->u_size();
  const int r = split->y_size();
  const int n = split->size();
  const Rat b = ec.b;

  const std::vector<ContactDirection> dirs =
      maximal_contact_directions(PairSystem::single(ec));
  for (const ContactDirection& d : dirs) {
    for (const auto& [m, c] : d.form.terms()) {
      for (int i = 0; i < n; ++i) {
        if (m[i] > 0 && split->block(i) != VarSplit::Block::Y) {
          throw precondition_error(
              "maximal contact needs the y-variables to give the directrix");
        }
      }
    }
  }
  if (static_cast<int>(dirs.size()) != r) {
    throw precondition_error(
        "maximal contact needs the y-variables to give the directrix");
  }

  std::vector<std::vector<bool>> ok(dirs.size(),
                                    std::vector<bool>(static_cast<size_t>(r)));
  for (size_t i = 0; i < dirs.size(); ++i) {
    for (int j = 0; j < r; ++j) {
      ok[i][static_cast<size_t>(j)] =
          !dirs[i].form.coefficient(Monomial::unit(n, eu + j)).is_zero();
    }
  }
  std::vector<int> pick(dirs.size(), -1);
  std::vector<bool> used(static_cast<size_t>(r), false);
  if (!assign_pivots(ok, 0, pick, used)) {
    throw precondition_error(
        "maximal contact needs the y-variables to give the directrix");
  }

  std::vector<ContactElement> elements;
  for (size_t i = 0; i < dirs.size(); ++i) {
    const int j = pick[i];
    const Poly& f = ec.gens[static_cast<size_t>(dirs[i].generator)];
    const Poly g = f.hasse_derive(dirs[i].M);
    const Scalar eps = g.coefficient(Monomial::unit(n, eu + j));
    elements.push_back(
        {eps.inverse() * g, eu + j, eps, dirs[i].M, dirs[i].generator});
  }
  std::sort(elements.begin(), elements.end(),
            [](const ContactElement& a, const ContactElement& b_) {
              return a.y_index < b_.y_index;
            });

  // Invert z = L*y + H(u, y), ord H >= 2, by fixed-point iteration under the
  // degree bound: y = L^{-1}(z - H(u, y)); the y-slots of the split denote
  // the new coordinates z from here on.
  std::vector<Row> aug(static_cast<size_t>(r));
  for (int j = 0; j < r; ++j) {
    const Poly zj = elements[static_cast<size_t>(j)].z.initial_form(Rat(1));
    Row& row = aug[static_cast<size_t>(j)];
    for (int k = 0; k < r; ++k) {
      row.push_back(zj.coefficient(Monomial::unit(n, eu + k)));
    }
    for (int k = 0; k < r; ++k) {
      row.push_back(k == j ? Scalar::one(ec.field) : Scalar::zero(ec.field));
    }
  }
  rref(aug);
  for (int j = 0; j < r; ++j) {
    if (static_cast<int>(aug.size()) <= j ||
        !aug[static_cast<size_t>(j)][static_cast<size_t>(j)].is_one()) {
      throw precondition_error(
          "maximal contact needs the y-variables to give the directrix");
    }
  }

  std::vector<Poly> hs;
  for (const ContactElement& el : elements) {
    hs.push_back(el.z - el.z.initial_form(Rat(1)));
  }
  std::vector<Poly> cur;
  for (int p = 0; p < r; ++p) {
    Poly acc(ec.field, split);
    for (int k = 0; k < r; ++k) {
      acc = acc + aug[static_cast<size_t>(p)][static_cast<size_t>(r + k)] *
                      Poly::variable(ec.field, split, eu + k);
    }
    cur.push_back(acc.with_degree_bound(degree_bound));
  }
  bool converged = false;
  for (int round = 0; round <= degree_bound + 1 && !converged; ++round) {
    std::map<int, Poly> images;
    for (int q = 0; q < r; ++q) images.emplace(eu + q, cur[static_cast<size_t>(q)]);
    std::vector<Poly> next;
    for (int p = 0; p < r; ++p) {
      Poly acc(ec.field, split);
      for (int k = 0; k < r; ++k) {
        const Poly rhs = Poly::variable(ec.field, split, eu + k) -
                         hs[static_cast<size_t>(k)].substitute(images);
        acc = acc + aug[static_cast<size_t>(p)][static_cast<size_t>(r + k)] * rhs;
      }
      next.push_back(acc.with_degree_bound(degree_bound));
    }
    converged = true;
    for (int p = 0; p < r; ++p) {
      if (!(next[static_cast<size_t>(p)] == cur[static_cast<size_t>(p)])) {
        converged = false;
      }
    }
    cur = std::move(next);
  }
  if (!converged) {
    throw precondition_error("maximal contact inversion failed to converge");
  }

  std::map<int, Poly> inverse;
  for (int q = 0; q < r; ++q) inverse.emplace(eu + q, cur[static_cast<size_t>(q)]);
  std::vector<Poly> gens;
  for (const Poly& f : ec.gens) gens.push_back(f.substitute(inverse));
  return MaxContact{std::move(elements), Pair(ec.field, split, std::move(gens), b),
                    degree_bound};
}

}  // namespace idexp
