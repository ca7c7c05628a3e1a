#include "idexp/pair.hpp"

#include <algorithm>
#include <set>

namespace idexp {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

Pair::Pair(Field f, VarSplitPtr s, std::vector<Poly> g, Rat weight)
    : field(f), split(std::move(s)), b(std::move(weight)) {
  if (b <= 0) throw input_error("pair weight must be positive");
  for (auto& gen : g) {
    if (gen.field() != field) throw input_error("pair generator over a different field");
    if (!compatible(gen.split(), split)) throw input_error("pair generator over a different split");
    // Exact zeros are vacuous; a truncated zero is only zero up to its bound
    // and must be kept so downstream checks can refuse to trust it.
    if (!gen.is_zero() || gen.truncated()) gens.push_back(std::move(gen));
  }
}

PairSystem::PairSystem(Field f, VarSplitPtr s, std::vector<Pair> comps)
    : field(f), split(std::move(s)), components(std::move(comps)) {
  for (const auto& c : components) {
    if (c.field != field || !compatible(c.split, split))
      throw input_error("pair system component over a different ring");
  }
}

PairSystem PairSystem::single(Pair p) {
  Field f = p.field;
  VarSplitPtr s = p.split;
  return PairSystem(f, s, {std::move(p)});
}

ExtRat ideal_order(const Pair& p) {
  ExtRat best = ExtRat::inf();
  for (const auto& g : p.gens) best = min(best, g.order());
  return best;
}

ExtRat ord_origin_pair(const Pair& p) {
  ExtRat o = ideal_order(p);
  if (!o.is_finite()) return ExtRat::inf();
  if (o.value >= p.b) return ExtRat::of(o.value / p.b);
  return ExtRat::of(0);
}

ExtRat ord_origin_system(const PairSystem& s) {
  ExtRat best = ExtRat::inf();
  for (const auto& c : s.components) best = min(best, ord_origin_pair(c));
  return best;
}

Pair power_pair(const Pair& p, int a) {
  if (a <= 0) throw input_error("power exponent must be positive");
  if (p.gens.empty()) return Pair(p.field, p.split, {}, p.b * a);
  std::vector<Poly> out;
  std::set<std::string> seen;
  const int k = static_cast<int>(p.gens.size());
  // Multisets i1 <= i2 <= ... <= ia of generator indices.
  std::vector<int> idx(a, 0);
  while (true) {
    Poly prod = p.gens[idx[0]];
    for (int t = 1; t < a; ++t) prod = prod * p.gens[idx[t]];
    if (!prod.is_zero() && seen.insert(prod.str()).second) out.push_back(prod);
    int pos = a - 1;
    while (pos >= 0 && idx[pos] == k - 1) --pos;
    if (pos < 0) break;
    int v = idx[pos] + 1;
    for (int t = pos; t < a; ++t) idx[t] = v;
  }
  return Pair(p.field, p.split, std::move(out), p.b * a);
}

Pair cleared(const Pair& p) {
  BigInt den = denominator(p.b);
  if (den == 1) return p;
  if (den > 64) throw input_error("weight denominator too large to clear");
  return power_pair(p, static_cast<int>(den));
}

PairSystem cleared(const PairSystem& s) {
  std::vector<Pair> comps;
  for (const auto& c : s.components) comps.push_back(cleared(c));
  return PairSystem(s.field, s.split, std::move(comps));
}

Pair merge_pairs(const PairSystem& s, const Rat& m) {
  if (denominator(m) != 1 || m <= 0) throw input_error("merge weight must be a positive integer");
  std::vector<Poly> out;
  std::set<std::string> seen;
  for (const auto& c : s.components) {
    if (denominator(c.b) != 1) throw input_error("merge requires integral component weights");
    BigInt bi = numerator(c.b);
    if (numerator(m) % bi != 0) throw input_error("merge weight must be divisible by every component weight");
    int a = static_cast<int>(numerator(m) / bi);
    Pair powered = power_pair(c, a);
    for (auto& g : powered.gens) {
      if (seen.insert(g.str()).second) out.push_back(g);
    }
  }
  return Pair(s.field, s.split, std::move(out), m);
}

namespace {

// No coordinate point of Sing(J, b+1): every coordinate stratum (including
// the origin, the full variable set) has ideal order < b+1.
bool sing_up_empty_at_coordinate_points(const Pair& p) {
  if (p.gens.empty()) return false;  // zero ideal is singular everywhere
  const int n = p.split->size();
  Rat bound = p.b + 1;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idxs;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) idxs.push_back(i);
    }
    ExtRat best = ExtRat::inf();
    for (const auto& g : p.gens) best = min(best, g.order_along(idxs));
    if (best >= ExtRat::of(bound)) return false;
  }
  return true;
}

}  // namespace

ProductPair product_pair(const Pair& a, const Pair& b) {
  if (a.field != b.field || !compatible(a.split, b.split))
    throw input_error("product of pairs over different rings");
  std::vector<Poly> out;
  std::set<std::string> seen;
  for (const auto& f : a.gens) {
    for (const auto& g : b.gens) {
      Poly h = f * g;
      if (!h.is_zero() && seen.insert(h.str()).second) out.push_back(h);
    }
  }
  Pair prod(a.field, a.split, std::move(out), a.b + b.b);
  bool equiv = sing_up_empty_at_coordinate_points(a) && sing_up_empty_at_coordinate_points(b);
  return ProductPair{std::move(prod), equiv};
}

namespace {

void enumerate_multiexponents(int nvars, int total, Monomial cur, int from,
                              std::vector<Monomial>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  if (from >= nvars) return;
  for (int k = total; k >= 0; --k) {
    Monomial next = k > 0 ? cur.plus(Monomial::unit(nvars, from, k)) : cur;
    enumerate_multiexponents(nvars, total - k, next, from + 1, out);
  }
}

}  // namespace

PairSystem diff_closure(const PairSystem& s, int m) {
  if (m < 0) throw input_error("derivative order must be nonnegative");
  if (m == 0) return s;
  std::vector<Pair> comps = s.components;
  std::set<std::string> seen;
  for (const auto& c : comps) seen.insert(component_key(c));
  const int n = s.split->size();
  std::vector<Monomial> exps;
  enumerate_multiexponents(n, m, Monomial(n), 0, exps);
  for (const auto& c : s.components) {
    if (c.b <= m) continue;  // closure vacuous for these components
    for (const auto& M : exps) {
      std::vector<Poly> gens;
      for (const auto& g : c.gens) {
        Poly d = g.hasse_derive(M);
        if (!d.is_zero()) gens.push_back(d);
      }
      if (gens.empty()) continue;  // zero ideals are discarded
      Pair next(s.field, s.split, std::move(gens), c.b - m);
      if (seen.insert(component_key(next)).second) comps.push_back(std::move(next));
    }
  }
  return PairSystem(s.field, s.split, std::move(comps));
}

PairSystem diff_saturate(const PairSystem& s, int max_components) {
  PairSystem cur = s;
  while (true) {
    size_t before = cur.components.size();
    int max_m = 0;
    for (const auto& c : cur.components) {
      Rat ceil_b = (numerator(c.b) + denominator(c.b) - 1) / denominator(c.b);
      max_m = std::max(max_m, static_cast<int>(numerator(ceil_b)) - 1);
    }
    for (int m = 1; m <= max_m; ++m) cur = diff_closure(cur, m);
    if (static_cast<int>(cur.components.size()) > max_components)
      throw budget_error("derivative saturation exceeded the component budget");
    if (cur.components.size() == before) return cur;
  }
}

std::string component_key(const Pair& p) {
  std::vector<std::string> reps;
  for (const auto& g : p.gens) reps.push_back(g.str());
  std::sort(reps.begin(), reps.end());
  std::string key = p.b.str() + "|";
  for (const auto& r : reps) key += r + ";";
  return key;
}

}  // namespace idexp
