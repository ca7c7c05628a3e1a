#include "idexp/cone.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

namespace idexp {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

namespace {

bool positive_integer(const Rat& b) { return denominator(b) == 1 && numerator(b) > 0; }

// All exponent vectors of length n with the given total degree, lex ascending.
void multiexp_rec(int n, int total, int slot, std::vector<int>& cur,
                  std::vector<Monomial>& out) {
  if (slot == n - 1) {
    cur[slot] = total;
    out.push_back(Monomial(cur));
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur[slot] = v;
    multiexp_rec(n, total - v, slot + 1, cur, out);
  }
}

std::vector<Monomial> multiexponents(int n, int total) {
  if (n == 0) {
    if (total == 0) return {Monomial(std::vector<int>{})};
    return {};
  }
  std::vector<int> cur(n, 0);
  std::vector<Monomial> out;
  multiexp_rec(n, total, 0, cur, out);
  return out;
}

// Indexed basis of the degree-d monomials in n variables.
struct DegreeBasis {
  std::vector<Monomial> monos;
  std::map<Monomial, int, GrlexLess> index;

  DegreeBasis(int nvars, int degree) : monos(multiexponents(nvars, degree)) {
    std::sort(monos.begin(), monos.end(), GrlexLess{});
    for (int i = 0; i < static_cast<int>(monos.size()); ++i) index.emplace(monos[i], i);
  }
};

Row poly_to_row(const Poly& f, const DegreeBasis& basis) {
  Row r(basis.monos.size(), Scalar::zero(f.field()));
  for (const auto& [m, c] : f.terms()) {
    auto it = basis.index.find(m);
    if (it == basis.index.end()) throw precondition_error("degree slice saw a foreign monomial");
    r[it->second] = c;
  }
  return r;
}

Poly row_to_linear(const Field& f, const VarSplitPtr& split, const Row& r) {
  Poly out(f, split);
  for (int i = 0; i < static_cast<int>(r.size()); ++i) {
    if (r[i].is_zero()) continue;
    out = out + Poly::monomial(f, split, Monomial::unit(split->size(), i), r[i]);
  }
  return out;
}

Row linear_to_row(const Poly& f) {
  Row r(f.nvars(), Scalar::zero(f.field()));
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() != 1) throw precondition_error("linear form expected");
    for (int i = 0; i < m.size(); ++i) {
      if (m[i] == 1) r[i] = c;
    }
  }
  return r;
}

int homogeneous_degree(const Poly& f) {
  int d = -1;
  for (const auto& [m, c] : f.terms()) {
    if (d < 0) d = m.degree();
    if (m.degree() != d) throw input_error("generator is not homogeneous");
  }
  return d < 0 ? 0 : d;
}

std::vector<int> support_vars(const Poly& f) {
  std::set<int> s;
  for (const auto& [m, c] : f.terms()) {
    for (int i = 0; i < m.size(); ++i) {
      if (m[i] > 0) s.insert(i);
    }
  }
  return std::vector<int>(s.begin(), s.end());
}

// Span of the linear Hasse derivatives D_M f, |M| = deg f - 1. Minimal for
// f in K[V] in characteristic 0 or above deg f; a mandatory subspace of the
// answer in every characteristic (the subalgebra is closed under Hasse
// derivation, so its degree-one part contains every linear derivative).
std::vector<Row> linear_derivative_span(const Poly& f, int d) {
  std::vector<Row> rows;
  for (const auto& M : multiexponents(f.nvars(), d - 1)) {
    Poly g = f.hasse_derive(M);
    if (!g.is_zero()) rows.push_back(linear_to_row(g));
  }
  return row_basis(std::move(rows));
}

// Degree-d membership of f in the subalgebra generated by homogeneous
// `gens`: f must be a combination of the degree-d power products.
bool in_subalgebra_degree(const Poly& f, int d, const std::vector<Poly>& gens) {
  std::vector<int> w;
  w.reserve(gens.size());
  for (const auto& g : gens) w.push_back(homogeneous_degree(g));
  DegreeBasis basis(f.nvars(), d);
  std::vector<Row> rows;
  std::vector<int> e(gens.size(), 0);
  // enumerate e >= 0 with sum(e_i * w_i) = d
  auto rec = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == static_cast<int>(gens.size())) {
      if (remaining != 0) return;
      Poly prod = Poly::constant(f.field(), f.split(), Scalar::one(f.field()));
      for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
        if (e[i] > 0) prod = prod * gens[i].pow(e[i]);
      }
      rows.push_back(poly_to_row(prod, basis));
      return;
    }
    for (int k = 0; remaining - k * w[slot] >= 0; ++k) {
      e[slot] = k;
      self(self, slot + 1, remaining - k * w[slot]);
      if (w[slot] == 0) break;  // degree-0 generator: higher powers add nothing
    }
    e[slot] = 0;
  };
  rec(rec, 0, d);
  rref(rows);
  return in_row_span(rows, poly_to_row(f, basis));
}

// ---- F_p subspace enumeration -------------------------------------------
//
// Subspaces of F_p^k of fixed dimension r are enumerated through their
// reduced-row-echelon bases: pivot columns in lexicographic order, free
// entries counted in base p. Deterministic and exhaustive.

struct SubspaceEnumerator {
  const Field& field;
  int k, r;
  std::vector<int> pivots;          // current pivot column choice
  std::vector<long long> counter;   // free entries, base-p digits
  std::vector<std::pair<int, int>> free_slots;  // (row, col) of free entries
  bool done = false;

  SubspaceEnumerator(const Field& f, int kk, int rr) : field(f), k(kk), r(rr) {
    if (r > k) {
      done = true;
      return;
    }
    pivots.resize(r);
    for (int i = 0; i < r; ++i) pivots[i] = i;
    reset_free();
  }

  void reset_free() {
    free_slots.clear();
    for (int i = 0; i < r; ++i) {
      for (int j = pivots[i] + 1; j < k; ++j) {
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
          free_slots.emplace_back(i, j);
      }
    }
    counter.assign(free_slots.size(), 0);
  }

  std::vector<Row> current() const {
    std::vector<Row> rows(r, Row(k, Scalar::zero(field)));
    for (int i = 0; i < r; ++i) rows[i][pivots[i]] = Scalar::one(field);
    for (int t = 0; t < static_cast<int>(free_slots.size()); ++t) {
      auto [i, j] = free_slots[t];
      rows[i][j] = Scalar(field, counter[t]);
    }
    return rows;
  }

  void advance() {
    long long p = field.characteristic();
    for (int t = static_cast<int>(counter.size()) - 1; t >= 0; --t) {
      if (++counter[t] < p) return;
      counter[t] = 0;
    }
    // next pivot combination, lexicographic
    int i = r - 1;
    while (i >= 0 && pivots[i] == k - r + i) --i;
    if (i < 0) {
      done = true;
      return;
    }
    ++pivots[i];
    for (int j = i + 1; j < r; ++j) pivots[j] = pivots[i] + (j - i);
    reset_free();
  }
};

// Rows expressed in the coordinates of `frame` (an independent family) mapped
// back to ambient coordinates.
std::vector<Row> lift_rows(const std::vector<Row>& coeffs, const std::vector<Row>& frame,
                           const Field& field, int ambient) {
  std::vector<Row> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    Row v(ambient, Scalar::zero(field));
    for (int i = 0; i < static_cast<int>(frame.size()); ++i) {
      if (c[i].is_zero()) continue;
      for (int j = 0; j < ambient; ++j) v[j] = v[j] + c[i] * frame[i][j];
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Poly> rows_to_linears(const Field& f, const VarSplitPtr& split,
                                  const std::vector<Row>& rows) {
  std::vector<Poly> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(row_to_linear(f, split, r));
  return out;
}

// Minimal V with f in K[V], exact search over F_p-subspaces containing the
// mandatory derivative span, by ascending dimension. The minimum is unique
// (K[V] and K[W] both containing f forces f into K[V cap W]), so the first
// feasible candidate is the answer.
std::vector<Row> min_span_search(const Poly& f, int d, std::vector<Row> mandatory,
                                 long long& budget) {
  const Field& field = f.field();
  const int n = f.nvars();
  // frame of the quotient: coordinate directions of f's support not already
  // covered by the mandatory span
  std::vector<Row> frame;
  std::vector<Row> probe = mandatory;
  for (int i : support_vars(f)) {
    Row e(n, Scalar::zero(field));
    e[i] = Scalar::one(field);
    Row red = reduce_against(probe, e);
    if (!is_zero_row(red)) {
      insert_into_basis(probe, red);
      frame.push_back(std::move(e));
    }
  }
  const int kq = static_cast<int>(frame.size());
  for (int s = 0; s <= kq; ++s) {
    SubspaceEnumerator en(field, kq, s);
    while (!en.done) {
      if (--budget < 0) throw budget_error("directrix subspace search budget exceeded");
      std::vector<Row> cand = mandatory;
      for (auto& v : lift_rows(en.current(), frame, field, n)) {
        Row red = reduce_against(cand, v);
        if (!is_zero_row(red)) insert_into_basis(cand, std::move(red));
      }
      if (in_subalgebra_degree(f, d, rows_to_linears(field, f.split(), cand))) return cand;
      en.advance();
    }
  }
  throw precondition_error("minimal span search fell through");  // unreachable: full space works
}

std::vector<Row> minimal_span(const Poly& f, long long& budget) {
  int d = homogeneous_degree(f);
  if (d == 0) return {};
  std::vector<Row> derivs = linear_derivative_span(f, d);
  long long p = f.field().characteristic();
  if (p == 0 || p > d) return derivs;
  return min_span_search(f, d, std::move(derivs), budget);
}

// ---- ridge chain search ---------------------------------------------------

// Saturated chain U_1 <= U_p <= ... <= U_top of coefficient subspaces, one
// level per characteristic power up to the generator degree. spaces[i] is an
// rref basis in ambient coordinates.
struct Chain {
  std::vector<long long> levels;
  std::vector<std::vector<Row>> spaces;
};

std::vector<Poly> chain_generators(const Field& field, const VarSplitPtr& split,
                                   const Chain& c) {
  std::vector<Poly> gens;
  for (int li = 0; li < static_cast<int>(c.levels.size()); ++li) {
    long long q = c.levels[li];
    for (const auto& row : c.spaces[li]) {
      Poly phi(field, split);
      for (int i = 0; i < static_cast<int>(row.size()); ++i) {
        if (row[i].is_zero()) continue;
        phi = phi + Poly::monomial(field, split, Monomial::unit(split->size(), i, static_cast<int>(q)), row[i]);
      }
      if (!phi.is_zero()) gens.push_back(std::move(phi));
    }
  }
  return gens;
}

bool chain_feasible(const Poly& f, int d, const Chain& c) {
  return in_subalgebra_degree(f, d, chain_generators(f.field(), f.split(), c));
}

// Enumerate dimension vectors k_1 <= ... <= k_L <= kmax ordered by total,
// then lexicographically; any order refining componentwise dominance finds
// the unique inclusion-minimal feasible chain first.
std::vector<std::vector<int>> dim_vectors(int L, int kmax) {
  std::vector<std::vector<int>> all;
  std::vector<int> cur(L, 0);
  auto rec = [&](auto&& self, int slot, int lo) -> void {
    if (slot == L) {
      all.push_back(cur);
      return;
    }
    for (int v = lo; v <= kmax; ++v) {
      cur[slot] = v;
      self(self, slot + 1, v);
    }
  };
  rec(rec, 0, 0);
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    long long sa = 0, sb = 0;
    for (int x : a) sa += x;
    for (int x : b) sb += x;
    if (sa != sb) return sa < sb;
    return a < b;
  });
  return all;
}

// Minimal saturated chain with f in K[chain]; searches inside the coordinate
// span of f's support. Returns nullopt when the budget runs out.
std::optional<Chain> minimal_chain(const Poly& f, long long& budget) {
  const Field& field = f.field();
  const long long p = field.characteristic();
  const int n = f.nvars();
  const int d = homogeneous_degree(f);

  std::vector<long long> levels{1};
  while (levels.back() * p <= d) levels.push_back(levels.back() * p);
  const int L = static_cast<int>(levels.size());

  std::vector<Row> frame;  // coordinate directions of the support
  for (int i : support_vars(f)) {
    Row e(n, Scalar::zero(field));
    e[i] = Scalar::one(field);
    frame.push_back(std::move(e));
  }
  const int k = static_cast<int>(frame.size());
  std::vector<Row> mandatory = linear_derivative_span(f, d);  // must sit inside U_1

  for (const auto& dims : dim_vectors(L, k)) {
    // assign spaces top-down: U_top inside the frame, each lower level inside
    // the one above it
    Chain chain;
    chain.levels = levels;
    chain.spaces.assign(L, {});
    bool exhausted = false;
    auto assign = [&](auto&& self, int li, const std::vector<Row>& ambient_basis)
        -> std::optional<Chain> {
      if (li < 0) {
        if (--budget < 0) {
          exhausted = true;
          return std::nullopt;
        }
        for (const auto& m : mandatory) {
          if (!in_row_span(chain.spaces[0], m)) return std::nullopt;
        }
        if (chain_feasible(f, d, chain)) return chain;
        return std::nullopt;
      }
      int dim_here = dims[li];
      int ambient_dim = static_cast<int>(ambient_basis.size());
      if (dim_here > ambient_dim) return std::nullopt;
      SubspaceEnumerator en(field, ambient_dim, dim_here);
      while (!en.done) {
        chain.spaces[li] = row_basis(lift_rows(en.current(), ambient_basis, field, n));
        auto got = self(self, li - 1, chain.spaces[li]);
        if (got || exhausted) return got;
        en.advance();
      }
      return std::nullopt;
    };
    auto got = assign(assign, L - 1, frame);
    if (got) return got;
    if (exhausted) return std::nullopt;
  }
  throw precondition_error("minimal chain search fell through");  // unreachable
}

void saturate(Chain& c) {
  for (int li = 1; li < static_cast<int>(c.levels.size()); ++li) {
    std::vector<Row> merged = c.spaces[li];
    for (const auto& r : c.spaces[li - 1]) {
      Row red = reduce_against(merged, r);
      if (!is_zero_row(red)) insert_into_basis(merged, std::move(red));
    }
    c.spaces[li] = std::move(merged);
  }
}

struct InitialEntry {
  int component = 0;
  int generator = 0;
  Rat b;
  Poly init;  // over the graded split, possibly zero
};

// Per-generator initial forms over the graded split, with the order
// precondition and truncation guard applied.
std::vector<InitialEntry> component_initials(const PairSystem& s, const VarSplitPtr& gsplit) {
  std::vector<InitialEntry> out;
  for (int ci = 0; ci < static_cast<int>(s.components.size()); ++ci) {
    const Pair& comp = s.components[ci];
    for (int gi = 0; gi < static_cast<int>(comp.gens.size()); ++gi) {
      const Poly& f = comp.gens[gi];
      if (f.order() < ExtRat::of(comp.b))
        throw precondition_error("tangent cone needs every generator order at least the weight");
      if (f.truncated() && f.degree_bound() && Rat(*f.degree_bound()) < comp.b)
        throw precondition_error("tangent cone weight exceeds the truncation bound");
      Poly init(s.field, gsplit);
      if (positive_integer(comp.b)) init = regrade(f.initial_form(comp.b), gsplit);
      out.push_back({ci, gi, comp.b, std::move(init)});
    }
  }
  return out;
}

}  // namespace

VarSplitPtr graded_split(const VarSplitPtr& s) {
  auto capitalize = [](std::string name) {
    if (!name.empty() && std::islower(static_cast<unsigned char>(name[0])))
      name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    return name;
  };
  std::vector<std::string> mapped;
  mapped.reserve(s->size());
  for (int i = 0; i < s->size(); ++i) mapped.push_back(capitalize(s->name(i)));
  std::set<std::string> uniq(mapped.begin(), mapped.end());
  if (static_cast<int>(uniq.size()) != s->size()) {
    mapped = s->names();  // capitalization collides; keep the original names
  }
  std::vector<std::string> u, y;
  for (int i = 0; i < s->u_size(); ++i) u.push_back(mapped[i]);
  for (int i = 0; i < s->y_size(); ++i) y.push_back(mapped[s->u_size() + i]);
  VarSplitPtr g = make_split(std::move(u), std::move(y));
  for (int i = s->u_size() + s->y_size(); i < s->size(); ++i) g = g->adjoined(mapped[i]);
  return g;
}

Poly regrade(const Poly& f, VarSplitPtr target) {
  if (target->size() != f.nvars()) throw input_error("regrade needs an equal-size split");
  Poly out(f.field(), target);
  for (const auto& [m, c] : f.terms()) {
    out = out + Poly::monomial(f.field(), target, m, c);
  }
  return out;
}

HomogIdeal::HomogIdeal(Field f, VarSplitPtr s, std::vector<Poly> g)
    : field(f), split(std::move(s)) {
  for (auto& gen : g) {
    if (gen.is_zero()) continue;
    if (!compatible(gen.split(), split)) throw input_error("generator over a different split");
    homogeneous_degree(gen);  // validates
    gens.push_back(std::move(gen));
  }
}

std::vector<Row> ideal_degree_slice(const HomogIdeal& I, int degree) {
  DegreeBasis basis(I.split->size(), degree);
  std::vector<Row> rows;
  for (const auto& g : I.gens) {
    int d = homogeneous_degree(g);
    if (d > degree) continue;
    for (const auto& m : multiexponents(I.split->size(), degree - d)) {
      rows.push_back(poly_to_row(Poly::monomial(I.field, I.split, m, Scalar::one(I.field)) * g,
                                 basis));
    }
  }
  rref(rows);
  return rows;
}

bool homog_ideal_equal(const HomogIdeal& a, const HomogIdeal& b) {
  if (a.field != b.field || !compatible(a.split, b.split)) return false;
  std::set<int> degrees;
  for (const auto& g : a.gens) degrees.insert(homogeneous_degree(g));
  for (const auto& g : b.gens) degrees.insert(homogeneous_degree(g));
  for (int d : degrees) {
    for (const auto& g : a.gens) {
      if (homogeneous_degree(g) == d && !in_row_span(ideal_degree_slice(b, d),
                                                     poly_to_row(g, DegreeBasis(a.split->size(), d))))
        return false;
    }
    for (const auto& g : b.gens) {
      if (homogeneous_degree(g) == d && !in_row_span(ideal_degree_slice(a, d),
                                                     poly_to_row(g, DegreeBasis(a.split->size(), d))))
        return false;
    }
  }
  return true;
}

HomogIdeal homog_power(const HomogIdeal& I, int a) {
  if (a <= 0) throw input_error("ideal power must be positive");
  std::vector<Poly> out;
  std::vector<int> pick(a, 0);
  auto rec = [&](auto&& self, int slot, int lo) -> void {
    if (slot == a) {
      Poly prod = I.gens[pick[0]];
      for (int i = 1; i < a; ++i) prod = prod * I.gens[pick[i]];
      out.push_back(std::move(prod));
      return;
    }
    for (int i = lo; i < static_cast<int>(I.gens.size()); ++i) {
      pick[slot] = i;
      self(self, slot + 1, i);
    }
  };
  if (!I.gens.empty()) rec(rec, 0, 0);
  return HomogIdeal(I.field, I.split, std::move(out));
}

HomogIdeal tangent_cone(const PairSystem& s) {
  VarSplitPtr g = graded_split(s.split);
  std::vector<Poly> gens;
  for (auto& entry : component_initials(s, g)) {
    if (!entry.init.is_zero()) gens.push_back(std::move(entry.init));
  }
  return HomogIdeal(s.field, g, std::move(gens));
}

PairSystem itc_pair(const PairSystem& s) {
  VarSplitPtr g = graded_split(s.split);
  auto initials = component_initials(s, g);
  std::vector<Pair> comps;
  for (int ci = 0; ci < static_cast<int>(s.components.size()); ++ci) {
    std::vector<Poly> gens;
    for (auto& entry : initials) {
      if (entry.component == ci && !entry.init.is_zero()) gens.push_back(entry.init);
    }
    comps.push_back(Pair(s.field, g, std::move(gens), s.components[ci].b));
  }
  return PairSystem(s.field, g, std::move(comps));
}

LinearSpan directrix(const HomogIdeal& I, long long budget) {
  std::vector<Row> rows;
  for (const auto& g : I.gens) {
    for (auto& v : minimal_span(g, budget)) {
      Row red = reduce_against(rows, std::move(v));
      if (!is_zero_row(red)) insert_into_basis(rows, std::move(red));
    }
  }
  return LinearSpan{I.field, I.split, rows_to_linears(I.field, I.split, rows)};
}

Poly AdditivePoly::poly(const Field& f, const VarSplitPtr& split) const {
  Poly out(f, split);
  for (int i = 0; i < static_cast<int>(lambda.size()); ++i) {
    if (lambda[i].is_zero()) continue;
    out = out + Poly::monomial(f, split, Monomial::unit(split->size(), i, static_cast<int>(q)),
                               lambda[i]);
  }
  return out;
}

RidgeResult ridge(const HomogIdeal& I, long long budget) {
  const Field& field = I.field;
  const long long p = field.characteristic();
  RidgeResult result;
  if (p == 0) {
    LinearSpan d = directrix(I, budget);
    for (const auto& l : d.basis) result.gens.push_back({1, linear_to_row(l)});
    result.determined = true;
    return result;
  }
  int maxdeg = 0;
  for (const auto& g : I.gens) maxdeg = std::max(maxdeg, homogeneous_degree(g));
  std::vector<long long> levels{1};
  while (levels.back() * p <= maxdeg) levels.push_back(levels.back() * p);

  // one subspace per level, summed over the generators' minimal chains
  std::vector<std::vector<Row>> total(levels.size());
  for (const auto& g : I.gens) {
    int d = homogeneous_degree(g);
    if (d == 0) continue;
    std::optional<Chain> chain;
    if (p > d) {
      Chain c;
      c.levels = {1};
      c.spaces = {linear_derivative_span(g, d)};
      chain = std::move(c);
    } else {
      chain = minimal_chain(g, budget);
      if (!chain) return result;  // budget exhausted: undetermined
    }
    for (int li = 0; li < static_cast<int>(chain->levels.size()); ++li) {
      auto it = std::find(levels.begin(), levels.end(), chain->levels[li]);
      int slot = static_cast<int>(it - levels.begin());
      for (auto& r : chain->spaces[li]) {
        Row red = reduce_against(total[slot], std::move(r));
        if (!is_zero_row(red)) insert_into_basis(total[slot], std::move(red));
      }
    }
  }
  Chain summed{levels, std::move(total)};
  saturate(summed);
  // emit the new directions of each level
  std::vector<Row> below;
  for (int li = 0; li < static_cast<int>(levels.size()); ++li) {
    std::vector<Row> fresh;
    for (const auto& r : summed.spaces[li]) {
      Row red = reduce_against(below, r);
      if (!is_zero_row(red)) insert_into_basis(fresh, std::move(red));
    }
    for (auto& r : fresh) {
      result.gens.push_back({levels[li], r});
      Row red = reduce_against(below, r);
      if (!is_zero_row(red)) insert_into_basis(below, std::move(red));
    }
  }
  result.determined = true;
  return result;
}

DirRid dir_rid_pairs(const PairSystem& s) {
  HomogIdeal I = tangent_cone(s);
  LinearSpan D = directrix(I);
  RidgeResult R = ridge(I);

  Pair dir(I.field, I.split, D.basis, 1);
  std::vector<Pair> comps;
  for (const auto& phi : R.gens)
    comps.push_back(Pair(I.field, I.split, {phi.poly(I.field, I.split)}, Rat(phi.q)));
  if (comps.empty()) comps.push_back(Pair(I.field, I.split, {}, 1));
  PairSystem rid(I.field, I.split, std::move(comps));

  bool roots = false;
  if (R.determined) {
    // perfect base fields: coefficientwise q-th roots of the ridge generators
    // must span the directrix
    std::vector<Row> root_rows;
    for (const auto& phi : R.gens) root_rows.push_back(phi.lambda);
    std::vector<Row> dir_rows;
    for (const auto& l : D.basis) dir_rows.push_back(linear_to_row(l));
    roots = same_row_span(std::move(root_rows), std::move(dir_rows));
  }
  return DirRid{std::move(dir), std::move(rid), R.determined, roots};
}

std::vector<ContactDirection> maximal_contact_directions(const PairSystem& s) {
  const long long p = s.field.characteristic();
  for (const auto& comp : s.components) {
    if (p != 0 && comp.b >= p)
      throw budget_error(
          "maximal contact needs characteristic zero or weights below the characteristic");
  }
  VarSplitPtr g = graded_split(s.split);
  auto initials = component_initials(s, g);
  bool any = false;
  for (const auto& e : initials) any = any || !e.init.is_zero();
  if (!any) throw precondition_error("maximal contact needs a nonzero tangent cone");

  std::vector<ContactDirection> out;
  std::vector<Row> chosen;
  for (const auto& entry : initials) {
    if (entry.init.is_zero()) continue;
    int d = static_cast<int>(numerator(entry.b));
    for (const auto& M : multiexponents(g->size(), d - 1)) {
      Poly l = entry.init.hasse_derive(M);
      if (l.is_zero()) continue;
      Row row = linear_to_row(l);
      Row red = reduce_against(chosen, row);
      if (is_zero_row(red)) continue;
      insert_into_basis(chosen, std::move(red));
      Scalar lead = Scalar::zero(s.field);
      for (const auto& x : row) {
        if (!x.is_zero()) {
          lead = x;
          break;
        }
      }
      out.push_back({lead.inverse() * l, M, entry.component, entry.generator});
    }
  }
  return out;
}

}  // namespace idexp
