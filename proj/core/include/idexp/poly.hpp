#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "idexp/extrat.hpp"
#include "idexp/field.hpp"
#include "idexp/varsplit.hpp"

namespace idexp {

// Exponent vector over a fixed variable split. Total exponents are small
// machine integers; only coefficients need arbitrary precision.
class Monomial {
 public:
  explicit Monomial(int nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);
  static Monomial unit(int nvars, int index, int power = 1);

  int size() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }

  int degree() const;
  int degree_on(const std::vector<int>& indices) const;
  bool is_constant() const { return degree() == 0; }

  bool divides(const Monomial& other) const;  // componentwise <=
  Monomial plus(const Monomial& other) const;
  Monomial minus(const Monomial& other) const;  // requires other.divides(*this)
  Monomial extended(int nvars) const;           // append zero exponents

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  std::vector<int> e_;
};

// Graded lexicographic order: total degree first, then lex with the first
// variable most significant. This is the canonical term order everywhere.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial with exact coefficients. A value is either
// exact (no bound) or the truncation of a power series: terms above
// `degree_bound` have been dropped somewhere in its history and `truncated`
// says so. Every operation propagates the tighter bound and the flag.
class Poly {
 public:
  using Terms = std::map<Monomial, Scalar, GrlexLess>;

  Poly(const Field& f, VarSplitPtr split);  // zero
  static Poly constant(const Field& f, VarSplitPtr split, const Scalar& c);
  static Poly variable(const Field& f, VarSplitPtr split, int index);
  static Poly monomial(const Field& f, VarSplitPtr split, const Monomial& m, const Scalar& c);

  const Field& field() const { return field_; }
  const VarSplitPtr& split() const { return split_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int nvars() const { return split_->size(); }

  std::optional<int> degree_bound() const { return bound_; }
  bool truncated() const { return truncated_; }
  Poly with_degree_bound(int bound) const;  // tighten; drops terms, sets flag if any dropped
  Poly truncated_to(int bound) const;       // tighten and mark incomplete beyond the bound

  Scalar coefficient(const Monomial& m) const;
  int max_degree() const;  // 0 for the zero polynomial

  // Order at the origin: minimal total degree of a term; inf for 0.
  ExtRat order() const;
  // Minimal partial degree on the given variable indices; inf for 0.
  ExtRat order_along(const std::vector<int>& indices) const;
  // Order of the image modulo the ideal of the given variables, i.e. the
  // minimal total degree among terms free of them; inf if every term uses one.
  ExtRat order_modulo(const std::vector<int>& indices) const;

  // Sum of the degree-b terms when b is a positive integer (zero if the order
  // exceeds b is impossible: requires b <= order); zero for non-integral b.
  Poly initial_form(const Rat& b) const;

  // Hasse derivative with respect to the multi-exponent M, and its
  // support-preserving logarithmic variant (multiplied back by t^M).
  // Binomial factors are computed over the integers and then reduced, so
  // characteristic-p vanishing falls out automatically.
  Poly hasse_derive(const Monomial& M) const;
  Poly hasse_derive_log(const Monomial& M) const;

  // Simultaneous substitution: variable index -> polynomial. Indices absent
  // from the map stay untouched. Ring homomorphism on representatives.
  Poly substitute(const std::map<int, Poly>& images) const;

  // Exact division by var^power; nullopt when some term is not divisible.
  std::optional<Poly> divide_by_variable_power(int var, int power) const;

  // Lift to a split that extends this one by adjoined variables.
  Poly lifted(VarSplitPtr wider) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& c, const Poly& a);
  Poly pow(int k) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Canonical rendering, graded-lex descending, explicit '*' and '^'.
  std::string str() const;

 private:
  void add_term(const Monomial& m, const Scalar& c);  // accumulate, drop zero
  void enforce_bound();
  static void merge_meta(const Poly& a, const Poly& b, Poly& out);

  Field field_;
  VarSplitPtr split_;
  Terms terms_;
  std::optional<int> bound_;
  bool truncated_ = false;
};

}  // namespace idexp
