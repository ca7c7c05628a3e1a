#include "idexp/poly.hpp"

#include <algorithm>
#include <sstream>

namespace idexp {

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
  for (int v : e_) {
    if (v < 0) throw input_error("negative exponent in monomial");
  }
}

Monomial Monomial::unit(int nvars, int index, int power) {
  Monomial m(nvars);
  if (index < 0 || index >= nvars) throw input_error("monomial variable index out of range");
  m.e_[index] = power;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int v : e_) d += v;
  return d;
}

int Monomial::degree_on(const std::vector<int>& indices) const {
  int d = 0;
  for (int i : indices) d += e_.at(i);
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (size() != other.size()) return false;
  for (int i = 0; i < size(); ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::plus(const Monomial& other) const {
  Monomial out(*this);
  for (int i = 0; i < size(); ++i) out.e_[i] += other.e_[i];
  return out;
}

Monomial Monomial::minus(const Monomial& other) const {
  Monomial out(*this);
  for (int i = 0; i < size(); ++i) {
    out.e_[i] -= other.e_[i];
    if (out.e_[i] < 0) throw input_error("monomial subtraction underflow");
  }
  return out;
}

Monomial Monomial::extended(int nvars) const {
  if (nvars < size()) throw input_error("monomial extension must not shrink");
  Monomial out(nvars);
  std::copy(e_.begin(), e_.end(), out.e_.begin());
  return out;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Same degree: lex with earlier variables more significant.
  for (int i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

Poly::Poly(const Field& f, VarSplitPtr split) : field_(f), split_(std::move(split)) {
  if (!split_) throw input_error("polynomial needs a variable split");
}

Poly Poly::constant(const Field& f, VarSplitPtr split, const Scalar& c) {
  Poly p(f, std::move(split));
  if (!c.is_zero()) p.terms_.emplace(Monomial(p.nvars()), c);
  return p;
}

Poly Poly::variable(const Field& f, VarSplitPtr split, int index) {
  Poly p(f, std::move(split));
  p.terms_.emplace(Monomial::unit(p.nvars(), index), Scalar::one(f));
  return p;
}

Poly Poly::monomial(const Field& f, VarSplitPtr split, const Monomial& m, const Scalar& c) {
  Poly p(f, std::move(split));
  if (m.size() != p.nvars()) throw input_error("monomial size does not match split");
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

Poly Poly::with_degree_bound(int bound) const {
  if (bound < 0) throw input_error("degree bound must be nonnegative");
  Poly out(*this);
  if (!out.bound_ || *out.bound_ > bound) out.bound_ = bound;
  out.enforce_bound();
  return out;
}

Poly Poly::truncated_to(int bound) const {
  Poly out = with_degree_bound(bound);
  out.truncated_ = true;
  return out;
}

void Poly::enforce_bound() {
  if (!bound_) return;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.degree() > *bound_) {
      it = terms_.erase(it);
      truncated_ = true;
    } else {
      ++it;
    }
  }
}

Scalar Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

int Poly::max_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

ExtRat Poly::order() const {
  if (terms_.empty()) return ExtRat::inf();
  // Graded order: the first term has minimal total degree.
  return ExtRat::of(terms_.begin()->first.degree());
}

ExtRat Poly::order_along(const std::vector<int>& indices) const {
  if (terms_.empty()) return ExtRat::inf();
  bool seen = false;
  int best = 0;
  for (const auto& [m, c] : terms_) {
    int d = m.degree_on(indices);
    if (!seen || d < best) best = d, seen = true;
  }
  return ExtRat::of(best);
}

ExtRat Poly::order_modulo(const std::vector<int>& indices) const {
  bool seen = false;
  int best = 0;
  for (const auto& [m, c] : terms_) {
    if (m.degree_on(indices) != 0) continue;
    int d = m.degree();
    if (!seen || d < best) best = d, seen = true;
  }
  return seen ? ExtRat::of(best) : ExtRat::inf();
}

Poly Poly::initial_form(const Rat& b) const {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Poly out(field_, split_);
  out.bound_ = bound_;
  out.truncated_ = truncated_;
  if (denominator(b) != 1 || numerator(b) <= 0) return out;  // non-integral weight: zero
  if (numerator(b) > 1000000) throw input_error("initial form degree too large");
  int d = static_cast<int>(numerator(b));
  ExtRat ord = order();
  if (ord.is_finite() && Rat(d) > ord.value)
    throw precondition_error("initial form requested below the order of the polynomial");
  for (const auto& [m, c] : terms_) {
    if (m.degree() == d) out.terms_.emplace(m, c);
  }
  return out;
}

namespace {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

}  // namespace

Poly Poly::hasse_derive(const Monomial& M) const {
  if (M.size() != nvars()) throw input_error("derivative multi-exponent size mismatch");
  Poly out(field_, split_);
  out.bound_ = bound_;
  out.truncated_ = truncated_;
  for (const auto& [m, c] : terms_) {
    if (!M.divides(m)) continue;
    BigInt factor = 1;
    for (int i = 0; i < nvars(); ++i) factor *= binomial(m[i], M[i]);
    Scalar coef = Scalar(field_, Rat(factor)) * c;
    if (!coef.is_zero()) out.add_term(m.minus(M), coef);
  }
  return out;
}

Poly Poly::hasse_derive_log(const Monomial& M) const {
  if (M.size() != nvars()) throw input_error("derivative multi-exponent size mismatch");
  Poly out(field_, split_);
  out.bound_ = bound_;
  out.truncated_ = truncated_;
  for (const auto& [m, c] : terms_) {
    if (!M.divides(m)) continue;
    BigInt factor = 1;
    for (int i = 0; i < nvars(); ++i) factor *= binomial(m[i], M[i]);
    Scalar coef = Scalar(field_, Rat(factor)) * c;
    if (!coef.is_zero()) out.add_term(m, coef);
  }
  return out;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(m, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Poly::merge_meta(const Poly& a, const Poly& b, Poly& out) {
  out.bound_ = a.bound_;
  if (b.bound_ && (!out.bound_ || *b.bound_ < *out.bound_)) out.bound_ = b.bound_;
  out.truncated_ = a.truncated_ || b.truncated_;
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (!compatible(a.split_, b.split_)) throw input_error("polynomial splits differ");
  if (a.field_ != b.field_) throw input_error("polynomial fields differ");
  Poly out(a);
  Poly::merge_meta(a, b, out);
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  out.enforce_bound();
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (!compatible(a.split_, b.split_)) throw input_error("polynomial splits differ");
  if (a.field_ != b.field_) throw input_error("polynomial fields differ");
  Poly out(a.field_, a.split_);
  Poly::merge_meta(a, b, out);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Scalar c = ca * cb;
      if (!c.is_zero()) out.add_term(ma.plus(mb), c);
    }
  }
  out.enforce_bound();
  return out;
}

Poly operator*(const Scalar& c, const Poly& a) {
  Poly out(a.field_, a.split_);
  out.bound_ = a.bound_;
  out.truncated_ = a.truncated_;
  if (c.is_zero()) return out;
  out.terms_ = a.terms_;
  for (auto& [m, v] : out.terms_) v = c * v;
  return out;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw input_error("negative polynomial power");
  Poly out = Poly::constant(field_, split_, Scalar::one(field_));
  out.bound_ = bound_;
  for (int i = 0; i < k; ++i) out = out * (*this);
  out.truncated_ = truncated_ || out.truncated_;
  return out;
}

Poly Poly::substitute(const std::map<int, Poly>& images) const {
  for (const auto& [i, img] : images) {
    if (i < 0 || i >= nvars()) throw input_error("substitution index out of range");
    if (!compatible(img.split(), split_)) throw input_error("substitution image over a different split");
    if (img.field() != field_) throw input_error("substitution image over a different field");
  }
  Poly out(field_, split_);
  out.bound_ = bound_;
  out.truncated_ = truncated_;
  for (const auto& [i, img] : images) {
    if (img.bound_ && (!out.bound_ || *img.bound_ < *out.bound_)) out.bound_ = img.bound_;
    out.truncated_ = out.truncated_ || img.truncated_;
  }
  // Memoized powers of each replaced variable's image.
  std::map<int, std::vector<Poly>> powers;
  auto image_power = [&](int var, int k) -> const Poly& {
    auto& tower = powers[var];
    if (tower.empty()) tower.push_back(Poly::constant(field_, split_, Scalar::one(field_)));
    while (static_cast<int>(tower.size()) <= k) tower.push_back(tower.back() * images.at(var));
    return tower[k];
  };
  for (const auto& [m, c] : terms_) {
    Monomial untouched(nvars());
    Poly term = Poly::constant(field_, split_, c);
    for (int i = 0; i < nvars(); ++i) {
      if (m[i] == 0) continue;
      if (images.count(i)) {
        term = term * image_power(i, m[i]);
      } else {
        untouched = untouched.plus(Monomial::unit(nvars(), i, m[i]));
      }
    }
    Poly shifted = term * Poly::monomial(field_, split_, untouched, Scalar::one(field_));
    for (const auto& [mm, cc] : shifted.terms_) out.add_term(mm, cc);
    out.truncated_ = out.truncated_ || shifted.truncated_;
  }
  out.enforce_bound();
  return out;
}

std::optional<Poly> Poly::divide_by_variable_power(int var, int power) const {
  if (var < 0 || var >= nvars()) throw input_error("division variable out of range");
  Poly out(field_, split_);
  out.bound_ = bound_;
  out.truncated_ = truncated_;
  for (const auto& [m, c] : terms_) {
    if (m[var] < power) return std::nullopt;
    out.terms_.emplace(m.minus(Monomial::unit(nvars(), var, power)), c);
  }
  return out;
}

Poly Poly::lifted(VarSplitPtr wider) const {
  if (!wider) throw input_error("lift needs a split");
  if (wider->size() < nvars()) throw input_error("lift target split is smaller");
  for (int i = 0; i < nvars(); ++i) {
    if (wider->name(i) != split_->name(i)) throw input_error("lift target split is not an extension");
  }
  Poly out(field_, wider);
  out.bound_ = bound_;
  out.truncated_ = truncated_;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m.extended(wider->size()), c);
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.field_ != b.field_ || !compatible(a.split_, b.split_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second != ib->second) return false;
  }
  return true;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending canonical order for display.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string coef = c.str();
    bool negative = !coef.empty() && coef[0] == '-';
    std::string mag = negative ? coef.substr(1) : coef;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    std::vector<std::string> factors;
    for (int i = 0; i < nvars(); ++i) {
      if (m[i] == 0) continue;
      std::string f = split_->name(i);
      if (m[i] > 1) f += "^" + std::to_string(m[i]);
      factors.push_back(f);
    }
    if (factors.empty()) {
      os << mag;
    } else {
      if (mag != "1") os << mag << "*";
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "*";
        os << factors[i];
      }
    }
  }
  return os.str();
}

}  // namespace idexp
