#include "idexp/polyhedron.hpp"

#include <algorithm>

#include "idexp/error.hpp"

namespace idexp {

namespace {

bool dominates(const QVec& a, const QVec& b) {
  // a >= b componentwise
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

}  // namespace

bool separating_certificate(const QVec& v, const std::vector<QVec>& others) {
  const int e = static_cast<int>(v.size());
  std::vector<LinConstraint> cons;
  for (int j = 0; j < e; ++j) {
    QVec a(e, Rat(0));
    a[j] = 1;
    cons.push_back({a, Rel::GE, Rat(1)});
  }
  for (const auto& p : others) {
    QVec a(e, Rat(0));
    for (int j = 0; j < e; ++j) a[j] = p[j] - v[j];
    cons.push_back({a, Rel::GE, Rat(1)});
  }
  return lp_feasible(e, cons);
}

OrthantPolyhedron OrthantPolyhedron::from_points(int dim, std::vector<QVec> pts) {
  OrthantPolyhedron P;
  P.dim_ = dim;
  for (auto& p : pts) {
    if (static_cast<int>(p.size()) != dim) throw input_error("polyhedron point has wrong dimension");
    for (const auto& c : p) {
      if (c < 0) throw input_error("polyhedron point outside the nonnegative orthant");
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  P.points_ = pts;

  // Dominated generators are never extreme; filter them before certifying.
  std::vector<QVec> candidates;
  for (const auto& p : pts) {
    bool dominated = false;
    for (const auto& q : pts) {
      if (q != p && dominates(p, q)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) candidates.push_back(p);
  }
  for (const auto& v : candidates) {
    std::vector<QVec> others;
    for (const auto& p : P.points_) {
      if (p != v) others.push_back(p);
    }
    if (separating_certificate(v, others)) P.vertices_.push_back(v);
  }
  return P;
}

ExtRat OrthantPolyhedron::delta() const {
  if (points_.empty()) return ExtRat::inf();
  bool first = true;
  Rat best = 0;
  for (const auto& p : points_) {
    Rat s = 0;
    for (const auto& c : p) s += c;
    if (first || s < best) best = s, first = false;
  }
  return ExtRat::of(best);
}

bool OrthantPolyhedron::contains(const QVec& q) const {
  if (static_cast<int>(q.size()) != dim_) throw input_error("membership query has wrong dimension");
  if (points_.empty()) return false;
  const int k = static_cast<int>(points_.size());
  std::vector<LinConstraint> cons;
  {
    QVec ones(k, Rat(1));
    cons.push_back({ones, Rel::EQ, Rat(1)});
  }
  for (int j = 0; j < dim_; ++j) {
    QVec a(k, Rat(0));
    for (int i = 0; i < k; ++i) a[i] = points_[i][j];
    cons.push_back({a, Rel::LE, q[j]});
  }
  return lp_feasible(k, cons);
}

bool OrthantPolyhedron::subset_of(const OrthantPolyhedron& other) const {
  if (dim_ != other.dim_) throw input_error("polyhedron dimensions differ");
  for (const auto& v : vertices_) {
    if (!other.contains(v)) return false;
  }
  return true;
}

}  // namespace idexp
