#pragma once

#include <vector>

#include "idexp/extrat.hpp"
#include "idexp/lp.hpp"

namespace idexp {

// F(P) = convex hull of finitely many points in the nonnegative orthant of
// Q^dim, plus the orthant itself as recession cone. Immutable; the canonical
// vertex set is computed on construction. A vertex is kept only with an exact
// LP certificate: a strictly positive functional separating it from the other
// generator points.
class OrthantPolyhedron {
 public:
  static OrthantPolyhedron from_points(int dim, std::vector<QVec> pts);

  int dim() const { return dim_; }
  bool empty() const { return points_.empty(); }
  const std::vector<QVec>& points() const { return points_; }      // deduped, sorted
  const std::vector<QVec>& vertices() const { return vertices_; }  // canonical, sorted

  // Minimal coordinate sum over the polyhedron; inf when empty.
  ExtRat delta() const;

  bool contains(const QVec& q) const;
  bool subset_of(const OrthantPolyhedron& other) const;

  friend bool operator==(const OrthantPolyhedron& a, const OrthantPolyhedron& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }
  friend bool operator!=(const OrthantPolyhedron& a, const OrthantPolyhedron& b) {
    return !(a == b);
  }

 private:
  OrthantPolyhedron() = default;
  int dim_ = 0;
  std::vector<QVec> points_;
  std::vector<QVec> vertices_;
};

// True when a strictly positive functional separates v from every point of
// `others` (margin >= 1 after scaling); the certificate behind vertex status.
bool separating_certificate(const QVec& v, const std::vector<QVec>& others);

}  // namespace idexp
