#include "idexp/newton.hpp"

namespace idexp {

namespace {

struct SplitCoords {
  std::vector<int> u_like;
  std::vector<int> y;
};

SplitCoords coords(const VarSplit& split) {
  return {split.u_like_indices(), split.y_indices()};
}

}  // namespace

OrthantPolyhedron newton_polyhedron(const PairSystem& s) {
  PairSystem sys = cleared(s);
  SplitCoords sc = coords(*sys.split);
  const int e = static_cast<int>(sc.u_like.size());
  const int r = static_cast<int>(sc.y.size());
  std::vector<QVec> pts;
  for (const auto& comp : sys.components) {
    Rat b = comp.b;
    for (const auto& g : comp.gens) {
      for (const auto& [m, c] : g.terms()) {
        int ydeg = m.degree_on(sc.y);
        if (Rat(ydeg) > b) continue;
        QVec pt(e + r);
        for (int j = 0; j < e; ++j) pt[j] = Rat(m[sc.u_like[j]]) / b;
        for (int j = 0; j < r; ++j) pt[e + j] = Rat(m[sc.y[j]]) / b;
        pts.push_back(std::move(pt));
      }
    }
  }
  return OrthantPolyhedron::from_points(e + r, std::move(pts));
}

OrthantPolyhedron pair_polyhedron(const PairSystem& s) {
  PairSystem sys = cleared(s);
  SplitCoords sc = coords(*sys.split);
  const int e = static_cast<int>(sc.u_like.size());
  std::vector<QVec> pts;
  for (const auto& comp : sys.components) {
    Rat b = comp.b;
    for (const auto& g : comp.gens) {
      for (const auto& [m, c] : g.terms()) {
        Rat ydeg = Rat(m.degree_on(sc.y));
        if (ydeg >= b) continue;
        Rat denom = b - ydeg;
        QVec pt(e);
        for (int j = 0; j < e; ++j) pt[j] = Rat(m[sc.u_like[j]]) / denom;
        pts.push_back(std::move(pt));
      }
    }
  }
  return OrthantPolyhedron::from_points(e, std::move(pts));
}

OrthantPolyhedron ideal_polyhedron(const std::vector<Poly>& gens) {
  if (gens.empty()) throw input_error("ideal polyhedron needs at least one generator");
  SplitCoords sc = coords(*gens.front().split());
  const int e = static_cast<int>(sc.u_like.size());
  std::vector<QVec> pts;
  for (const auto& g : gens) {
    ExtRat n_ext = g.order_modulo(sc.u_like);
    if (!n_ext.is_finite())
      throw precondition_error("ideal polyhedron generator lies in the ideal of the u-variables");
    Rat n = n_ext.value;
    for (const auto& [m, c] : g.terms()) {
      Rat ydeg = Rat(m.degree_on(sc.y));
      if (ydeg >= n) continue;
      Rat denom = n - ydeg;
      QVec pt(e);
      for (int j = 0; j < e; ++j) pt[j] = Rat(m[sc.u_like[j]]) / denom;
      pts.push_back(std::move(pt));
    }
  }
  return OrthantPolyhedron::from_points(e, std::move(pts));
}

OrthantPolyhedron project_newton(const OrthantPolyhedron& newton, int r) {
  if (r < 0 || r > newton.dim()) throw input_error("projection block size out of range");
  const int e = newton.dim() - r;
  std::vector<QVec> pts;
  for (const auto& p : newton.points()) {
    Rat s = 0;
    for (int j = e; j < newton.dim(); ++j) s += p[j];
    if (s >= 1) continue;
    Rat denom = Rat(1) - s;
    QVec pt(e);
    for (int j = 0; j < e; ++j) pt[j] = p[j] / denom;
    pts.push_back(std::move(pt));
  }
  return OrthantPolyhedron::from_points(e, std::move(pts));
}

OrthantPolyhedron nu_polyhedron(const PairSystem& s, const NuWeights& w) {
  PairSystem sys = cleared(s);
  SplitCoords sc = coords(*sys.split);
  const int e = static_cast<int>(sc.u_like.size());
  const int r = static_cast<int>(sc.y.size());
  if (static_cast<int>(w.alpha.size()) != e || static_cast<int>(w.beta.size()) != r)
    throw input_error("weight vectors must match the block sizes");
  for (const auto& v : w.alpha) {
    if (v <= 0) throw input_error("alpha weights must be positive");
  }
  for (const auto& v : w.beta) {
    if (v <= 0) throw input_error("beta weights must be positive");
  }
  std::vector<QVec> pts;
  for (const auto& comp : sys.components) {
    Rat b = comp.b;
    for (const auto& g : comp.gens) {
      for (const auto& [m, c] : g.terms()) {
        Rat wdeg = 0;
        for (int j = 0; j < r; ++j) wdeg += w.beta[j] * m[sc.y[j]];
        if (wdeg >= b) continue;
        Rat denom = b - wdeg;
        QVec pt(e);
        for (int j = 0; j < e; ++j) pt[j] = w.alpha[j] * Rat(m[sc.u_like[j]]) / denom;
        pts.push_back(std::move(pt));
      }
    }
  }
  return OrthantPolyhedron::from_points(e, std::move(pts));
}

}  // namespace idexp
