#include "idexp/svg.hpp"

#include <sstream>

#include "idexp/error.hpp"

namespace idexp {

namespace {

// Fixed-point decimal rendering of a rational, 4 fractional digits, exact
// truncation toward zero; trailing zeros trimmed.
std::string dec(const Rat& q) {
  const bool neg = q < 0;
  const Rat a = neg ? Rat(-q) : q;
  const BigInt scaled = numerator(a) * 10000 / denominator(a);
  const BigInt ip = scaled / 10000;
  BigInt fp = scaled % 10000;
  std::ostringstream out;
  if (neg && scaled != 0) out << '-';
  out << ip;
  if (fp != 0) {
    std::string frac = fp.convert_to<std::string>();
    frac.insert(frac.begin(), 4 - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out << '.' << frac;
  }
  return out.str();
}

}  // namespace

std::string polyhedron_svg(const OrthantPolyhedron& poly) {
  if (poly.dim() != 2) throw input_error("svg plot needs exactly two coordinates");

  // World range: everything of interest fits in [0, range]^2.
  Rat range = 1;
  for (const QVec& p : poly.points()) {
    for (const Rat& c : p) {
      if (c > range) range = c;
    }
  }
  const ExtRat delta = poly.delta();
  if (delta.is_finite() && delta.value > range) range = delta.value;
  range += 1;

  const Rat scale = Rat(400) / range;
  auto sx = [&](const Rat& x) { return dec(Rat(40) + x * scale); };
  auto sy = [&](const Rat& y) { return dec(Rat(440) - y * scale); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 480 480\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"480\" height=\"480\" fill=\"white\"/>\n";
  out << "  <line x1=\"40\" y1=\"440\" x2=\"470\" y2=\"440\" stroke=\"black\"/>\n";
  out << "  <line x1=\"40\" y1=\"440\" x2=\"40\" y2=\"10\" stroke=\"black\"/>\n";
  const BigInt tick = numerator(range) / denominator(range) / 10 + 1;
  for (Rat t = Rat(tick); t < range; t += Rat(tick)) {
    out << "  <line x1=\"" << sx(t) << "\" y1=\"437\" x2=\"" << sx(t)
        << "\" y2=\"443\" stroke=\"black\"/>\n";
    out << "  <line x1=\"37\" y1=\"" << sy(t) << "\" x2=\"43\" y2=\"" << sy(t)
        << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << sx(t) << "\" y=\"456\" font-size=\"10\" "
        << "text-anchor=\"middle\">" << dec(t) << "</text>\n";
    out << "  <text x=\"30\" y=\"" << dec(Rat(443) - t * scale)
        << "\" font-size=\"10\" text-anchor=\"end\">" << dec(t) << "</text>\n";
  }

  if (poly.empty()) {
    out << "  <text x=\"240\" y=\"240\" font-size=\"14\" text-anchor=\"middle\">"
        << "empty</text>\n";
    out << "</svg>\n";
    return out.str();
  }

  // Boundary: vertices come sorted lexicographically, so x ascends and (by
  // vertex minimality) y descends; close off upward and rightward.
  const std::vector<QVec>& verts = poly.vertices();
  out << "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  out << sx(verts.front()[0]) << "," << sy(range);
  for (const QVec& v : verts) out << " " << sx(v[0]) << "," << sy(v[1]);
  out << " " << sx(range) << "," << sy(verts.back()[1]);
  out << "\"/>\n";

  if (delta.is_finite()) {
    out << "  <line x1=\"" << sx(delta.value) << "\" y1=\"" << sy(Rat(0))
        << "\" x2=\"" << sx(Rat(0)) << "\" y2=\"" << sy(delta.value)
        << "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";
  }

  for (const QVec& p : poly.points()) {
    out << "  <circle cx=\"" << sx(p[0]) << "\" cy=\"" << sy(p[1])
        << "\" r=\"4\" fill=\"none\" stroke=\"black\"/>\n";
  }
  for (const QVec& v : verts) {
    out << "  <circle cx=\"" << sx(v[0]) << "\" cy=\"" << sy(v[1])
        << "\" r=\"3\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace idexp
