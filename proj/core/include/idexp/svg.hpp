#pragma once

#include <string>

#include "idexp/polyhedron.hpp"

namespace idexp {

// SVG rendering of a 2-dimensional staircase polyhedron: generator points as
// hollow circles, vertices as filled dots, the boundary as a polyline and the
// line x + y = delta dashed. Deterministic output (exact decimal strings).
std::string polyhedron_svg(const OrthantPolyhedron& poly);

}  // namespace idexp
