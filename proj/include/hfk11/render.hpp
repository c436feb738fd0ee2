#pragma once

#include <string>

#include "hfk11/diagram.hpp"
#include "hfk11/floer.hpp"
#include "hfk11/geometry.hpp"

namespace hfk11 {

/// SVG picture of the fundamental rectangle: alpha along the bottom edge,
/// every beta arc reduced mod the deck group, slot labels x_1..x_p, w as a
/// filled dot and z as a hollow one. If `highlight` is given, its domain is
/// cut along the cell boundaries and every piece is shaded in the
/// rectangle; overlapping pieces show higher multiplicity.
std::string render_svg(const OneOneDiagram& d, const PlRealization& real, const Bigon* highlight = nullptr);

}  // namespace hfk11
