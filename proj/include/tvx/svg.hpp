#ifndef TVX_SVG_HPP
#define TVX_SVG_HPP

#include <string>

#include "tvx/grading.hpp"
#include "tvx/scattering.hpp"

namespace tvx {

// rectangle tiling of a grading: blue rectangles above positive horizontal
// edges sized by their local shadows, red to the left of positive vertical
// edges, overlaps marked black (the grading module decides compatibility;
// the picture only visualizes it)
std::string render_grading_svg(const DyckPath& path, const Grading& g);

// ray fan of a diagram: initial lines and scattering rays through the origin
std::string render_diagram_svg(const ScatteringDiagram& d);

}  // namespace tvx

#endif
