#ifndef TSPSURF_SVG_HPP
#define TSPSURF_SVG_HPP

#include <optional>
#include <string>

#include "tspsurf/complex.hpp"
#include "tspsurf/pipeline.hpp"

namespace tspsurf {

/// Deterministic SVG figure: candidate triangles (light), selected
/// triangles (orange), dual-tree edges (dashed), boundary tour (red),
/// city points (black). Throws NoCoordinates for matrix-only instances.
std::string render_svg(const TspInstance& inst,
                       const TriangleSet* candidates,
                       const RunReport* report);

} // namespace tspsurf

#endif
