#pragma once

#include <string>

#include "springweb/diagrams.hpp"
#include "springweb/webs.hpp"

namespace springweb {

// Standalone SVG 1.1 on a fixed 600x600 canvas. Boundary label i of an
// n-gon sits at angle 2*pi*(i - 0.5)/n clockwise from the top. Output is a
// pure function of the input, with coordinates printed to two decimals.
//
// Element classes: "boundary" (label dots), "arc", "ray", "leg" (boundary to
// claw vertex), "unfilled", "filled", "edge" (simple internal edge) and
// <g class="hourglass" data-mult="m"> holding m "strand" lines.

std::string render_matching(const NoncrossingMatching& m);
/// Vertices 1..n on a horizontal baseline, arcs above it, rays running to the
/// top edge.
std::string render_diagram(const MatchingRayDiagram& m);
std::string render_web(const HourglassWeb& w);

/// TikZ pictures with the same layout, scaled to a 6cm disc.
std::string render_matching_tikz(const NoncrossingMatching& m);
std::string render_diagram_tikz(const MatchingRayDiagram& m);
std::string render_web_tikz(const HourglassWeb& w);

}  // namespace springweb
