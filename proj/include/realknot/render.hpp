#pragma once

#include <optional>
#include <string>

#include "realknot/curves.hpp"
#include "realknot/diagram.hpp"

namespace realknot {

// SVG 1.1 pictures of RP^2 as a disk with antipodal boundary identification.
// A diagram with geometry is drawn as its polylines with gaps on the under
// strand; without geometry each component is drawn as a circle with its
// crossings as chords (a Gauss diagram).
std::string render_diagram_svg(const VirtualDiagram& d);
// A planar curve, or a space curve projected from p (auto-selected from the
// seed when absent), sampled at `samples` points with its real nodes marked.
std::string render_curve_svg(const RationalCurveMap& curve, std::optional<ProjPoint> p = std::nullopt,
                             uint64_t seed = 1, int samples = 512);

}  // namespace realknot
