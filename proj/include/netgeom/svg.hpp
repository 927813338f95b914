#ifndef NETGEOM_SVG_HPP
#define NETGEOM_SVG_HPP

#include <optional>
#include <string>
#include <vector>

#include "netgeom/geometry.hpp"
#include "netgeom/selection.hpp"

namespace netgeom {

struct Viewport {
    double xmin = -1.0, xmax = 1.0, ymin = -1.0, ymax = 1.0;
};

/// Bounding box of the witnesses padded by 20% per side; at least 2 units wide
/// and tall.
Viewport default_viewport(const std::vector<Region>& regions);

/**
 * SVG 1.1 drawing of a planar arrangement: each line clipped to the viewport
 * with an arrow on its positive side, every region's label at its witness and
 * the selected regions shaded. Output is a pure function of the inputs.
 * Throws DimensionMismatch unless the arrangement is 2-dimensional.
 */
std::string render_svg(const Arrangement& A, const std::vector<Region>& regions,
                       const Selection* selection = nullptr, std::optional<Viewport> viewport = std::nullopt);

}  // namespace netgeom

#endif
