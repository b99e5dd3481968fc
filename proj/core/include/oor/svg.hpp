#pragma once

#include <optional>
#include <string>

#include "oor/drawing.hpp"

namespace oor {

/// Deterministic SVG: the obstacle as a gray polygon under one <line> per
/// edge and one <circle> per vertex. Coordinates are rounded only here.
std::string render_svg(const Drawing& d, const std::optional<SimplePolygon>& obstacle = std::nullopt);

}  // namespace oor
