#pragma once

#include <string>

#include "obst/graphs.hpp"
#include "obst/verify.hpp"

namespace obst {

/// Renders a representation: unblocked pairs as edges, obstacles as filled
/// shapes, degenerate obstacles as discs/strokes of display radius `inflate`.
/// Geometry stays exact until the final decimal formatting (6 places), so the
/// output is deterministic.
std::string rep_to_svg(const ObstacleRepresentation& rep, const Scalar& inflate);

}  // namespace obst
