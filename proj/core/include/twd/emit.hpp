#pragma once

#include "twd/front.hpp"

#include <string>

namespace twd {

enum class Format { Json, Svg };

/// Event columns are 40 units apart and strand lanes 24 units apart. Walls
/// of all handles sit on two vertical lines; each handle gets a pair of
/// circles around its strands.
std::string diagram_to_svg(const FrontDiagram& d);

std::string emit(const FrontDiagram& d, Format f);

}  // namespace twd
