#pragma once

#include "twd/front.hpp"
#include "twd/lattice.hpp"
#include "twd/polytope.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace twd {

/// Malformed input text (as opposed to well-formed but invalid data).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"facets": [{"normal": [x, y], "offset": "p/q" | integer}, ...]}
HalfSpacePolytope polytope_from_json(const std::string& text);
std::string polytope_to_json(const HalfSpacePolytope& p);

/// "a,b;a,b;..." with optional spaces.
std::vector<IntVec2> parse_slopes(const std::string& text);
/// "i,j,k".
std::vector<std::size_t> parse_indices(const std::string& text);

/// Canonical event-word serialization, two-space indented, keys in a fixed
/// order, trailing newline.
std::string diagram_to_json(const FrontDiagram& d);
FrontDiagram diagram_from_json(const std::string& text);

/// Closed diagram with a "framings" array next to the components.
std::string closed_diagram_to_json(const ClosedFrontDiagram& cd);

}  // namespace twd
