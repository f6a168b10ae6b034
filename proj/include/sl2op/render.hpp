#pragma once

#include <string>

#include "sl2op/opgraph.hpp"

namespace sl2op {

// Multi-line ASCII drawing: vertices on a line, nested arcs above, one
// text row per nesting level; parallel edges drawn as stacked arcs.
std::string ascii_graph(const OuterplanarGraph& g);

// Compact one-line form like "(1,2) (3,4)x2".
std::string arc_list(const OuterplanarGraph& g);

} // namespace sl2op
