#pragma once

#include <string>

#include "seaweed/meander.hpp"

namespace seaweed {

// Graphviz text: vertices 1..n on one rank, top arcs black with
// constraint=false, bottom arcs gray, loops as self-edges. Deterministic.
std::string to_dot(const Meander& m);

// TikZ picture: vertices at (i,0), top arcs as semicircles above the line,
// bottom arcs below, loops as small circles. Deterministic.
std::string to_tikz(const Meander& m);

}  // namespace seaweed
