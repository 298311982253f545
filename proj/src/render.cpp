#include "seaweed/render.hpp"

#include <sstream>

namespace seaweed {

std::string to_dot(const Meander& m) {
    std::ostringstream os;
    os << "graph meander {\n";
    os << "  graph [rankdir=LR];\n";
    os << "  { rank=same;";
    for (int v = 1; v <= m.n; ++v) os << ' ' << v << ';';
    os << " }\n";
    for (auto [i, j] : m.top_arcs)
        os << "  " << i << " -- " << j << " [pos=top, constraint=false, color=black];\n";
    for (int v : m.top_loops)
        os << "  " << v << " -- " << v << " [pos=top, constraint=false, color=black];\n";
    for (auto [i, j] : m.bottom_arcs)
        os << "  " << i << " -- " << j << " [pos=bottom, color=gray];\n";
    for (int v : m.bottom_loops)
        os << "  " << v << " -- " << v << " [pos=bottom, color=gray];\n";
    os << "}\n";
    return os.str();
}

namespace {

// Halves render as "2" or "2.5" with no trailing zeros.
std::string half(int twice) {
    std::string s = std::to_string(twice / 2);
    if (twice % 2) s += ".5";
    return s;
}

}  // namespace

std::string to_tikz(const Meander& m) {
    std::ostringstream os;
    os << "\\begin{tikzpicture}[baseline]\n";
    for (int v = 1; v <= m.n; ++v) {
        os << "  \\fill (" << v << ",0) circle (2pt) node[below=3pt] {" << v << "};\n";
    }
    for (auto [i, j] : m.top_arcs)
        os << "  \\draw (" << i << ",0) arc[start angle=180, end angle=0, radius="
           << half(j - i) << "];\n";
    for (int v : m.top_loops)
        os << "  \\draw (" << v << ",0.25) circle[radius=0.25];\n";
    for (auto [i, j] : m.bottom_arcs)
        os << "  \\draw[gray] (" << i << ",0) arc[start angle=180, end angle=360, radius="
           << half(j - i) << "];\n";
    for (int v : m.bottom_loops)
        os << "  \\draw[gray] (" << v << ",-0.25) circle[radius=0.25];\n";
    os << "\\end{tikzpicture}\n";
    return os.str();
}

}  // namespace seaweed
