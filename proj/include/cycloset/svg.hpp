#pragma once

#include "cycloset/poset.hpp"

#include <string>
#include <vector>

namespace cycloset {

struct Highlights {
    std::vector<Arc> frozen;
    std::vector<Arc> mutated;
    std::vector<Arc> family;
};

// Angle in turns used for drawing.  Symbolic points (w, n) sit at the middle
// of the interval after w shifted by width * atan(n) / pi.
double drawing_turns(const CyclicPoset& p, const CirclePoint& x);

struct Geodesic {
    double x1, y1, x2, y2;
    bool diameter = false;
    double radius = 0;  // orthogonal circle, when not a diameter
    int sweep = 0;
};

Geodesic geodesic(const CyclicPoset& p, const Arc& a);

// SVG 1.1 document of the arcs in the Poincare disk.
std::string render_diagram(const CyclicPoset& p, const std::vector<Arc>& arcs, const Highlights& h = {});

} // namespace cycloset
