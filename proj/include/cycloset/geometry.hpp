#pragma once

#include "cycloset/point.hpp"

#include <utility>

namespace cycloset {

// Unordered pair of circle points, stored with x < y.
struct Arc {
    CirclePoint x, y;

    Arc() = default;
    Arc(CirclePoint a, CirclePoint b)
    {
        if (b < a)
            std::swap(a, b);
        x = a;
        y = b;
    }
    bool operator==(const Arc& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Arc& o) const { return !(*this == o); }
    bool operator<(const Arc& o) const
    {
        return x < o.x || (x == o.x && y < o.y);
    }
    bool has(const CirclePoint& p) const { return x == p || y == p; }
};

enum class CrossMode { Open, Closed };

// True iff b lies in the open counterclockwise arc from a to c.
// Throws CycloError("DuplicatePoint") unless a, b, c are distinct.
bool cyclic_order(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c);

// Same predicate without the distinctness check; false on ties.
bool strictly_between(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c);

// Closed geodesics meet only in their interiors, so both modes agree for
// points on the circle: shared endpoints never count as a crossing.
bool arcs_cross(const Arc& a, const Arc& b, CrossMode mode = CrossMode::Open);

} // namespace cycloset
