#include "cycloset/geometry.hpp"

namespace cycloset {

bool strictly_between(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c)
{
    if (a == b || b == c || a == c)
        return false;
    if (a < c)
        return a < b && b < c;
    return a < b || b < c;
}

bool cyclic_order(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c)
{
    if (a == b || b == c || a == c)
        throw CycloError("DuplicatePoint", "cyclic_order needs three distinct points");
    return strictly_between(a, b, c);
}

bool arcs_cross(const Arc& a, const Arc& b, CrossMode)
{
    if (a.has(b.x) || a.has(b.y) || a.x == a.y || b.x == b.y)
        return false;
    return strictly_between(a.x, b.x, a.y) != strictly_between(a.x, b.y, a.y);
}

} // namespace cycloset
