#include "cycloset/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace cycloset {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string num(double v)
{
    if (std::abs(v) < 5e-7)
        v = 0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

double as_double(const Rational& q)
{
    return (double)q.numerator() / (double)q.denominator();
}

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '<')
            out += "&lt;";
        else if (c == '>')
            out += "&gt;";
        else if (c == '&')
            out += "&amp;";
        else if (c == '"')
            out += "&quot;";
        else
            out += c;
    }
    return out;
}

bool exact_antipodal(const CirclePoint& a, const CirclePoint& b)
{
    return a.kind != CirclePoint::Kind::Symbolic && b.kind != CirclePoint::Kind::Symbolic &&
           wrap_turns(b.turns - a.turns) == Rational(1, 2);
}

} // namespace

double drawing_turns(const CyclicPoset& p, const CirclePoint& x)
{
    if (x.kind != CirclePoint::Kind::Symbolic)
        return as_double(x.turns);
    const auto& lt = p.limit_turns();
    int L = (int)lt.size();
    double lo = as_double(lt[x.limit]);
    double hi = x.limit + 1 < L ? as_double(lt[x.limit + 1]) : as_double(lt[0]) + 1.0;
    double width = hi - lo;
    return lo + width / 2 + width * std::atan((double)x.pos()) / kPi;
}

Geodesic geodesic(const CyclicPoset& p, const Arc& a)
{
    double t1 = drawing_turns(p, a.x) * 2 * kPi, t2 = drawing_turns(p, a.y) * 2 * kPi;
    Geodesic g;
    g.x1 = std::cos(t1);
    g.y1 = -std::sin(t1);
    g.x2 = std::cos(t2);
    g.y2 = -std::sin(t2);
    double half = std::remainder(t2 - t1, 2 * kPi) / 2;
    if (exact_antipodal(a.x, a.y) || std::abs(std::abs(half) - kPi / 2) < 1e-9) {
        g.diameter = true;
        return g;
    }
    double mid = t1 + half;
    double d = std::abs(half);
    double cx = std::cos(mid) / std::cos(d), cy = -std::sin(mid) / std::cos(d);
    g.radius = std::tan(d);
    double cross = (g.x1 - cx) * (g.y2 - cy) - (g.y1 - cy) * (g.x2 - cx);
    g.sweep = cross > 0 ? 1 : 0;
    return g;
}

std::string render_diagram(const CyclicPoset& p, const std::vector<Arc>& arcs, const Highlights& h)
{
    std::set<Arc> frozen(h.frozen.begin(), h.frozen.end());
    std::set<Arc> mutated(h.mutated.begin(), h.mutated.end());
    std::set<Arc> family(h.family.begin(), h.family.end());
    std::vector<Arc> sorted = arcs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n";
    s += "<circle class=\"boundary\" cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"black\" stroke-width=\"0.005\"/>\n";

    for (const auto& a : sorted) {
        std::string cls = "arc";
        if (frozen.count(a))
            cls += " frozen";
        if (mutated.count(a))
            cls += " mutated";
        if (family.count(a))
            cls += " family";
        Geodesic g = geodesic(p, a);
        std::string d = "M " + num(g.x1) + " " + num(g.y1) + " ";
        if (g.diameter)
            d += "L " + num(g.x2) + " " + num(g.y2);
        else
            d += "A " + num(g.radius) + " " + num(g.radius) + " 0 0 " + std::to_string(g.sweep) + " " +
                 num(g.x2) + " " + num(g.y2);
        s += "<path class=\"" + cls + "\" data-arc=\"" + escape(a.x.label() + "," + a.y.label()) + "\" d=\"" + d +
             "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.008\"/>\n";
    }

    std::set<CirclePoint> pts;
    if (p.finite())
        pts.insert(p.carrier().begin(), p.carrier().end());
    for (const auto& a : sorted) {
        pts.insert(a.x);
        pts.insert(a.y);
    }
    for (const auto& x : pts) {
        double t = drawing_turns(p, x) * 2 * kPi;
        s += "<circle class=\"point\" data-point=\"" + escape(x.label()) + "\" cx=\"" + num(std::cos(t)) +
             "\" cy=\"" + num(-std::sin(t)) + "\" r=\"0.015\"/>\n";
    }
    if (!p.finite())
        for (int w = 0; w < p.limit_count(); ++w) {
            double t = as_double(p.limit_turns()[w]) * 2 * kPi;
            s += "<line class=\"limit\" data-limit=\"" + std::to_string(w) + "\" x1=\"" + num(0.95 * std::cos(t)) +
                 "\" y1=\"" + num(-0.95 * std::sin(t)) + "\" x2=\"" + num(1.05 * std::cos(t)) + "\" y2=\"" +
                 num(-1.05 * std::sin(t)) + "\" stroke=\"red\" stroke-width=\"0.01\"/>\n";
        }
    s += "</svg>\n";
    return s;
}

} // namespace cycloset
