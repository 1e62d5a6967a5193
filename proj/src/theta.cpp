#include "cycloset/theta.hpp"

#include <algorithm>
#include <set>

namespace cycloset {

RotationDecision rotation_admissible(const Rational& theta)
{
    RotationDecision d;
    if (theta <= Rational(0) || theta >= Rational(1, 2)) {
        d.reason = "rotation is admissible only for 0 < theta < 1/2 turn";
        return d;
    }
    if (theta.numerator() != 1) {
        d.reason = "theta = " + to_string(theta) + " is not of the form 1/N";
        return d;
    }
    d.N = theta.denominator();
    if (d.N < 4) {
        d.reason = "N = " + std::to_string(d.N) + " < 4";
        return d;
    }
    d.cluster_structure = true;
    return d;
}

std::vector<CirclePoint> orbit(const CyclicPoset& p, const CirclePoint& x)
{
    std::vector<CirclePoint> out{x};
    for (CirclePoint y = p.phi(x); y != x; y = p.phi(y)) {
        out.push_back(y);
        if (out.size() > p.size() + 1)
            throw CycloError("InvalidPoset", "automorphism orbit does not close");
    }
    return out;
}

std::vector<CirclePoint> orbit_representatives(const CyclicPoset& p)
{
    std::set<CirclePoint> seen;
    std::vector<CirclePoint> reps;
    for (const auto& x : p.carrier()) {
        if (seen.count(x))
            continue;
        reps.push_back(x);
        for (const auto& y : orbit(p, x))
            seen.insert(y);
    }
    return reps;
}

std::vector<CirclePoint> orbit_embed(const CyclicPoset& p, const CirclePoint& x, long long N)
{
    std::vector<CirclePoint> out;
    CirclePoint y = x;
    for (long long i = 0; i < N; ++i) {
        out.push_back(y);
        y = p.phi(y);
    }
    return out;
}

Cluster orbit_cluster(const CyclicPoset& p, const CirclePoint& x, const std::vector<std::pair<int, int>>& diagonals)
{
    auto d = rotation_admissible(p.automorphism().step);
    if (!d.cluster_structure)
        throw CycloError("NoClusterStructure", d.reason);
    auto J = orbit_embed(p, x, d.N);
    std::vector<Arc> arcs;
    for (auto [i, j] : diagonals)
        arcs.emplace_back(J.at(i), J.at(j));
    return Cluster(std::move(arcs));
}

std::vector<Cluster> enumerate_theta_clusters(const FrobeniusEngine& e)
{
    const auto& P = e.poset();
    if (P.automorphism().kind != AutoKind::Rotation)
        throw CycloError("Unsupported", "poset has no rotation automorphism");
    auto d = rotation_admissible(P.automorphism().step);
    if (!d.cluster_structure)
        throw CycloError("NoClusterStructure", d.reason);
    auto tris = polygon_triangulations((int)d.N);
    std::vector<Cluster> out;
    for (const auto& x : orbit_representatives(P))
        for (const auto& t : tris)
            out.push_back(orbit_cluster(P, x, t));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CliqueSearch extend_to_maximal(const FrobeniusEngine& e, const Cluster& c, size_t budget)
{
    return maximal_compatible_sets(e, c.arcs, nonzero_arcs(e), budget);
}

} // namespace cycloset
