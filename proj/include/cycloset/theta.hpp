#pragma once

#include "cycloset/clusters.hpp"

namespace cycloset {

struct RotationDecision {
    bool cluster_structure = false;
    long long N = 0;
    std::string reason;
};

// Rotation by theta turns gives a cluster structure iff theta = 1/N, N >= 4.
RotationDecision rotation_admissible(const Rational& theta);

// The phi-orbit of x, starting at x.
std::vector<CirclePoint> orbit(const CyclicPoset& p, const CirclePoint& x);
std::vector<CirclePoint> orbit_representatives(const CyclicPoset& p);

// J_x(i) = phi^i(x), i = 0..N-1
std::vector<CirclePoint> orbit_embed(const CyclicPoset& p, const CirclePoint& x, long long N);

// J_x applied to diagonals (i,j) of the N-gon.
Cluster orbit_cluster(const CyclicPoset& p, const CirclePoint& x, const std::vector<std::pair<int, int>>& diagonals);

std::vector<Cluster> enumerate_theta_clusters(const FrobeniusEngine& e);

// Maximal Ext-compatible sets of nonzero objects containing the cluster.
CliqueSearch extend_to_maximal(const FrobeniusEngine& e, const Cluster& c, size_t budget);

} // namespace cycloset
